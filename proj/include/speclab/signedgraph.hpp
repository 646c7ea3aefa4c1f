#pragma once

#include <cmath>
#include <cstdint>
#include <deque>
#include <string>
#include <utility>
#include <vector>

#include "speclab/eigensolver.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

// Edge signs are stored parallel to base.edges(), which is lexicographically
// ordered; +1 or -1 per edge.
struct SignedGraph {
  Graph base;
  std::vector<std::int8_t> signs;

  SignedGraph() = default;
  SignedGraph(Graph g, std::vector<std::int8_t> s) : base(std::move(g)), signs(std::move(s)) {
    if (static_cast<int>(signs.size()) != base.size())
      throw InvalidParameter("signed graph: one sign per edge required");
    for (std::int8_t v : signs)
      if (v != 1 && v != -1) throw InvalidParameter("signed graph: signs must be +-1");
  }
};

inline SignedGraph all_positive(const Graph& g) {
  return SignedGraph(g, std::vector<std::int8_t>(g.size(), 1));
}

// Flips the sign of every edge with exactly one endpoint in u.
inline SignedGraph switch_at(const SignedGraph& sg, VertexSet u) {
  if (sg.base.order() > kMaxMaskOrder) throw InvalidParameter("switch_at: n <= 64 only");
  std::vector<std::int8_t> signs = sg.signs;
  std::vector<Edge> es = sg.base.edges();
  for (size_t i = 0; i < es.size(); ++i)
    if (set_contains(u, es[i].first) != set_contains(u, es[i].second))
      signs[i] = static_cast<std::int8_t>(-signs[i]);
  return SignedGraph(sg.base, std::move(signs));
}

inline Spectrum signed_spectrum(const SignedGraph& sg) {
  int n = sg.base.order();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  std::vector<Edge> es = sg.base.edges();
  for (size_t i = 0; i < es.size(); ++i) {
    auto [u, v] = es[i];
    a[static_cast<size_t>(u) * n + v] = sg.signs[i];
    a[static_cast<size_t>(v) * n + u] = sg.signs[i];
  }
  Spectrum s;
  s.kind = MatrixKind::Adjacency;
  s.values = symmetric_eigenvalues(std::move(a), n);
  return s;
}

inline double signed_rho(const Spectrum& s) {
  if (s.n() == 0) return 0.0;
  return std::max(std::fabs(s.lambda(1)), std::fabs(s.lambda(s.n())));
}

inline double signed_rho(const SignedGraph& sg) { return signed_rho(signed_spectrum(sg)); }

// graph6 of the base, '|', then one char per edge in lexicographic edge
// order: '1' = negative, '0' = positive.
inline std::string serialize_signed(const SignedGraph& sg) {
  std::string out = to_graph6(sg.base);
  out.push_back('|');
  for (std::int8_t s : sg.signs) out.push_back(s < 0 ? '1' : '0');
  return out;
}

inline SignedGraph parse_signed(const std::string& text) {
  size_t bar = text.find('|');
  if (bar == std::string::npos)
    throw MalformedInput("signed graph text needs 'graph6|bits'");
  Graph g = from_graph6(text.substr(0, bar));
  std::string bits = text.substr(bar + 1);
  if (static_cast<int>(bits.size()) != g.size())
    throw MalformedInput("signed graph text: sign count != edge count");
  std::vector<std::int8_t> signs;
  for (char c : bits) {
    if (c != '0' && c != '1') throw MalformedInput("signed graph text: bits must be 0/1");
    signs.push_back(c == '1' ? -1 : 1);
  }
  return SignedGraph(std::move(g), std::move(signs));
}

struct MinSignatureResult {
  double rho_min = 0.0;          // min over signatures of max(|l1|, |ln|)
  SignedGraph rho_witness;
  double lambda1_min = 0.0;      // min over signatures of l1 alone
  SignedGraph lambda1_witness;
  std::uint64_t classes = 0;     // switching classes enumerated
};

// Minimum spectral radius (and minimum largest eigenvalue) over all edge
// signatures of a connected graph. One representative per switching class:
// a spanning tree is fixed all-positive and the 2^(m-n+1) co-tree sign
// patterns are enumerated.
inline MinSignatureResult min_signature_radius(const Graph& g) {
  if (!is_connected(g)) throw NotConnected("min_signature_radius: graph must be connected");
  int n = g.order(), m = g.size();
  int cotree = m - n + 1;
  if (cotree > 24)
    throw BudgetExceeded("min_signature_radius: 2^(m-n+1) classes exceed the 2^24 cap");
  std::vector<Edge> es = g.edges();
  // BFS spanning tree from vertex 0
  std::vector<char> in_tree_vertex(n, 0);
  std::vector<char> tree_edge(es.size(), 0);
  std::vector<size_t> cotree_idx;
  if (n > 0) {
    in_tree_vertex[0] = 1;
    std::deque<int> q{0};
    std::vector<std::vector<std::pair<int, size_t>>> inc(n);
    for (size_t i = 0; i < es.size(); ++i) {
      inc[es[i].first].emplace_back(es[i].second, i);
      inc[es[i].second].emplace_back(es[i].first, i);
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (auto [w, i] : inc[v])
        if (!in_tree_vertex[w]) {
          in_tree_vertex[w] = 1;
          tree_edge[i] = 1;
          q.push_back(w);
        }
    }
  }
  for (size_t i = 0; i < es.size(); ++i)
    if (!tree_edge[i]) cotree_idx.push_back(i);

  MinSignatureResult out;
  std::vector<std::int8_t> signs(es.size(), 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cotree); ++mask) {
    for (size_t j = 0; j < cotree_idx.size(); ++j)
      signs[cotree_idx[j]] = (mask >> j) & 1 ? -1 : 1;
    SignedGraph sg(g, signs);
    Spectrum sp = signed_spectrum(sg);
    double rho = signed_rho(sp);
    double l1 = sp.n() ? sp.lambda(1) : 0.0;
    if (mask == 0 || rho < out.rho_min - 1e-12) {
      out.rho_min = rho;
      out.rho_witness = sg;
    }
    if (mask == 0 || l1 < out.lambda1_min - 1e-12) {
      out.lambda1_min = l1;
      out.lambda1_witness = sg;
    }
    ++out.classes;
  }
  return out;
}

}  // namespace speclab
