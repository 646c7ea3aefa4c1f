#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

inline Graph empty_graph(int n) { return Graph(n); }

inline Graph complete_graph(int n) {
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

inline Graph path_graph(int n) {
  if (n < 1) throw InvalidParameter("path: n >= 1");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < n; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw InvalidParameter("cycle: n >= 3");
  std::vector<Edge> es;
  for (int v = 0; v < n; ++v) es.emplace_back(v, (v + 1) % n);
  return Graph(n, es);
}

// K_{1,n-1}; vertex 0 is the centre.
inline Graph star_graph(int n) {
  if (n < 1) throw InvalidParameter("star: n >= 1");
  std::vector<Edge> es;
  for (int v = 1; v < n; ++v) es.emplace_back(0, v);
  return Graph(n, es);
}

// Parts laid out consecutively: part 0 first, then part 1, ...
inline Graph complete_multipartite(const std::vector<int>& parts) {
  std::vector<int> base{0};
  for (int p : parts) {
    if (p < 1) throw InvalidParameter("complete_multipartite: part sizes >= 1");
    base.push_back(base.back() + p);
  }
  std::vector<Edge> es;
  for (size_t a = 0; a < parts.size(); ++a)
    for (size_t b = a + 1; b < parts.size(); ++b)
      for (int u = base[a]; u < base[a + 1]; ++u)
        for (int v = base[b]; v < base[b + 1]; ++v) es.emplace_back(u, v);
  return Graph(base.back(), es);
}

inline Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

// Turan graph: complete k-partite, part sizes as equal as possible,
// larger parts first.
inline Graph turan_graph(int n, int k) {
  if (k < 1 || n < k) throw InvalidParameter("turan: 1 <= k <= n");
  std::vector<int> parts(k, n / k);
  for (int i = 0; i < n % k; ++i) parts[i]++;
  return complete_multipartite(parts);
}

// Complete split graph S_{n,k}: clique on {0..k-1} joined to an independent
// set of n-k vertices.
inline Graph complete_split(int n, int k) {
  if (k < 0 || k > n) throw InvalidParameter("split: 0 <= k <= n");
  std::vector<Edge> es;
  for (int u = 0; u < k; ++u) {
    for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
    for (int v = k; v < n; ++v) es.emplace_back(u, v);
  }
  return Graph(n, es);
}

// S_{n,k} plus one edge inside the independent part (between its first two
// vertices).
inline Graph complete_split_plus(int n, int k) {
  if (n - k < 2) throw InvalidParameter("splitplus: needs >= 2 independent vertices");
  Graph s = complete_split(n, k);
  std::vector<Edge> es = s.edges();
  es.emplace_back(k, k + 1);
  return Graph(n, es);
}

// Double kite DK(r,s): two disjoint K_r's connected by a path with s internal
// vertices (s = 0 means the two cliques are joined by a single edge).
// Vertices: first clique 0..r-1, path s vertices, second clique at the end;
// the path hangs off vertex r-1 of the first clique and reaches vertex r+s of
// the second.
inline Graph double_kite(int r, int s) {
  if (r < 1 || s < 0) throw InvalidParameter("doublekite: r >= 1, s >= 0");
  int n = 2 * r + s;
  std::vector<Edge> es;
  for (int u = 0; u < r; ++u)
    for (int v = u + 1; v < r; ++v) es.emplace_back(u, v);
  for (int u = r + s; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  for (int v = r - 1; v < r + s; ++v) es.emplace_back(v, v + 1);
  return Graph(n, es);
}

// Double comet C(k,l): path on l vertices with k pendant vertices attached to
// each end. Path is 0..l-1, pendants follow.
inline Graph double_comet(int k, int l) {
  if (k < 1 || l < 1) throw InvalidParameter("doublecomet: k >= 1, l >= 1");
  std::vector<Edge> es;
  for (int v = 0; v + 1 < l; ++v) es.emplace_back(v, v + 1);
  int next = l;
  for (int i = 0; i < k; ++i) es.emplace_back(0, next++);
  for (int i = 0; i < k; ++i) es.emplace_back(l - 1, next++);
  return Graph(l + 2 * k, es);
}

// Hypercube Q_d on 2^d vertices; vertex labels are coordinate masks.
inline Graph hypercube(int d) {
  if (d < 0 || d > 9) throw InvalidParameter("hypercube: 0 <= d <= 9");
  int n = 1 << d;
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int b = 0; b < d; ++b)
      if (!(u & (1 << b))) es.emplace_back(u, u | (1 << b));
  return Graph(n, es);
}

// Kite P_r . K_s: path on r vertices with one endpoint identified with a
// vertex of K_s; order r + s - 1. Path is 0..r-1, vertex r-1 lies in the
// clique {r-1, ..., r+s-2}.
inline Graph kite_graph(int r, int s) {
  if (r < 1 || s < 1) throw InvalidParameter("kite: r >= 1, s >= 1");
  int n = r + s - 1;
  std::vector<Edge> es;
  for (int v = 0; v + 1 < r; ++v) es.emplace_back(v, v + 1);
  for (int u = r - 1; u < n; ++u)
    for (int v = u + 1; v < n; ++v) es.emplace_back(u, v);
  return Graph(n, es);
}

// Clique K_k on {0..k-1} joined completely to an independent set of r
// vertices, plus s further vertices whose neighbourhoods are proper subsets
// of the clique, nested: N(v_{i+1}) subseteq N(v_i). chain_sizes gives
// |N(v_i)|, so it must be non-increasing with entries in [0, k-1].
inline Graph gkrs_graph(int k, int r, int s, const std::vector<int>& chain_sizes) {
  if (k < 1 || r < 1 || s < 0) throw InvalidParameter("gkrs: k >= 1, r >= 1, s >= 0");
  if (static_cast<int>(chain_sizes.size()) != s)
    throw InvalidParameter("gkrs: need one chain size per tail vertex");
  for (int i = 0; i < s; ++i) {
    if (chain_sizes[i] < 0 || chain_sizes[i] > k - 1)
      throw InvalidParameter("gkrs: chain sizes must lie in [0, k-1]");
    if (i > 0 && chain_sizes[i] > chain_sizes[i - 1])
      throw InvalidParameter("gkrs: chain sizes must be non-increasing");
  }
  int n = k + r + s;
  std::vector<Edge> es;
  for (int u = 0; u < k; ++u)
    for (int v = u + 1; v < k; ++v) es.emplace_back(u, v);
  for (int u = 0; u < k; ++u)
    for (int v = k; v < k + r; ++v) es.emplace_back(u, v);
  // nested neighbourhoods: v_i sees the first chain_sizes[i] clique vertices
  for (int i = 0; i < s; ++i)
    for (int u = 0; u < chain_sizes[i]; ++u) es.emplace_back(u, k + r + i);
  return Graph(n, es);
}

// Fan K_1 v P_{n-1}; vertex 0 is the hub.
inline Graph fan_graph(int n) {
  if (n < 2) throw InvalidParameter("fan: n >= 2");
  return join(Graph(1), path_graph(n - 1));
}

// K_2 v P_{n-2}; vertices 0,1 are the dominating pair.
inline Graph k2_join_path(int n) {
  if (n < 3) throw InvalidParameter("k2p: n >= 3");
  return join(complete_graph(2), path_graph(n - 2));
}

// Wheel K_1 v C_{n-1}.
inline Graph wheel_graph(int n) {
  if (n < 4) throw InvalidParameter("wheel: n >= 4");
  return join(Graph(1), cycle_graph(n - 1));
}

// Petersen graph: outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5.
inline Graph petersen_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 5; ++i) {
    es.emplace_back(i, (i + 1) % 5);
    es.emplace_back(5 + i, 5 + (i + 2) % 5);
    es.emplace_back(i, 5 + i);
  }
  return Graph(10, es);
}

// Heawood graph via LCF [5,-5]^7.
inline Graph heawood_graph() {
  std::vector<Edge> es;
  for (int i = 0; i < 14; ++i) {
    es.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) es.emplace_back(i, (i + 5) % 14);
  }
  return Graph(14, es);
}

struct FamilySpec {
  std::string tag;
  std::vector<long long> params;
};

// Grammar: tag(p1,p2,...), e.g. "split(12,3)", "petersen()".
inline FamilySpec parse_family(std::string_view text) {
  FamilySpec spec;
  size_t i = 0;
  while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i])) || text[i] == '_'))
    spec.tag.push_back(text[i++]);
  if (spec.tag.empty()) throw MalformedInput("family: missing name");
  if (i >= text.size() || text[i] != '(') throw MalformedInput("family: expected '('");
  ++i;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size() && text[i] == ')' && spec.params.empty()) break;
    bool neg = false;
    if (i < text.size() && text[i] == '-') {
      neg = true;
      ++i;
    }
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw MalformedInput("family: expected integer parameter");
    long long v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
      v = v * 10 + (text[i++] - '0');
    spec.params.push_back(neg ? -v : v);
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    break;
  }
  if (i >= text.size() || text[i] != ')') throw MalformedInput("family: expected ')'");
  if (i + 1 != text.size()) throw MalformedInput("family: trailing characters");
  return spec;
}

inline Graph make_family(const FamilySpec& spec) {
  const auto& p = spec.params;
  auto want = [&](size_t k, const char* usage) {
    if (p.size() != k) throw InvalidParameter(std::string("family usage: ") + usage);
  };
  auto pi = [&](size_t i) { return static_cast<int>(p[i]); };
  const std::string& t = spec.tag;
  if (t == "complete") { want(1, "complete(n)"); return complete_graph(pi(0)); }
  if (t == "empty") { want(1, "empty(n)"); return empty_graph(pi(0)); }
  if (t == "path") { want(1, "path(n)"); return path_graph(pi(0)); }
  if (t == "cycle") { want(1, "cycle(n)"); return cycle_graph(pi(0)); }
  if (t == "star") { want(1, "star(n)"); return star_graph(pi(0)); }
  if (t == "bipartite") { want(2, "bipartite(a,b)"); return complete_bipartite(pi(0), pi(1)); }
  if (t == "multipartite") {
    if (p.empty()) throw InvalidParameter("family usage: multipartite(n1,n2,...)");
    std::vector<int> parts;
    for (long long v : p) parts.push_back(static_cast<int>(v));
    return complete_multipartite(parts);
  }
  if (t == "turan") { want(2, "turan(n,k)"); return turan_graph(pi(0), pi(1)); }
  if (t == "split") { want(2, "split(n,k)"); return complete_split(pi(0), pi(1)); }
  if (t == "splitplus") { want(2, "splitplus(n,k)"); return complete_split_plus(pi(0), pi(1)); }
  if (t == "doublekite") { want(2, "doublekite(r,s)"); return double_kite(pi(0), pi(1)); }
  if (t == "doublecomet") { want(2, "doublecomet(k,l)"); return double_comet(pi(0), pi(1)); }
  if (t == "hypercube") { want(1, "hypercube(d)"); return hypercube(pi(0)); }
  if (t == "kite") { want(2, "kite(r,s)"); return kite_graph(pi(0), pi(1)); }
  if (t == "gkrs") {
    if (p.size() < 3) throw InvalidParameter("family usage: gkrs(k,r,s,a1,...,as)");
    int s = pi(2);
    if (static_cast<int>(p.size()) != 3 + s)
      throw InvalidParameter("family usage: gkrs(k,r,s,a1,...,as)");
    std::vector<int> chain;
    for (int i = 0; i < s; ++i) chain.push_back(pi(3 + i));
    return gkrs_graph(pi(0), pi(1), s, chain);
  }
  if (t == "fan") { want(1, "fan(n)"); return fan_graph(pi(0)); }
  if (t == "k2p") { want(1, "k2p(n)"); return k2_join_path(pi(0)); }
  if (t == "wheel") { want(1, "wheel(n)"); return wheel_graph(pi(0)); }
  if (t == "petersen") { want(0, "petersen()"); return petersen_graph(); }
  if (t == "heawood") { want(0, "heawood()"); return heawood_graph(); }
  throw InvalidParameter("unknown family tag: " + t);
}

inline Graph make_family(std::string_view text) { return make_family(parse_family(text)); }

}  // namespace speclab
