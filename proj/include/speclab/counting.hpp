#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {
namespace detail {

inline int common_degree(const Graph& g, int u, int v) {
  int c = 0;
  g.for_each_neighbor(u, [&](int w) { c += g.has_edge(v, w) ? 1 : 0; });
  return c;
}

inline void clique_count_rec(const Graph& g, const std::vector<int>& cand, int depth,
                             long long& count) {
  if (depth == 0) {
    ++count;
    return;
  }
  for (size_t i = 0; i < cand.size(); ++i) {
    if (static_cast<int>(cand.size() - i) < depth) break;
    std::vector<int> next;
    for (size_t j = i + 1; j < cand.size(); ++j)
      if (g.has_edge(cand[i], cand[j])) next.push_back(cand[j]);
    clique_count_rec(g, next, depth - 1, count);
  }
}

}  // namespace detail

// Number of K_r subgraphs (unlabeled copies), r <= 6.
inline long long count_cliques(const Graph& g, int r) {
  if (r < 1 || r > 6) throw InvalidParameter("count_cliques: 1 <= r <= 6");
  if (r == 1) return g.order();
  if (r == 2) return g.size();
  if (r == 3) {
    long long t = 0;
    for (auto [u, v] : g.edges()) t += detail::common_degree(g, u, v);
    return t / 3;  // each triangle seen from its three edges
  }
  std::vector<int> all(g.order());
  for (int v = 0; v < g.order(); ++v) all[v] = v;
  long long c = 0;
  detail::clique_count_rec(g, all, r, c);
  return c;
}

inline long long count_triangles(const Graph& g) { return count_cliques(g, 3); }

// Number of 4-cycles: every C4 is a pair of vertices plus two common
// neighbours, counted once from each of its two diagonals.
inline long long count_c4(const Graph& g) {
  long long total = 0;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      long long c = detail::common_degree(g, u, v);
      total += c * (c - 1) / 2;
    }
  return total / 2;
}

// Pattern names accepted: "triangle", "c4", "k1".."k6".
inline long long count_copies(const Graph& g, std::string_view pattern) {
  if (pattern == "triangle") return count_triangles(g);
  if (pattern == "c4" || pattern == "C4") return count_c4(g);
  if (pattern.size() == 2 && (pattern[0] == 'k' || pattern[0] == 'K') &&
      pattern[1] >= '1' && pattern[1] <= '6')
    return count_cliques(g, pattern[1] - '0');
  throw InvalidParameter("count_copies: unknown pattern '" + std::string(pattern) + "'");
}

}  // namespace speclab
