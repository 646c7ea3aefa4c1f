#pragma once

#include <cstdint>
#include <set>

#include "speclab/graph.hpp"
#include "speclab/invariants.hpp"

namespace speclab {
namespace detail {

struct CycleScan {
  const std::uint64_t* rows;
  int n;
  int max_len;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int anchor = 0;
  int wanted = 0;  // lengths still missing
  std::set<int>* found;

  // Extends a path anchored at its minimum vertex; an edge back to the
  // anchor closes a cycle whose length is the path size.
  void dfs(int u, std::uint64_t visited, int depth) {
    if (++nodes > budget) throw BudgetExceeded("cycle_spectrum: node budget exhausted");
    if (depth >= 3 && (rows[u] >> anchor & 1) && !found->count(depth)) {
      found->insert(depth);
      if (--wanted == 0) return;
    }
    if (depth == max_len) return;
    std::uint64_t cand = rows[u] & ~visited;
    cand &= ~((std::uint64_t{1} << (anchor + 1)) - 1);  // only vertices above the anchor
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      dfs(w, visited | (std::uint64_t{1} << w), depth + 1);
      if (wanted == 0) return;
    }
  }
};

}  // namespace detail

// Exactly the lengths l with 3 <= l <= max_len for which g contains a cycle C_l.
inline std::set<int> cycle_spectrum(const Graph& g, int max_len,
                                    std::uint64_t budget = kDefaultNodeBudget) {
  int n = g.order();
  if (n > 18) throw InvalidParameter("cycle_spectrum: n <= 18 only");
  std::set<int> found;
  if (max_len > n) max_len = n;
  if (n < 3 || max_len < 3) return found;
  std::vector<std::uint64_t> rows = graph_rows(g);
  detail::CycleScan scan{rows.data(), n, max_len, budget, 0, 0, max_len - 2, &found};
  for (int v = 0; v + 2 < n && scan.wanted > 0; ++v) {
    scan.anchor = v;
    scan.dfs(v, std::uint64_t{1} << v, 1);
  }
  return found;
}

inline std::set<int> cycle_spectrum(const Graph& g) {
  return cycle_spectrum(g, g.order());
}

namespace detail {

struct HamiltonScan {
  const std::uint64_t* rows;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  bool dfs(int u, std::uint64_t visited, int depth) {
    if (++nodes > budget) throw BudgetExceeded("is_hamiltonian: node budget exhausted");
    if (depth == n) return (rows[u] >> 0) & 1;  // close back to the start vertex 0
    std::uint64_t rest = ~visited & ((std::uint64_t{1} << n) - 1);
    // every untouched vertex still needs two usable cycle neighbours among
    // the untouched vertices and the two path ends
    std::uint64_t avail = rest | (std::uint64_t{1} << u) | 1;
    std::uint64_t r = rest;
    while (r) {
      int w = std::countr_zero(r);
      r &= r - 1;
      if (std::popcount(rows[w] & avail) < 2) return false;
    }
    std::uint64_t cand = rows[u] & rest;
    while (cand) {
      int w = std::countr_zero(cand);
      cand &= cand - 1;
      if (dfs(w, visited | (std::uint64_t{1} << w), depth + 1)) return true;
    }
    return false;
  }
};

}  // namespace detail

inline bool is_hamiltonian(const Graph& g, std::uint64_t budget = kDefaultNodeBudget) {
  int n = g.order();
  if (n > 20) throw InvalidParameter("is_hamiltonian: n <= 20 only");
  if (n < 3) return false;
  if (min_degree(g) < 2 || !is_connected(g)) return false;
  std::vector<std::uint64_t> rows = graph_rows(g);
  detail::HamiltonScan scan{rows.data(), n, budget};
  return scan.dfs(0, 1, 1);
}

}  // namespace speclab
