#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

namespace detail {

// Tomita-style branch and bound maximum clique on bit rows: candidates are
// greedily coloured, then explored in reverse colour order so the colour
// count bounds the reachable clique size.
struct CliqueSearch {
  const std::uint64_t* adj;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best = 0;

  void expand(int rsize, std::uint64_t cand) {
    if (++nodes > budget) throw BudgetExceeded("clique search: node budget exhausted");
    if (!cand) {
      if (rsize > best) best = rsize;
      return;
    }
    std::array<int, 64> order;
    std::array<int, 64> bound;
    int cnt = 0;
    std::uint64_t uncoloured = cand;
    int colour = 0;
    while (uncoloured) {
      ++colour;
      std::uint64_t avail = uncoloured;
      while (avail) {
        int v = std::countr_zero(avail);
        avail &= ~adj[v];
        avail &= ~(std::uint64_t{1} << v);
        uncoloured &= ~(std::uint64_t{1} << v);
        order[cnt] = v;
        bound[cnt] = colour;
        ++cnt;
      }
    }
    std::uint64_t p = cand;
    for (int i = cnt - 1; i >= 0; --i) {
      if (rsize + bound[i] <= best) return;
      int v = order[i];
      std::uint64_t np = p & adj[v];
      if (np)
        expand(rsize + 1, np);
      else if (rsize + 1 > best)
        best = rsize + 1;
      p &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace detail

struct ExactResult {
  int value = 0;
  std::uint64_t nodes = 0;
};

inline ExactResult clique_number_stats(const Graph& g,
                                       std::uint64_t budget = kDefaultNodeBudget) {
  if (g.order() > kMaxMaskOrder)
    throw InvalidParameter("clique_number: n <= 64 only");
  if (g.order() == 0) return {0, 0};
  std::vector<std::uint64_t> rows = graph_rows(g);
  detail::CliqueSearch cs{rows.data(), g.order(), budget};
  cs.expand(0, full_set(g.order()));
  return {cs.best, cs.nodes};
}

inline int clique_number(const Graph& g, std::uint64_t budget = kDefaultNodeBudget) {
  return clique_number_stats(g, budget).value;
}

inline ExactResult independence_number_stats(const Graph& g,
                                             std::uint64_t budget = kDefaultNodeBudget) {
  return clique_number_stats(complement(g), budget);
}

inline int independence_number(const Graph& g, std::uint64_t budget = kDefaultNodeBudget) {
  return independence_number_stats(g, budget).value;
}

namespace detail {

// DSATUR branch and bound. Vertices are coloured in order of saturation
// (distinct neighbour colours), ties by degree then index; colour counts
// above the best known are cut.
struct ChromaticSearch {
  const Graph* g;
  int n;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int best;
  int lower;
  std::vector<int> colour;      // 0 = uncoloured
  std::vector<std::uint64_t> neigh_colours;

  void dfs(int coloured, int used) {
    if (++nodes > budget) throw BudgetExceeded("chromatic search: node budget exhausted");
    if (used >= best) return;
    if (coloured == n) {
      best = used;
      return;
    }
    int pick = -1, sat = -1, deg = -1;
    for (int v = 0; v < n; ++v) {
      if (colour[v]) continue;
      int s = std::popcount(neigh_colours[v]);
      int d = g->degree(v);
      if (s > sat || (s == sat && d > deg)) {
        pick = v;
        sat = s;
        deg = d;
      }
    }
    int limit = std::min(used + 1, best - 1);
    for (int c = 1; c <= limit; ++c) {
      if (neigh_colours[pick] & (std::uint64_t{1} << c)) continue;
      colour[pick] = c;
      std::vector<int> touched;
      g->for_each_neighbor(pick, [&](int u) {
        if (!(neigh_colours[u] & (std::uint64_t{1} << c))) {
          neigh_colours[u] |= std::uint64_t{1} << c;
          touched.push_back(u);
        }
      });
      dfs(coloured + 1, std::max(used, c));
      for (int u : touched) neigh_colours[u] &= ~(std::uint64_t{1} << c);
      colour[pick] = 0;
      if (best == lower) return;
    }
  }
};

}  // namespace detail

inline ExactResult chromatic_number_stats(const Graph& g,
                                          std::uint64_t budget = kDefaultNodeBudget) {
  if (g.order() > 20) throw InvalidParameter("chromatic_number: exact search capped at n = 20");
  if (g.order() == 0) return {0, 0};
  if (g.size() == 0) return {1, 0};
  ExactResult cl = clique_number_stats(g, budget);
  detail::ChromaticSearch cs;
  cs.g = &g;
  cs.n = g.order();
  cs.budget = budget;
  cs.best = g.order() + 1;
  cs.lower = cl.value;
  cs.colour.assign(g.order(), 0);
  cs.neigh_colours.assign(g.order(), 0);
  cs.dfs(0, 0);
  return {cs.best, cs.nodes + cl.nodes};
}

inline int chromatic_number(const Graph& g, std::uint64_t budget = kDefaultNodeBudget) {
  return chromatic_number_stats(g, budget).value;
}

// Exact rational value, +infinity for complete graphs.
struct Toughness {
  bool infinite = false;
  long long num = 0;
  long long den = 1;
  VertexSet witness = 0;  // cut set attaining the minimum (first in mask order)

  double value() const { return infinite ? 0.0 : static_cast<double>(num) / den; }
};

// t(G) = min |S| / c(G - S) over cut sets S with c(G - S) > 1.
inline Toughness toughness(const Graph& g) {
  int n = g.order();
  if (!is_connected(g)) throw NotConnected("toughness: graph must be connected");
  if (n > 20) throw BudgetExceeded("toughness: exact subset scan capped at n = 20");
  bool complete = (static_cast<long long>(n) * (n - 1) / 2 == g.size());
  if (complete) return {true, 0, 1, 0};
  std::vector<std::uint64_t> rows = graph_rows(g);
  std::uint64_t full = full_set(n);
  Toughness best;
  bool have = false;
  for (std::uint64_t s = 1; s < full; ++s) {
    int size = std::popcount(s);
    std::uint64_t rest = full & ~s;
    if (!rest) continue;
    // cheap lower bound on the ratio: c(G-S) <= n - |S|
    if (have && static_cast<long long>(size) * best.den >=
                    best.num * static_cast<long long>(n - size))
      continue;
    int comps = 0;
    std::uint64_t todo = rest;
    while (todo) {
      ++comps;
      std::uint64_t grow = todo & (~todo + 1);  // lowest remaining vertex
      std::uint64_t comp = 0;
      while (grow) {
        comp |= grow;
        std::uint64_t frontier = 0;
        std::uint64_t bits = grow;
        while (bits) {
          int v = std::countr_zero(bits);
          bits &= bits - 1;
          frontier |= rows[v];
        }
        grow = frontier & todo & ~comp;
      }
      todo &= ~comp;
    }
    if (comps < 2) continue;
    long long num = size, den = comps;
    if (!have || num * best.den < best.num * den) {
      best.num = num;
      best.den = den;
      best.witness = s;
      have = true;
    }
  }
  long long d = std::gcd(best.num, best.den);
  if (d > 1) {
    best.num /= d;
    best.den /= d;
  }
  return best;
}

namespace detail {

// Bron-Kerbosch with pivoting over an adjacency-mask array; visits every
// maximal clique of the mask graph exactly once.
template <typename F>
void maximal_cliques(const std::uint64_t* rows, int n, std::uint64_t r,
                     std::uint64_t p, std::uint64_t x, F& visit,
                     std::uint64_t& nodes, std::uint64_t budget) {
  if (++nodes > budget) throw BudgetExceeded("maximal_cliques: node budget exhausted");
  if (p == 0 && x == 0) {
    visit(static_cast<VertexSet>(r));
    return;
  }
  // pivot: vertex of P | X covering the most of P
  int pivot = -1, cover = -1;
  std::uint64_t px = p | x;
  while (px) {
    int u = std::countr_zero(px);
    px &= px - 1;
    int c = std::popcount(p & rows[u]);
    if (c > cover) {
      cover = c;
      pivot = u;
    }
  }
  std::uint64_t ext = p & ~rows[pivot];
  while (ext) {
    int v = std::countr_zero(ext);
    std::uint64_t bit = std::uint64_t{1} << v;
    ext &= ext - 1;
    maximal_cliques(rows, n, r | bit, p & rows[v], x & rows[v], visit, nodes,
                    budget);
    p &= ~bit;
    x |= bit;
  }
}

}  // namespace detail

// Calls visit(VertexSet) once per maximal independent set (equivalently, per
// maximal clique of the complement). Order is deterministic.
template <typename F>
void for_each_maximal_independent_set(const Graph& g, F visit,
                                      std::uint64_t budget = kDefaultNodeBudget) {
  int n = g.order();
  if (n > kMaxMaskOrder)
    throw InvalidParameter("for_each_maximal_independent_set: n <= 64 only");
  if (n == 0) return;
  std::vector<std::uint64_t> co(n);
  for (int v = 0; v < n; ++v)
    co[v] = full_set(n) & ~g.row64(v) & ~(std::uint64_t{1} << v);
  std::uint64_t nodes = 0;
  detail::maximal_cliques(co.data(), n, 0, full_set(n), 0, visit, nodes, budget);
}

// K_{r+1}-saturated: K_{r+1}-free, but adding any missing edge creates one.
inline bool is_saturated(const Graph& g, int r,
                         std::uint64_t budget = kDefaultNodeBudget) {
  if (r < 2) throw InvalidParameter("is_saturated: r >= 2");
  if (g.order() > kMaxMaskOrder) throw InvalidParameter("is_saturated: n <= 64 only");
  if (clique_number(g, budget) > r) return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u + 1; v < g.order(); ++v) {
      if (g.has_edge(u, v)) continue;
      // the new edge closes a K_{r+1} iff the common neighbourhood holds K_{r-1}
      std::uint64_t common = g.row64(u) & g.row64(v);
      Graph h = induced(g, common);
      if (clique_number(h, budget) < r - 1) return false;
    }
  return true;
}

}  // namespace speclab
