#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <unordered_set>
#include <vector>

#include "speclab/canonical.hpp"
#include "speclab/graph.hpp"

namespace speclab {

// Exhaustive generation of unlabelled graphs by vertex extension: every
// n-vertex graph arises from some (n-1)-vertex graph by attaching one vertex,
// so extending every representative by every neighbourhood and deduplicating
// canonical keys yields each isomorphism class exactly once. Levels are
// cached; keys are emitted in sorted order, which fixes the stream order.

inline constexpr int kMaxEnumOrder = 9;
inline constexpr int kMaxBoundedEnumOrder = 11;
inline constexpr int kMaxTreeEnumOrder = 20;

namespace detail {

struct EnumKey {
  int n;
  int maxdeg;        // degree cap during generation (n means none)
  int target;        // final order for the min-degree feasibility prune
  int mindeg;        // required minimum degree at the final level (0 = none)
  bool operator<(const EnumKey& o) const {
    if (n != o.n) return n < o.n;
    if (maxdeg != o.maxdeg) return maxdeg < o.maxdeg;
    if (target != o.target) return target < o.target;
    return mindeg < o.mindeg;
  }
};

inline const std::vector<std::uint64_t>& enum_level(const EnumKey& key) {
  static std::map<EnumKey, std::vector<std::uint64_t>> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);

  auto fill = [&](EnumKey k, auto&& rec) -> const std::vector<std::uint64_t>& {
    // normalise away constraints that cannot bite at this level, so that
    // different targets share cached levels
    if (k.maxdeg >= k.n) k.maxdeg = k.n;
    if (k.mindeg > 0 && k.target - k.n >= k.mindeg) k.mindeg = 0;
    if (k.mindeg == 0) k.target = k.n;
    auto found = cache.find(k);
    if (found != cache.end()) return found->second;
    std::vector<std::uint64_t> out;
    if (k.n == 1) {
      out = {0};
    } else {
      EnumKey pk = k;
      pk.n = k.n - 1;
      const std::vector<std::uint64_t>& par = rec(pk, rec);
      std::unordered_set<std::uint64_t> seen;
      std::vector<std::uint64_t> rows(k.n);
      int nb = k.n - 1;
      for (std::uint64_t pkey : par) {
        Graph g = graph_from_key64(pkey, nb);
        std::vector<std::uint64_t> base = graph_rows(g);
        std::vector<int> deg(nb);
        for (int v = 0; v < nb; ++v) deg[v] = std::popcount(base[v]);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nb); ++mask) {
          int newdeg = std::popcount(mask);
          if (newdeg > k.maxdeg) continue;
          bool ok = true;
          for (int v = 0; v < nb && ok; ++v) {
            int d = deg[v] + static_cast<int>((mask >> v) & 1);
            if (d > k.maxdeg) ok = false;
            // a vertex short of the minimum gains at most one edge per
            // future vertex, so prune when it cannot catch up
            if (k.mindeg > 0 && k.mindeg - d > k.target - k.n) ok = false;
          }
          if (!ok) continue;
          if (k.mindeg > 0 && k.mindeg - newdeg > k.target - k.n) continue;
          for (int v = 0; v < nb; ++v)
            rows[v] = base[v] | (((mask >> v) & 1) << nb);
          rows[nb] = mask;
          seen.insert(canonical_key64_rows(rows, k.n));
        }
      }
      out.assign(seen.begin(), seen.end());
      std::sort(out.begin(), out.end());
    }
    auto [pos, inserted] = cache.emplace(k, std::move(out));
    (void)inserted;
    return pos->second;
  };
  return fill(key, fill);
}

}  // namespace detail

// All unlabelled graphs on n vertices (1 <= n <= 9), sorted canonical order.
template <typename F>
void for_each_graph(int n, bool connected_only, F&& f) {
  if (n < 1 || n > kMaxEnumOrder)
    throw InvalidParameter("graph enumeration: 1 <= n <= 9");
  const auto& keys = detail::enum_level({n, n, n, 0});
  for (std::uint64_t k : keys) {
    Graph g = graph_from_key64(k, n);
    if (connected_only && !is_connected(g)) continue;
    f(g);
  }
}

inline long long count_graphs(int n, bool connected_only) {
  long long c = 0;
  for_each_graph(n, connected_only, [&](const Graph&) { ++c; });
  return c;
}

// All unlabelled graphs on n vertices with maximum degree <= maxdeg and,
// optionally, minimum degree >= mindeg. Used for regular-graph streams
// (e.g. cubic graphs on 10 vertices) where the plain enumeration cap is
// too low.
template <typename F>
void for_each_graph_bounded(int n, int maxdeg, int mindeg, F&& f) {
  if (n < 1 || n > kMaxBoundedEnumOrder)
    throw InvalidParameter("bounded enumeration: 1 <= n <= 11");
  if (maxdeg < 0 || mindeg < 0 || mindeg > maxdeg)
    throw InvalidParameter("bounded enumeration: need 0 <= mindeg <= maxdeg");
  const auto& keys = detail::enum_level({n, maxdeg, n, mindeg});
  for (std::uint64_t k : keys) {
    Graph g = graph_from_key64(k, n);
    if (mindeg > 0 && min_degree(g) < mindeg) continue;
    f(g);
  }
}

// --- free trees ---------------------------------------------------------
//
// Rooted trees are generated as canonical level sequences (root depth 1,
// subtrees in non-increasing lexicographic order) with the classic
// successor: locate the last entry p with L[p] > 2 and its parent q, then
// repeat the segment [q, p) to the end. A rooted tree is kept as a free
// tree iff its root is a centroid and, when there are two centroids, the
// canonical sequence rooted at the other centroid is not larger.

namespace detail {

inline bool next_level_sequence(std::vector<int>& L) {
  int n = static_cast<int>(L.size());
  int p = -1;
  for (int i = n - 1; i >= 0; --i)
    if (L[i] > 2) {
      p = i;
      break;
    }
  if (p < 0) return false;
  int q = -1;
  for (int i = p - 1; i >= 0; --i)
    if (L[i] == L[p] - 1) {
      q = i;
      break;
    }
  for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
  return true;
}

inline std::vector<int> parents_from_levels(const std::vector<int>& L) {
  int n = static_cast<int>(L.size());
  std::vector<int> parent(n, -1), last_at_level(n + 2, -1);
  for (int i = 0; i < n; ++i) {
    if (L[i] > 1) parent[i] = last_at_level[L[i] - 1];
    last_at_level[L[i]] = i;
  }
  return parent;
}

// Canonical rooted level sequence via recursive subtree normalisation.
inline std::vector<int> canonical_rooted_sequence(const std::vector<std::vector<int>>& child,
                                                  int root) {
  std::vector<int> out{1};
  std::vector<std::vector<int>> subs;
  for (int c : child[root]) subs.push_back(canonical_rooted_sequence(child, c));
  std::sort(subs.begin(), subs.end(), [](const auto& a, const auto& b) { return a > b; });
  for (const auto& s : subs)
    for (int x : s) out.push_back(x + 1);
  return out;
}

}  // namespace detail

template <typename F>
void for_each_free_tree(int n, F&& f) {
  if (n < 1 || n > kMaxTreeEnumOrder)
    throw InvalidParameter("tree enumeration: 1 <= n <= 20");
  if (n == 1) {
    f(Graph(1));
    return;
  }
  std::vector<int> L(n);
  for (int i = 0; i < n; ++i) L[i] = i + 1;  // path, the first sequence
  std::vector<int> size(n), comp(n);
  do {
    std::vector<int> parent = detail::parents_from_levels(L);
    // subtree sizes, then the max component left by deleting each vertex
    std::fill(size.begin(), size.end(), 1);
    for (int i = n - 1; i >= 1; --i) size[parent[i]] += size[i];
    std::fill(comp.begin(), comp.end(), 0);
    for (int i = 1; i < n; ++i) {
      comp[parent[i]] = std::max(comp[parent[i]], size[i]);
      comp[i] = std::max(comp[i], n - size[i]);
    }
    if (comp[0] > n / 2) continue;  // root is not a centroid
    bool keep = true;
    if (n % 2 == 0) {
      int other = -1;
      for (int i = 1; i < n; ++i)
        if (parent[i] == 0 && size[i] == n / 2) other = i;
      if (other >= 0) {
        // bicentroidal: keep the larger of the two rooted canonical forms
        std::vector<std::vector<int>> child(n);
        for (int i = 1; i < n; ++i) child[parent[i]].push_back(i);
        // re-root at `other`: flip the edge 0 -> other
        std::vector<std::vector<int>> rchild = child;
        rchild[other].push_back(0);
        auto& c0 = rchild[0];
        c0.erase(std::find(c0.begin(), c0.end(), other));
        std::vector<int> alt = detail::canonical_rooted_sequence(rchild, other);
        if (L < alt) keep = false;
      }
    }
    if (!keep) continue;
    std::vector<Edge> es;
    for (int i = 1; i < n; ++i) es.emplace_back(parent[i], i);
    f(Graph(n, es));
  } while (detail::next_level_sequence(L));
}

inline long long count_free_trees(int n) {
  long long c = 0;
  for_each_free_tree(n, [&](const Graph&) { ++c; });
  return c;
}

}  // namespace speclab
