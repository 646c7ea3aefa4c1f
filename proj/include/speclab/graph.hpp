#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "speclab/errors.hpp"

namespace speclab {

// Hard cap on graph order; everything here is dense small-graph code.
inline constexpr int kMaxOrder = 512;
// Bitmask-based routines (enumeration, subset searches) need single-word sets.
inline constexpr int kMaxMaskOrder = 64;

using VertexSet = std::uint64_t;  // bitmask over vertices, valid for n <= 64

inline int set_size(VertexSet s) { return std::popcount(s); }
inline bool set_contains(VertexSet s, int v) { return (s >> v) & 1u; }
inline VertexSet full_set(int n) {
  return n >= 64 ? ~VertexSet{0} : ((VertexSet{1} << n) - 1);
}

using Edge = std::pair<int, int>;

// Simple undirected graph, no loops or parallel edges, immutable after
// construction. Adjacency is stored as bit rows (words per row = ceil(n/64)).
class Graph {
 public:
  Graph() : n_(0), m_(0), words_(0) {}

  explicit Graph(int n) : n_(n), m_(0) {
    check_order(n);
    words_ = (n + 63) / 64;
    adj_.assign(static_cast<size_t>(n) * words_, 0);
  }

  Graph(int n, const std::vector<Edge>& edges) : Graph(n) {
    for (auto [u, v] : edges) add_edge_internal(u, v);
  }

  // Fast path used by generators/enumeration: one word per row, n <= 64.
  static Graph from_rows(int n, const std::vector<std::uint64_t>& rows) {
    check_order(n);
    if (n > kMaxMaskOrder || static_cast<int>(rows.size()) != n)
      throw InvalidParameter("from_rows: need exactly n rows, n <= 64");
    Graph g(n);
    VertexSet full = full_set(n);
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~full) throw InvalidParameter("from_rows: row bit out of range");
      if (set_contains(rows[v], v)) throw InvalidParameter("from_rows: self-loop");
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      for (int u = v + 1; u < n; ++u)
        if (set_contains(rows[v], u) != set_contains(rows[u], v))
          throw InvalidParameter("from_rows: asymmetric adjacency");
    g.m_ = 0;
    for (int v = 0; v < n; ++v) g.m_ += std::popcount(rows[v]);
    g.m_ /= 2;
    return g;
  }

  int order() const { return n_; }
  int size() const { return m_; }

  bool has_edge(int u, int v) const {
    return (adj_[static_cast<size_t>(u) * words_ + (v >> 6)] >> (v & 63)) & 1u;
  }

  int degree(int v) const {
    const std::uint64_t* row = &adj_[static_cast<size_t>(v) * words_];
    int d = 0;
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
  }

  std::vector<int> degrees() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    return d;
  }

  // Single-word adjacency row; only meaningful when n <= 64.
  std::uint64_t row64(int v) const { return adj_[static_cast<size_t>(v) * words_]; }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for_each_neighbor(v, [&](int u) { out.push_back(u); });
    return out;
  }

  template <typename F>
  void for_each_neighbor(int v, F&& f) const {
    const std::uint64_t* row = &adj_[static_cast<size_t>(v) * words_];
    for (int w = 0; w < words_; ++w) {
      std::uint64_t bits = row[w];
      while (bits) {
        int b = std::countr_zero(bits);
        f(w * 64 + b);
        bits &= bits - 1;
      }
    }
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u)
      for_each_neighbor(u, [&](int v) {
        if (u < v) out.emplace_back(u, v);
      });
    return out;
  }

  bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

 private:
  static void check_order(int n) {
    if (n < 0 || n > kMaxOrder) throw InvalidParameter("graph order out of range");
  }

  void add_edge_internal(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
      throw InvalidParameter("edge endpoint out of range");
    if (u == v) throw InvalidParameter("self-loop not allowed");
    if (has_edge(u, v)) return;
    adj_[static_cast<size_t>(u) * words_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    adj_[static_cast<size_t>(v) * words_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++m_;
  }

  int n_;
  int m_;
  int words_;
  std::vector<std::uint64_t> adj_;
};

inline int max_degree(const Graph& g) {
  int d = 0;
  for (int v = 0; v < g.order(); ++v) d = std::max(d, g.degree(v));
  return d;
}

inline int min_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = g.order();
  for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
  return d;
}

// Degree if regular, nullopt otherwise.
inline std::optional<int> regular_degree(const Graph& g) {
  if (g.order() == 0) return 0;
  int d = g.degree(0);
  for (int v = 1; v < g.order(); ++v)
    if (g.degree(v) != d) return std::nullopt;
  return d;
}

inline Graph complement(const Graph& g) {
  int n = g.order();
  std::vector<Edge> es;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!g.has_edge(u, v)) es.emplace_back(u, v);
  return Graph(n, es);
}

// Disjoint union; h's vertices are shifted by g.order().
inline Graph disjoint_union(const Graph& g, const Graph& h) {
  int n = g.order() + h.order();
  std::vector<Edge> es = g.edges();
  for (auto [u, v] : h.edges()) es.emplace_back(u + g.order(), v + g.order());
  return Graph(n, es);
}

// Join: disjoint union plus all edges between the two sides.
inline Graph join(const Graph& g, const Graph& h) {
  std::vector<Edge> es = g.edges();
  for (auto [u, v] : h.edges()) es.emplace_back(u + g.order(), v + g.order());
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < h.order(); ++v) es.emplace_back(u, g.order() + v);
  return Graph(g.order() + h.order(), es);
}

// Replace vertex v by an independent set of sizes[v] vertices; classes of
// adjacent originals are completely joined. sizes[v] = 0 deletes the vertex.
inline Graph blow_up(const Graph& g, const std::vector<int>& sizes) {
  if (static_cast<int>(sizes.size()) != g.order())
    throw InvalidParameter("blow_up: one size per vertex required");
  std::vector<int> base(g.order() + 1, 0);
  for (int v = 0; v < g.order(); ++v) {
    if (sizes[v] < 0) throw InvalidParameter("blow_up: negative class size");
    base[v + 1] = base[v] + sizes[v];
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    for (int i = base[u]; i < base[u + 1]; ++i)
      for (int j = base[v]; j < base[v + 1]; ++j) es.emplace_back(i, j);
  return Graph(base[g.order()], es);
}

inline Graph induced(const Graph& g, const std::vector<int>& verts) {
  std::vector<int> pos(g.order(), -1);
  for (size_t i = 0; i < verts.size(); ++i) {
    int v = verts[i];
    if (v < 0 || v >= g.order()) throw InvalidParameter("induced: vertex out of range");
    if (pos[v] != -1) throw InvalidParameter("induced: repeated vertex");
    pos[v] = static_cast<int>(i);
  }
  std::vector<Edge> es;
  for (auto [u, v] : g.edges())
    if (pos[u] >= 0 && pos[v] >= 0) es.emplace_back(pos[u], pos[v]);
  return Graph(static_cast<int>(verts.size()), es);
}

inline Graph induced(const Graph& g, VertexSet s) {
  if (g.order() > kMaxMaskOrder) throw InvalidParameter("induced(mask): n <= 64 only");
  std::vector<int> verts;
  for (int v = 0; v < g.order(); ++v)
    if (set_contains(s, v)) verts.push_back(v);
  return induced(g, verts);
}

// Adjacency rows as single 64-bit masks; callers that only do mask algebra
// (subset scans, clique search, canonical forms) work off this view.
inline std::vector<std::uint64_t> graph_rows(const Graph& g) {
  if (g.order() > kMaxMaskOrder) throw InvalidParameter("graph_rows: n <= 64 only");
  std::vector<std::uint64_t> rows(g.order());
  for (int v = 0; v < g.order(); ++v) rows[v] = g.row64(v);
  return rows;
}

inline std::vector<std::vector<int>> components(const Graph& g) {
  int n = g.order();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    int id = static_cast<int>(out.size());
    out.emplace_back();
    std::vector<int> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      out[id].push_back(v);
      g.for_each_neighbor(v, [&](int u) {
        if (comp[u] == -1) {
          comp[u] = id;
          stack.push_back(u);
        }
      });
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

inline int component_count(const Graph& g) {
  return static_cast<int>(components(g).size());
}

inline bool is_connected(const Graph& g) {
  return g.order() <= 1 || component_count(g) == 1;
}

inline bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() == g.order() - 1 && is_connected(g);
}

// One colour class of a proper 2-colouring, or nullopt if an odd cycle exists.
// For disconnected graphs the classes of each component are combined.
inline std::optional<std::vector<int>> bipartition(const Graph& g) {
  int n = g.order();
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      bool odd = false;
      g.for_each_neighbor(v, [&](int u) {
        if (colour[u] == -1) {
          colour[u] = 1 - colour[v];
          q.push(u);
        } else if (colour[u] == colour[v]) {
          odd = true;
        }
      });
      if (odd) return std::nullopt;
    }
  }
  std::vector<int> side;
  for (int v = 0; v < n; ++v)
    if (colour[v] == 0) side.push_back(v);
  return side;
}

inline bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

// Length of a shortest cycle; nullopt for forests. BFS from every vertex.
inline std::optional<int> girth(const Graph& g) {
  int n = g.order();
  int best = n + 1;
  std::vector<int> dist(n), parent(n);
  for (int s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[s] = 0;
    parent[s] = -1;
    std::queue<int> q;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      if (2 * dist[v] >= best) break;
      g.for_each_neighbor(v, [&](int u) {
        if (dist[u] == -1) {
          dist[u] = dist[v] + 1;
          parent[u] = v;
          q.push(u);
        } else if (u != parent[v]) {
          best = std::min(best, dist[v] + dist[u] + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

}  // namespace speclab
