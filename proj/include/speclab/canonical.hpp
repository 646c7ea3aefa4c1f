#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

// Canonical labelling for small graphs (n <= 32): the lexicographically
// minimal upper-triangle bitstring over all vertex orderings compatible with
// an iterated colour refinement. Colour classes and their order depend only
// on isomorphism-invariant data, so the minimum is a complete invariant.
// The backtrack keeps the running column values tied to the best known
// prefix, breaks symmetric branches via a twin test, and prunes siblings
// whose column exceeds the best.

namespace detail {

struct CanonState {
  int n = 0;
  std::array<std::uint64_t, 32> rows{};
  std::array<int, 32> colour{};       // refined colour per vertex
  std::array<int, 32> class_of_pos{}; // colour required at each position
  std::array<std::uint64_t, 32> col{};// running column value per vertex
  std::array<int, 32> ord{};
  std::array<std::uint64_t, 32> best_cols{};
  std::array<int, 32> best_ord{};
  int best_len = 0;
  std::uint64_t used = 0;

  // Iterated neighbour-colour refinement with invariant renumbering.
  void refine() {
    int nclasses = 0;
    {
      std::array<int, 32> deg{};
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) {
        deg[v] = std::popcount(rows[v]);
        order[v] = v;
      }
      std::sort(order.begin(), order.end(),
                [&](int a, int b) { return deg[a] < deg[b]; });
      int prev = -1;
      for (int v : order) {
        if (deg[v] != prev) {
          ++nclasses;
          prev = deg[v];
        }
        colour[v] = nclasses - 1;
      }
    }
    // signature of v = (colour, run-length list of neighbour colours),
    // stored in flat fixed buffers to keep this allocation-free
    std::array<std::array<int, 66>, 32> sig{};
    std::array<int, 32> siglen{};
    std::array<int, 32> order{};
    auto sigless = [&](int a, int b) {
      int la = siglen[a], lb = siglen[b];
      for (int i = 0; i < la && i < lb; ++i) {
        if (sig[a][i] != sig[b][i]) return sig[a][i] < sig[b][i];
      }
      return la < lb;
    };
    auto sigeq = [&](int a, int b) {
      if (siglen[a] != siglen[b]) return false;
      for (int i = 0; i < siglen[a]; ++i)
        if (sig[a][i] != sig[b][i]) return false;
      return true;
    };
    while (true) {
      for (int v = 0; v < n; ++v) {
        int len = 0;
        sig[v][len++] = colour[v];
        std::uint64_t bits = rows[v];
        std::array<int, 32> cnt{};
        while (bits) {
          int u = std::countr_zero(bits);
          bits &= bits - 1;
          cnt[colour[u]]++;
        }
        for (int c = 0; c < nclasses; ++c)
          if (cnt[c]) {
            sig[v][len++] = c;
            sig[v][len++] = cnt[c];
          }
        siglen[v] = len;
      }
      for (int v = 0; v < n; ++v) order[v] = v;
      std::sort(order.begin(), order.begin() + n, sigless);
      int next = 0;
      std::array<int, 32> newcol{};
      for (int i = 0; i < n; ++i) {
        if (i > 0 && !sigeq(order[i], order[i - 1])) ++next;
        newcol[order[i]] = next;
      }
      ++next;
      if (next == nclasses) break;
      nclasses = next;
      for (int v = 0; v < n; ++v) colour[v] = newcol[v];
      if (nclasses == n) break;
    }
    // positions take colours in ascending order
    {
      std::array<int, 32> cnt{};
      for (int v = 0; v < n; ++v) cnt[colour[v]]++;
      int p = 0;
      for (int c = 0; c < n; ++c)
        for (int i = 0; i < cnt[c]; ++i) class_of_pos[p++] = c;
    }
  }

  void dfs(int p) {
    if (p == n) {
      best_ord = ord;
      best_len = n;
      return;
    }
    int want = class_of_pos[p];
    // candidates of the right colour, sorted by running column value
    std::array<int, 32> cand{};
    int nc = 0;
    for (int v = 0; v < n; ++v)
      if (!((used >> v) & 1) && colour[v] == want) cand[nc++] = v;
    std::sort(cand.begin(), cand.begin() + nc, [&](int a, int b) {
      return col[a] != col[b] ? col[a] < col[b] : a < b;
    });
    for (int ci = 0; ci < nc; ++ci) {
      int v = cand[ci];
      // twin skip: an earlier same-column candidate interchangeable with v
      bool dup = false;
      for (int cj = 0; cj < ci && !dup; ++cj) {
        int u = cand[cj];
        if (col[u] != col[v]) continue;
        std::uint64_t mu = rows[u] & ~(std::uint64_t{1} << v);
        std::uint64_t mv = rows[v] & ~(std::uint64_t{1} << u);
        if (mu == mv) dup = true;
      }
      if (dup) continue;
      std::uint64_t c = col[v];
      if (p < best_len) {
        if (c > best_cols[p]) break;  // sorted: the rest are worse
        if (c < best_cols[p]) {
          best_cols[p] = c;
          best_len = p + 1;
        }
      } else {
        best_cols[p] = c;
        best_len = p + 1;
      }
      ord[p] = v;
      used |= std::uint64_t{1} << v;
      std::array<std::uint64_t, 32> save_col = col;
      for (int u = 0; u < n; ++u)
        if (!((used >> u) & 1)) col[u] = (col[u] << 1) | ((rows[v] >> u) & 1);
      dfs(p + 1);
      col = save_col;
      used &= ~(std::uint64_t{1} << v);
    }
  }
};

}  // namespace detail

// Vertex order whose relabelling is canonical: position -> original vertex.
inline std::vector<int> canonical_order_rows(const std::vector<std::uint64_t>& rows, int n) {
  if (n > 32) throw InvalidParameter("canonical form: n <= 32 only");
  detail::CanonState st;
  st.n = n;
  for (int v = 0; v < n; ++v) st.rows[v] = rows[v];
  if (n == 0) return {};
  st.refine();
  st.col.fill(0);
  st.dfs(0);
  return std::vector<int>(st.best_ord.begin(), st.best_ord.begin() + n);
}

inline std::vector<int> canonical_order(const Graph& g) {
  if (g.order() > 32) throw InvalidParameter("canonical form: n <= 32 only");
  return canonical_order_rows(graph_rows(g), g.order());
}

inline Graph relabel(const Graph& g, const std::vector<int>& ord) {
  int n = g.order();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[ord[p]] = p;
  std::vector<Edge> es;
  for (auto [u, v] : g.edges()) es.emplace_back(pos[u], pos[v]);
  return Graph(n, es);
}

inline Graph canonical_graph(const Graph& g) { return relabel(g, canonical_order(g)); }

// Packed canonical key for n <= 11 (fits 55 upper-triangle bits in one word):
// columns concatenated most-significant-first.
inline std::uint64_t canonical_key64_rows(const std::vector<std::uint64_t>& rows, int n) {
  if (n > 11) throw InvalidParameter("canonical_key64: n <= 11 only");
  std::vector<int> ord = canonical_order_rows(rows, n);
  std::uint64_t key = 0;
  for (int j = 1; j < n; ++j) {
    std::uint64_t colbits = 0;
    for (int i = 0; i < j; ++i)
      colbits = (colbits << 1) | ((rows[ord[i]] >> ord[j]) & 1);
    key = (key << j) | colbits;
  }
  return key;
}

inline std::uint64_t canonical_key64(const Graph& g) {
  return canonical_key64_rows(graph_rows(g), g.order());
}

// Rebuild the graph encoded by a canonical key.
inline Graph graph_from_key64(std::uint64_t key, int n) {
  std::vector<std::uint64_t> rows(n, 0);
  int total = n * (n - 1) / 2;
  int shift = total;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      --shift;
      if ((key >> shift) & 1) {
        rows[i] |= std::uint64_t{1} << j;
        rows[j] |= std::uint64_t{1} << i;
      }
    }
  return Graph::from_rows(n, rows);
}

inline bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  std::vector<int> dg = g.degrees(), dh = h.degrees();
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  return canonical_graph(g) == canonical_graph(h);
}

}  // namespace speclab
