#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <utility>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {
namespace detail {

// Splits g into biconnected blocks (edge partitions) with Tarjan lowpoints.
inline std::vector<std::vector<Edge>> biconnected_blocks(const Graph& g) {
  int n = g.order();
  std::vector<int> num(n, -1), low(n, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> blocks;
  int counter = 0;
  // iterative DFS to stay clear of deep recursion on path-like graphs
  struct Frame {
    int v, parent;
    std::vector<int> nbrs;
    size_t idx = 0;
  };
  for (int root = 0; root < n; ++root) {
    if (num[root] != -1) continue;
    std::vector<Frame> fs;
    fs.push_back({root, -1, g.neighbors(root), 0});
    num[root] = low[root] = counter++;
    while (!fs.empty()) {
      Frame& f = fs.back();
      if (f.idx < f.nbrs.size()) {
        int w = f.nbrs[f.idx++];
        if (w == f.parent) continue;
        if (num[w] == -1) {
          stack.emplace_back(f.v, w);
          num[w] = low[w] = counter++;
          fs.push_back({w, f.v, g.neighbors(w), 0});
        } else if (num[w] < num[f.v]) {
          stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], num[w]);
        }
      } else {
        int v = f.v, parent = f.parent;
        fs.pop_back();
        if (parent != -1) {
          low[parent] = std::min(low[parent], low[v]);
          if (low[v] >= num[parent]) {
            // pop the block rooted at edge (parent, v)
            std::vector<Edge> block;
            while (!stack.empty()) {
              Edge e = stack.back();
              if (num[e.first] < num[v] && e != Edge{parent, v}) break;
              stack.pop_back();
              block.push_back(e);
              if (e == Edge{parent, v}) break;
            }
            blocks.push_back(std::move(block));
          }
        }
      }
    }
  }
  return blocks;
}

// One Demoucron-Malgrange-Pertuiset run on a biconnected block, given as a
// simple graph on local labels 0..n-1.
struct DmpEmbedder {
  int n;
  std::vector<std::vector<int>> adj;
  std::vector<char> in_h;                 // vertex already embedded
  std::vector<char> edge_in_h;            // n*n flags
  std::vector<std::vector<int>> faces;    // boundary cycles
  int edges_left;

  bool has_edge_h(int u, int v) const { return edge_in_h[u * n + v] != 0; }
  void add_edge_h(int u, int v) {
    edge_in_h[u * n + v] = edge_in_h[v * n + u] = 1;
    --edges_left;
  }

  struct Bridge {
    std::vector<int> attachments;  // sorted embedded endpoints
    std::vector<int> path;         // attachment, interior..., attachment
  };

  // Fragments of G relative to H: components of G - V(H) with their legs,
  // plus single non-embedded edges between embedded vertices.
  std::vector<Bridge> bridges() const {
    std::vector<Bridge> out;
    std::vector<char> seen(n, 0);
    for (int s = 0; s < n; ++s) {
      if (in_h[s] || seen[s]) continue;
      std::vector<int> interior;
      std::deque<int> q{s};
      seen[s] = 1;
      while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        interior.push_back(v);
        for (int w : adj[v])
          if (!in_h[w] && !seen[w]) {
            seen[w] = 1;
            q.push_back(w);
          }
      }
      std::vector<char> is_int(n, 0), is_att(n, 0);
      for (int v : interior) is_int[v] = 1;
      Bridge b;
      for (int v : interior)
        for (int w : adj[v])
          if (in_h[w] && !is_att[w]) {
            is_att[w] = 1;
            b.attachments.push_back(w);
          }
      std::sort(b.attachments.begin(), b.attachments.end());
      // shortest path: first attachment -> interior -> any other attachment
      int a = b.attachments.front();
      std::vector<int> prev(n, -2);
      std::deque<int> bq;
      for (int w : adj[a])
        if (is_int[w] && prev[w] == -2) {
          prev[w] = -1;
          bq.push_back(w);
        }
      int hit = -1, hit_from = -1;
      while (!bq.empty() && hit == -1) {
        int v = bq.front();
        bq.pop_front();
        for (int w : adj[v]) {
          if (is_int[w] && prev[w] == -2) {
            prev[w] = v;
            bq.push_back(w);
          } else if (in_h[w] && w != a) {
            hit = w;
            hit_from = v;
            break;
          }
        }
      }
      std::vector<int> rev{hit, hit_from};
      for (int v = prev[hit_from]; v != -1; v = prev[v]) rev.push_back(v);
      rev.push_back(a);
      std::reverse(rev.begin(), rev.end());
      b.path = std::move(rev);
      out.push_back(std::move(b));
    }
    for (int u = 0; u < n; ++u) {
      if (!in_h[u]) continue;
      for (int v : adj[u])
        if (v > u && in_h[v] && !has_edge_h(u, v))
          out.push_back({{u, v}, {u, v}});
    }
    return out;
  }

  bool admissible(const Bridge& b, const std::vector<int>& face) const {
    std::uint32_t needed = 0;
    for (int v : face)
      for (size_t i = 0; i < b.attachments.size(); ++i)
        if (b.attachments[i] == v) needed |= 1u << i;
    return needed == (1u << b.attachments.size()) - 1;
  }

  // Splits `faces[fi]` along b.path; the path endpoints lie on the face cycle.
  void embed_path(const Bridge& b, size_t fi) {
    const std::vector<int>& path = b.path;
    int a = path.front(), z = path.back();
    std::vector<int> face = faces[fi];
    size_t ia = 0, iz = 0, L = face.size();
    for (size_t i = 0; i < L; ++i) {
      if (face[i] == a) ia = i;
      if (face[i] == z) iz = i;
    }
    std::vector<int> f1, f2;
    for (size_t i = ia;; i = (i + 1) % L) {
      f1.push_back(face[i]);
      if (i == iz) break;
    }
    for (size_t i = iz;; i = (i + 1) % L) {
      f2.push_back(face[i]);
      if (i == ia) break;
    }
    for (size_t i = path.size() - 2; i >= 1; --i) f1.push_back(path[i]);
    for (size_t i = 1; i + 1 < path.size(); ++i) f2.push_back(path[i]);
    faces[fi] = std::move(f1);
    faces.push_back(std::move(f2));
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      in_h[path[i]] = in_h[path[i + 1]] = 1;
      add_edge_h(path[i], path[i + 1]);
    }
  }

  bool run() {
    int m = edges_left;
    if (m <= 3) return true;
    if (m > 3 * n - 6) return false;
    // seed with any cycle: walk forward until a vertex repeats
    std::vector<int> walk{0}, at(n, -1);
    at[0] = 0;
    int prev = -1;
    for (;;) {
      int v = walk.back();
      int next = -1;
      for (int w : adj[v])
        if (w != prev) {
          next = w;
          break;
        }
      prev = v;
      if (at[next] != -1) {
        walk.erase(walk.begin(), walk.begin() + at[next]);
        break;
      }
      at[next] = static_cast<int>(walk.size());
      walk.push_back(next);
    }
    for (size_t i = 0; i < walk.size(); ++i) {
      in_h[walk[i]] = 1;
      add_edge_h(walk[i], walk[(i + 1) % walk.size()]);
    }
    faces.push_back(walk);
    faces.push_back(walk);
    while (edges_left > 0) {
      std::vector<Bridge> bs = bridges();
      size_t pick = bs.size(), pick_face = 0;
      bool forced = false;
      for (size_t bi = 0; bi < bs.size() && !forced; ++bi) {
        size_t count = 0, last = 0;
        for (size_t fi = 0; fi < faces.size(); ++fi)
          if (admissible(bs[bi], faces[fi])) {
            ++count;
            last = fi;
          }
        if (count == 0) return false;
        if (count == 1) {
          pick = bi;
          pick_face = last;
          forced = true;
        } else if (pick == bs.size()) {
          pick = bi;
          pick_face = last;
        }
      }
      embed_path(bs[pick], pick_face);
    }
    return true;
  }
};

inline bool block_planar(const std::vector<Edge>& block) {
  if (block.size() <= 3) return true;
  std::vector<int> verts;
  for (auto [u, v] : block) {
    verts.push_back(u);
    verts.push_back(v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  int bn = static_cast<int>(verts.size());
  std::vector<int> local(verts.back() + 1, -1);
  for (int i = 0; i < bn; ++i) local[verts[i]] = i;
  DmpEmbedder emb;
  emb.n = bn;
  emb.adj.assign(bn, {});
  for (auto [u, v] : block) {
    emb.adj[local[u]].push_back(local[v]);
    emb.adj[local[v]].push_back(local[u]);
  }
  for (auto& nb : emb.adj) std::sort(nb.begin(), nb.end());
  emb.in_h.assign(bn, 0);
  emb.edge_in_h.assign(static_cast<size_t>(bn) * bn, 0);
  emb.edges_left = static_cast<int>(block.size());
  return emb.run();
}

}  // namespace detail

// Planarity by Demoucron face embedding, block by block.
inline bool is_planar(const Graph& g) {
  int n = g.order();
  if (n < 5) return true;
  for (const auto& block : detail::biconnected_blocks(g))
    if (!detail::block_planar(block)) return false;
  return true;
}

}  // namespace speclab
