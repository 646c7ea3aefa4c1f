#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "speclab/graph.hpp"
#include "speclab/planarity.hpp"

namespace speclab {

struct UniformHypergraph {
  int n = 0;
  int r = 3;
  std::vector<std::vector<int>> edges;  // sorted r-sets, lexicographically ordered

  UniformHypergraph() = default;
  UniformHypergraph(int n_, int r_, std::vector<std::vector<int>> edges_)
      : n(n_), r(r_), edges(std::move(edges_)) {
    if (n < 0 || r < 2) throw InvalidParameter("hypergraph: need n >= 0, rank >= 2");
    for (auto& e : edges) {
      std::sort(e.begin(), e.end());
      if (static_cast<int>(e.size()) != r)
        throw InvalidParameter("hypergraph: edge arity != rank");
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] >= n) throw InvalidParameter("hypergraph: vertex out of range");
        if (i > 0 && e[i] == e[i - 1])
          throw InvalidParameter("hypergraph: repeated vertex in edge");
      }
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
      throw InvalidParameter("hypergraph: duplicate edge");
  }

  int edge_count() const { return static_cast<int>(edges.size()); }
};

// 2-shadow: all pairs covered by some hyperedge.
inline Graph shadow(const UniformHypergraph& h) {
  std::vector<Edge> es;
  for (const auto& e : h.edges)
    for (size_t i = 0; i < e.size(); ++i)
      for (size_t j = i + 1; j < e.size(); ++j) es.emplace_back(e[i], e[j]);
  std::sort(es.begin(), es.end());
  es.erase(std::unique(es.begin(), es.end()), es.end());
  return Graph(h.n, es);
}

struct HypergraphRadiusResult {
  double radius = 0.0;
  std::vector<double> vector;  // unit l^r norm, entries >= 0, zeros on isolated vertices
  int iterations = 0;
  double residual = 0.0;
};

namespace detail {

// One run of the normalized fixed-point iteration from a given start vector.
// active/eindex address the isolated-vertex-stripped hypergraph.
inline HypergraphRadiusResult radius_fixed_point(const UniformHypergraph& h,
                                                 const std::vector<int>& active,
                                                 std::vector<double> x, int max_iter) {
  int r = h.r;
  double rfact = 1.0;
  for (int i = 2; i <= r; ++i) rfact *= i;
  auto normalize = [&](std::vector<double>& v) {
    double s = 0.0;
    for (double t : v) s += std::pow(t, r);
    double scale = std::pow(s, -1.0 / r);
    for (double& t : v) t *= scale;
  };
  auto edge_products = [&](const std::vector<double>& v, std::vector<double>& y) {
    std::fill(y.begin(), y.end(), 0.0);
    double obj = 0.0;
    for (const auto& e : h.edges) {
      double prod = 1.0;
      for (int v_id : e) prod *= v[v_id];
      obj += prod;
      for (int v_id : e) {
        double rest = prod / (v[v_id] > 0 ? v[v_id] : 1.0);
        if (v[v_id] == 0.0) {
          rest = 1.0;
          for (int w : e)
            if (w != v_id) rest *= v[w];
        }
        y[v_id] += rest;
      }
    }
    return obj;
  };
  normalize(x);
  std::vector<double> y(x.size());
  double prev = -1.0;
  for (int it = 1; it <= max_iter; ++it) {
    double obj = edge_products(x, y);
    double est = rfact * obj;
    if (prev >= 0.0 && std::fabs(est - prev) < 1e-10) {
      HypergraphRadiusResult out;
      out.radius = est;
      out.iterations = it;
      // eigen-equation residual: (r-1)! * y_i = radius * x_i^{r-1}
      double res = 0.0;
      for (int v : active)
        res = std::max(res, std::fabs(rfact / r * y[v] - est * std::pow(x[v], r - 1)));
      out.residual = res;
      out.vector = std::move(x);
      return out;
    }
    prev = est;
    // diagonal shift x_i^{r-1} keeps the map's fixed points while damping
    // the sign-pattern oscillation that plain iteration shows on bipartite-
    // like structures
    for (size_t i = 0; i < x.size(); ++i) {
      double t = y[i] + std::pow(x[i], r - 1);
      x[i] = std::pow(t, 1.0 / (r - 1));
    }
    normalize(x);
  }
  throw NonConvergence("hypergraph spectral_radius: no fixed point within iteration cap");
}

}  // namespace detail

inline HypergraphRadiusResult hypergraph_spectral_radius(const UniformHypergraph& h,
                                                         int max_iter = 100000) {
  if (h.edges.empty()) throw EmptyHypergraph("spectral_radius: hypergraph has no edges");
  if (h.r > 4) throw InvalidParameter("spectral_radius: rank capped at 4");
  std::vector<int> active;
  std::vector<char> covered(h.n, 0);
  for (const auto& e : h.edges)
    for (int v : e) covered[v] = 1;
  for (int v = 0; v < h.n; ++v)
    if (covered[v]) active.push_back(v);

  HypergraphRadiusResult best;
  for (int start = 0; start < 5; ++start) {
    std::vector<double> x(h.n, 0.0);
    if (start == 0) {
      for (int v : active) x[v] = 1.0;
    } else {
      std::mt19937 rng(static_cast<unsigned>(start));
      std::uniform_real_distribution<double> dist(0.5, 1.5);
      for (int v : active) x[v] = dist(rng);
    }
    HypergraphRadiusResult run = detail::radius_fixed_point(h, active, std::move(x), max_iter);
    if (run.radius > best.radius) best = std::move(run);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Rotation systems: combinatorial planar embeddings, one line per vertex,
// neighbours in cyclic order: "v: a b c ...".

struct RotationSystem {
  int n = 0;
  std::vector<std::vector<int>> order;
};

inline RotationSystem parse_rotation_system(const Graph& g, const std::string& text) {
  RotationSystem rs;
  rs.n = g.order();
  rs.order.assign(rs.n, {});
  std::vector<char> seen(rs.n, 0);
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw InvalidRotationSystem("rotation line missing ':': " + line);
    int v;
    try {
      v = std::stoi(line.substr(0, colon));
    } catch (const std::exception&) {
      throw InvalidRotationSystem("rotation line has no vertex id: " + line);
    }
    if (v < 0 || v >= rs.n) throw InvalidRotationSystem("rotation vertex out of range");
    if (seen[v]) throw InvalidRotationSystem("duplicate rotation line for a vertex");
    seen[v] = 1;
    std::istringstream rest(line.substr(colon + 1));
    int w;
    while (rest >> w) {
      if (w < 0 || w >= rs.n) throw InvalidRotationSystem("rotation neighbour out of range");
      rs.order[v].push_back(w);
    }
  }
  for (int v = 0; v < rs.n; ++v) {
    if (static_cast<int>(rs.order[v].size()) != g.degree(v))
      throw InvalidRotationSystem("rotation degree mismatch at vertex " + std::to_string(v));
    std::vector<char> mark(rs.n, 0);
    for (int w : rs.order[v]) {
      if (!g.has_edge(v, w) || mark[w])
        throw InvalidRotationSystem("rotation list is not the neighbour set of vertex " +
                                    std::to_string(v));
      mark[w] = 1;
    }
  }
  return rs;
}

// Face walks of the embedding: the dart (u,v) is followed by (v,w) with w
// the cyclic successor of u in the rotation at v.
inline std::vector<std::vector<int>> trace_faces(const RotationSystem& rs) {
  std::vector<std::vector<size_t>> pos(rs.n);
  for (int v = 0; v < rs.n; ++v) {
    pos[v].assign(rs.n, SIZE_MAX);
    for (size_t i = 0; i < rs.order[v].size(); ++i) pos[v][rs.order[v][i]] = i;
  }
  std::vector<std::vector<char>> used(rs.n);
  for (int v = 0; v < rs.n; ++v) used[v].assign(rs.order[v].size(), 0);
  std::vector<std::vector<int>> faces;
  for (int u = 0; u < rs.n; ++u)
    for (size_t i = 0; i < rs.order[u].size(); ++i) {
      if (used[u][i]) continue;
      std::vector<int> walk;
      int a = u;
      size_t ai = i;
      do {
        used[a][ai] = 1;
        int b = rs.order[a][ai];
        walk.push_back(a);
        size_t j = pos[b][a];
        ai = (j + 1) % rs.order[b].size();
        a = b;
      } while (!used[a][ai]);
      faces.push_back(std::move(walk));
    }
  return faces;
}

// 3-uniform hypergraph of the interior triangular faces of the embedding
// given by `rotation`; the outer face is the longest one (ties: first traced).
inline UniformHypergraph from_triangulation(const Graph& g, const std::string& rotation) {
  if (!is_connected(g)) throw InvalidRotationSystem("embedding requires a connected graph");
  if (!is_planar(g)) throw NotPlanar("from_triangulation: graph is not planar");
  RotationSystem rs = parse_rotation_system(g, rotation);
  std::vector<std::vector<int>> faces = trace_faces(rs);
  long long euler = static_cast<long long>(g.order()) - g.size() +
                    static_cast<long long>(faces.size());
  if (euler != 2)
    throw InvalidRotationSystem("rotation system is not a planar embedding (V-E+F != 2)");
  size_t outer = 0;
  for (size_t i = 1; i < faces.size(); ++i)
    if (faces[i].size() > faces[outer].size()) outer = i;
  std::vector<std::vector<int>> tris;
  for (size_t i = 0; i < faces.size(); ++i)
    if (i != outer && faces[i].size() == 3) tris.push_back(faces[i]);
  UniformHypergraph h(g.order(), 3, std::move(tris));
  return h;
}

// Rotation text for fan_graph(n): hub 0 below a horizontal path 1..n-1.
inline std::string fan_rotation(int n) {
  if (n < 3) throw InvalidParameter("fan_rotation: n >= 3");
  std::ostringstream out;
  out << "0:";
  for (int p = n - 1; p >= 1; --p) out << ' ' << p;
  out << '\n';
  out << "1: 2 0\n";
  for (int p = 2; p <= n - 2; ++p) out << p << ": " << p + 1 << ' ' << p - 1 << " 0\n";
  out << n - 1 << ": " << n - 2 << " 0\n";
  return out.str();
}

// Rotation text for k2_join_path(n): path 2..n-1 between apexes 0 (above)
// and 1 (below), the edge 0-1 routed around the first path vertex.
inline std::string k2p_rotation(int n) {
  if (n < 4) throw InvalidParameter("k2p_rotation: n >= 4");
  std::ostringstream out;
  out << "0: 1";
  for (int p = 2; p <= n - 1; ++p) out << ' ' << p;
  out << '\n';
  out << "1:";
  for (int p = n - 1; p >= 2; --p) out << ' ' << p;
  out << " 0\n";
  out << "2: 3 0 1\n";
  for (int p = 3; p <= n - 2; ++p) out << p << ": " << p + 1 << " 0 " << p - 1 << " 1\n";
  out << n - 1 << ": 0 " << n - 2 << " 1\n";
  return out.str();
}

}  // namespace speclab
