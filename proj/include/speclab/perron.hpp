#pragma once

#include <cmath>
#include <vector>

#include "speclab/graph.hpp"

namespace speclab {

struct PerronResult {
  double lambda1 = 0.0;
  std::vector<double> vec;  // positive, unit 2-norm
  int iterations = 0;
  double residual = 0.0;

  double l1_norm() const {
    double s = 0.0;
    for (double x : vec) s += x;
    return s;
  }
};

// Perron vector of a connected graph by power iteration, started from the
// degree vector. Iterating with A + I keeps the dominant eigenvalue simple
// even for bipartite graphs (where +/-lambda1 would otherwise cycle); the
// convergence test is on the residual of A itself.
inline PerronResult principal_eigenvector(const Graph& g, double tol = 1e-10,
                                          long long max_iter = 20000000) {
  int n = g.order();
  if (n == 0) throw InvalidParameter("principal_eigenvector: empty graph");
  if (!is_connected(g)) throw NotConnected("principal_eigenvector: graph must be connected");
  PerronResult out;
  if (n == 1) {
    out.lambda1 = 0.0;
    out.vec = {1.0};
    return out;
  }
  std::vector<double> x(n), y(n);
  for (int v = 0; v < n; ++v) x[v] = static_cast<double>(g.degree(v));
  double norm = 0.0;
  for (double v : x) norm += v * v;
  norm = std::sqrt(norm);
  for (double& v : x) v /= norm;

  for (long long it = 1; it <= max_iter; ++it) {
    for (int v = 0; v < n; ++v) {
      double s = 0.0;
      g.for_each_neighbor(v, [&](int u) { s += x[u]; });
      y[v] = s;
    }
    double lambda = 0.0;
    for (int v = 0; v < n; ++v) lambda += x[v] * y[v];
    double res = 0.0;
    for (int v = 0; v < n; ++v) res = std::max(res, std::fabs(y[v] - lambda * x[v]));
    if (res <= tol) {
      out.lambda1 = lambda;
      out.vec = x;
      out.iterations = static_cast<int>(it);
      out.residual = res;
      return out;
    }
    // next iterate of (A + I) x
    norm = 0.0;
    for (int v = 0; v < n; ++v) {
      y[v] += x[v];
      norm += y[v] * y[v];
    }
    norm = std::sqrt(norm);
    for (int v = 0; v < n; ++v) x[v] = y[v] / norm;
  }
  throw NonConvergence("principal_eigenvector: iteration cap hit");
}

}  // namespace speclab
