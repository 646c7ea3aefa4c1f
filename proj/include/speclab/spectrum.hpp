#pragma once

#include <cmath>
#include <vector>

#include "speclab/charpoly.hpp"
#include "speclab/eigensolver.hpp"
#include "speclab/graph.hpp"

namespace speclab {

enum class MatrixKind { Adjacency, Laplacian, SignlessLaplacian };

// Eigenvalue classification threshold: |x| <= kZeroTol counts as zero.
inline constexpr double kZeroTol = 1e-9;
// Numeric eigenvalues this close to zero trigger the exact inertia recheck
// (possible only for n <= 12, where the characteristic polynomial is exact).
inline constexpr double kInertiaRecheckWindow = 1e-7;

struct Spectrum {
  MatrixKind kind = MatrixKind::Adjacency;
  std::vector<double> values;  // descending

  // 1-based accessor matching the usual lambda_1 >= ... >= lambda_n notation.
  double lambda(int i) const { return values.at(static_cast<size_t>(i) - 1); }
  int n() const { return static_cast<int>(values.size()); }
};

inline std::vector<double> dense_matrix(const Graph& g, MatrixKind kind) {
  int n = g.order();
  std::vector<double> a(static_cast<size_t>(n) * n, 0.0);
  for (auto [u, v] : g.edges()) {
    double w = kind == MatrixKind::Laplacian ? -1.0 : 1.0;
    a[static_cast<size_t>(u) * n + v] = w;
    a[static_cast<size_t>(v) * n + u] = w;
  }
  if (kind != MatrixKind::Adjacency)
    for (int v = 0; v < n; ++v)
      a[static_cast<size_t>(v) * n + v] = static_cast<double>(g.degree(v));
  return a;
}

inline Spectrum eigenvalues(const Graph& g, MatrixKind kind = MatrixKind::Adjacency) {
  Spectrum s;
  s.kind = kind;
  s.values = symmetric_eigenvalues(dense_matrix(g, kind), g.order());
  return s;
}

struct Inertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
  bool exact = false;  // true when settled by the exact characteristic polynomial
};

inline Inertia adjacency_inertia(const Graph& g, const Spectrum& adj) {
  Inertia out;
  bool ambiguous = false;
  for (double x : adj.values) {
    if (x > kZeroTol)
      ++out.positive;
    else if (x < -kZeroTol)
      ++out.negative;
    else
      ++out.zero;
    if (std::fabs(x) <= kInertiaRecheckWindow && std::fabs(x) > 0.0) ambiguous = true;
    if (x == 0.0) ambiguous = true;
  }
  if (ambiguous && g.order() <= 12) {
    ExactInertia ex = real_rooted_inertia(adjacency_charpoly(g));
    out.positive = ex.positive;
    out.zero = ex.zero;
    out.negative = ex.negative;
    out.exact = true;
  }
  return out;
}

// One-stop bundle of the adjacency-spectrum quantities used by the
// conjecture checkers.
struct SpectralSummary {
  int n = 0;
  int m = 0;
  double lambda1 = 0.0;
  double lambda2 = 0.0;       // 0 when n < 2
  double lambda_min = 0.0;
  double spectral_gap = 0.0;  // lambda1 - lambda2
  double energy = 0.0;        // sum |lambda_i|
  double s_plus = 0.0;        // sum of squares of positive eigenvalues
  double s_minus = 0.0;       // sum of squares of negative eigenvalues
  double hl_index = 0.0;      // max(|lambda_H|, |lambda_L|), H=floor((n+1)/2), L=ceil((n+1)/2)
  Inertia inertia;
};

inline SpectralSummary spectral_summary(const Graph& g, const Spectrum& adj) {
  SpectralSummary out;
  out.n = g.order();
  out.m = g.size();
  if (out.n == 0) return out;
  out.lambda1 = adj.lambda(1);
  out.lambda2 = out.n >= 2 ? adj.lambda(2) : 0.0;
  out.lambda_min = adj.lambda(out.n);
  out.spectral_gap = out.lambda1 - out.lambda2;
  for (double x : adj.values) {
    out.energy += std::fabs(x);
    if (x > kZeroTol)
      out.s_plus += x * x;
    else if (x < -kZeroTol)
      out.s_minus += x * x;
  }
  int h = (out.n + 1) / 2;      // floor((n+1)/2)
  int l = (out.n + 2) / 2;      // ceil((n+1)/2)
  out.hl_index = std::max(std::fabs(adj.lambda(h)), std::fabs(adj.lambda(l)));
  out.inertia = adjacency_inertia(g, adj);
  return out;
}

inline SpectralSummary spectral_summary(const Graph& g) {
  return spectral_summary(g, eigenvalues(g));
}

// Sum of the k largest Laplacian eigenvalues.
inline double laplacian_partial_sum(const Spectrum& lap, int k) {
  if (lap.kind != MatrixKind::Laplacian)
    throw InvalidParameter("laplacian_partial_sum: needs a Laplacian spectrum");
  if (k < 0 || k > lap.n()) throw InvalidParameter("laplacian_partial_sum: 0 <= k <= n");
  double s = 0.0;
  for (int i = 1; i <= k; ++i) s += lap.lambda(i);
  return s;
}

inline double laplacian_partial_sum(const Graph& g, int k) {
  Spectrum lap = eigenvalues(g, MatrixKind::Laplacian);
  return laplacian_partial_sum(lap, k);
}

}  // namespace speclab
