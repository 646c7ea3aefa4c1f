#pragma once

#include <cmath>
#include <cstdint>

#include "speclab/graph.hpp"

namespace speclab {

struct DensityCheck {
  bool holds = true;
  VertexSet witness = 0;  // first violating subset in mask order, if any
  int witness_size = 0;
  int witness_edges = 0;
};

// Hereditary density property P_{t,r}: every subgraph H with |V(H)| >= t has
// e(H) <= t |V(H)| + r. Checking induced subgraphs suffices (removing edges
// only lowers the left side). Exhaustive over subsets, so n <= 24.
inline DensityCheck hereditary_density_bound(const Graph& g, int t, double r) {
  if (t < 1) throw InvalidParameter("hereditary_density_bound: t >= 1");
  int n = g.order();
  if (n > 24) throw BudgetExceeded("hereditary_density_bound: subset scan capped at n = 24");
  DensityCheck out;
  if (n > kMaxMaskOrder) return out;  // unreachable given the cap, defensive
  std::vector<std::uint64_t> rows(n);
  for (int v = 0; v < n; ++v) rows[v] = g.row64(v);
  std::uint64_t full = full_set(n);
  for (std::uint64_t s = 0; s <= full; ++s) {
    int size = std::popcount(s);
    if (size < t) {
      if (s == full) break;
      continue;
    }
    int twice_edges = 0;
    std::uint64_t bits = s;
    while (bits) {
      int v = std::countr_zero(bits);
      bits &= bits - 1;
      twice_edges += std::popcount(rows[v] & s);
    }
    double e = twice_edges / 2.0;
    if (e > static_cast<double>(t) * size + r + 1e-9) {
      out.holds = false;
      out.witness = s;
      out.witness_size = size;
      out.witness_edges = twice_edges / 2;
      return out;
    }
    if (s == full) break;
  }
  return out;
}

// Spectral-radius bound conjectured for graphs with the P_{t,r} property:
// sqrt(t n) + sqrt(t(t+1) + 2r) + (t-1)/2. Requires r >= -t(t+1)/2 so the
// inner square root is real.
inline double sparse_density_lambda_bound(int n, int t, double r) {
  if (t < 1) throw InvalidParameter("sparse_density_lambda_bound: t >= 1");
  double inner = t * (t + 1.0) + 2.0 * r;
  if (inner < 0.0)
    throw InvalidParameter("sparse_density_lambda_bound: need r >= -t(t+1)/2");
  return std::sqrt(static_cast<double>(t) * n) + std::sqrt(inner) +
         (t - 1.0) / 2.0;
}

}  // namespace speclab
