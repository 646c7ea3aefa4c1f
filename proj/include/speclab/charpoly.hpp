#pragma once

#include <cstdint>
#include <vector>

#include "speclab/errors.hpp"
#include "speclab/graph.hpp"

namespace speclab {

// Exact characteristic polynomial of a small integer matrix via the
// Faddeev-LeVerrier recurrence, in 128-bit integer arithmetic. Sized for
// n <= 12 with entries up to O(n); coefficient magnitudes stay far below
// the 128-bit range there (Hadamard bound ~ 2.6e19 for the Laplacian at
// n = 12).

using int128 = __int128;

// Coefficients of det(xI - A) as [1, c1, ..., cn] (monic, degree n first).
inline std::vector<int128> charpoly(const std::vector<long long>& a, int n) {
  if (n > 12) throw InvalidParameter("charpoly: n <= 12 only");
  auto at = [&](const std::vector<int128>& m, int i, int j) -> int128 {
    return m[static_cast<size_t>(i) * n + j];
  };
  std::vector<int128> coeff(static_cast<size_t>(n) + 1, 0);
  coeff[0] = 1;
  std::vector<int128> M(static_cast<size_t>(n) * n, 0);  // M_0 = 0
  for (int k = 1; k <= n; ++k) {
    // M_k = A * M_{k-1} + c_{k-1} I
    std::vector<int128> next(static_cast<size_t>(n) * n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        int128 s = 0;
        for (int l = 0; l < n; ++l)
          s += static_cast<int128>(a[static_cast<size_t>(i) * n + l]) * at(M, l, j);
        if (i == j) s += coeff[k - 1];
        next[static_cast<size_t>(i) * n + j] = s;
      }
    M.swap(next);
    int128 tr = 0;
    for (int i = 0; i < n; ++i) {
      int128 s = 0;
      for (int l = 0; l < n; ++l)
        s += static_cast<int128>(a[static_cast<size_t>(i) * n + l]) * at(M, l, i);
      tr += s;
    }
    coeff[k] = -tr / k;  // exact division
  }
  return coeff;
}

inline std::vector<int128> adjacency_charpoly(const Graph& g) {
  int n = g.order();
  std::vector<long long> a(static_cast<size_t>(n) * n, 0);
  for (auto [u, v] : g.edges()) {
    a[static_cast<size_t>(u) * n + v] = 1;
    a[static_cast<size_t>(v) * n + u] = 1;
  }
  return charpoly(a, n);
}

struct ExactInertia {
  int positive = 0;
  int zero = 0;
  int negative = 0;
};

// For a real-rooted monic polynomial, Descartes' sign-change count is exact:
// #positive roots (with multiplicity) = sign changes of the coefficient
// sequence, and the zero root multiplicity is the number of trailing zeros.
inline ExactInertia real_rooted_inertia(const std::vector<int128>& coeff) {
  int n = static_cast<int>(coeff.size()) - 1;
  ExactInertia out;
  int tail = n;
  while (tail >= 0 && coeff[static_cast<size_t>(tail)] == 0) --tail;
  out.zero = n - tail;
  int changes = 0, prev = 0;
  for (int i = 0; i <= tail; ++i) {
    int128 c = coeff[static_cast<size_t>(i)];
    if (c == 0) continue;
    int s = c > 0 ? 1 : -1;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  out.positive = changes;
  out.negative = n - out.zero - out.positive;
  return out;
}

}  // namespace speclab
