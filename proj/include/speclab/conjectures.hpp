#pragma once

// The checker registry: each catalogued open-problem statement is encoded as
// a predicate over a single graph and returns a verdict with a slack value.
//
// Slack convention: slack = RHS - LHS of the entry's inequality, oriented so
// that positive slack means "satisfied with margin". Quantified statements
// (over k, over independent sets, over required cycle lengths) report the
// minimum slack together with the arg-min quantifier value. Outcome rule:
// Holds iff slack >= -tol. Three kinds of entries deviate and say so in
// their catalog slack_note:
//   * conditional entries (C07) report, on violation, the premise margin
//     with flipped sign;
//   * equality-characterization entries (C16, C20, C25) can report Violated
//     at slack ~ 0 when the equality case is realized by the wrong graph;
//   * strict-inequality entries (C28) require slack > tol to hold.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "speclab/canonical.hpp"
#include "speclab/counting.hpp"
#include "speclab/cycles.hpp"
#include "speclab/density.hpp"
#include "speclab/errors.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/invariants.hpp"
#include "speclab/perron.hpp"
#include "speclab/planarity.hpp"
#include "speclab/signedgraph.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

inline constexpr double kPredicateTol = 1e-6;

enum class ConjectureId {
  C01_HongExt,
  C01b_HongExtComponents,
  C02_WilfExt,
  C03_BollobasNikiforov,
  C04_ELW,
  C05_PlanarMax,
  C07_ZhaiLinShu,
  C08_HaemersToughness,
  C14_Saturation,
  C15_Brouwer,
  C16_FullBrouwer,
  C17_SpectralGapKite,
  C18_SpectralGapComet,
  C19_EnergyIndependence,
  C19b_EnergyInertia,
  C20_AkbariH,
  C21_Brandt,
  C22_Powers,
  C23_Mohar,
  C24_GregoryEigenvector,
  C25_Cioaba,
  C26_Guiduli_Ptr,
  C27_BiluLinial,
  C28_Gregory_Signed,
};

inline constexpr int kConjectureCount = 24;

enum class Outcome { Holds, Violated, NotApplicable };

struct ConjectureVerdict {
  Outcome outcome = Outcome::NotApplicable;
  double slack = 0.0;  // meaningful for Holds/Violated
  // Violated: witness bundle (graph6 plus id-specific data such as the
  // quantifier index, vertex set, or signature). NotApplicable: the reason.
  // Holds: optional note (equality/witness information).
  std::string detail;
};

inline bool holds(const ConjectureVerdict& v) { return v.outcome == Outcome::Holds; }
inline bool violated(const ConjectureVerdict& v) { return v.outcome == Outcome::Violated; }
inline bool not_applicable(const ConjectureVerdict& v) {
  return v.outcome == Outcome::NotApplicable;
}

struct CheckParams {
  double tol = kPredicateTol;  // Holds/Violated boundary: slack >= -tol
  std::uint64_t budget = kDefaultNodeBudget;

  int power_index = 3;               // C22: eigenvalue index i, 3 or 4
  bool force_inertia_count = false;  // C04: use l = n+ instead of min{n+, omega}
  bool force_check = false;          // C20: evaluate even when A is singular
  int cycle_k = 2;                   // C07: the fixed parameter k >= 1
  std::optional<int> clique_size;    // C14: saturation order r (default: omega)
  std::optional<int> brouwer_k;      // C15/C16: restrict to one partial-sum index
  int density_t = 1;                 // C26: density slope t >= 1
  int density_r = 0;                 // C26: density offset r >= -t(t+1)/2
};

namespace detail {

inline ConjectureVerdict na(std::string reason) {
  return {Outcome::NotApplicable, 0.0, std::move(reason)};
}

inline ConjectureVerdict from_slack(double slack, double tol, std::string witness) {
  if (slack >= -tol) return {Outcome::Holds, slack, ""};
  return {Outcome::Violated, slack, std::move(witness)};
}

inline std::string wit(const Graph& g) { return "graph=" + to_graph6(g); }

inline std::string format_vertex_set(VertexSet s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (int v = 0; v < kMaxMaskOrder; ++v)
    if (s >> v & 1) {
      if (!first) out << ',';
      out << v;
      first = false;
    }
  out << '}';
  return out.str();
}

inline bool is_complete_graph(const Graph& g) {
  long long n = g.order();
  return 2LL * g.size() == n * (n - 1);
}

// ---- C01 family: sums of squared eigenvalues vs order ----------------------

inline ConjectureVerdict check_hong_ext(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  SpectralSummary s = spectral_summary(g);
  double lhs = static_cast<double>(g.order()) - 1.0;
  return from_slack(std::min(s.s_plus, s.s_minus) - lhs, p.tol, wit(g));
}

inline ConjectureVerdict check_hong_ext_components(const Graph& g, const CheckParams& p) {
  SpectralSummary s = spectral_summary(g);
  double kappa = static_cast<double>(components(g).size());
  double lhs = static_cast<double>(g.order()) - kappa;
  return from_slack(std::min(s.s_plus, s.s_minus) - lhs, p.tol, wit(g));
}

inline ConjectureVerdict check_wilf_ext(const Graph& g, const CheckParams& p) {
  SpectralSummary s = spectral_summary(g);
  int omega = clique_number(g, p.budget);
  double rhs = (1.0 - 1.0 / omega) * g.order();
  return from_slack(rhs - std::sqrt(s.s_plus), p.tol, wit(g));
}

inline ConjectureVerdict check_bollobas_nikiforov(const Graph& g, const CheckParams& p) {
  if (g.order() < 2) return na("needs n >= 2 so that lambda_2 exists");
  SpectralSummary s = spectral_summary(g);
  int omega = clique_number(g, p.budget);
  // The original statement asks for order >= omega + 1; complete graphs
  // (lambda_2 = -1 on top of the Motzkin-Straus equality) are excluded.
  if (omega == g.order())
    return na("complete graph: the statement requires order >= omega + 1");
  double rhs = 2.0 * g.size() * (1.0 - 1.0 / omega);
  double lhs = s.lambda1 * s.lambda1 + s.lambda2 * s.lambda2;
  return from_slack(rhs - lhs, p.tol, wit(g));
}

inline ConjectureVerdict check_elw(const Graph& g, const CheckParams& p) {
  Spectrum adj = eigenvalues(g);
  SpectralSummary s = spectral_summary(g, adj);
  int omega = clique_number(g, p.budget);
  int ell = p.force_inertia_count ? s.inertia.positive
                                  : std::min(s.inertia.positive, omega);
  double lhs = 0.0;
  for (int i = 1; i <= ell; ++i) lhs += adj.lambda(i) * adj.lambda(i);
  double rhs = 2.0 * g.size() * (1.0 - 1.0 / omega);
  return from_slack(rhs - lhs, p.tol, wit(g) + " l=" + std::to_string(ell));
}

// ---- C05: planar spectral-radius maximum -----------------------------------

inline ConjectureVerdict check_planar_max(const Graph& g, const CheckParams& p) {
  if (!is_planar(g)) return na("requires a planar graph");
  int n = g.order();
  if (n < 9) return na("stated for n >= 9");
  Graph h = k2_join_path(n);
  double slack = eigenvalues(h).lambda(1) - eigenvalues(g).lambda(1);
  if (slack < -p.tol) return {Outcome::Violated, slack, wit(g)};
  if (std::fabs(slack) <= p.tol) {
    if (n > 32)
      return {Outcome::Holds, slack,
              "equality within tolerance; isomorphism unchecked (n > 32)"};
    bool iso = is_isomorphic(g, h);
    return {Outcome::Holds, slack,
            iso ? "equality: isomorphic to the conjectured extremal graph"
                : "equality within tolerance; not isomorphic to the conjectured "
                  "extremal graph"};
  }
  return {Outcome::Holds, slack, ""};
}

// ---- C07: spectral threshold forces short-to-long cycle lengths ------------

inline ConjectureVerdict check_zhai_lin_shu(const Graph& g, const CheckParams& p) {
  int k = p.cycle_k;
  if (k < 1) throw InvalidParameter("C07_ZhaiLinShu: k >= 1");
  int n = g.order();
  long long m = g.size();
  if (min_degree(g) == 0) return na("isolated vertices excluded");
  if (n < 2 * k + 2)
    return na("order below 2k+2: required cycle lengths cannot occur");
  if (n > 18) return na("cycle-length enumeration capped at n = 18");
  double disc = 4.0 * m - static_cast<double>(k) * k + 1.0;
  if (disc < 0.0) return na("threshold undefined: 4m - k^2 + 1 < 0");
  double theta = (k - 1 + std::sqrt(disc)) / 2.0;
  double lam = eigenvalues(g).lambda(1);
  if (lam < theta - p.tol)
    return na("spectral premise lambda_1 >= (k-1+sqrt(4m-k^2+1))/2 not met");
  // Exceptional graph: the complete split graph with m/k + (k+1)/2 vertices
  // and clique size k, recognized only when that vertex count is integral.
  long long num = 2LL * m + static_cast<long long>(k) * (k + 1);
  if (num % (2LL * k) == 0) {
    long long nn = num / (2LL * k);
    if (nn == n && k <= n && is_isomorphic(g, complete_split(n, k)))
      return {Outcome::Holds, lam - theta, "exceptional complete split graph"};
  }
  std::set<int> lengths = cycle_spectrum(g, 2 * k + 2, p.budget);
  for (int t = 3; t <= 2 * k + 2; ++t)
    if (!lengths.count(t))
      return {Outcome::Violated, theta - lam,
              wit(g) + " k=" + std::to_string(k) + " missing cycle length t=" +
                  std::to_string(t)};
  return {Outcome::Holds, lam - theta, ""};
}

// ---- C08: toughness vs Laplacian spread ------------------------------------

inline ConjectureVerdict check_haemers_toughness(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  if (is_complete_graph(g))
    return na("complete graph: toughness is infinite and the bound is trivial");
  int n = g.order();
  Toughness t = toughness(g);  // throws BudgetExceeded beyond n = 20
  Spectrum lap = eigenvalues(g, MatrixKind::Laplacian);
  double denom = lap.lambda(1) - min_degree(g);
  double rhs = lap.lambda(n - 1) / denom;
  return from_slack(t.value() - rhs, p.tol,
                    wit(g) + " cut=" + format_vertex_set(t.witness));
}

// ---- C14: spectral minimum over saturated graphs ---------------------------

inline ConjectureVerdict check_saturation(const Graph& g, const CheckParams& p) {
  int n = g.order();
  int r;
  if (p.clique_size) {
    r = *p.clique_size;
    if (r < 2) throw InvalidParameter("C14_Saturation: r >= 2");
  } else {
    if (is_complete_graph(g))
      return na("complete graph: saturation order r is not determined");
    r = clique_number(g, p.budget);
    if (r < 2) return na("clique number below 2: no saturation order applies");
  }
  if (!is_saturated(g, r, p.budget))
    return na("not K_{r+1}-saturated for r = " + std::to_string(r));
  if (r - 1 > n) return na("no complete split graph S_{n,r-1} at this order");
  Graph h = complete_split(n, r - 1);
  double slack = eigenvalues(g).lambda(1) - eigenvalues(h).lambda(1);
  std::string tag = " r=" + std::to_string(r);
  if (slack < -p.tol) return {Outcome::Violated, slack, wit(g) + tag};
  if (std::fabs(slack) <= p.tol) {
    if (n > 32)
      return {Outcome::Holds, slack,
              "equality within tolerance; isomorphism unchecked (n > 32)"};
    bool iso = is_isomorphic(g, h);
    return {Outcome::Holds, slack,
            iso ? "equality: isomorphic to the complete split graph"
                : "equality within tolerance; not isomorphic to the complete "
                  "split graph"};
  }
  return {Outcome::Holds, slack, ""};
}

// ---- C15/C16: Laplacian partial sums ---------------------------------------

struct PartialSumScan {
  double min_slack = std::numeric_limits<double>::infinity();
  int argmin_k = 0;
  std::vector<int> equality_ks;  // indices with |slack_k| <= tol
};

inline PartialSumScan laplacian_sum_scan(const Graph& g, std::optional<int> only_k,
                                         double tol) {
  int n = g.order();
  if (only_k && (*only_k < 1 || *only_k > n))
    throw InvalidParameter("partial-sum index k must lie in [1, n]");
  Spectrum lap = eigenvalues(g, MatrixKind::Laplacian);
  double e = static_cast<double>(g.size());
  PartialSumScan out;
  double run = 0.0;
  for (int k = 1; k <= n; ++k) {
    run += lap.lambda(k);
    if (only_k && k != *only_k) continue;
    double slack = e + 0.5 * k * (k + 1) - run;
    if (slack < out.min_slack) {
      out.min_slack = slack;
      out.argmin_k = k;
    }
    if (std::fabs(slack) <= tol) out.equality_ks.push_back(k);
  }
  return out;
}

inline ConjectureVerdict check_brouwer(const Graph& g, const CheckParams& p) {
  PartialSumScan scan = laplacian_sum_scan(g, p.brouwer_k, p.tol);
  return from_slack(scan.min_slack, p.tol,
                    wit(g) + " k=" + std::to_string(scan.argmin_k));
}

// Searches nested-neighbourhood chains c_1 >= ... >= c_s with the prescribed
// sum; each candidate graph is tested for isomorphism with g.
inline bool chain_match(const Graph& g, int k, int r, int s, std::vector<int>& chain,
                        int idx, long long remaining, int cap) {
  if (idx == s)
    return remaining == 0 && is_isomorphic(g, gkrs_graph(k, r, s, chain));
  int hi = static_cast<int>(std::min<long long>(cap, remaining));
  for (int c = hi; c >= 0; --c) {
    if (remaining - c > static_cast<long long>(s - idx - 1) * c) continue;
    chain[idx] = c;
    if (chain_match(g, k, r, s, chain, idx + 1, remaining - c, c)) return true;
  }
  return false;
}

inline bool matches_clique_tail_family(const Graph& g, int k) {
  int n = g.order();
  if (k < 1 || k > n) return false;
  long long e = g.size();
  for (int r = 1; k + r <= n; ++r) {
    int s = n - k - r;
    long long base = static_cast<long long>(k) * (k - 1) / 2 +
                     static_cast<long long>(k) * r;
    long long need = e - base;
    if (need < 0 || need > static_cast<long long>(s) * (k - 1)) continue;
    std::vector<int> chain(s);
    if (chain_match(g, k, r, s, chain, 0, need, k - 1)) return true;
  }
  return false;
}

inline ConjectureVerdict check_full_brouwer(const Graph& g, const CheckParams& p) {
  PartialSumScan scan = laplacian_sum_scan(g, p.brouwer_k, p.tol);
  std::string tag = wit(g) + " k=" + std::to_string(scan.argmin_k);
  if (scan.min_slack < -p.tol) return {Outcome::Violated, scan.min_slack, tag};
  for (int k : scan.equality_ks) {
    if (g.order() > 32)
      return {Outcome::Holds, scan.min_slack,
              "equality at k=" + std::to_string(k) +
                  "; characterization unchecked (n > 32)"};
    if (!matches_clique_tail_family(g, k))
      return {Outcome::Violated, scan.min_slack,
              wit(g) + " equality at k=" + std::to_string(k) +
                  " matches no clique-plus-nested-tail graph"};
  }
  if (!scan.equality_ks.empty())
    return {Outcome::Holds, scan.min_slack,
            "equality at k=" + std::to_string(scan.equality_ks.front()) +
                ": matched by a clique-plus-nested-tail graph"};
  return {Outcome::Holds, scan.min_slack, ""};
}

// ---- C17/C18: minimum spectral gap families --------------------------------

inline double spectral_gap_of(const Graph& g) {
  Spectrum adj = eigenvalues(g);
  return adj.lambda(1) - adj.lambda(2);
}

inline ConjectureVerdict check_gap_kite(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  int n = g.order();
  if (n < 2) return na("spectral gap needs n >= 2");
  double best = std::numeric_limits<double>::infinity();
  int best_r = 1;
  for (int r = 1; 2 * r <= n; ++r) {
    double gap = spectral_gap_of(double_kite(r, n - 2 * r));
    if (gap < best) {
      best = gap;
      best_r = r;
    }
  }
  std::string tag = wit(g) + " family-min at doublekite(" + std::to_string(best_r) +
                    "," + std::to_string(n - 2 * best_r) + ")";
  return from_slack(spectral_gap_of(g) - best, p.tol, tag);
}

inline ConjectureVerdict check_gap_comet(const Graph& g, const CheckParams& p) {
  if (!is_tree(g)) return na("requires a tree");
  int n = g.order();
  if (n < 3) return na("no double comet exists below n = 3");
  double best = std::numeric_limits<double>::infinity();
  int best_k = 1;
  for (int k = 1; 2 * k + 1 <= n; ++k) {
    double gap = spectral_gap_of(double_comet(k, n - 2 * k));
    if (gap < best) {
      best = gap;
      best_k = k;
    }
  }
  std::string tag = wit(g) + " family-min at doublecomet(" + std::to_string(best_k) +
                    "," + std::to_string(n - 2 * best_k) + ")";
  return from_slack(spectral_gap_of(g) - best, p.tol, tag);
}

// ---- C19/C19b/C20: energy --------------------------------------------------

inline ConjectureVerdict check_energy_independence(const Graph& g, const CheckParams& p) {
  if (g.order() > kMaxMaskOrder)
    return na("independence number computation capped at n = 64");
  SpectralSummary s = spectral_summary(g);
  int alpha = independence_number(g, p.budget);
  double rhs = static_cast<double>(g.order() - alpha);
  return from_slack(0.5 * s.energy - rhs, p.tol, wit(g));
}

inline ConjectureVerdict check_energy_inertia(const Graph& g, const CheckParams& p) {
  SpectralSummary s = spectral_summary(g);
  double rhs = std::max(s.inertia.positive, s.inertia.negative);
  return from_slack(0.5 * s.energy - rhs, p.tol, wit(g));
}

inline ConjectureVerdict check_akbari_h(const Graph& g, const CheckParams& p) {
  SpectralSummary s = spectral_summary(g);
  if (s.inertia.zero > 0 && !p.force_check)
    return na("adjacency matrix is singular (n_zero = " +
              std::to_string(s.inertia.zero) + ")");
  double slack = s.energy - (max_degree(g) + min_degree(g));
  if (slack < -p.tol) return {Outcome::Violated, slack, wit(g)};
  if (std::fabs(slack) <= p.tol) {
    if (is_complete_graph(g)) return {Outcome::Holds, slack, "equality: complete graph"};
    return {Outcome::Violated, slack, wit(g) + " equality on a non-complete graph"};
  }
  return {Outcome::Holds, slack, ""};
}

// ---- C21: extreme eigenvalue sum for triangle-free regular graphs ----------

inline ConjectureVerdict check_brandt(const Graph& g, const CheckParams& p) {
  if (!regular_degree(g)) return na("requires a regular graph");
  if (count_triangles(g) != 0) return na("requires a triangle-free graph");
  SpectralSummary s = spectral_summary(g);
  double rhs = 4.0 / 25.0 * g.order();
  return from_slack(rhs - (s.lambda1 + s.lambda_min), p.tol, wit(g));
}

// ---- C22: individual eigenvalue bound --------------------------------------

inline ConjectureVerdict check_powers(const Graph& g, const CheckParams& p) {
  int i = p.power_index;
  if (i != 3 && i != 4)
    throw InvalidParameter("C22_Powers: eigenvalue index must be 3 or 4");
  if (g.order() < i) return na("needs n >= " + std::to_string(i));
  double rhs = static_cast<double>(g.order() / i);
  double slack = rhs - eigenvalues(g).lambda(i);
  return from_slack(slack, p.tol, wit(g) + " i=" + std::to_string(i));
}

// ---- C23: HL-index of planar subcubic graphs -------------------------------

inline ConjectureVerdict check_mohar(const Graph& g, const CheckParams& p) {
  if (max_degree(g) > 3) return na("requires maximum degree at most 3");
  if (!is_planar(g)) return na("requires a planar graph");
  SpectralSummary s = spectral_summary(g);
  return from_slack(1.0 - s.hl_index, p.tol, wit(g));
}

// ---- C24/C25: principal eigenvector mass on independent sets ---------------

struct IndependentSetMass {
  double mass = -1.0;
  VertexSet arg = 0;
};

inline IndependentSetMass max_independent_mass(const Graph& g,
                                               const std::vector<double>& x,
                                               std::uint64_t budget) {
  IndependentSetMass out;
  for_each_maximal_independent_set(
      g,
      [&](VertexSet s) {
        double t = 0.0;
        for (int v = 0; v < g.order(); ++v)
          if (s >> v & 1) t += x[v] * x[v];
        if (t > out.mass) {
          out.mass = t;
          out.arg = s;
        }
      },
      budget);
  return out;
}

inline ConjectureVerdict check_gregory_eigenvector(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  int n = g.order();
  if (n < 2) return na("chromatic number must be at least 2");
  if (n > 18) return na("independent-set quantification capped at n = 18");
  int k = chromatic_number(g, p.budget);
  PerronResult pe = principal_eigenvector(g);
  IndependentSetMass best = max_independent_mass(g, pe.vec, p.budget);
  double root = std::sqrt(static_cast<double>(k - 2) * (k - 2) +
                          4.0 * (k - 1) * (n - k + 1));
  double rhs = 0.5 - (k - 2) / (2.0 * root);
  return from_slack(rhs - best.mass, p.tol,
                    wit(g) + " chi=" + std::to_string(k) +
                        " S=" + format_vertex_set(best.arg));
}

inline ConjectureVerdict check_cioaba(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  int n = g.order();
  if (n < 2) return na("needs n >= 2");
  if (n > 18) return na("independent-set quantification capped at n = 18");
  PerronResult pe = principal_eigenvector(g);
  IndependentSetMass best = max_independent_mass(g, pe.vec, p.budget);
  double slack = 0.5 - best.mass;
  std::string set_tag = " S=" + format_vertex_set(best.arg);
  if (slack < -p.tol) return {Outcome::Violated, slack, wit(g) + set_tag};
  if (std::fabs(slack) <= p.tol) {
    auto side = bipartition(g);
    if (side) {
      VertexSet mask = 0;
      for (int v : *side) mask |= VertexSet{1} << v;
      VertexSet other = full_set(n) & ~mask;
      if (best.arg == mask || best.arg == other)
        return {Outcome::Holds, slack, "equality: bipartite with S a colour class"};
    }
    return {Outcome::Violated, slack,
            wit(g) + set_tag + " equality without a bipartite colour class"};
  }
  return {Outcome::Holds, slack, ""};
}

// ---- C26: spectral radius under a hereditary density property --------------

inline ConjectureVerdict check_guiduli_ptr(const Graph& g, const CheckParams& p) {
  int t = p.density_t;
  double r = static_cast<double>(p.density_r);
  if (t < 1) throw InvalidParameter("C26_Guiduli_Ptr: t >= 1");
  if (t * (t + 1.0) + 2.0 * r < 0.0)
    throw InvalidParameter("C26_Guiduli_Ptr: need r >= -t(t+1)/2");
  if (g.order() > 24) return na("density property scan capped at n = 24");
  DensityCheck dc = hereditary_density_bound(g, t, r);
  if (!dc.holds)
    return na("P_{t,r} fails: subset " + format_vertex_set(dc.witness) + " has " +
              std::to_string(dc.witness_edges) + " edges");
  double bound = sparse_density_lambda_bound(g.order(), t, r);
  return from_slack(bound - eigenvalues(g).lambda(1), p.tol,
                    wit(g) + " t=" + std::to_string(t) +
                        " r=" + std::to_string(p.density_r));
}

// ---- C27/C28: signature minimizing the signed spectral radius --------------

inline ConjectureVerdict check_bilu_linial(const Graph& g, const CheckParams& p) {
  if (!is_connected(g)) return na("requires a connected graph");
  auto d = regular_degree(g);
  if (!d) return na("requires a regular graph");
  if (*d < 2) return na("stated for degree d >= 2");
  MinSignatureResult ms = min_signature_radius(g);
  double bound = 2.0 * std::sqrt(*d - 1.0);
  double slack = bound - ms.rho_min;
  std::string sig = "signature=" + serialize_signed(ms.rho_witness);
  if (slack >= -p.tol) return {Outcome::Holds, slack, sig};
  return {Outcome::Violated, slack, wit(g) + " " + sig};
}

inline ConjectureVerdict check_gregory_signed(const Graph& g, const CheckParams& p) {
  if (g.size() == 0) return na("trivial graph: no edges");
  int delta_max = max_degree(g);
  if (delta_max < 2) return na("maximum degree below 2: bound is degenerate");
  if (!is_connected(g))
    return na("signature search requires a connected graph");
  MinSignatureResult ms = min_signature_radius(g);
  double bound = 2.0 * std::sqrt(delta_max - 1.0);
  double slack = bound - ms.rho_min;
  std::string sig = "signature=" + serialize_signed(ms.rho_witness);
  if (slack > p.tol) return {Outcome::Holds, slack, sig};
  if (slack < -p.tol) return {Outcome::Violated, slack, wit(g) + " " + sig};
  return {Outcome::Violated, slack,
          wit(g) + " strict inequality fails: best " + sig +
              " attains the bound"};
}

}  // namespace detail

// Single-graph entry point. InvalidParameter propagates (caller misuse);
// BudgetExceeded from any underlying search converts to NotApplicable.
inline ConjectureVerdict check(ConjectureId id, const Graph& g,
                               const CheckParams& params = {}) {
  if (g.order() == 0) return detail::na("empty graph of order 0");
  try {
    switch (id) {
      case ConjectureId::C01_HongExt: return detail::check_hong_ext(g, params);
      case ConjectureId::C01b_HongExtComponents:
        return detail::check_hong_ext_components(g, params);
      case ConjectureId::C02_WilfExt: return detail::check_wilf_ext(g, params);
      case ConjectureId::C03_BollobasNikiforov:
        return detail::check_bollobas_nikiforov(g, params);
      case ConjectureId::C04_ELW: return detail::check_elw(g, params);
      case ConjectureId::C05_PlanarMax: return detail::check_planar_max(g, params);
      case ConjectureId::C07_ZhaiLinShu: return detail::check_zhai_lin_shu(g, params);
      case ConjectureId::C08_HaemersToughness:
        return detail::check_haemers_toughness(g, params);
      case ConjectureId::C14_Saturation: return detail::check_saturation(g, params);
      case ConjectureId::C15_Brouwer: return detail::check_brouwer(g, params);
      case ConjectureId::C16_FullBrouwer: return detail::check_full_brouwer(g, params);
      case ConjectureId::C17_SpectralGapKite: return detail::check_gap_kite(g, params);
      case ConjectureId::C18_SpectralGapComet: return detail::check_gap_comet(g, params);
      case ConjectureId::C19_EnergyIndependence:
        return detail::check_energy_independence(g, params);
      case ConjectureId::C19b_EnergyInertia:
        return detail::check_energy_inertia(g, params);
      case ConjectureId::C20_AkbariH: return detail::check_akbari_h(g, params);
      case ConjectureId::C21_Brandt: return detail::check_brandt(g, params);
      case ConjectureId::C22_Powers: return detail::check_powers(g, params);
      case ConjectureId::C23_Mohar: return detail::check_mohar(g, params);
      case ConjectureId::C24_GregoryEigenvector:
        return detail::check_gregory_eigenvector(g, params);
      case ConjectureId::C25_Cioaba: return detail::check_cioaba(g, params);
      case ConjectureId::C26_Guiduli_Ptr: return detail::check_guiduli_ptr(g, params);
      case ConjectureId::C27_BiluLinial: return detail::check_bilu_linial(g, params);
      case ConjectureId::C28_Gregory_Signed:
        return detail::check_gregory_signed(g, params);
    }
  } catch (const BudgetExceeded& e) {
    return detail::na(std::string("budget: ") + e.what());
  }
  throw InvalidParameter("check: unknown conjecture id");
}

// ---- catalog ---------------------------------------------------------------

struct CatalogEntry {
  ConjectureId id;
  std::string_view name;       // stable id string used in CLI and reports
  std::string_view topic;      // grouping tag
  std::string_view statement;  // the inequality, in plain text
  std::string_view applicability;
  std::string_view parameters;  // parameter schema; empty when none
  std::string_view slack_note;  // non-empty for non-standard slack semantics
};

inline const std::array<CatalogEntry, kConjectureCount>& catalog() {
  static const std::array<CatalogEntry, kConjectureCount> entries = {{
      {ConjectureId::C01_HongExt, "C01_HongExt", "eigenvalue-square-sums",
       "min{s+, s-} >= n - 1", "connected graphs", "", ""},
      {ConjectureId::C01b_HongExtComponents, "C01b_HongExtComponents",
       "eigenvalue-square-sums", "min{s+, s-} >= n - kappa(G)", "all graphs", "",
       ""},
      {ConjectureId::C02_WilfExt, "C02_WilfExt", "eigenvalue-square-sums",
       "sqrt(s+) <= (1 - 1/omega) n", "all graphs", "", ""},
      {ConjectureId::C03_BollobasNikiforov, "C03_BollobasNikiforov",
       "eigenvalue-square-sums", "lambda_1^2 + lambda_2^2 <= 2m (1 - 1/omega)",
       "non-complete graphs with n >= 2 (order >= omega + 1)", "", ""},
      {ConjectureId::C04_ELW, "C04_ELW", "eigenvalue-square-sums",
       "sum_{i<=l} lambda_i^2 <= 2m (1 - 1/omega) with l = min{n+, omega}",
       "all graphs", "force_inertia_count: use l = n+ instead", ""},
      {ConjectureId::C05_PlanarMax, "C05_PlanarMax", "planar-extremal",
       "lambda_1 <= lambda_1(K_2 v P_{n-2})", "planar graphs with n >= 9", "",
       "equality reports Holds plus an isomorphism note"},
      {ConjectureId::C07_ZhaiLinShu, "C07_ZhaiLinShu", "cycles-and-spectral-radius",
       "lambda_1 >= (k-1+sqrt(4m-k^2+1))/2 forces cycles of every length t <= "
       "2k+2, except one complete split graph",
       "no isolated vertices, n in [2k+2, 18]; below-threshold graphs are "
       "NotApplicable; the source statement is asymptotic in m and this is its "
       "finite instantiation (at k = 1 every complete bipartite graph sits on "
       "the threshold without odd cycles)",
       "cycle_k: the fixed k >= 1 (default 2, the confirmed case)",
       "on violation the slack is the flipped premise margin theta - lambda_1"},
      {ConjectureId::C08_HaemersToughness, "C08_HaemersToughness", "toughness",
       "t(G) >= mu_{n-1} / (mu_1 - delta)",
       "connected non-complete graphs, n <= 20", "", ""},
      {ConjectureId::C14_Saturation, "C14_Saturation", "saturation",
       "K_{r+1}-saturated graphs have lambda_1 >= lambda_1(S_{n,r-1})",
       "K_{r+1}-saturated graphs (r defaults to the clique number)",
       "clique_size: override r >= 2",
       "equality reports Holds plus an isomorphism note"},
      {ConjectureId::C15_Brouwer, "C15_Brouwer", "laplacian-sums",
       "S_k(G) <= e(G) + k(k+1)/2 for every k", "all graphs",
       "brouwer_k: restrict to a single k", ""},
      {ConjectureId::C16_FullBrouwer, "C16_FullBrouwer", "laplacian-sums",
       "S_k(G) <= e(G) + k(k+1)/2, equality only for clique-plus-nested-tail "
       "graphs",
       "all graphs (characterization needs n <= 32)",
       "brouwer_k: restrict to a single k",
       "equality realized by the wrong graph reports Violated at slack ~ 0"},
      {ConjectureId::C17_SpectralGapKite, "C17_SpectralGapKite", "spectral-gap",
       "spectral gap >= minimum over double kites DK(r, n-2r)",
       "connected graphs with n >= 2", "", ""},
      {ConjectureId::C18_SpectralGapComet, "C18_SpectralGapComet", "spectral-gap",
       "tree spectral gap >= minimum over double comets C(k, n-2k)",
       "trees with n >= 3", "", ""},
      {ConjectureId::C19_EnergyIndependence, "C19_EnergyIndependence", "energy",
       "sum of positive eigenvalues >= n - alpha", "graphs with n <= 64", "",
       ""},
      {ConjectureId::C19b_EnergyInertia, "C19b_EnergyInertia", "energy",
       "sum of positive eigenvalues >= max{n+, n-}", "all graphs", "", ""},
      {ConjectureId::C20_AkbariH, "C20_AkbariH", "energy",
       "energy >= Delta + delta, equality only for complete graphs",
       "graphs with nonsingular adjacency matrix",
       "force_check: evaluate even when singular",
       "equality on a non-complete graph reports Violated at slack ~ 0"},
      {ConjectureId::C21_Brandt, "C21_Brandt", "extreme-eigenvalue-sum",
       "lambda_1 + lambda_n <= (4/25) n", "triangle-free regular graphs", "",
       ""},
      {ConjectureId::C22_Powers, "C22_Powers", "higher-eigenvalues",
       "lambda_i <= floor(n / i)", "graphs with n >= i",
       "power_index: i in {3, 4}", ""},
      {ConjectureId::C23_Mohar, "C23_Mohar", "median-eigenvalues",
       "HL-index <= 1", "planar graphs with maximum degree <= 3", "", ""},
      {ConjectureId::C24_GregoryEigenvector, "C24_GregoryEigenvector",
       "principal-eigenvector",
       "sum_{v in S} x_v^2 <= 1/2 - (k-2) / (2 sqrt((k-2)^2 + 4(k-1)(n-k+1))) "
       "for independent S, chi = k",
       "connected graphs, 2 <= n <= 18", "", ""},
      {ConjectureId::C25_Cioaba, "C25_Cioaba", "principal-eigenvector",
       "sum_{v in S} x_v^2 <= 1/2 for independent S, equality iff bipartite "
       "with S a colour class",
       "connected graphs, 2 <= n <= 18", "",
       "equality without a bipartite colour class reports Violated at slack ~ 0"},
      {ConjectureId::C26_Guiduli_Ptr, "C26_Guiduli_Ptr", "sparse-density",
       "P_{t,r} density implies lambda_1 <= sqrt(tn) + sqrt(t(t+1)+2r) + "
       "(t-1)/2",
       "graphs satisfying P_{t,r}, n <= 24",
       "density_t >= 1, density_r >= -t(t+1)/2", ""},
      {ConjectureId::C27_BiluLinial, "C27_BiluLinial", "signed-spectra",
       "some signature has rho <= 2 sqrt(d-1)",
       "connected d-regular graphs, d >= 2, co-tree rank <= 24", "", ""},
      {ConjectureId::C28_Gregory_Signed, "C28_Gregory_Signed", "signed-spectra",
       "some signature has rho < 2 sqrt(Delta-1), strictly",
       "connected graphs with Delta >= 2, co-tree rank <= 24", "",
       "strict: Holds requires slack > tol; equality reports Violated"},
  }};
  return entries;
}

inline std::string_view to_string(ConjectureId id) {
  for (const CatalogEntry& e : catalog())
    if (e.id == id) return e.name;
  throw InvalidParameter("to_string: unknown conjecture id");
}

inline std::optional<ConjectureId> parse_conjecture_id(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e.id;
  return std::nullopt;
}

inline std::vector<ConjectureId> all_conjecture_ids() {
  std::vector<ConjectureId> out;
  out.reserve(kConjectureCount);
  for (const CatalogEntry& e : catalog()) out.push_back(e.id);
  return out;
}

// ---- diagnostics (questions without a finite Holds/Violated predicate) -----

struct ThresholdDiagnostic {
  double lambda1 = 0.0;
  double threshold = 0.0;
  bool exceeds = false;
};

// Compares lambda_1 with the spectral radius of the split-plus-edge graph
// S+_{n,k}, the benchmark family for long-cycle threshold questions.
inline ThresholdDiagnostic splitplus_threshold_diagnostic(const Graph& g, int k) {
  ThresholdDiagnostic out;
  out.lambda1 = eigenvalues(g).lambda(1);
  out.threshold = eigenvalues(complete_split_plus(g.order(), k)).lambda(1);
  out.exceeds = out.lambda1 > out.threshold;
  return out;
}

struct TriangleThresholdDiagnostic {
  double lambda1 = 0.0;
  double threshold = 0.0;  // sqrt(floor(n^2 / 4))
  bool exceeds = false;
  long long triangles = 0;
};

// Reports the triangle count next to the bipartite-maximum spectral threshold
// sqrt(floor(n^2/4)); no verdict is attached.
inline TriangleThresholdDiagnostic triangle_threshold_diagnostic(const Graph& g) {
  TriangleThresholdDiagnostic out;
  long long n = g.order();
  out.lambda1 = eigenvalues(g).lambda(1);
  out.threshold = std::sqrt(static_cast<double>(n * n / 4));
  out.exceeds = out.lambda1 >= out.threshold;
  out.triangles = count_triangles(g);
  return out;
}

struct SignedRadiusDiagnostic {
  double rho_min = 0.0;
  double bound = 0.0;  // 2 sqrt(rho(G) - 1)
  bool strictly_below = false;
};

// Question variant of the signed-radius bound with rho(G) in place of the
// maximum degree: is some signature strictly below 2 sqrt(rho(G) - 1)?
inline SignedRadiusDiagnostic signed_radius_diagnostic(const Graph& g) {
  if (!is_connected(g))
    throw InvalidParameter("signed_radius_diagnostic: connected graphs only");
  SignedRadiusDiagnostic out;
  double rho = eigenvalues(g).lambda(1);
  out.rho_min = min_signature_radius(g).rho_min;
  out.bound = rho >= 1.0 ? 2.0 * std::sqrt(rho - 1.0) : 0.0;
  out.strictly_below = out.rho_min < out.bound;
  return out;
}

}  // namespace speclab
