#pragma once

// Batch machinery on top of the checker registry: graph sources (built-in
// exhaustive enumeration, graph6 stream files, free-tree enumeration, family
// parameter sweeps), parallel verification with deterministic reports, and
// constrained extremal search (exhaustive or simulated-annealing local
// search), plus the hypercube induced-subgraph eigenvalue optimizer.
//
// Determinism contract: a verification or exhaustive-search run produces the
// same report for the same source and parameters regardless of the worker
// count. Work is split into fixed-size chunks of the materialized graph
// list; per-graph evaluation is pure; partial results are merged in chunk
// order and every output list is normalized by sorting on slack and
// canonical form.

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "speclab/canonical.hpp"
#include "speclab/conjectures.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/errors.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/invariants.hpp"
#include "speclab/perron.hpp"
#include "speclab/planarity.hpp"
#include "speclab/spectrum.hpp"

namespace speclab {

// --- graph sources ------------------------------------------------------

struct GraphSource {
  enum class Kind { BuiltinEnum, Graph6Stream, TreeEnum, FamilySweep };

  Kind kind = Kind::BuiltinEnum;
  int n = 0;                    // BuiltinEnum / TreeEnum order
  bool connected_only = false;  // BuiltinEnum filter
  std::string path;             // Graph6Stream file, one graph6 per line
  std::string pattern;          // FamilySweep spec with a single "%d"
  int sweep_lo = 0;             // FamilySweep range, inclusive
  int sweep_hi = -1;

  static GraphSource builtin(int order, bool connected = false) {
    GraphSource s;
    s.kind = Kind::BuiltinEnum;
    s.n = order;
    s.connected_only = connected;
    return s;
  }
  static GraphSource stream(std::string file) {
    GraphSource s;
    s.kind = Kind::Graph6Stream;
    s.path = std::move(file);
    return s;
  }
  static GraphSource trees(int order) {
    GraphSource s;
    s.kind = Kind::TreeEnum;
    s.n = order;
    return s;
  }
  static GraphSource family_sweep(std::string pat, int lo, int hi) {
    GraphSource s;
    s.kind = Kind::FamilySweep;
    s.pattern = std::move(pat);
    s.sweep_lo = lo;
    s.sweep_hi = hi;
    return s;
  }

  std::string describe() const {
    std::ostringstream out;
    switch (kind) {
      case Kind::BuiltinEnum:
        out << "builtin_enum{n=" << n << (connected_only ? ", connected" : "")
            << "}";
        break;
      case Kind::Graph6Stream:
        out << "graph6_stream{" << path << "}";
        break;
      case Kind::TreeEnum:
        out << "tree_enum{n=" << n << "}";
        break;
      case Kind::FamilySweep:
        out << "family_sweep{" << pattern << ", " << sweep_lo << ".."
            << sweep_hi << "}";
        break;
    }
    return out.str();
  }
};

struct SourceStats {
  long long graphs = 0;
  long long malformed_skipped = 0;  // unparseable stream lines
};

namespace detail {

inline std::string substitute_sweep_value(const std::string& pattern, int v) {
  auto pos = pattern.find("%d");
  if (pos == std::string::npos)
    throw InvalidParameter("family sweep pattern needs a %d placeholder: " +
                           pattern);
  return pattern.substr(0, pos) + std::to_string(v) + pattern.substr(pos + 2);
}

}  // namespace detail

// Visits every graph of the source in its fixed order. Returns counts; for
// stream sources, lines that fail to parse are skipped and counted.
template <typename F>
SourceStats for_each_source_graph(const GraphSource& src, F&& f) {
  SourceStats stats;
  switch (src.kind) {
    case GraphSource::Kind::BuiltinEnum:
      for_each_graph(src.n, src.connected_only, [&](const Graph& g) {
        ++stats.graphs;
        f(g);
      });
      break;
    case GraphSource::Kind::TreeEnum:
      for_each_free_tree(src.n, [&](const Graph& g) {
        ++stats.graphs;
        f(g);
      });
      break;
    case GraphSource::Kind::FamilySweep:
      if (src.sweep_hi < src.sweep_lo)
        throw InvalidParameter("family sweep: empty range");
      for (int v = src.sweep_lo; v <= src.sweep_hi; ++v) {
        Graph g = make_family(detail::substitute_sweep_value(src.pattern, v));
        ++stats.graphs;
        f(g);
      }
      break;
    case GraphSource::Kind::Graph6Stream: {
      std::ifstream in(src.path);
      if (!in) throw Error("cannot open graph6 stream: " + src.path);
      std::string line;
      while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
          line.pop_back();
        if (line.empty()) continue;
        try {
          Graph g = from_graph6(line);
          ++stats.graphs;
          f(g);
        } catch (const MalformedInput&) {
          ++stats.malformed_skipped;
        }
      }
      break;
    }
  }
  return stats;
}

// The source as a list of (re-encoded) graph6 strings, the unit the chunked
// worker pool distributes.
inline std::vector<std::string> materialize_graph6(const GraphSource& src,
                                                   SourceStats* stats = nullptr) {
  std::vector<std::string> out;
  SourceStats st = for_each_source_graph(
      src, [&](const Graph& g) { out.push_back(to_graph6(g)); });
  if (stats) *stats = st;
  return out;
}

// --- verification reports -----------------------------------------------

inline constexpr int kNearMissLimit = 10;      // rows kept in the slack table
inline constexpr long long kWitnessLimit = 1000;  // stored violation graphs
inline constexpr std::size_t kVerifyChunk = 256;  // graphs per work unit

// Sort key used wherever graph lists must be order-normalized: the canonical
// form's graph6 string when the canonical machinery applies, the graph's own
// encoding otherwise.
inline std::string graph_sort_key(const Graph& g, const std::string& g6) {
  if (g.order() <= 32) return to_graph6(canonical_graph(g));
  return g6;
}

struct NearMiss {
  double slack = 0.0;
  std::string graph6;  // the graph as supplied by the source
  std::string key;     // normalization key (canonical form)
};

struct ConjectureTally {
  ConjectureId id{};
  long long holds = 0;
  long long violated = 0;
  long long not_applicable = 0;
  bool has_min_slack = false;  // false when every graph was NotApplicable
  double min_slack = 0.0;
  std::vector<NearMiss> near_misses;   // smallest slacks, sorted (slack, key)
  std::vector<std::string> witnesses;  // violation graph6, sorted by key
};

struct VerificationReport {
  std::string source;
  long long graph_count = 0;
  long long malformed_skipped = 0;
  std::vector<ConjectureTally> conjectures;  // in requested id order
  // meta fields, excluded from determinism comparisons:
  double wall_seconds = 0.0;
  int workers = 1;
};

namespace detail {

struct NearMissLess {
  bool operator()(const NearMiss& a, const NearMiss& b) const {
    if (a.slack != b.slack) return a.slack < b.slack;
    if (a.key != b.key) return a.key < b.key;
    return a.graph6 < b.graph6;
  }
};

struct PartialTally {
  long long holds = 0;
  long long violated = 0;
  long long not_applicable = 0;
  bool has_min = false;
  double min_slack = 0.0;
  std::vector<NearMiss> near;  // sorted, at most kNearMissLimit
  std::vector<std::pair<std::string, std::string>> wit;  // (key, graph6)

  void add_slack(double slack, const Graph& g, const std::string& g6) {
    if (!has_min || slack < min_slack) {
      has_min = true;
      min_slack = slack;
    }
    if (static_cast<int>(near.size()) == kNearMissLimit &&
        slack > near.back().slack)
      return;
    NearMiss cand{slack, g6, graph_sort_key(g, g6)};
    auto it = std::upper_bound(near.begin(), near.end(), cand, NearMissLess{});
    near.insert(it, std::move(cand));
    if (static_cast<int>(near.size()) > kNearMissLimit) near.pop_back();
  }
};

// Runs `work` on `workers` threads (inline when workers == 1) and rethrows
// the first exception any thread raised.
template <typename Work>
void run_worker_pool(int workers, Work&& work) {
  if (workers <= 1) {
    work();
    return;
  }
  std::exception_ptr first_error;
  std::mutex error_mutex;
  auto guarded = [&] {
    try {
      work();
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!first_error) first_error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int t = 0; t < workers; ++t) pool.emplace_back(guarded);
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail

// Checks every graph of the source against every requested conjecture.
// NotApplicable covers unmet preconditions and exhausted budgets; Holds and
// Violated feed the slack statistics. The report is byte-for-byte identical
// for any worker count.
inline VerificationReport verify(const GraphSource& src,
                                 const std::vector<ConjectureId>& ids,
                                 const CheckParams& params = {},
                                 int workers = 1) {
  auto start_time = std::chrono::steady_clock::now();
  SourceStats stats;
  std::vector<std::string> list = materialize_graph6(src, &stats);

  const std::size_t nids = ids.size();
  const std::size_t nchunks = (list.size() + kVerifyChunk - 1) / kVerifyChunk;
  std::vector<std::vector<detail::PartialTally>> parts(nchunks);

  std::atomic<std::size_t> next{0};
  detail::run_worker_pool(workers, [&] {
    for (std::size_t c = next.fetch_add(1); c < nchunks;
         c = next.fetch_add(1)) {
      std::vector<detail::PartialTally> part(nids);
      const std::size_t lo = c * kVerifyChunk;
      const std::size_t hi = std::min(list.size(), lo + kVerifyChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        Graph g = from_graph6(list[i]);
        for (std::size_t j = 0; j < nids; ++j) {
          ConjectureVerdict v = check(ids[j], g, params);
          detail::PartialTally& t = part[j];
          switch (v.outcome) {
            case Outcome::Holds:
              ++t.holds;
              t.add_slack(v.slack, g, list[i]);
              break;
            case Outcome::Violated:
              ++t.violated;
              t.add_slack(v.slack, g, list[i]);
              if (static_cast<long long>(t.wit.size()) < kWitnessLimit)
                t.wit.emplace_back(graph_sort_key(g, list[i]), list[i]);
              break;
            case Outcome::NotApplicable:
              ++t.not_applicable;
              break;
          }
        }
      }
      parts[c] = std::move(part);
    }
  });

  VerificationReport report;
  report.source = src.describe();
  report.graph_count = stats.graphs;
  report.malformed_skipped = stats.malformed_skipped;
  report.workers = std::max(1, workers);
  report.conjectures.resize(nids);
  for (std::size_t j = 0; j < nids; ++j) {
    ConjectureTally& tally = report.conjectures[j];
    tally.id = ids[j];
    std::vector<NearMiss> candidates;
    std::vector<std::pair<std::string, std::string>> wits;
    for (std::size_t c = 0; c < nchunks; ++c) {
      const detail::PartialTally& p = parts[c][j];
      tally.holds += p.holds;
      tally.violated += p.violated;
      tally.not_applicable += p.not_applicable;
      if (p.has_min && (!tally.has_min_slack || p.min_slack < tally.min_slack)) {
        tally.has_min_slack = true;
        tally.min_slack = p.min_slack;
      }
      candidates.insert(candidates.end(), p.near.begin(), p.near.end());
      for (const auto& w : p.wit)
        if (static_cast<long long>(wits.size()) < kWitnessLimit)
          wits.push_back(w);
    }
    std::sort(candidates.begin(), candidates.end(), detail::NearMissLess{});
    if (static_cast<int>(candidates.size()) > kNearMissLimit)
      candidates.resize(kNearMissLimit);
    tally.near_misses = std::move(candidates);
    std::sort(wits.begin(), wits.end());
    tally.witnesses.reserve(wits.size());
    for (auto& w : wits) tally.witnesses.push_back(std::move(w.second));
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                    start_time)
          .count();
  return report;
}

// --- extremal search ----------------------------------------------------

enum class Objective {
  Lambda1,      // adjacency spectral radius
  LambdaMin,    // smallest adjacency eigenvalue
  SpectralGap,  // lambda_1 - lambda_2
  Energy,       // sum of |eigenvalue|
  HLIndex,      // max(|median eigenvalues|)
  PrincipalL1,  // l1 norm of the unit principal eigenvector (connected only)
};

inline std::string_view to_string(Objective o) {
  switch (o) {
    case Objective::Lambda1: return "lambda1";
    case Objective::LambdaMin: return "lambdamin";
    case Objective::SpectralGap: return "gap";
    case Objective::Energy: return "energy";
    case Objective::HLIndex: return "hlindex";
    case Objective::PrincipalL1: return "l1norm";
  }
  return "?";
}

inline std::optional<Objective> parse_objective(std::string_view name) {
  for (Objective o : {Objective::Lambda1, Objective::LambdaMin,
                      Objective::SpectralGap, Objective::Energy,
                      Objective::HLIndex, Objective::PrincipalL1})
    if (name == to_string(o)) return o;
  return std::nullopt;
}

inline double objective_value(const Graph& g, Objective o) {
  switch (o) {
    case Objective::PrincipalL1:
      return principal_eigenvector(g).l1_norm();
    case Objective::SpectralGap: {
      if (g.order() < 2)
        throw InvalidParameter("spectral gap objective: n >= 2");
      Spectrum a = eigenvalues(g, MatrixKind::Adjacency);
      return a.lambda(1) - a.lambda(2);
    }
    default: {
      SpectralSummary s = spectral_summary(g);
      switch (o) {
        case Objective::Lambda1: return s.lambda1;
        case Objective::LambdaMin: return s.lambda_min;
        case Objective::Energy: return s.energy;
        case Objective::HLIndex: return s.hl_index;
        default: break;
      }
    }
  }
  throw InvalidParameter("unknown objective");
}

// Optional predicate conjunction evaluated before the objective.
struct SearchConstraint {
  bool connected = false;
  bool planar = false;
  bool nonregular = false;
  std::optional<int> max_degree;     // exact maximum degree
  std::optional<int> clique_free;    // r: no K_{r+1} subgraph
  std::optional<int> saturation;     // r: K_{r+1}-saturated
  std::optional<long long> edge_count;
  std::uint64_t budget = kDefaultNodeBudget;

  bool satisfied(const Graph& g) const {
    if (edge_count && g.size() != *edge_count) return false;
    if (max_degree && speclab::max_degree(g) != *max_degree) return false;
    if (nonregular && regular_degree(g)) return false;
    if (connected && !is_connected(g)) return false;
    if (planar && !is_planar(g)) return false;
    if (clique_free && clique_number(g, budget) > *clique_free) return false;
    if (saturation && !is_saturated(g, *saturation, budget)) return false;
    return true;
  }
};

struct LocalSearchOptions {
  int restarts = 32;
  int steps_per_restart = 3000;
  double initial_temperature = 0.5;
  double cooling = 0.997;  // temperature multiplier per step
  std::uint64_t seed = 0;
};

struct SearchProblem {
  Objective objective = Objective::Lambda1;
  bool maximize = true;
  SearchConstraint constraint;
  bool use_local_search = false;
  LocalSearchOptions local;
};

struct ExtremalResult {
  double best = 0.0;
  std::vector<std::string> arg_graph6;  // every tie, canonical form, sorted
  long long feasible = 0;               // graphs passing the constraint
  long long examined = 0;               // graphs considered in total
  bool exact = true;                    // false for local search
  std::vector<std::string> trace;       // local search: per-restart bests
  std::uint64_t seed = 0;               // local search: RNG seed used
};

namespace detail {

// Champion list: every (score, canonical graph6) within tie_tol of the best
// score seen so far, in signed "bigger is better" orientation.
struct ChampionSet {
  double tie_tol;
  bool any = false;
  double best = 0.0;
  std::vector<std::pair<double, std::string>> ties;

  explicit ChampionSet(double tol) : tie_tol(tol) {}

  void offer(double score, const std::string& canon) {
    if (any && score < best - tie_tol) return;
    if (!any || score > best) {
      best = score;
      any = true;
      std::erase_if(ties,
                    [&](const auto& t) { return t.first < best - tie_tol; });
    }
    ties.emplace_back(score, canon);
  }

  void absorb(const ChampionSet& other) {
    if (!other.any) return;
    if (!any || other.best > best) {
      best = other.best;
      any = true;
    }
    for (const auto& t : other.ties) ties.push_back(t);
    std::erase_if(ties,
                  [&](const auto& t) { return t.first < best - tie_tol; });
  }

  std::vector<std::string> sorted_args() const {
    std::vector<std::string> out;
    for (const auto& t : ties)
      if (t.first >= best - tie_tol) out.push_back(t.second);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
};

}  // namespace detail

// Exact optimum over the source with every optimal isomorphism class
// reported; the result does not depend on the order the source yields
// graphs or on the worker count. Throws Error when no graph satisfies the
// constraint.
inline ExtremalResult extremal_exhaustive(const GraphSource& src,
                                          Objective obj, bool maximize,
                                          const SearchConstraint& c = {},
                                          int workers = 1,
                                          double tie_tol = 1e-9) {
  SourceStats stats;
  std::vector<std::string> list = materialize_graph6(src, &stats);
  const std::size_t nchunks = (list.size() + kVerifyChunk - 1) / kVerifyChunk;

  struct ChunkOut {
    detail::ChampionSet champs;
    long long feasible = 0;
    ChunkOut(double tol) : champs(tol) {}
  };
  std::vector<std::optional<ChunkOut>> parts(nchunks);
  std::atomic<std::size_t> next{0};
  detail::run_worker_pool(workers, [&] {
    for (std::size_t ch = next.fetch_add(1); ch < nchunks;
         ch = next.fetch_add(1)) {
      ChunkOut out(tie_tol);
      const std::size_t lo = ch * kVerifyChunk;
      const std::size_t hi = std::min(list.size(), lo + kVerifyChunk);
      for (std::size_t i = lo; i < hi; ++i) {
        Graph g = from_graph6(list[i]);
        if (!c.satisfied(g)) continue;
        ++out.feasible;
        double value = objective_value(g, obj);
        double score = maximize ? value : -value;
        if (out.champs.any && score < out.champs.best - tie_tol) continue;
        out.champs.offer(score, graph_sort_key(g, list[i]));
      }
      parts[ch] = std::move(out);
    }
  });

  ExtremalResult res;
  res.examined = stats.graphs;
  detail::ChampionSet all(tie_tol);
  for (std::size_t ch = 0; ch < nchunks; ++ch) {
    res.feasible += parts[ch]->feasible;
    all.absorb(parts[ch]->champs);
  }
  if (!all.any)
    throw Error("extremal search: no graph in the source satisfies the constraint");
  res.best = maximize ? all.best : -all.best;
  res.arg_graph6 = all.sorted_args();
  res.exact = true;
  return res;
}

namespace detail {

inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

}  // namespace detail

// Simulated annealing over graphs of the seed's order: single edge
// insertions, deletions, and swaps, each re-validated against the
// constraint (infeasible proposals are rejected), exponential cooling,
// independent deterministic restarts. Best-found only; the seed appears in
// the result for reproducibility.
inline ExtremalResult extremal_local(const Graph& start, Objective obj,
                                     bool maximize,
                                     const SearchConstraint& c = {},
                                     const LocalSearchOptions& opt = {}) {
  if (!c.satisfied(start))
    throw InfeasibleSeed("local search: the seed graph fails the constraint");
  const int n = start.order();
  if (n < 2) throw InvalidParameter("local search: n >= 2");

  ExtremalResult res;
  res.exact = false;
  res.seed = opt.seed;
  detail::ChampionSet champs(1e-9);

  const double start_value = objective_value(start, obj);
  for (int restart = 0; restart < opt.restarts; ++restart) {
    std::mt19937_64 rng(opt.seed ^ (0x9E3779B97F4A7C15ULL * (restart + 1)));
    Graph cur = start;
    double cur_score = maximize ? start_value : -start_value;
    Graph best_graph = cur;
    double best_score = cur_score;
    double temp = opt.initial_temperature;
    std::uniform_real_distribution<double> unit(0.0, 1.0);

    for (int step = 0; step < opt.steps_per_restart; ++step, temp *= opt.cooling) {
      std::vector<Edge> es = cur.edges();
      std::vector<Edge> non;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (!cur.has_edge(u, v)) non.emplace_back(u, v);

      int move = static_cast<int>(rng() % 3);  // 0 add, 1 remove, 2 swap
      std::vector<Edge> proposal = es;
      if (move == 0) {
        if (non.empty()) continue;
        proposal.push_back(non[rng() % non.size()]);
      } else if (move == 1) {
        if (es.empty()) continue;
        proposal.erase(proposal.begin() +
                       static_cast<long>(rng() % es.size()));
      } else {
        if (es.empty() || non.empty()) continue;
        proposal.erase(proposal.begin() +
                       static_cast<long>(rng() % es.size()));
        proposal.push_back(non[rng() % non.size()]);
      }
      Graph cand(n, proposal);
      if (!c.satisfied(cand)) continue;  // reject, keep current
      double value;
      try {
        value = objective_value(cand, obj);
      } catch (const NotConnected&) {
        continue;  // objective needs connectivity the constraint didn't force
      }
      double score = maximize ? value : -value;
      double delta = score - cur_score;
      if (delta >= 0.0 || unit(rng) < std::exp(delta / std::max(temp, 1e-12))) {
        cur = std::move(cand);
        cur_score = score;
        if (cur_score > best_score) {
          best_score = cur_score;
          best_graph = cur;
        }
      }
    }
    res.examined += opt.steps_per_restart;
    std::string canon = graph_sort_key(best_graph, to_graph6(best_graph));
    champs.offer(best_score, canon);
    res.trace.push_back("restart=" + std::to_string(restart) + " best=" +
                        detail::format_double(maximize ? best_score
                                                       : -best_score) +
                        " graph=" + canon);
  }
  res.best = maximize ? champs.best : -champs.best;
  res.arg_graph6 = champs.sorted_args();
  return res;
}

inline ExtremalResult run_search(const GraphSource& src, const SearchProblem& p,
                                 int workers = 1) {
  return extremal_exhaustive(src, p.objective, p.maximize, p.constraint,
                             workers);
}

inline ExtremalResult run_search(const Graph& seed, const SearchProblem& p) {
  return extremal_local(seed, p.objective, p.maximize, p.constraint, p.local);
}

// --- hypercube induced subgraphs ----------------------------------------

// Number of hypercube edges leaving the vertex subset `mask` of Q_d.
inline int hypercube_edge_boundary(int d, std::uint64_t mask) {
  if (d < 0 || d > 5) throw InvalidParameter("hypercube boundary: 0 <= d <= 5");
  int total = 0;
  const int nverts = 1 << d;
  for (int v = 0; v < nverts; ++v) {
    if (!((mask >> v) & 1)) continue;
    for (int b = 0; b < d; ++b)
      if (!((mask >> (v ^ (1 << b))) & 1)) ++total;
  }
  return total;
}

struct HypercubeLambda {
  int d = 0;
  int m = 0;
  double lambda = 0.0;
  std::uint64_t witness = 0;  // vertex mask over the 2^d coordinate labels
  bool exact = true;
  long long orbit_count = 0;  // subset orbits evaluated (exhaustive mode)
  int edge_boundary = 0;      // boundary of the witness
};

namespace detail {

// All vertex maps of Aut(Q_d): coordinate permutation composed with an XOR
// translation, 2^d * d! maps in total.
inline std::vector<std::vector<int>> hypercube_automorphisms(int d) {
  std::vector<int> perm(d);
  for (int i = 0; i < d; ++i) perm[i] = i;
  const int nverts = 1 << d;
  std::vector<std::vector<int>> maps;
  do {
    std::vector<int> permuted(nverts);
    for (int v = 0; v < nverts; ++v) {
      int image = 0;
      for (int b = 0; b < d; ++b)
        if ((v >> b) & 1) image |= 1 << perm[b];
      permuted[v] = image;
    }
    for (int t = 0; t < nverts; ++t) {
      std::vector<int> map(nverts);
      for (int v = 0; v < nverts; ++v) map[v] = permuted[v] ^ t;
      maps.push_back(std::move(map));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return maps;
}

inline std::uint64_t apply_vertex_map(std::uint64_t mask,
                                      const std::vector<int>& map) {
  std::uint64_t image = 0;
  while (mask) {
    int v = std::countr_zero(mask);
    mask &= mask - 1;
    image |= std::uint64_t{1} << map[v];
  }
  return image;
}

inline double induced_hypercube_lambda(const Graph& q, std::uint64_t mask) {
  Graph sub = induced(q, static_cast<VertexSet>(mask));
  if (sub.order() == 0) return 0.0;
  return eigenvalues(sub, MatrixKind::Adjacency).lambda(1);
}

}  // namespace detail

// Maximum adjacency spectral radius of an induced subgraph of Q_d on m
// vertices. Exhaustive (orbit representatives only) for d <= 4; for d = 5 a
// deterministic heuristic grows the largest subcube that fits and then
// hill-climbs with single-vertex swaps, so the value is a lower bound.
inline HypercubeLambda hypercube_lambda(int d, int m) {
  if (d < 0 || d > 5) throw InvalidParameter("hypercube_lambda: 0 <= d <= 5");
  const int nverts = 1 << d;
  if (m < 1 || m > nverts)
    throw InvalidParameter("hypercube_lambda: 1 <= m <= 2^d");

  HypercubeLambda res;
  res.d = d;
  res.m = m;
  Graph q = hypercube(d);

  if (d <= 4) {
    auto maps = detail::hypercube_automorphisms(d);
    std::uint64_t mask = (m == 64) ? ~std::uint64_t{0}
                                   : ((std::uint64_t{1} << m) - 1);
    const std::uint64_t limit = std::uint64_t{1} << nverts;
    bool first = true;
    while (mask < limit) {
      bool canonical = true;
      for (const auto& map : maps)
        if (detail::apply_vertex_map(mask, map) < mask) {
          canonical = false;
          break;
        }
      if (canonical) {
        ++res.orbit_count;
        double lam = detail::induced_hypercube_lambda(q, mask);
        if (first || lam > res.lambda + 1e-12) {
          res.lambda = lam;
          res.witness = mask;
          first = false;
        }
      }
      // next mask with the same popcount (Gosper)
      std::uint64_t c = mask & -mask;
      std::uint64_t r = mask + c;
      if (m == nverts || r >= limit) break;
      mask = (((r ^ mask) >> 2) / c) | r;
    }
    res.exact = true;
  } else {
    // subcube anchor: the biggest 2^k <= m, then greedy growth
    int k = 0;
    while ((2 << k) <= m) ++k;
    std::uint64_t mask = (std::uint64_t{1} << (1 << k)) - 1;
    int have = 1 << k;
    while (have < m) {
      int best_v = -1;
      double best_lam = -1.0;
      for (int v = 0; v < nverts; ++v) {
        if ((mask >> v) & 1) continue;
        double lam = detail::induced_hypercube_lambda(
            q, mask | (std::uint64_t{1} << v));
        if (lam > best_lam + 1e-12) {
          best_lam = lam;
          best_v = v;
        }
      }
      mask |= std::uint64_t{1} << best_v;
      ++have;
    }
    double lam = detail::induced_hypercube_lambda(q, mask);
    bool improved = true;
    int rounds = 0;
    while (improved && rounds++ < 64) {
      improved = false;
      for (int out = 0; out < nverts && !improved; ++out) {
        if (!((mask >> out) & 1)) continue;
        for (int in = 0; in < nverts && !improved; ++in) {
          if ((mask >> in) & 1) continue;
          std::uint64_t cand =
              (mask & ~(std::uint64_t{1} << out)) | (std::uint64_t{1} << in);
          double cl = detail::induced_hypercube_lambda(q, cand);
          if (cl > lam + 1e-9) {
            mask = cand;
            lam = cl;
            improved = true;
          }
        }
      }
    }
    res.lambda = lam;
    res.witness = mask;
    res.exact = false;
  }
  res.edge_boundary = hypercube_edge_boundary(d, res.witness);
  return res;
}

}  // namespace speclab
