// speclab: batch front end for spectral graph invariants, exhaustive
// conjecture verification, and constrained extremal search.
//
// Exit codes: 0 run completed with no violations; 1 run completed and
// violations were found (counterexample files written next to the JSON
// output); 2 usage or configuration error; 3 budget exhaustion, numeric
// failure, or I/O failure.

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "speclab/hypergraph.hpp"
#include "speclab/report.hpp"
#include "speclab/search.hpp"
#include "speclab/signedgraph.hpp"

namespace {

using namespace speclab;

constexpr int kExitOk = 0;
constexpr int kExitViolations = 1;
constexpr int kExitUsage = 2;
constexpr int kExitResource = 3;

int default_workers() {
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Accepts either the full id ("C03_BollobasNikiforov") or its prefix before
// the underscore ("C03"); "all" selects the whole registry.
std::vector<ConjectureId> resolve_conjectures(const std::string& csv) {
  if (csv.empty() || csv == "all") return all_conjecture_ids();
  std::vector<ConjectureId> out;
  std::size_t pos = 0;
  while (pos <= csv.size()) {
    std::size_t comma = csv.find(',', pos);
    std::string token = csv.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? csv.size() + 1 : comma + 1;
    if (token.empty()) continue;
    if (auto id = parse_conjecture_id(token)) {
      out.push_back(*id);
      continue;
    }
    std::vector<ConjectureId> prefix_hits;
    for (ConjectureId id : all_conjecture_ids()) {
      std::string_view name = to_string(id);
      if (name.size() > token.size() && name.substr(0, token.size()) == token &&
          name[token.size()] == '_')
        prefix_hits.push_back(id);
    }
    if (prefix_hits.size() == 1) {
      out.push_back(prefix_hits[0]);
      continue;
    }
    throw InvalidParameter("unknown conjecture id '" + token +
                           "'; run `speclab catalog` for the list of ids");
  }
  if (out.empty())
    throw InvalidParameter("no conjecture ids given; use --conj all");
  return out;
}

std::pair<int, int> parse_range(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos)
    throw InvalidParameter("range must be lo:hi, got '" + text + "'");
  try {
    int lo = std::stoi(text.substr(0, colon));
    int hi = std::stoi(text.substr(colon + 1));
    return {lo, hi};
  } catch (const std::exception&) {
    throw InvalidParameter("range must be lo:hi with integers, got '" + text +
                           "'");
  }
}

// --- shared flag groups -------------------------------------------------

struct SourceCli {
  int enum_n = 0;
  bool connected = false;
  std::string stream_path;
  int trees_n = 0;
  std::string sweep_pattern;
  std::string sweep_range;
  CLI::Option* o_enum = nullptr;
  CLI::Option* o_stream = nullptr;
  CLI::Option* o_trees = nullptr;
  CLI::Option* o_sweep = nullptr;

  void attach(CLI::App* cmd) {
    o_enum = cmd->add_option(
        "--enum", enum_n,
        "built-in exhaustive enumeration of all graphs of this order (n <= 9)");
    cmd->add_flag("--connected", connected, "only consider connected graphs");
    o_stream = cmd->add_option(
        "--stream", stream_path,
        "graph6 file, one graph per line; >>graph6<< header tolerated");
    o_trees = cmd->add_option("--trees", trees_n,
                              "enumerate all free trees of this order (n <= 20)");
    o_sweep = cmd->add_option(
        "--family-sweep", sweep_pattern,
        "named-family spec with a %d placeholder, e.g. \"doublecomet(2,%d)\"");
    cmd->add_option("--range", sweep_range,
                    "inclusive lo:hi range for the %d in --family-sweep");
  }

  bool any() const {
    return o_enum->count() || o_stream->count() || o_trees->count() ||
           o_sweep->count();
  }

  GraphSource build() const {
    int given = (o_enum->count() > 0) + (o_stream->count() > 0) +
                (o_trees->count() > 0) + (o_sweep->count() > 0);
    if (given != 1)
      throw InvalidParameter(
          "choose exactly one source: --enum N | --stream FILE | --trees N | "
          "--family-sweep PAT --range LO:HI");
    if (o_enum->count()) return GraphSource::builtin(enum_n, connected);
    if (o_stream->count()) return GraphSource::stream(stream_path);
    if (o_trees->count()) return GraphSource::trees(trees_n);
    auto [lo, hi] = parse_range(sweep_range);
    return GraphSource::family_sweep(sweep_pattern, lo, hi);
  }
};

struct ParamsCli {
  CheckParams base;
  int clique_size = 0;
  int brouwer_k = 0;
  CLI::Option* o_clique = nullptr;
  CLI::Option* o_brouwer = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_option("--tol", base.tol, "slack tolerance for verdicts")
        ->capture_default_str();
    cmd->add_option("--budget", base.budget,
                    "node budget for exact combinatorial routines "
                    "(SPECTRALAB_BUDGET env wins over this flag)")
        ->capture_default_str();
    cmd->add_option("--power-index", base.power_index,
                    "i in the lambda_i <= floor(n/i) entry (3 or 4)")
        ->capture_default_str();
    cmd->add_option("--cycle-k", base.cycle_k,
                    "k in the spectral cycle-forcing entry")
        ->capture_default_str();
    o_clique = cmd->add_option(
        "--clique-size", clique_size,
        "fix r in the saturation entry instead of deriving it from the graph");
    o_brouwer = cmd->add_option(
        "--brouwer-k", brouwer_k,
        "restrict the Laplacian partial-sum scan to a single k");
    cmd->add_option("--density-t", base.density_t,
                    "t parameter of the sparse-density entry")
        ->capture_default_str();
    cmd->add_option("--density-r", base.density_r,
                    "r parameter of the sparse-density entry")
        ->capture_default_str();
    cmd->add_flag("--force-inertia-count", base.force_inertia_count,
                  "use l = n+ in the eigenvalue-square-sum entry");
    cmd->add_flag("--force-check", base.force_check,
                  "evaluate equality-characterization entries even where a "
                  "precondition would exempt the graph");
  }

  CheckParams build() const {
    CheckParams p = base;
    if (o_clique->count()) p.clique_size = clique_size;
    if (o_brouwer->count()) p.brouwer_k = brouwer_k;
    if (const char* env = std::getenv("SPECTRALAB_BUDGET")) {
      try {
        p.budget = std::stoull(env);
      } catch (const std::exception&) {
        throw InvalidParameter(
            std::string("SPECTRALAB_BUDGET is not an integer: ") + env);
      }
    }
    return p;
  }
};

struct ConstraintCli {
  bool planar = false;
  bool nonregular = false;
  int max_degree = 0;
  int clique_free = 0;
  int saturated = 0;
  long long edges = 0;
  CLI::Option* o_maxdeg = nullptr;
  CLI::Option* o_cf = nullptr;
  CLI::Option* o_sat = nullptr;
  CLI::Option* o_edges = nullptr;

  void attach(CLI::App* cmd) {
    cmd->add_flag("--planar", planar, "require planarity");
    cmd->add_flag("--nonregular", nonregular, "exclude regular graphs");
    o_maxdeg = cmd->add_option("--max-degree", max_degree,
                               "require this exact maximum degree");
    o_cf = cmd->add_option("--clique-free", clique_free,
                           "require no K_{r+1} subgraph for this r");
    o_sat = cmd->add_option("--saturated", saturated,
                            "require K_{r+1}-saturation for this r");
    o_edges = cmd->add_option("--edges", edges, "require this exact edge count");
  }

  SearchConstraint build(bool connected, std::uint64_t budget) const {
    SearchConstraint c;
    c.connected = connected;
    c.planar = planar;
    c.nonregular = nonregular;
    if (o_maxdeg->count()) c.max_degree = max_degree;
    if (o_cf->count()) c.clique_free = clique_free;
    if (o_sat->count()) c.saturation = saturated;
    if (o_edges->count()) c.edge_count = edges;
    c.budget = budget;
    return c;
  }
};

// --- output helpers -----------------------------------------------------

void write_text_file(const std::string& path, const std::string& body) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write file: " + path);
  out << body;
  if (!out) throw Error("write failed: " + path);
}

void write_json_file(const std::string& path, const json& j) {
  write_text_file(path, j.dump(2) + "\n");
}

std::string output_stem(const std::string& out_path) {
  if (out_path.empty()) return "speclab";
  auto dot = out_path.find_last_of('.');
  auto slash = out_path.find_last_of('/');
  if (dot == std::string::npos ||
      (slash != std::string::npos && dot < slash))
    return out_path;
  return out_path.substr(0, dot);
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.8g", v);
  return buf;
}

// --- subcommand drivers -------------------------------------------------

int run_verify(const GraphSource& src, const std::string& conj_csv,
               const CheckParams& params, int workers,
               const std::string& out_path, const std::string& csv_path) {
  std::vector<ConjectureId> ids = resolve_conjectures(conj_csv);
  VerificationReport rep = verify(src, ids, params, workers);

  std::printf("source: %s\n", rep.source.c_str());
  std::printf("graphs: %lld", rep.graph_count);
  if (rep.malformed_skipped)
    std::printf("  (skipped %lld malformed lines)", rep.malformed_skipped);
  std::printf("\n");
  long long total_violations = 0;
  for (const ConjectureTally& t : rep.conjectures) {
    total_violations += t.violated;
    std::printf("  %-26s holds=%-8lld violated=%-6lld na=%-8lld",
                std::string(to_string(t.id)).c_str(), t.holds, t.violated,
                t.not_applicable);
    if (t.has_min_slack) std::printf(" min_slack=%s", fmt(t.min_slack).c_str());
    std::printf("\n");
  }
  std::printf("wall: %.2fs  workers: %d\n", rep.wall_seconds, rep.workers);

  if (!out_path.empty()) write_json_file(out_path, to_json(rep));
  if (!csv_path.empty()) write_text_file(csv_path, to_csv(rep));

  if (total_violations > 0) {
    std::string stem = output_stem(out_path);
    for (const ConjectureTally& t : rep.conjectures) {
      if (t.witnesses.empty()) continue;
      std::string path = stem + "." + std::string(to_string(t.id)) +
                         ".counterexamples.g6";
      std::string body;
      for (const std::string& w : t.witnesses) body += w + "\n";
      write_text_file(path, body);
      std::printf("counterexamples for %s written to %s\n",
                  std::string(to_string(t.id)).c_str(), path.c_str());
    }
    return kExitViolations;
  }
  return kExitOk;
}

int run_extremal(const GraphSource* src, const std::string& objective_name,
                 const std::string& direction, const SearchConstraint& c,
                 bool local, const std::string& seed_g6,
                 const std::string& seed_family, const LocalSearchOptions& opt,
                 int workers, const std::string& out_path) {
  auto obj = parse_objective(objective_name);
  if (!obj)
    throw InvalidParameter(
        "unknown objective '" + objective_name +
        "'; choose lambda1|lambdamin|gap|energy|hlindex|l1norm");
  if (direction != "max" && direction != "min")
    throw InvalidParameter("--direction must be max or min");
  bool maximize = direction == "max";

  auto start = std::chrono::steady_clock::now();
  ExtremalResult res;
  std::string source_desc;
  if (local) {
    Graph seed(0);
    if (!seed_g6.empty())
      seed = from_graph6(seed_g6);
    else if (!seed_family.empty())
      seed = make_family(seed_family);
    else
      throw InvalidParameter(
          "--local needs a seed graph: --seed-graph G6 or --seed-family SPEC");
    res = extremal_local(seed, *obj, maximize, c, opt);
    source_desc = "local_search{n=" + std::to_string(seed.order()) +
                  ", seed=" + std::to_string(opt.seed) + "}";
  } else {
    if (!src)
      throw InvalidParameter("exhaustive search needs a graph source");
    res = extremal_exhaustive(*src, *obj, maximize, c, workers);
    source_desc = src->describe();
  }
  double wall = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();

  std::printf("source: %s\n", source_desc.c_str());
  std::printf("%s %s: best=%s  (%s)\n", direction.c_str(),
              objective_name.c_str(), fmt(res.best).c_str(),
              res.exact ? "exact" : "best found, not certified");
  std::printf("optimal graphs (%zu):\n", res.arg_graph6.size());
  for (const std::string& a : res.arg_graph6)
    std::printf("  %s\n", a.c_str());
  if (res.exact)
    std::printf("feasible: %lld of %lld\n", res.feasible, res.examined);
  std::printf("wall: %.2fs\n", wall);

  if (!out_path.empty()) {
    json j = to_json(res, source_desc, *obj, maximize);
    j["meta"] = {{"wall_seconds", wall}, {"workers", workers}};
    write_json_file(out_path, j);
  }
  return kExitOk;
}

int run_invariants(const std::string& family, const std::string& g6,
                   const std::string& out_path) {
  Graph g(0);
  std::string label;
  if (!family.empty()) {
    g = make_family(family);
    label = family;
  } else if (!g6.empty()) {
    g = from_graph6(g6);
    label = g6;
  } else {
    throw InvalidParameter("need --family SPEC or --graph G6");
  }

  json j;
  j["graph"] = label;
  j["graph6"] = to_graph6(g);
  std::printf("graph: %s\n", label.c_str());
  std::printf("n=%d  m=%d\n", g.order(), g.size());
  j["n"] = g.order();
  j["m"] = g.size();
  if (g.order() > 0) {
    std::printf("degree: min=%d max=%d", min_degree(g), max_degree(g));
    if (auto r = regular_degree(g)) std::printf("  (regular, d=%d)", *r);
    std::printf("\n");
    j["min_degree"] = min_degree(g);
    j["max_degree"] = max_degree(g);
    std::printf("connected=%s  bipartite=%s", is_connected(g) ? "yes" : "no",
                is_bipartite(g) ? "yes" : "no");
    if (auto gi = girth(g))
      std::printf("  girth=%d", *gi);
    else
      std::printf("  girth=inf");
    std::printf("  planar=%s\n", is_planar(g) ? "yes" : "no");
    j["connected"] = is_connected(g);
    j["bipartite"] = is_bipartite(g);
    j["planar"] = is_planar(g);

    SpectralSummary s = spectral_summary(g);
    std::printf("lambda1=%s  lambda2=%s  lambda_min=%s  gap=%s\n",
                fmt(s.lambda1).c_str(), fmt(s.lambda2).c_str(),
                fmt(s.lambda_min).c_str(), fmt(s.spectral_gap).c_str());
    std::printf("energy=%s  s+=%s  s-=%s  hl_index=%s  inertia=(%d,%d,%d)\n",
                fmt(s.energy).c_str(), fmt(s.s_plus).c_str(),
                fmt(s.s_minus).c_str(), fmt(s.hl_index).c_str(),
                s.inertia.positive, s.inertia.zero, s.inertia.negative);
    j["lambda1"] = s.lambda1;
    j["lambda2"] = s.lambda2;
    j["lambda_min"] = s.lambda_min;
    j["gap"] = s.spectral_gap;
    j["energy"] = s.energy;
    j["s_plus"] = s.s_plus;
    j["s_minus"] = s.s_minus;
    j["hl_index"] = s.hl_index;
    j["inertia"] = {s.inertia.positive, s.inertia.zero, s.inertia.negative};

    Spectrum lap = eigenvalues(g, MatrixKind::Laplacian);
    std::printf("mu1=%s  algebraic connectivity=%s\n",
                fmt(lap.lambda(1)).c_str(),
                g.order() >= 2 ? fmt(lap.lambda(g.order() - 1)).c_str() : "n/a");
    j["mu1"] = lap.lambda(1);
    if (g.order() >= 2)
      j["algebraic_connectivity"] = lap.lambda(g.order() - 1);

    try {
      int w = clique_number(g);
      int a = independence_number(g);
      std::printf("omega=%d  alpha=%d", w, a);
      j["omega"] = w;
      j["alpha"] = a;
    } catch (const Error& e) {
      std::printf("omega/alpha: n/a (%s)", e.what());
    }
    try {
      int chi = chromatic_number(g);
      std::printf("  chromatic=%d\n", chi);
      j["chromatic"] = chi;
    } catch (const Error&) {
      std::printf("  chromatic: n/a (order above exact limit)\n");
    }
    try {
      Toughness t = toughness(g);
      if (t.infinite) {
        std::printf("toughness=inf (complete graph)\n");
        j["toughness"] = "inf";
      } else {
        std::printf("toughness=%lld/%lld = %s\n", t.num, t.den,
                    fmt(t.value()).c_str());
        j["toughness"] = std::to_string(t.num) + "/" + std::to_string(t.den);
      }
    } catch (const NotConnected&) {
      std::printf("toughness: n/a (disconnected)\n");
    } catch (const Error&) {
      std::printf("toughness: n/a (order above exact limit)\n");
    }
  }
  if (!out_path.empty()) write_json_file(out_path, j);
  return kExitOk;
}

int run_generate(const SourceCli& scli, const std::string& family,
                 const std::vector<int>& bounded, const std::string& out_path) {
  std::vector<std::string> lines;
  auto emit = [&](const Graph& g) {
    if (scli.connected && !is_connected(g)) return;
    lines.push_back(to_graph6(g));
  };
  int chosen = (scli.any() ? 1 : 0) + (!family.empty() ? 1 : 0) +
               (!bounded.empty() ? 1 : 0);
  if (chosen != 1)
    throw InvalidParameter(
        "choose one: a graph source, --family SPEC, or --bounded N MAXDEG "
        "MINDEG");
  if (!family.empty()) {
    emit(make_family(family));
  } else if (!bounded.empty()) {
    if (bounded.size() != 3)
      throw InvalidParameter("--bounded takes N MAXDEG MINDEG");
    for_each_graph_bounded(bounded[0], bounded[1], bounded[2], emit);
  } else {
    GraphSource src = scli.build();
    // --connected is already folded into a builtin source; the emit filter
    // covers the other kinds
    for_each_source_graph(src, emit);
  }
  std::string body;
  for (const std::string& l : lines) body += l + "\n";
  if (out_path.empty()) {
    std::fputs(body.c_str(), stdout);
  } else {
    write_text_file(out_path, body);
    std::printf("wrote %zu graphs to %s\n", lines.size(), out_path.c_str());
  }
  return kExitOk;
}

int run_hypercube(int dim, int size, const std::string& out_path) {
  HypercubeLambda h = hypercube_lambda(dim, size);
  std::printf("Q_%d, |U|=%d: lambda=%s (%s)\n", h.d, h.m, fmt(h.lambda).c_str(),
              h.exact ? "exact, orbit-pruned exhaustion"
                      : "heuristic lower bound");
  std::printf("witness U = {");
  bool first = true;
  for (int v = 0; v < (1 << h.d); ++v)
    if ((h.witness >> v) & 1) {
      std::printf("%s%d", first ? "" : ",", v);
      first = false;
    }
  std::printf("}\n");
  std::printf("edge boundary = %d  (lower bound (d - lambda)|U| = %s)\n",
              h.edge_boundary, fmt((h.d - h.lambda) * h.m).c_str());
  if (h.exact) std::printf("subset orbits examined: %lld\n", h.orbit_count);
  if (!out_path.empty()) write_json_file(out_path, to_json(h));
  return kExitOk;
}

int run_signed_min(const std::string& family, const std::string& g6,
                   const std::string& out_path) {
  Graph g(0);
  std::string label;
  if (!family.empty()) {
    g = make_family(family);
    label = family;
  } else if (!g6.empty()) {
    g = from_graph6(g6);
    label = g6;
  } else {
    throw InvalidParameter("need --family SPEC or --graph G6");
  }
  MinSignatureResult r = min_signature_radius(g);
  std::printf("graph: %s  (n=%d, m=%d)\n", label.c_str(), g.order(), g.size());
  std::printf("switching classes: %llu\n",
              static_cast<unsigned long long>(r.classes));
  std::printf("min spectral radius: rho=%s  signature=%s\n",
              fmt(r.rho_min).c_str(), serialize_signed(r.rho_witness).c_str());
  std::printf("min largest eigenvalue: lambda1=%s  signature=%s\n",
              fmt(r.lambda1_min).c_str(),
              serialize_signed(r.lambda1_witness).c_str());
  if (auto d = regular_degree(g); d && *d >= 2) {
    double bound = 2.0 * std::sqrt(*d - 1.0);
    std::printf("2*sqrt(d-1)=%s: rho_min %s the Ramanujan-style bound\n",
                fmt(bound).c_str(),
                r.rho_min <= bound + 1e-9 ? "meets" : "exceeds");
  }
  if (!out_path.empty()) {
    json j;
    j["graph"] = label;
    j["graph6"] = to_graph6(g);
    j["classes"] = r.classes;
    j["rho_min"] = r.rho_min;
    j["rho_signature"] = serialize_signed(r.rho_witness);
    j["lambda1_min"] = r.lambda1_min;
    j["lambda1_signature"] = serialize_signed(r.lambda1_witness);
    write_json_file(out_path, j);
  }
  return kExitOk;
}

int run_catalog(const std::string& out_path) {
  json arr = json::array();
  for (const CatalogEntry& e : catalog()) {
    std::printf("%-26s [%s]\n", std::string(e.name).c_str(),
                std::string(e.topic).c_str());
    std::printf("    %s\n", std::string(e.statement).c_str());
    std::printf("    applies to: %s\n", std::string(e.applicability).c_str());
    if (!e.parameters.empty())
      std::printf("    parameters: %s\n", std::string(e.parameters).c_str());
    if (!e.slack_note.empty())
      std::printf("    note: %s\n", std::string(e.slack_note).c_str());
    json row;
    row["id"] = std::string(e.name);
    row["topic"] = std::string(e.topic);
    row["statement"] = std::string(e.statement);
    row["applicability"] = std::string(e.applicability);
    row["parameters"] = std::string(e.parameters);
    row["note"] = std::string(e.slack_note);
    arr.push_back(std::move(row));
  }
  if (!out_path.empty()) write_json_file(out_path, arr);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "speclab: spectral graph invariants, conjecture verification, and "
      "extremal search"};
  app.require_subcommand(1);
  app.set_config("--config", "",
                 "flat key=value config file; [section] per subcommand; "
                 "command-line flags override file values");

  // verify ---------------------------------------------------------------
  auto* cmd_verify = app.add_subcommand(
      "verify", "check conjectures over every graph of a source");
  SourceCli v_src;
  v_src.attach(cmd_verify);
  ParamsCli v_params;
  v_params.attach(cmd_verify);
  std::string v_conj = "all";
  cmd_verify->add_option("--conj", v_conj,
                         "comma-separated conjecture ids, or 'all'")
      ->capture_default_str();
  int v_workers = default_workers();
  cmd_verify->add_option("--workers", v_workers,
                         "worker threads (1 = deterministic reference path)")
      ->capture_default_str();
  std::string v_out, v_csv;
  cmd_verify->add_option("--out", v_out, "write the full JSON report here");
  cmd_verify->add_option("--csv", v_csv, "write a CSV summary here");

  // extremal -------------------------------------------------------------
  auto* cmd_ext = app.add_subcommand(
      "extremal", "optimize an objective over a source, with constraints");
  SourceCli e_src;
  e_src.attach(cmd_ext);
  ConstraintCli e_con;
  e_con.attach(cmd_ext);
  std::string e_obj = "lambda1", e_dir = "max";
  cmd_ext->add_option("--objective", e_obj,
                      "lambda1|lambdamin|gap|energy|hlindex|l1norm")
      ->capture_default_str();
  cmd_ext->add_option("--direction", e_dir, "max or min")
      ->capture_default_str();
  bool e_local = false;
  cmd_ext->add_flag("--local", e_local,
                    "simulated annealing instead of exhaustion");
  std::string e_seed_graph, e_seed_family;
  cmd_ext->add_option("--seed-graph", e_seed_graph,
                      "graph6 start point for --local");
  cmd_ext->add_option("--seed-family", e_seed_family,
                      "named-family start point for --local");
  LocalSearchOptions e_opt;
  cmd_ext->add_option("--restarts", e_opt.restarts, "annealing restarts")
      ->capture_default_str();
  cmd_ext->add_option("--steps", e_opt.steps_per_restart,
                      "annealing steps per restart")
      ->capture_default_str();
  cmd_ext->add_option("--cooling", e_opt.cooling,
                      "temperature multiplier per step")
      ->capture_default_str();
  cmd_ext->add_option("--temperature", e_opt.initial_temperature,
                      "initial annealing temperature")
      ->capture_default_str();
  cmd_ext->add_option("--seed", e_opt.seed, "RNG seed for --local")
      ->capture_default_str();
  std::uint64_t e_budget = kDefaultNodeBudget;
  cmd_ext->add_option("--budget", e_budget,
                      "node budget for constraint evaluation")
      ->capture_default_str();
  int e_workers = default_workers();
  cmd_ext->add_option("--workers", e_workers,
                      "worker threads (1 = deterministic reference path)")
      ->capture_default_str();
  std::string e_out;
  cmd_ext->add_option("--out", e_out, "write the JSON result here");

  // invariants -----------------------------------------------------------
  auto* cmd_inv = app.add_subcommand(
      "invariants", "print the invariant panel of a single graph");
  std::string i_family, i_graph, i_out;
  cmd_inv->add_option("--family", i_family,
                      "named family spec, e.g. \"doublekite(8,5)\"");
  cmd_inv->add_option("--graph", i_graph, "graph6 string");
  cmd_inv->add_option("--out", i_out, "write the JSON panel here");

  // generate -------------------------------------------------------------
  auto* cmd_gen = app.add_subcommand(
      "generate", "write graph6 streams from sources or generators");
  SourceCli g_src;
  g_src.attach(cmd_gen);
  std::string g_family, g_out;
  cmd_gen->add_option("--family", g_family, "emit one named-family graph");
  std::vector<int> g_bounded;
  cmd_gen->add_option("--bounded", g_bounded,
                      "N MAXDEG MINDEG degree-bounded enumeration (n <= 11)")
      ->expected(3);
  cmd_gen->add_option("--out", g_out, "output file (default: stdout)");

  // hypercube ------------------------------------------------------------
  auto* cmd_hyp = app.add_subcommand(
      "hypercube", "max lambda1 over m-vertex induced subgraphs of Q_d");
  int h_dim = 3, h_size = 4;
  cmd_hyp->add_option("--dim", h_dim, "hypercube dimension d (exact for d <= 4)")
      ->required();
  cmd_hyp->add_option("--size", h_size, "subset size m")->required();
  std::string h_out;
  cmd_hyp->add_option("--out", h_out, "write the JSON result here");

  // signed-min -----------------------------------------------------------
  auto* cmd_sgn = app.add_subcommand(
      "signed-min", "minimum spectral radius over edge signatures");
  std::string s_family, s_graph, s_out;
  cmd_sgn->add_option("--family", s_family, "named family spec");
  cmd_sgn->add_option("--graph", s_graph, "graph6 string");
  cmd_sgn->add_option("--out", s_out, "write the JSON result here");

  // catalog --------------------------------------------------------------
  auto* cmd_cat = app.add_subcommand(
      "catalog", "list every conjecture id in the registry");
  std::string c_out;
  cmd_cat->add_option("--out", c_out, "write the JSON catalog here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (cmd_verify->parsed())
      return run_verify(v_src.build(), v_conj, v_params.build(), v_workers,
                        v_out, v_csv);
    if (cmd_ext->parsed()) {
      std::uint64_t budget = e_budget;
      if (const char* env = std::getenv("SPECTRALAB_BUDGET"))
        budget = std::stoull(env);
      SearchConstraint c = e_con.build(e_src.connected, budget);
      std::optional<GraphSource> src;
      if (e_src.any()) src = e_src.build();
      return run_extremal(src ? &*src : nullptr, e_obj, e_dir, c, e_local,
                          e_seed_graph, e_seed_family, e_opt, e_workers, e_out);
    }
    if (cmd_inv->parsed()) return run_invariants(i_family, i_graph, i_out);
    if (cmd_gen->parsed())
      return run_generate(g_src, g_family, g_bounded, g_out);
    if (cmd_hyp->parsed()) return run_hypercube(h_dim, h_size, h_out);
    if (cmd_sgn->parsed()) return run_signed_min(s_family, s_graph, s_out);
    if (cmd_cat->parsed()) return run_catalog(c_out);
    std::fprintf(stderr, "no subcommand selected\n");
    return kExitUsage;
  } catch (const InvalidParameter& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const MalformedInput& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const InfeasibleSeed& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const NotConnected& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const NotPlanar& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    std::fprintf(stderr, "budget exhausted: %s\n", e.what());
    return kExitResource;
  } catch (const NonConvergence& e) {
    std::fprintf(stderr, "numeric failure: %s\n", e.what());
    return kExitResource;
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitResource;
  }
}
