// Signed graphs: switching, spectra, serialization, and the minimum spectral
// radius / minimum largest eigenvalue over all edge signatures.

#include <cmath>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/signedgraph.hpp"
#include "speclab/spectrum.hpp"

using namespace speclab;

namespace {
constexpr double kPi = 3.14159265358979323846;

SignedGraph random_signed(const Graph& g, std::mt19937_64& rng) {
  std::vector<std::int8_t> signs;
  for (int i = 0; i < g.size(); ++i)
    signs.push_back(rng() % 2 ? std::int8_t{1} : std::int8_t{-1});
  return SignedGraph(g, std::move(signs));
}
}  // namespace

TEST_CASE("signed graph construction and serialization") {
  Graph c4 = cycle_graph(4);
  SignedGraph sg(c4, {1, -1, 1, -1});
  CHECK(serialize_signed(sg) == to_graph6(c4) + "|0101");
  SignedGraph back = parse_signed(serialize_signed(sg));
  CHECK(back.base == sg.base);
  CHECK(back.signs == sg.signs);

  CHECK_THROWS_AS(SignedGraph(c4, {1, -1, 1}), InvalidParameter);       // count
  CHECK_THROWS_AS(SignedGraph(c4, {1, -1, 1, 0}), InvalidParameter);    // value
  CHECK_THROWS_AS(parse_signed("Cr0101"), MalformedInput);              // no bar
  CHECK_THROWS_AS(parse_signed(to_graph6(c4) + "|01"), MalformedInput); // short
  CHECK_THROWS_AS(parse_signed(to_graph6(c4) + "|01x1"), MalformedInput);

  std::mt19937_64 rng(6001);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(3 + int(rng() % 6), 0.5, rng);
    SignedGraph s = random_signed(g, rng);
    SignedGraph r = parse_signed(serialize_signed(s));
    CHECK(r.base == s.base);
    CHECK(r.signs == s.signs);
  }
}

TEST_CASE("all-positive signature has the ordinary adjacency spectrum") {
  std::mt19937_64 rng(6002);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = oracle::random_graph(2 + int(rng() % 8), 0.5, rng);
    auto signedspec = signed_spectrum(all_positive(g));
    auto plain = eigenvalues(g);
    for (int i = 1; i <= g.order(); ++i)
      CHECK(signedspec.lambda(i) == Catch::Approx(plain.lambda(i)).margin(1e-9));
  }
}

TEST_CASE("switching is a spectral invariant and an involution") {
  std::mt19937_64 rng(6003);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 3 + int(rng() % 7);
    Graph g = oracle::random_graph(n, 0.5, rng);
    SignedGraph s = random_signed(g, rng);
    VertexSet u = rng() & full_set(n);
    SignedGraph t = switch_at(s, u);
    auto spec_s = signed_spectrum(s);
    auto spec_t = signed_spectrum(t);
    INFO("g=" << to_graph6(g) << " mask=" << u);
    for (int i = 1; i <= n; ++i)
      CHECK(spec_s.lambda(i) == Catch::Approx(spec_t.lambda(i)).margin(1e-8));
    // switching twice at the same set restores the signature
    SignedGraph tt = switch_at(t, u);
    CHECK(tt.signs == s.signs);
    // switching at the whole vertex set or the empty set changes nothing
    CHECK(switch_at(s, 0).signs == s.signs);
    CHECK(switch_at(s, full_set(n)).signs == s.signs);
  }
}

TEST_CASE("minimum signature radius: cycles in closed form") {
  SECTION("even cycles: the unbalanced class wins with 2 cos(pi/n)") {
    for (int n : {4, 6, 8, 10}) {
      auto res = min_signature_radius(cycle_graph(n));
      INFO("n=" << n);
      CHECK(res.classes == 2);
      CHECK(res.rho_min == Catch::Approx(2.0 * std::cos(kPi / n)).margin(1e-8));
      CHECK(res.lambda1_min == Catch::Approx(2.0 * std::cos(kPi / n)).margin(1e-8));
    }
    CHECK(min_signature_radius(cycle_graph(4)).rho_min ==
          Catch::Approx(std::sqrt(2.0)).margin(1e-9));
  }
  SECTION("odd cycles: every signature has radius 2") {
    for (int n : {3, 5, 7}) {
      auto res = min_signature_radius(cycle_graph(n));
      INFO("n=" << n);
      CHECK(res.classes == 2);
      CHECK(res.rho_min == Catch::Approx(2.0).margin(1e-8));
      // but the largest eigenvalue alone can be lowered
      CHECK(res.lambda1_min == Catch::Approx(2.0 * std::cos(kPi / n)).margin(1e-8));
    }
  }
}

TEST_CASE("minimum signature radius: frozen values and witnesses") {
  SECTION("trees have a single switching class") {
    for (int n : {2, 5, 9}) {
      Graph p = path_graph(n);
      auto res = min_signature_radius(p);
      CHECK(res.classes == 1);
      CHECK(res.rho_min == Catch::Approx(eigenvalues(p).lambda(1)).margin(1e-9));
    }
  }
  SECTION("complete graph on 4 vertices: sqrt(5)") {
    auto res = min_signature_radius(complete_graph(4));
    CHECK(res.classes == 8);
    CHECK(res.rho_min == Catch::Approx(std::sqrt(5.0)).margin(1e-8));
  }
  SECTION("Petersen graph: sqrt(5), well below the 3-regular target 2 sqrt 2") {
    auto res = min_signature_radius(petersen_graph());
    CHECK(res.classes == 64);
    CHECK(res.rho_min == Catch::Approx(std::sqrt(5.0)).margin(1e-7));
    CHECK(res.rho_min < 2.0 * std::sqrt(2.0));
    CHECK(res.lambda1_min <= res.rho_min + 1e-12);
  }
  SECTION("witnesses attain the reported minima and serialize deterministically") {
    std::mt19937_64 rng(6004);
    for (int trial = 0; trial < 10; ++trial) {
      Graph g = oracle::random_connected_graph(4 + int(rng() % 4), 0.5, rng);
      auto res = min_signature_radius(g);
      INFO("g=" << to_graph6(g));
      CHECK(signed_rho(res.rho_witness) == Catch::Approx(res.rho_min).margin(1e-9));
      CHECK(signed_spectrum(res.lambda1_witness).lambda(1) ==
            Catch::Approx(res.lambda1_min).margin(1e-9));
      auto res2 = min_signature_radius(g);
      CHECK(serialize_signed(res2.rho_witness) == serialize_signed(res.rho_witness));
      CHECK(serialize_signed(res2.lambda1_witness) ==
            serialize_signed(res.lambda1_witness));
    }
  }
  SECTION("disconnected input is rejected") {
    CHECK_THROWS_AS(min_signature_radius(Graph(4, {{0, 1}, {2, 3}})), NotConnected);
  }
}

TEST_CASE("minimum signature radius is invariant under relabelling") {
  std::mt19937_64 rng(6005);
  for (int trial = 0; trial < 10; ++trial) {
    int n = 4 + int(rng() % 4);
    Graph g = oracle::random_connected_graph(n, 0.5, rng);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<Edge> es;
    for (auto [u, v] : g.edges()) es.emplace_back(perm[u], perm[v]);
    Graph h(n, es);
    auto rg = min_signature_radius(g);
    auto rh = min_signature_radius(h);
    INFO("g=" << to_graph6(g));
    CHECK(rg.rho_min == Catch::Approx(rh.rho_min).margin(1e-9));
    CHECK(rg.lambda1_min == Catch::Approx(rh.lambda1_min).margin(1e-9));
    CHECK(rg.classes == rh.classes);
  }
}
