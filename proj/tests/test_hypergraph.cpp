// Uniform hypergraphs: construction, the adjacency-tensor spectral radius,
// the rank-2 collapse to graph eigenvalues, rotation-system embeddings and
// the triangulation hypergraphs built from them.

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"
#include "speclab/hypergraph.hpp"
#include "speclab/spectrum.hpp"

using namespace speclab;

TEST_CASE("hypergraph construction and validation") {
  UniformHypergraph h(5, 3, {{2, 1, 0}, {4, 3, 2}});
  CHECK(h.edge_count() == 2);
  CHECK(h.edges[0] == std::vector<int>{0, 1, 2});  // edges sorted
  CHECK(h.edges[1] == std::vector<int>{2, 3, 4});
  Graph sh = shadow(h);
  CHECK(sh.order() == 5);
  CHECK(sh.size() == 6);
  CHECK(sh.has_edge(0, 1));
  CHECK(sh.has_edge(2, 4));
  CHECK_FALSE(sh.has_edge(0, 3));

  CHECK_THROWS_AS(UniformHypergraph(5, 3, {{0, 1}}), InvalidParameter);       // arity
  CHECK_THROWS_AS(UniformHypergraph(5, 3, {{0, 1, 1}}), InvalidParameter);    // repeat
  CHECK_THROWS_AS(UniformHypergraph(5, 3, {{0, 1, 5}}), InvalidParameter);    // range
  CHECK_THROWS_AS(UniformHypergraph(5, 3, {{0, 1, 2}, {2, 0, 1}}), InvalidParameter);
  CHECK_THROWS_AS(UniformHypergraph(5, 1, {}), InvalidParameter);             // rank
}

TEST_CASE("spectral radius of a single edge is (r-1)!") {
  for (int r : {2, 3, 4}) {
    std::vector<int> e(r);
    for (int i = 0; i < r; ++i) e[i] = i;
    UniformHypergraph h(r + 2, r, {e});  // two isolated vertices on top
    auto res = hypergraph_spectral_radius(h);
    double expect = 1.0;
    for (int i = 2; i < r; ++i) expect *= i;
    INFO("rank " << r);
    CHECK(res.radius == Catch::Approx(expect).margin(1e-8));
    CHECK(res.residual < 1e-8);
    // Perron vector: uniform r^(-1/r) on the edge, zero on isolated vertices
    for (int i = 0; i < r; ++i)
      CHECK(res.vector[i] == Catch::Approx(std::pow(r, -1.0 / r)).margin(1e-7));
    CHECK(res.vector[r] == 0.0);
    CHECK(res.vector[r + 1] == 0.0);
  }
}

TEST_CASE("complete 3-uniform hypergraph: radius (n-1)(n-2)") {
  for (int n : {4, 5, 6}) {
    std::vector<std::vector<int>> es;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        for (int c = b + 1; c < n; ++c) es.push_back({a, b, c});
    auto res = hypergraph_spectral_radius(UniformHypergraph(n, 3, es));
    CHECK(res.radius == Catch::Approx(double(n - 1) * (n - 2)).margin(1e-7));
  }
}

TEST_CASE("rank-2 hypergraphs collapse to the adjacency spectral radius") {
  std::mt19937_64 rng(4444);
  int done = 0;
  while (done < 100) {
    int n = 2 + int(rng() % 9);
    Graph g = oracle::random_graph(n, 0.35, rng);
    if (g.size() == 0) continue;
    ++done;
    std::vector<std::vector<int>> es;
    for (auto [u, v] : g.edges()) es.push_back({u, v});
    auto res = hypergraph_spectral_radius(UniformHypergraph(n, 2, es));
    INFO("g=" << to_graph6(g));
    CHECK(res.radius == Catch::Approx(eigenvalues(g).lambda(1)).margin(1e-7));
  }
  auto pet = petersen_graph();
  std::vector<std::vector<int>> pes;
  for (auto [u, v] : pet.edges()) pes.push_back({u, v});
  CHECK(hypergraph_spectral_radius(UniformHypergraph(10, 2, pes)).radius ==
        Catch::Approx(3.0).margin(1e-8));
}

TEST_CASE("spectral radius agrees with the simplex grid oracle at n = 6") {
  std::mt19937_64 rng(5555);
  std::vector<std::vector<int>> all;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) all.push_back({a, b, c});
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<std::vector<int>> es;
    std::set<size_t> chosen;
    size_t want = 4 + rng() % 9;
    while (chosen.size() < want) chosen.insert(rng() % all.size());
    for (size_t i : chosen) es.push_back(all[i]);
    UniformHypergraph h(6, 3, es);
    double lib = hypergraph_spectral_radius(h).radius;
    double grid = oracle::grid_multistart_radius(h);
    INFO("trial " << trial << " edges=" << es.size());
    CHECK(lib == Catch::Approx(grid).margin(1e-5));
  }
}

TEST_CASE("empty and oversized hypergraphs are rejected") {
  CHECK_THROWS_AS(hypergraph_spectral_radius(UniformHypergraph(4, 3, {})), EmptyHypergraph);
  CHECK_THROWS_AS(
      hypergraph_spectral_radius(UniformHypergraph(6, 5, {{0, 1, 2, 3, 4}})),
      InvalidParameter);
}

TEST_CASE("rotation systems: faces and Euler's relation") {
  SECTION("fan embedding") {
    for (int n : {5, 8}) {
      Graph g = fan_graph(n);
      auto rs = parse_rotation_system(g, fan_rotation(n));
      auto faces = trace_faces(rs);
      CHECK(int(g.order()) - g.size() + int(faces.size()) == 2);
      int tris = 0, outer = 0;
      for (auto& f : faces) {
        if (f.size() == 3) ++tris;
        else ++outer;
      }
      CHECK(tris == n - 2);
      CHECK(outer == 1);  // the long outer walk around the path
    }
  }
  SECTION("dominating-pair embedding is a full triangulation") {
    for (int n : {6, 9}) {
      Graph g = k2_join_path(n);
      CHECK(g.size() == 3 * n - 6);  // maximal planar
      auto rs = parse_rotation_system(g, k2p_rotation(n));
      auto faces = trace_faces(rs);
      CHECK(int(faces.size()) == 2 * n - 4);
      for (auto& f : faces) CHECK(f.size() == 3);
    }
  }
  SECTION("malformed rotation texts") {
    Graph g = fan_graph(5);
    CHECK_THROWS_AS(parse_rotation_system(g, "0 1 2 3 4"), InvalidRotationSystem);
    CHECK_THROWS_AS(parse_rotation_system(g, "0: 1 2 3\n"), InvalidRotationSystem);
    std::string wrong = fan_rotation(5);
    wrong.replace(wrong.find("1: 2 0"), 6, "1: 3 0");  // 3 is not a neighbour of 1
    CHECK_THROWS_AS(parse_rotation_system(g, wrong), InvalidRotationSystem);
  }
}

TEST_CASE("triangulation hypergraphs from embeddings") {
  SECTION("fan: the interior faces around the hub") {
    auto h = from_triangulation(fan_graph(5), fan_rotation(5));
    REQUIRE(h.r == 3);
    CHECK(h.edges == std::vector<std::vector<int>>{{0, 1, 2}, {0, 2, 3}, {0, 3, 4}});
  }
  SECTION("face counts") {
    for (int n = 6; n <= 12; ++n) {
      CHECK(from_triangulation(fan_graph(n), fan_rotation(n)).edge_count() == n - 2);
      CHECK(from_triangulation(k2_join_path(n), k2p_rotation(n)).edge_count() == 2 * n - 5);
    }
  }
  SECTION("nonplanar input is rejected") {
    CHECK_THROWS_AS(from_triangulation(complete_graph(5), ""), NotPlanar);
  }
  SECTION("frozen radii and the dominating-pair vs fan comparison") {
    CHECK(hypergraph_spectral_radius(from_triangulation(fan_graph(8), fan_rotation(8)))
              .radius == Catch::Approx(5.395372).margin(1e-5));
    CHECK(hypergraph_spectral_radius(from_triangulation(k2_join_path(8), k2p_rotation(8)))
              .radius == Catch::Approx(8.717971).margin(1e-5));
    CHECK(hypergraph_spectral_radius(from_triangulation(k2_join_path(6), k2p_rotation(6)))
              .radius == Catch::Approx(7.226860).margin(1e-5));
    for (int n = 8; n <= 12; ++n) {
      double fan_r =
          hypergraph_spectral_radius(from_triangulation(fan_graph(n), fan_rotation(n))).radius;
      double k2p_r =
          hypergraph_spectral_radius(from_triangulation(k2_join_path(n), k2p_rotation(n)))
              .radius;
      INFO("n=" << n);
      CHECK(k2p_r > fan_r + 0.5);
    }
  }
}
