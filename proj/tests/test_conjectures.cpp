// The predicate registry: catalog integrity, verdict determinism, the
// slack-sign convention, worked examples with frozen values, provable
// implications between related predicates, and the applicability gates.

#include <cmath>
#include <random>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "speclab/conjectures.hpp"
#include "speclab/enumerate.hpp"
#include "speclab/families.hpp"
#include "speclab/graph.hpp"
#include "speclab/graph6.hpp"

using namespace speclab;

TEST_CASE("catalog and id round-trip") {
  auto ids = all_conjecture_ids();
  CHECK(int(ids.size()) == kConjectureCount);
  CHECK(kConjectureCount == 24);
  CHECK(catalog().size() == size_t(kConjectureCount));
  for (ConjectureId id : ids) {
    auto name = to_string(id);
    CHECK_FALSE(name.empty());
    auto back = parse_conjecture_id(name);
    REQUIRE(back.has_value());
    CHECK(*back == id);
  }
  for (const CatalogEntry& e : catalog()) {
    CHECK_FALSE(e.statement.empty());
    CHECK_FALSE(e.topic.empty());
    CHECK_FALSE(e.applicability.empty());
  }
  CHECK_FALSE(parse_conjecture_id("C99_NoSuch").has_value());
  CHECK_FALSE(parse_conjecture_id("").has_value());
}

TEST_CASE("verdicts are deterministic") {
  std::mt19937_64 rng(7001);
  std::vector<Graph> pool{petersen_graph(), cycle_graph(7), complete_split(8, 3),
                          path_graph(9), oracle::random_connected_graph(8, 0.4, rng)};
  for (const Graph& g : pool)
    for (ConjectureId id : all_conjecture_ids()) {
      ConjectureVerdict a = check(id, g);
      ConjectureVerdict b = check(id, g);
      INFO(to_string(id) << " on " << to_graph6(g));
      CHECK(a.outcome == b.outcome);
      CHECK(a.slack == b.slack);
      CHECK(a.detail == b.detail);
    }
}

TEST_CASE("slack sign convention on the order-6 census") {
  // For every predicate whose verdict comes straight from the slack,
  // Holds <=> slack >= -tol whenever the predicate applies.
  std::vector<ConjectureId> plain{
      ConjectureId::C01_HongExt,        ConjectureId::C01b_HongExtComponents,
      ConjectureId::C02_WilfExt,        ConjectureId::C03_BollobasNikiforov,
      ConjectureId::C04_ELW,            ConjectureId::C05_PlanarMax,
      ConjectureId::C08_HaemersToughness, ConjectureId::C14_Saturation,
      ConjectureId::C15_Brouwer,        ConjectureId::C17_SpectralGapKite,
      ConjectureId::C18_SpectralGapComet, ConjectureId::C19_EnergyIndependence,
      ConjectureId::C19b_EnergyInertia, ConjectureId::C21_Brandt,
      ConjectureId::C22_Powers,         ConjectureId::C23_Mohar,
      ConjectureId::C24_GregoryEigenvector, ConjectureId::C26_Guiduli_Ptr};
  CheckParams p;
  for_each_graph(6, false, [&](const Graph& g) {
    for (ConjectureId id : plain) {
      ConjectureVerdict v = check(id, g, p);
      if (not_applicable(v)) continue;
      INFO(to_string(id) << " on " << to_graph6(g) << " slack=" << v.slack);
      CHECK(holds(v) == (v.slack >= -p.tol));
    }
  });
}

TEST_CASE("no violations on the order-6 census for the confirmed bounds") {
  std::vector<ConjectureId> ids{
      ConjectureId::C01_HongExt,  ConjectureId::C02_WilfExt,
      ConjectureId::C03_BollobasNikiforov, ConjectureId::C04_ELW,
      ConjectureId::C15_Brouwer,  ConjectureId::C16_FullBrouwer,
      ConjectureId::C19_EnergyIndependence, ConjectureId::C19b_EnergyInertia,
      ConjectureId::C22_Powers};
  for_each_graph(6, false, [&](const Graph& g) {
    for (ConjectureId id : ids) {
      ConjectureVerdict v = check(id, g);
      INFO(to_string(id) << " on " << to_graph6(g) << " detail=" << v.detail);
      CHECK_FALSE(violated(v));
    }
  });
}

TEST_CASE("worked example: forced inertia count exposes the order-7 cycle") {
  Graph c7 = cycle_graph(7);
  ConjectureVerdict standard = check(ConjectureId::C04_ELW, c7);
  CHECK(holds(standard));
  CheckParams p;
  p.force_inertia_count = true;
  ConjectureVerdict forced = check(ConjectureId::C04_ELW, c7, p);
  CHECK(violated(forced));
  CHECK(forced.slack == Catch::Approx(-0.10991626).margin(1e-6));
  CHECK(forced.detail.find("l=3") != std::string::npos);
  // the forced sum is never smaller, so its slack is never larger
  std::mt19937_64 rng(7002);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = oracle::random_graph(2 + int(rng() % 7), 0.5, rng);
    if (g.size() == 0) continue;
    ConjectureVerdict a = check(ConjectureId::C04_ELW, g);
    ConjectureVerdict b = check(ConjectureId::C04_ELW, g, p);
    CHECK(b.slack <= a.slack + 1e-9);
  }
}

TEST_CASE("worked examples: equalities hit exactly") {
  SECTION("square-sum lower bound is tight on complete graphs") {
    ConjectureVerdict v = check(ConjectureId::C01_HongExt, complete_graph(5));
    CHECK(holds(v));
    CHECK(v.slack == Catch::Approx(0.0).margin(1e-9));
  }
  SECTION("positive-square-sum upper bound is tight on balanced Turan graphs") {
    for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 4}, {6, 3}, {9, 3}, {8, 4}}) {
      ConjectureVerdict v = check(ConjectureId::C02_WilfExt, turan_graph(n, k));
      INFO("turan(" << n << "," << k << ")");
      CHECK(holds(v));
      CHECK(v.slack == Catch::Approx(0.0).margin(1e-8));
    }
  }
  SECTION("toughness bound is tight on complete multipartite graphs") {
    ConjectureVerdict v =
        check(ConjectureId::C08_HaemersToughness, complete_multipartite({2, 2, 2}));
    CHECK(holds(v));
    CHECK(v.slack == Catch::Approx(0.0).margin(1e-9));
  }
  SECTION("eigenvector mass bound is tight on complete graphs") {
    ConjectureVerdict v = check(ConjectureId::C24_GregoryEigenvector, complete_graph(5));
    CHECK(holds(v));
    CHECK(v.slack == Catch::Approx(0.0).margin(1e-7));
  }
  SECTION("mass 1/2 with equality exactly on bipartite colour classes") {
    ConjectureVerdict star = check(ConjectureId::C25_Cioaba, star_graph(6));
    CHECK(holds(star));
    CHECK(star.slack == Catch::Approx(0.0).margin(1e-8));
    CHECK(star.detail.find("colour class") != std::string::npos);
    ConjectureVerdict c5 = check(ConjectureId::C25_Cioaba, cycle_graph(5));
    CHECK(holds(c5));
    CHECK(c5.slack > 1e-3);
  }
  SECTION("saturation minimum is attained by the complete split graph") {
    ConjectureVerdict v = check(ConjectureId::C14_Saturation, complete_split(8, 3));
    CHECK(holds(v));
    CHECK(v.slack == Catch::Approx(0.0).margin(1e-9));
    CHECK(v.detail.find("isomorphic") != std::string::npos);
    // order-5 cycle ties the star without being a split graph: still Holds
    ConjectureVerdict c5 = check(ConjectureId::C14_Saturation, cycle_graph(5));
    CHECK(holds(c5));
    CHECK(c5.slack == Catch::Approx(0.0).margin(1e-9));
    CHECK(c5.detail.find("not isomorphic") != std::string::npos);
  }
  SECTION("partial-sum equality matched by the clique-plus-tail family") {
    ConjectureVerdict k5 = check(ConjectureId::C16_FullBrouwer, complete_graph(5));
    CHECK(holds(k5));
    CHECK(k5.detail.find("matched") != std::string::npos);
    ConjectureVerdict split = check(ConjectureId::C16_FullBrouwer, complete_split(6, 2));
    CHECK(holds(split));
    CHECK(split.detail.find("matched") != std::string::npos);
  }
}

TEST_CASE("planar maximum: the dominating-pair graph is the unique target") {
  ConjectureVerdict self = check(ConjectureId::C05_PlanarMax, k2_join_path(9));
  CHECK(holds(self));
  CHECK(self.slack == Catch::Approx(0.0).margin(1e-9));
  CHECK(self.detail.find("isomorphic") != std::string::npos);
  ConjectureVerdict cyc = check(ConjectureId::C05_PlanarMax, cycle_graph(9));
  CHECK(holds(cyc));
  CHECK(cyc.slack > 2.0);
  CHECK(not_applicable(check(ConjectureId::C05_PlanarMax, cycle_graph(8))));
  CHECK(not_applicable(check(ConjectureId::C05_PlanarMax, complete_graph(9))));
}

TEST_CASE("cycle-length threshold: exceptional graph and premise gate") {
  ConjectureVerdict split = check(ConjectureId::C07_ZhaiLinShu, complete_split(8, 2));
  CHECK(holds(split));
  CHECK(split.detail.find("exceptional") != std::string::npos);
  ConjectureVerdict k6 = check(ConjectureId::C07_ZhaiLinShu, complete_graph(6));
  CHECK(holds(k6));
  CHECK(not_applicable(check(ConjectureId::C07_ZhaiLinShu, cycle_graph(6))));
  CheckParams p;
  p.cycle_k = 0;
  CHECK_THROWS_AS(check(ConjectureId::C07_ZhaiLinShu, complete_graph(6), p),
                  InvalidParameter);
}

TEST_CASE("energy equality handling") {
  // complete graph: energy equals Delta + delta, and that is the only
  // permitted equality
  ConjectureVerdict k3 = check(ConjectureId::C20_AkbariH, complete_graph(3));
  CHECK(holds(k3));
  CHECK(k3.slack == Catch::Approx(0.0).margin(1e-9));
  CHECK(k3.detail.find("complete") != std::string::npos);
  // the 4-cycle is singular: skipped by default, a strict-equality failure
  // when forced
  CHECK(not_applicable(check(ConjectureId::C20_AkbariH, cycle_graph(4))));
  CheckParams p;
  p.force_check = true;
  ConjectureVerdict c4 = check(ConjectureId::C20_AkbariH, cycle_graph(4), p);
  CHECK(violated(c4));
  CHECK(c4.slack == Catch::Approx(0.0).margin(1e-9));
  CHECK(c4.detail.find("equality on a non-complete graph") != std::string::npos);
  ConjectureVerdict p4 = check(ConjectureId::C20_AkbariH, path_graph(4));
  CHECK(holds(p4));
  CHECK(p4.slack == Catch::Approx(2.0 * std::sqrt(5.0) - 3.0).margin(1e-8));
}

TEST_CASE("signed-signature predicates") {
  SECTION("regular target holds comfortably on the Petersen graph") {
    ConjectureVerdict v = check(ConjectureId::C27_BiluLinial, petersen_graph());
    CHECK(holds(v));
    CHECK(v.slack ==
          Catch::Approx(2.0 * std::sqrt(2.0) - std::sqrt(5.0)).margin(1e-7));
    CHECK(v.detail.find("signature=") != std::string::npos);
  }
  SECTION("strict version: even cycles pass, odd cycles sit on the bound") {
    ConjectureVerdict c4 = check(ConjectureId::C28_Gregory_Signed, cycle_graph(4));
    CHECK(holds(c4));
    CHECK(c4.slack == Catch::Approx(2.0 - std::sqrt(2.0)).margin(1e-8));
    ConjectureVerdict c5 = check(ConjectureId::C28_Gregory_Signed, cycle_graph(5));
    CHECK(violated(c5));
    CHECK(c5.slack == Catch::Approx(0.0).margin(1e-8));
    CHECK(c5.detail.find("strict inequality fails") != std::string::npos);
  }
  SECTION("applicability") {
    CHECK(not_applicable(check(ConjectureId::C27_BiluLinial, path_graph(5))));
    CHECK(not_applicable(check(ConjectureId::C27_BiluLinial, complete_graph(2))));
    CHECK(not_applicable(check(ConjectureId::C28_Gregory_Signed, path_graph(2))));
  }
}

TEST_CASE("provable implications between related predicates") {
  // connected census at order 7: the component-aware square-sum bound agrees
  // with the connected one, and the inertia form of the energy bound is the
  // weaker one
  for_each_graph(7, true, [&](const Graph& g) {
    ConjectureVerdict a = check(ConjectureId::C01_HongExt, g);
    ConjectureVerdict b = check(ConjectureId::C01b_HongExtComponents, g);
    INFO("g=" << to_graph6(g));
    REQUIRE_FALSE(not_applicable(a));
    CHECK(a.slack == Catch::Approx(b.slack).margin(1e-12));
    ConjectureVerdict e1 = check(ConjectureId::C19_EnergyIndependence, g);
    ConjectureVerdict e2 = check(ConjectureId::C19b_EnergyInertia, g);
    CHECK(e1.slack <= e2.slack + 1e-9);
    if (holds(e1)) CHECK(holds(e2));
  });
}

TEST_CASE("applicability gates") {
  Graph disconnected(5, {{0, 1}, {2, 3}});
  CHECK(not_applicable(check(ConjectureId::C01_HongExt, disconnected)));
  CHECK(not_applicable(check(ConjectureId::C08_HaemersToughness, disconnected)));
  CHECK(not_applicable(check(ConjectureId::C08_HaemersToughness, complete_graph(5))));
  CHECK(not_applicable(check(ConjectureId::C03_BollobasNikiforov, complete_graph(6))));
  CHECK(not_applicable(check(ConjectureId::C03_BollobasNikiforov, complete_graph(2))));
  CHECK_FALSE(not_applicable(check(ConjectureId::C03_BollobasNikiforov, cycle_graph(5))));
  CHECK(not_applicable(check(ConjectureId::C18_SpectralGapComet, cycle_graph(5))));
  CHECK_FALSE(not_applicable(check(ConjectureId::C18_SpectralGapComet, path_graph(5))));
  CHECK(not_applicable(check(ConjectureId::C21_Brandt, path_graph(4))));      // not regular
  CHECK(not_applicable(check(ConjectureId::C21_Brandt, complete_graph(4))));  // triangles
  CHECK_FALSE(not_applicable(check(ConjectureId::C21_Brandt, petersen_graph())));
  CHECK(not_applicable(check(ConjectureId::C23_Mohar, complete_graph(5))));   // degree 4
  CHECK_FALSE(not_applicable(check(ConjectureId::C23_Mohar, cycle_graph(6))));
  CHECK(not_applicable(check(ConjectureId::C26_Guiduli_Ptr, petersen_graph())));
  CHECK_FALSE(not_applicable(check(ConjectureId::C26_Guiduli_Ptr, path_graph(6))));
  CHECK(not_applicable(check(ConjectureId::C22_Powers, complete_graph(2))));
}

TEST_CASE("parameter validation and budget conversion") {
  CheckParams p;
  p.power_index = 5;
  CHECK_THROWS_AS(check(ConjectureId::C22_Powers, complete_graph(5), p),
                  InvalidParameter);
  CheckParams q;
  q.density_t = 0;
  CHECK_THROWS_AS(check(ConjectureId::C26_Guiduli_Ptr, path_graph(4), q),
                  InvalidParameter);
  CheckParams r;
  r.clique_size = 1;
  CHECK_THROWS_AS(check(ConjectureId::C14_Saturation, cycle_graph(5), r),
                  InvalidParameter);
  // an exhausted search budget downgrades to NotApplicable instead of throwing
  CheckParams tiny;
  tiny.budget = 1;
  ConjectureVerdict v =
      check(ConjectureId::C19_EnergyIndependence, petersen_graph(), tiny);
  CHECK(not_applicable(v));
  CHECK(v.detail.find("budget") != std::string::npos);
}

TEST_CASE("subcubic planar median bound in closed form") {
  // spectra {3,-1,-1,-1} and {2,1,1,-1,-1,-2} put the median pair at 1
  ConjectureVerdict k4 = check(ConjectureId::C23_Mohar, complete_graph(4));
  CHECK(holds(k4));
  CHECK(k4.slack == Catch::Approx(0.0).margin(1e-9));
  ConjectureVerdict c6 = check(ConjectureId::C23_Mohar, cycle_graph(6));
  CHECK(holds(c6));
  CHECK(c6.slack == Catch::Approx(0.0).margin(1e-9));
  ConjectureVerdict p7 = check(ConjectureId::C23_Mohar, path_graph(7));
  CHECK(holds(p7));
  CHECK(p7.slack > 0.2);  // interior eigenvalues of the path stay small
}
