#include <catch2/catch_amalgamated.hpp>

#include "clift/case_studies.hpp"
#include "clift/membership.hpp"
#include "clift/parse.hpp"

using namespace clift;

TEST_CASE("toric P1") {
  ToricResult r = toric_lift(*load_fixture("toric-p1").fan);
  CHECK(r.variable_count == 2);
  REQUIRE(r.lifted.data.D == std::vector<VertexId>{"2"});
  CHECK(r.lifted.data.nu == std::vector<std::vector<long long>>{{1}});
  CHECK(r.lifted.seed.mutable_vertices().empty());
  ExchangeGraph g = explore_exchange_graph(r.lifted.seed, 10);
  CHECK(g.nodes.size() == 1);
  CHECK(g.complete);
}

TEST_CASE("toric P2") {
  ToricResult r = toric_lift(*load_fixture("toric-p2").fan);
  CHECK(r.variable_count == 3);
  REQUIRE(r.lifted.data.D == std::vector<VertexId>{"3"});
  CHECK(r.lifted.data.nu == std::vector<std::vector<long long>>{{1, 1}});
  // Both base variables have degree e_3; the new variable has degree e_3 too.
  CHECK(r.degrees.at("x1") == DegreeVector::basis("3"));
  CHECK(r.degrees.at("x2") == DegreeVector::basis("3"));
  CHECK(r.degrees.at("3") == DegreeVector::basis("3"));
}

TEST_CASE("toric Hirzebruch F1") {
  FanInput fan{2, {{1, 0}, {0, 1}, {-1, 1}, {0, -1}}, {1, 2}};
  ToricResult r = toric_lift(fan);
  REQUIRE(r.lifted.data.D == (std::vector<VertexId>{"3", "4"}));
  CHECK(r.lifted.data.nu == (std::vector<std::vector<long long>>{{1, -1}, {0, 1}}));
}

TEST_CASE("toric input validation") {
  CHECK_THROWS_AS(toric_lift(FanInput{2, {{1, 0}, {2, 0}, {0, 1}}, {1, 3}}), ProportionalRays);
  CHECK_THROWS_AS(toric_lift(FanInput{2, {{1, 1}, {1, -1}, {-1, 0}}, {1, 2}}), NotSmoothCone);
  // Opposite rays are distinct cones, not proportional.
  CHECK_NOTHROW(toric_lift(FanInput{1, {{1}, {-1}}, {1}}));
}

TEST_CASE("diagonal compactification of A1 with a coefficient") {
  Fixture fx = load_fixture("diag-a1");
  LiftedSeed L = diagonal_compactification_lift(fx.seed);
  REQUIRE(L.data.D == std::vector<VertexId>{"x1'"});
  // The new vertex is isolated: -B principal part is zero here.
  CHECK(L.seed.matrix().entry("x1'", "x1") == 0);
  CHECK(L.seed.kind("x1'") == VertexKind::HighlyFrozen);

  CHECK(L.seed.variable("x1'") == RationalFunction::variable("x1'"));
  CHECK(L.seed.variable("x1") ==
        RationalFunction::variable("x1'") * RationalFunction::variable("x1"));
  CHECK(L.seed.variable("x2") == RationalFunction::variable("x2"));

  CHECK(L.grading.at("x1'") == DegreeVector::basis("x1'"));
  CHECK(L.grading.at("x1") == DegreeVector::basis("x1'"));
  CHECK(L.grading.at("x2") == DegreeVector{});

  // Generator relation: lift(x1) * mu_1(lift)_1 = 1 + lift(x2).
  Seed m = L.seed.mutate("x1");
  CHECK(L.seed.variable("x1") * m.variable("x1") == RationalFunction(1) + L.seed.variable("x2"));

  // Mutated degree.
  DegreeConfiguration md = mutate_degree_configuration(L.seed, L.grading, "x1");
  CHECK(md.at("x1") == -DegreeVector::basis("x1'"));

  // Every lifted variable restricts to the base variable.
  for (const auto& [v, k] : fx.seed.vertices())
    CHECK(restrict_iota(L.seed.variable(v), L) == fx.seed.variable(v));
}

TEST_CASE("diagonal compactification of the A3 chain") {
  Fixture fx = load_fixture("diag-a3");
  LiftedSeed L = diagonal_compactification_lift(fx.seed);
  REQUIRE(L.data.D == (std::vector<VertexId>{"x1'", "x2'", "x3'"}));
  // -B principal part: arrows 2 -> 1', 3 -> 2', 2' -> 1, 3' -> 2.
  CHECK(L.seed.matrix().entry("x1'", "x2") == -1);
  CHECK(L.seed.matrix().entry("x2'", "x3") == -1);
  CHECK(L.seed.matrix().entry("x2'", "x1") == 1);
  CHECK(L.seed.matrix().entry("x3'", "x2") == 1);
  CHECK(L.seed.matrix().entry("x1'", "x1") == 0);
  CHECK(L.seed.matrix().entry("x3'", "x3") == 0);
  CHECK(L.seed.matrix().entry("x1'", "x3") == 0);
  CHECK(L.seed.matrix().entry("x3'", "x1") == 0);
  CHECK(L.seed.matrix().entry("x2'", "x2") == 0);

  for (int i = 1; i <= 3; ++i) {
    std::string v = "x" + std::to_string(i);
    CHECK(L.seed.variable(v) ==
          RationalFunction::variable(v + "'") * RationalFunction::variable(v));
    CHECK(L.grading.at(v) == DegreeVector::basis(v + "'"));
    CHECK(L.grading.at(v + "'") == DegreeVector::basis(v + "'"));
    CHECK(restrict_iota(L.seed.variable(v), L) == fx.seed.variable(v));
  }
  CHECK(is_degree_configuration(L.seed, L.grading));
}

TEST_CASE("diagonal compactification preconditions") {
  Fixture le = load_fixture("label-example");
  CHECK_THROWS_AS(diagonal_compactification_lift(le.seed), SemifrozenPresent);

  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen}, {"2", VertexKind::Unfrozen},
                                    {"3", VertexKind::Unfrozen}};
  // Rank 2 < 3 columns: the construction goes through but the report flags
  // the failed rank hypothesis.
  Seed low(vs, ExtendedExchangeMatrix({"1", "2", "3"}, {"1", "2", "3"},
                                      {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}}));
  CHECK_FALSE(diagonal_compactification_lift(low).report.maximal_rank);
}

TEST_CASE("chart pullback closed forms") {
  for (const std::string name : {"diag-a1", "diag-a3"}) {
    Fixture fx = load_fixture(name);
    LiftedSeed L = diagonal_compactification_lift(fx.seed);
    for (const auto& k : L.base.mutable_vertices()) {
      // g = (e_{k'}, x_k) -> exchange binomial of the base seed at k,
      // written in the formal chart variables.
      RationalFunction binom_formal(0);
      {
        RationalFunction p(1), m(1);
        for (const auto& i : L.base.matrix().rows()) {
          long long b = L.base.matrix().entry(i, k);
          if (b > 0) p *= RationalFunction::variable(i).pow(static_cast<int>(b));
          if (b < 0) m *= RationalFunction::variable(i).pow(static_cast<int>(-b));
        }
        binom_formal = p + m;
      }
      auto r1 = chart_pullback(L, k, {DegreeVector::basis(k + "'"),
                                      RationalFunction::variable(k)});
      CHECK(r1.second == binom_formal);
      // g = (e_{j'}, 1), j != k, is untouched.
      for (const auto& j : L.base.mutable_vertices()) {
        if (j == k) continue;
        auto r2 = chart_pullback(L, k, {DegreeVector::basis(j + "'"), RationalFunction(1)});
        CHECK(r2.second.is_one());
      }
      // g = (e_{k'}, 1) picks up the chart variable.
      auto r3 = chart_pullback(L, k, {DegreeVector::basis(k + "'"), RationalFunction(1)});
      CHECK(r3.second == RationalFunction::variable(k));
    }
  }
}

TEST_CASE("fixture registry") {
  CHECK_THROWS_AS(load_fixture("unknown"), UnknownFixture);
  CHECK_THROWS_AS(load_fixture("projective-chain-x"), UnknownFixture);
  CHECK(load_fixture("projective-trivial-4").seed.vertices().size() == 4);
  CHECK(load_fixture("projective-chain-3").seed.mutable_vertices().size() == 2);
  for (const auto& name : {"label-example", "fano-a2", "diag-a1", "diag-a3", "toric-p1",
                           "toric-p2", "projective-trivial-3", "projective-chain-4"})
    CHECK_NOTHROW(validate_seed(load_fixture(name).seed));
}

TEST_CASE("Fano relations under exploration") {
  Fixture fx = load_fixture("fano-a2");
  ExchangeGraph g = explore_exchange_graph(fx.seed, 100);
  CHECK(g.nodes.size() == 5);
  CHECK(g.cluster_variables.size() == 5);
  // x1, ..., x5 with x_i x_{i+2} = x_{i+1} + 1 (mod 5).
  std::vector<RationalFunction> xs{
      RationalFunction::variable("x1"), RationalFunction::variable("x2"),
      parse_expression("1 + x2") / RationalFunction::variable("x1"),
      parse_expression("x1 + x2 + 1") / parse_expression("x1*x2"),
      parse_expression("1 + x1") / RationalFunction::variable("x2")};
  for (int i = 0; i < 5; ++i)
    CHECK(xs[i] * xs[(i + 2) % 5] == xs[(i + 1) % 5] + RationalFunction(1));
  for (const auto& x : xs) CHECK(g.cluster_variables.count(x.to_string()) == 1);
}
