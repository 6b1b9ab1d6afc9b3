#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clift/case_studies.hpp"
#include "clift/membership.hpp"
#include "clift/parse.hpp"
#include "helpers.hpp"

using namespace clift;

namespace {

Seed a2() { return load_fixture("fano-a2").seed; }

}  // namespace

TEST_CASE("laurent membership") {
  Seed s = a2();
  CHECK(laurent_membership(parse_expression("(1 + x2)") / RationalFunction::variable("x1"), s));
  CHECK_FALSE(laurent_membership(RationalFunction(1) / parse_expression("x1 + 1"), s));

  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen}, {"2", VertexKind::HighlyFrozen}};
  Seed h(vs, ExtendedExchangeMatrix({"1", "2"}, {"1"}, {{0}, {-1}}));
  CHECK_FALSE(laurent_membership(RationalFunction(1) / RationalFunction::variable("2"), h));
  CHECK(laurent_membership(RationalFunction(1) / RationalFunction::variable("1"), h));
}

TEST_CASE("upper bound membership") {
  Seed s = a2();
  CHECK(upper_bound_membership(RationalFunction::variable("x1"), s).member);
  auto r = upper_bound_membership(
      parse_expression("(1 + x2)") / RationalFunction::variable("x1"), s);
  CHECK(r.member);
  CHECK(r.exact);
  CHECK_FALSE(
      upper_bound_membership(RationalFunction(1) / RationalFunction::variable("x1"), s).member);
}

TEST_CASE("seed keys") {
  Seed s = a2();
  CHECK(seed_key(s) == seed_key(s.apply(MutationSequence{{"x1", "x1"}})));
  CHECK(seed_key(s) != seed_key(s.mutate("x1")));

  // Relabeling the mutable vertices leaves the key unchanged.
  std::map<VertexId, VertexKind> vs{{"a", VertexKind::Unfrozen}, {"b", VertexKind::Unfrozen}};
  Seed relabeled(vs, ExtendedExchangeMatrix({"a", "b"}, {"a", "b"}, {{0, 1}, {-1, 0}}),
                 {{"a", RationalFunction::variable("x1")}, {"b", RationalFunction::variable("x2")}});
  CHECK(seed_key(s) == seed_key(relabeled));
  // Swapping the labels flips the matrix sign pattern, hence a new key.
  Seed swapped(vs, ExtendedExchangeMatrix({"a", "b"}, {"a", "b"}, {{0, -1}, {1, 0}}),
               {{"a", RationalFunction::variable("x2")}, {"b", RationalFunction::variable("x1")}});
  CHECK(seed_key(s) == seed_key(swapped));
}

TEST_CASE("A2 exploration is the pentagon") {
  ExchangeGraph g = explore_exchange_graph(a2(), 100);
  CHECK(g.nodes.size() == 5);
  CHECK(g.complete);
  CHECK(g.cluster_variables.size() == 5);
  // Symmetry: each recorded edge has a reverse under some vertex label
  // (folding by relabeling can permute the labels).
  for (const auto& [a, k, b] : g.edges) {
    bool reversed = false;
    for (const auto& [c, k2, d] : g.edges)
      if (c == b && d == a) reversed = true;
    CHECK(reversed);
  }
  // 5-cycle: every node has exactly two outgoing edges.
  std::map<SeedKey, int> degree;
  for (const auto& [a, k, b] : g.edges) degree[a]++;
  for (const auto& [n, d] : degree) CHECK(d == 2);
}

TEST_CASE("single mutable vertex") {
  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen}};
  Seed s(vs, ExtendedExchangeMatrix({"1"}, {"1"}, {{0}}));
  ExchangeGraph g = explore_exchange_graph(s, 100);
  CHECK(g.nodes.size() == 2);
  CHECK(g.complete);
}

TEST_CASE("Markov-type quiver does not close under a cap") {
  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen},
                                    {"2", VertexKind::Unfrozen},
                                    {"3", VertexKind::Unfrozen}};
  Seed s(vs, ExtendedExchangeMatrix({"1", "2", "3"}, {"1", "2", "3"},
                                    {{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}));
  ExchangeGraph g = explore_exchange_graph(s, 50);
  CHECK_FALSE(g.complete);
  CHECK(g.nodes.size() == 50);
}

TEST_CASE("explored cluster variables pass membership") {
  Seed s = a2();
  ExchangeGraph g = explore_exchange_graph(s, 100);
  for (const auto& expr : g.cluster_variables) {
    RationalFunction f = parse_expression(expr);
    CHECK(upper_bound_membership(f, s).member);
  }
  // Closure under multiplication on samples.
  std::vector<RationalFunction> vars;
  for (const auto& e : g.cluster_variables) vars.push_back(parse_expression(e));
  for (size_t i = 0; i < vars.size(); ++i)
    for (size_t j = i; j < vars.size(); ++j)
      CHECK(upper_bound_membership(vars[i] * vars[j], s).member);
}

TEST_CASE("exploration of random finite-looking seeds stays consistent") {
  std::mt19937 rng(43);
  for (int i = 0; i < 5; ++i) {
    Seed s = testutil::random_seed(rng, 2, 1);
    ExchangeGraph g = explore_exchange_graph(s, 40);
    if (!g.complete) continue;
    for (const auto& [key, seed] : g.nodes)
      for (const auto& k : seed.mutable_vertices())
        CHECK(g.nodes.count(seed_key(seed.mutate(k))) == 1);
  }
}
