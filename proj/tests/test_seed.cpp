#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "clift/parse.hpp"
#include "clift/seed.hpp"
#include "helpers.hpp"

using namespace clift;

namespace {

Seed a2() {
  std::map<VertexId, VertexKind> vs{{"x1", VertexKind::Unfrozen}, {"x2", VertexKind::Unfrozen}};
  return Seed(vs, ExtendedExchangeMatrix({"x1", "x2"}, {"x1", "x2"}, {{0, 1}, {-1, 0}}));
}

Seed label_example() {
  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen},
                                    {"2", VertexKind::Unfrozen},
                                    {"3", VertexKind::Semifrozen},
                                    {"4", VertexKind::HighlyFrozen}};
  return Seed(vs, ExtendedExchangeMatrix({"1", "2", "3", "4"}, {"1", "2"},
                                         {{0, 3}, {-1, 0}, {0, -2}, {0, 1}}));
}

}  // namespace

TEST_CASE("validate_seed symmetrizer") {
  auto d = validate_seed(a2());
  CHECK(d.at("x1") == 1);
  CHECK(d.at("x2") == 1);

  auto dl = validate_seed(label_example());
  CHECK(dl.at("1") == 1);
  CHECK(dl.at("2") == 3);

  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen}, {"2", VertexKind::Unfrozen}};
  Seed bad(vs, ExtendedExchangeMatrix({"1", "2"}, {"1", "2"}, {{0, 1}, {1, 0}}));
  CHECK_THROWS_AS(validate_seed(bad), NotSkewSymmetrizable);
}

TEST_CASE("maximal rank") {
  CHECK(is_maximal_rank(a2().matrix()));
  CHECK(is_maximal_rank(label_example().matrix()));
  ExtendedExchangeMatrix z({"1", "2"}, {"1"}, {{0}, {0}});
  CHECK_FALSE(is_maximal_rank(z));
}

TEST_CASE("matrix mutation") {
  ExtendedExchangeMatrix a2m = a2().matrix();
  ExtendedExchangeMatrix m1 = mutate_matrix(a2m, "x1");
  CHECK(m1.entry("x1", "x2") == -1);
  CHECK(m1.entry("x2", "x1") == 1);

  ExtendedExchangeMatrix lm = label_example().matrix();
  ExtendedExchangeMatrix lm1 = mutate_matrix(lm, "1");
  CHECK(lm1.entry("1", "2") == -3);
  CHECK(lm1.entry("2", "1") == 1);
  CHECK(lm1.entry("3", "2") == -2);
  CHECK(lm1.entry("4", "2") == 1);

  CHECK(mutate_matrix(mutate_matrix(lm, "2"), "2") == lm);
  CHECK_THROWS_AS(mutate_matrix(lm, "3"), NotMutable);
}

TEST_CASE("exchange monomials") {
  Seed s = a2();
  auto [p1, m1] = s.exchange_monomials("x1");
  CHECK(p1.is_one());
  CHECK(m1 == RationalFunction::variable("x2"));
  auto [p2, m2] = s.exchange_monomials("x2");
  CHECK(p2 == RationalFunction::variable("x1"));
  CHECK(m2.is_one());

  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen}};
  Seed iso(vs, ExtendedExchangeMatrix({"1"}, {"1"}, {{0}}));
  auto [pi, mi] = iso.exchange_monomials("1");
  CHECK(pi.is_one());
  CHECK(mi.is_one());
}

TEST_CASE("cluster mutation and the pentagon") {
  Seed s = a2();
  Seed m = s.mutate("x1");
  CHECK(m.variable("x1") == parse_expression("(1 + x2)") / RationalFunction::variable("x1"));
  CHECK(m.mutate("x1") == s);

  Seed p = s.apply(MutationSequence{{"x1", "x2", "x1", "x2", "x1"}});
  CHECK(p.variable("x1") == RationalFunction::variable("x2"));
  CHECK(p.variable("x2") == RationalFunction::variable("x1"));
}

TEST_CASE("apply_sequence") {
  Seed s = a2();
  CHECK(s.apply(MutationSequence{{}}) == s);
  CHECK(s.apply(MutationSequence{{"x2", "x2"}}) == s);
  CHECK_THROWS_AS(label_example().apply(MutationSequence{{"1", "3"}}), NotMutable);
}

TEST_CASE("express_in_seed") {
  Seed s = a2();
  Seed m = s.mutate("x1");
  RationalFunction x1 = RationalFunction::variable("x1");
  RationalFunction x2 = RationalFunction::variable("x2");
  CHECK(express_in_seed(x1, m) == parse_expression("1 + x2") / x1);
  CHECK(express_in_seed(x2, m) == x2);
  CHECK(express_in_seed(parse_expression("1 + x2") / x1, m) == x1);
}

TEST_CASE("express_in_seed inverts expansion") {
  std::mt19937 rng(7);
  for (int i = 0; i < 10; ++i) {
    Seed s = testutil::random_seed(rng, 3, 1);
    Seed t = s.apply(MutationSequence{testutil::random_sequence(rng, s, 4)});
    // Expansion map: t's formal variables back to root-universe expressions.
    std::map<VariableId, RationalFunction> expand;
    for (const auto& [v, f] : t.cluster()) expand[v] = f;
    RationalFunction f =
        RationalFunction::variable("u1") +
        RationalFunction::variable("u2") * RationalFunction::variable("f1");
    CHECK(express_in_seed(f, t).substitute(expand) == f);
  }
}

TEST_CASE("mutation preserves symmetrizer and rank") {
  std::mt19937 rng(11);
  for (int i = 0; i < 20; ++i) {
    Seed s = testutil::random_seed(rng, 3, 1);
    auto d = validate_seed(s);
    bool rank = is_maximal_rank(s.matrix());
    for (const auto& k : s.mutable_vertices()) {
      ExtendedExchangeMatrix m = mutate_matrix(s.matrix(), k);
      Seed ms = s.mutate(k);
      CHECK(ms.matrix() == m);
      auto dm = validate_seed(ms);
      // Same symmetrizer works: d_i b_ij = -d_j b_ji entrywise.
      for (const auto& ci : m.cols())
        for (const auto& cj : m.cols())
          CHECK(d.at(ci) * m.entry(ci, cj) == -d.at(cj) * m.entry(cj, ci));
      CHECK(is_maximal_rank(m) == rank);
      CHECK(ms.mutate(k) == s);
    }
  }
}

TEST_CASE("Laurent phenomenon on random seeds") {
  std::mt19937 rng(13);
  for (int i = 0; i < 40; ++i) {
    Seed s = testutil::random_seed(rng, 1 + static_cast<int>(rng() % 4),
                                   static_cast<int>(rng() % 3));
    Seed t = s.apply(MutationSequence{testutil::random_sequence(rng, s, 6)});
    for (const auto& [v, f] : t.cluster()) {
      const LaurentPolynomial& q = f.denominator();
      REQUIRE(q.is_monomial());
      CHECK(boost::multiprecision::abs(q.leading_term().second) == 1);
      for (const auto& [var, e] : q.leading_term().first) {
        CHECK(s.vertices().count(var) == 1);
        CHECK(s.kind(var) == VertexKind::Unfrozen);
      }
    }
  }
}

TEST_CASE("degenerate seed without mutable vertices") {
  std::map<VertexId, VertexKind> vs{{"a", VertexKind::HighlyFrozen},
                                    {"b", VertexKind::Semifrozen}};
  Seed s(vs, ExtendedExchangeMatrix({"a", "b"}, {}, {{}, {}}));
  CHECK(validate_seed(s).empty());
  CHECK(s.mutable_vertices().empty());
  CHECK(is_maximal_rank(s.matrix()));
}
