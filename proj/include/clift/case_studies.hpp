// Applied pipelines: Cox rings of smooth toric varieties from fan data, the
// diagonal partial compactification of a finite cluster variety, the chart
// pullback formula, and a registry of worked fixtures.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "clift/lifting.hpp"
#include "clift/membership.hpp"
#include "clift/parse.hpp"

namespace clift {

struct FanInput {
  int rank = 0;
  std::vector<std::vector<long long>> rays;
  std::vector<int> base_cone;  // 1-based ray indices forming a smooth cone
};

struct ToricResult {
  LiftedSeed lifted;
  size_t variable_count = 0;  // total rays: the Cox ring is a polynomial
                              // ring in this many variables
  std::map<VertexId, DegreeVector> degrees;
  std::string note;
};

inline ToricResult toric_lift(const FanInput& fan) {
  size_t n = static_cast<size_t>(fan.rank);
  size_t m = fan.rays.size();
  for (const auto& r : fan.rays)
    if (r.size() != n) throw InvalidConfiguration("ray dimension differs from rank");
  // Pairwise non-proportional: no two rays are positive multiples.
  for (size_t a = 0; a < m; ++a)
    for (size_t b = a + 1; b < m; ++b) {
      bool cross_zero = true;
      long long dot = 0;
      for (size_t i = 0; i < n && cross_zero; ++i) {
        dot += fan.rays[a][i] * fan.rays[b][i];
        for (size_t j = i + 1; j < n; ++j)
          if (fan.rays[a][i] * fan.rays[b][j] != fan.rays[a][j] * fan.rays[b][i])
            cross_zero = false;
      }
      if (cross_zero && dot > 0)
        throw ProportionalRays("rays " + std::to_string(a + 1) + " and " +
                               std::to_string(b + 1) + " span the same cone");
    }
  if (fan.base_cone.size() != n)
    throw NotSmoothCone("base cone must have exactly rank-many rays");
  std::set<int> base_set;
  for (int k : fan.base_cone) {
    if (k < 1 || static_cast<size_t>(k) > m)
      throw InvalidConfiguration("base cone ray index out of range");
    if (!base_set.insert(k).second) throw InvalidConfiguration("repeated base cone index");
  }

  // M: rows are the base rays; smoothness means det = +-1, so the dual
  // basis is the integer inverse-transpose (columns of M^{-1}).
  std::vector<std::vector<Int>> M(n, std::vector<Int>(n));
  for (size_t k = 0; k < n; ++k)
    for (size_t i = 0; i < n; ++i) M[k][i] = fan.rays[fan.base_cone[k] - 1][i];
  // Determinant by cofactor expansion (n is small).
  std::function<Int(const std::vector<std::vector<Int>>&)> det =
      [&](const std::vector<std::vector<Int>>& a) -> Int {
    size_t s = a.size();
    if (s == 0) return 1;
    if (s == 1) return a[0][0];
    Int r = 0;
    for (size_t j = 0; j < s; ++j) {
      if (a[0][j] == 0) continue;
      std::vector<std::vector<Int>> minor(s - 1, std::vector<Int>(s - 1));
      for (size_t i = 1; i < s; ++i) {
        size_t cj = 0;
        for (size_t c = 0; c < s; ++c) {
          if (c == j) continue;
          minor[i - 1][cj++] = a[i][c];
        }
      }
      Int term = a[0][j] * det(minor);
      r += (j % 2 == 0) ? term : -term;
    }
    return r;
  };
  Int dM = det(M);
  if (dM != 1 && dM != -1)
    throw NotSmoothCone("base cone determinant is " + dM.str() + ", not a unit");
  // Integer inverse via adjugate: inv[i][j] = cofactor(j,i) / det.
  std::vector<std::vector<Int>> inv(n, std::vector<Int>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      std::vector<std::vector<Int>> minor(n - 1, std::vector<Int>(n - 1));
      size_t ri = 0;
      for (size_t r = 0; r < n; ++r) {
        if (r == j) continue;
        size_t ci = 0;
        for (size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor[ri][ci++] = M[r][c];
        }
        ++ri;
      }
      Int cof = det(minor);
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * dM;  // dM = +-1 so division is multiplication
    }
  // Dual basis vector w_k = k-th column of M^{-1}.

  // Trivial base seed: one highly frozen variable per base ray.
  std::map<VertexId, VertexKind> vertices;
  std::vector<VertexId> row_ids;
  for (size_t k = 0; k < n; ++k) {
    VertexId id = "x" + std::to_string(fan.base_cone[k]);
    vertices[id] = VertexKind::HighlyFrozen;
    row_ids.push_back(id);
  }
  Seed base(vertices, ExtendedExchangeMatrix(row_ids, {}, std::vector<std::vector<long long>>(
                                                              n, std::vector<long long>{})));

  LiftingData data;
  data.cols = row_ids;
  data.frozen_kind = VertexKind::HighlyFrozen;
  for (size_t d = 1; d <= m; ++d) {
    if (base_set.count(static_cast<int>(d))) continue;
    data.D.push_back(std::to_string(d));
    std::vector<long long> row;
    for (size_t k = 0; k < n; ++k) {
      Int pairing = 0;  // <v_k^*, v_d> = v_d . w_k
      for (size_t i = 0; i < n; ++i) pairing += Int(fan.rays[d - 1][i]) * inv[i][k];
      row.push_back(-static_cast<long long>(pairing));
    }
    data.nu.push_back(std::move(row));
  }

  ToricResult r;
  r.lifted = lift_seed(base, data);
  r.variable_count = m;
  r.degrees = r.lifted.grading.degrees;
  r.note =
      "no mutable vertex: the lifted algebra is the polynomial ring in " +
      std::to_string(m) + " variables";
  return r;
}

// Lift with nu = (Id, 0): D is the primed copy of the mutable vertices, the
// lifted matrix is (B; -principal part), and the new vertices are highly
// frozen.
inline LiftedSeed diagonal_compactification_lift(const Seed& t) {
  for (const auto& [v, k] : t.vertices())
    if (k == VertexKind::Semifrozen)
      throw SemifrozenPresent("semifrozen vertex not allowed: " + v);
  validate_seed(t);
  // Maximal rank is a hypothesis of the ring-theoretic conclusion, not of
  // the combinatorial construction; it is recorded in the lift report.
  LiftingData data;
  for (const auto& [v, k] : t.vertices()) data.cols.push_back(v);
  data.frozen_kind = VertexKind::HighlyFrozen;
  for (const auto& i : t.matrix().cols()) {
    data.D.push_back(i + "'");
    std::vector<long long> row;
    for (const auto& j : data.cols) row.push_back(j == i ? 1 : 0);
    data.nu.push_back(std::move(row));
  }
  return lift_seed(t, data);
}

// Pullback of a graded element from the base chart to the chart of
// mu_k(t): re-express f through the glueing map (x_k becomes the exchange
// binomial over the new variable) and twist by x(k)_k^{n_{k'}}.
inline std::pair<DegreeVector, RationalFunction> chart_pullback(
    const LiftedSeed& L, const VertexId& k,
    const std::pair<DegreeVector, RationalFunction>& g) {
  const Seed& t = L.base;
  if (!t.is_mutable(k)) throw NotMutable("vertex is not mutable: " + k);
  RationalFunction plus(1), minus(1);
  for (const auto& i : t.matrix().rows()) {
    long long b = t.matrix().entry(i, k);
    if (b > 0) plus *= RationalFunction::variable(i).pow(static_cast<int>(b));
    if (b < 0) minus *= RationalFunction::variable(i).pow(static_cast<int>(-b));
  }
  std::map<VariableId, RationalFunction> glue;
  glue[k] = (plus + minus) / RationalFunction::variable(k);
  RationalFunction f = g.second.substitute(glue);
  long long nk = g.first.coord(k + "'");
  f *= RationalFunction::variable(k).pow(static_cast<int>(nk));
  return {g.first, f};
}

struct Fixture {
  std::string name;
  Seed seed;
  std::optional<LiftingData> lifting;
  std::optional<FanInput> fan;
  std::map<std::string, std::string> expected;
};

namespace detail {

inline Seed a2_seed() {
  std::map<VertexId, VertexKind> vs{{"x1", VertexKind::Unfrozen}, {"x2", VertexKind::Unfrozen}};
  ExtendedExchangeMatrix B({"x1", "x2"}, {"x1", "x2"}, {{0, 1}, {-1, 0}});
  return Seed(vs, B);
}

inline Fixture fixture_label_example() {
  Fixture f;
  f.name = "label-example";
  std::map<VertexId, VertexKind> vs{{"1", VertexKind::Unfrozen},
                                    {"2", VertexKind::Unfrozen},
                                    {"3", VertexKind::Semifrozen},
                                    {"4", VertexKind::HighlyFrozen}};
  ExtendedExchangeMatrix B({"1", "2", "3", "4"}, {"1", "2"},
                           {{0, 3}, {-1, 0}, {0, -2}, {0, 1}});
  // Vertex ids are the numerals from the picture; the variables get
  // non-numeric names so they survive expression round trips.
  std::map<VertexId, RationalFunction> cluster;
  for (int i = 1; i <= 4; ++i)
    cluster[std::to_string(i)] = RationalFunction::variable("x" + std::to_string(i));
  f.seed = Seed(vs, B, cluster);
  f.expected["symmetrizer"] = "1:1,2:3";
  return f;
}

inline Fixture fixture_fano_a2() {
  Fixture f;
  f.name = "fano-a2";
  f.seed = a2_seed();
  LiftingData d;
  d.D = {"E1", "E2", "E3", "E4", "E5"};
  d.cols = {"x1", "x2"};
  d.nu = {{0, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 0}};
  d.frozen_kind = VertexKind::HighlyFrozen;
  f.lifting = d;
  f.expected["mutable_variable_count"] = "5";
  f.expected["relations"] = "x_i*x_{i+2} = x_{i+1} + 1 (indices mod 5)";
  f.expected["degrees"] = "e_{i+1} + e_{i+2} - e_{i+4} (indices mod 5)";
  return f;
}

inline Fixture fixture_projective_trivial(int n) {
  Fixture f;
  f.name = "projective-trivial-" + std::to_string(n);
  std::map<VertexId, VertexKind> vs;
  std::vector<VertexId> rows;
  for (int i = 1; i <= n; ++i) {
    VertexId id = "z" + std::to_string(i);
    vs[id] = VertexKind::HighlyFrozen;
    rows.push_back(id);
  }
  f.seed = Seed(vs, ExtendedExchangeMatrix(
                        rows, {}, std::vector<std::vector<long long>>(n)));
  LiftingData d;
  d.D = {"z0"};
  d.cols = rows;
  d.nu = {std::vector<long long>(n, 1)};
  d.frozen_kind = VertexKind::HighlyFrozen;
  f.lifting = d;
  f.expected["lifted_variable_count"] = std::to_string(n + 1);
  return f;
}

inline Fixture fixture_projective_chain(int n) {
  Fixture f;
  f.name = "projective-chain-" + std::to_string(n);
  std::map<VertexId, VertexKind> vs;
  std::vector<VertexId> rows, cols;
  for (int i = 1; i <= n; ++i) {
    VertexId id = "x" + std::to_string(i);
    vs[id] = (i < n) ? VertexKind::Unfrozen : VertexKind::HighlyFrozen;
    rows.push_back(id);
    if (i < n) cols.push_back(id);
  }
  // Arrows (k+1) -> k: b_{k+1,k} = 1, b_{k-1,k} = -1.
  std::vector<std::vector<long long>> entries(n, std::vector<long long>(n - 1, 0));
  for (int k = 1; k < n; ++k) {
    entries[k][k - 1] = 1;  // row k+1 (0-based k), column k
    if (k >= 2) entries[k - 2][k - 1] = -1;
  }
  // Cluster variables x_k as polynomials in the universe z1..zn:
  // x_0 = 1, x_1 = z_1, x_{k+1} = z_{k+1} x_k - x_{k-1}.
  std::map<VertexId, RationalFunction> cluster;
  RationalFunction prev(1), cur = RationalFunction::variable("z1");
  cluster["x1"] = cur;
  for (int k = 2; k <= n; ++k) {
    RationalFunction next = RationalFunction::variable("z" + std::to_string(k)) * cur - prev;
    cluster["x" + std::to_string(k)] = next;
    prev = cur;
    cur = next;
  }
  // Inverse: z_1 = x_1, z_k = (x_k + x_{k-2})/x_{k-1} with x_0 = 1.
  std::map<VariableId, RationalFunction> root_inverse;
  root_inverse["z1"] = RationalFunction::variable("x1");
  for (int k = 2; k <= n; ++k) {
    RationalFunction xk = RationalFunction::variable("x" + std::to_string(k));
    RationalFunction xk1 = RationalFunction::variable("x" + std::to_string(k - 1));
    RationalFunction xk2 =
        (k == 2) ? RationalFunction(1) : RationalFunction::variable("x" + std::to_string(k - 2));
    root_inverse["z" + std::to_string(k)] = (xk + xk2) / xk1;
  }
  f.seed = Seed(vs, ExtendedExchangeMatrix(rows, cols, entries), cluster, {}, root_inverse);
  LiftingData d;
  d.D = {"Z0"};
  d.cols = rows;
  std::vector<long long> nu;
  for (int i = 1; i <= n; ++i) nu.push_back(i);
  d.nu = {nu};
  d.frozen_kind = VertexKind::HighlyFrozen;
  f.lifting = d;
  f.expected["nu"] = "(1, 2, ..., n)";
  f.expected["exchange_partner_k"] = "(k+1)-th homogeneous coordinate";
  return f;
}

inline Fixture fixture_diag_a1() {
  Fixture f;
  f.name = "diag-a1";
  std::map<VertexId, VertexKind> vs{{"x1", VertexKind::Unfrozen},
                                    {"x2", VertexKind::HighlyFrozen}};
  ExtendedExchangeMatrix B({"x1", "x2"}, {"x1"}, {{0}, {-1}});
  f.seed = Seed(vs, B);
  f.expected["degrees"] = "e_{x1'}, e_{x1'}, 0";
  f.expected["relation"] = "lift(x1) * mutated(x1) = 1 + lift(x2)";
  return f;
}

inline Fixture fixture_diag_a3() {
  Fixture f;
  f.name = "diag-a3";
  std::map<VertexId, VertexKind> vs{{"x1", VertexKind::Unfrozen},
                                    {"x2", VertexKind::Unfrozen},
                                    {"x3", VertexKind::Unfrozen}};
  ExtendedExchangeMatrix B({"x1", "x2", "x3"}, {"x1", "x2", "x3"},
                           {{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}});
  f.seed = Seed(vs, B);
  f.expected["degrees"] = "deg lift(xi) = deg X_{xi'} = e_{xi'}";
  return f;
}

inline Fixture fixture_toric_p1() {
  Fixture f;
  f.name = "toric-p1";
  f.fan = FanInput{1, {{1}, {-1}}, {1}};
  f.seed = toric_lift(*f.fan).lifted.base;
  f.expected["nu"] = "(1)";
  f.expected["variable_count"] = "2";
  return f;
}

inline Fixture fixture_toric_p2() {
  Fixture f;
  f.name = "toric-p2";
  f.fan = FanInput{2, {{1, 0}, {0, 1}, {-1, -1}}, {1, 2}};
  f.seed = toric_lift(*f.fan).lifted.base;
  f.expected["nu"] = "((1, 1))";
  f.expected["variable_count"] = "3";
  return f;
}

}  // namespace detail

inline Fixture load_fixture(const std::string& name) {
  if (name == "label-example") return detail::fixture_label_example();
  if (name == "fano-a2") return detail::fixture_fano_a2();
  if (name == "diag-a1") return detail::fixture_diag_a1();
  if (name == "diag-a3") return detail::fixture_diag_a3();
  if (name == "toric-p1") return detail::fixture_toric_p1();
  if (name == "toric-p2") return detail::fixture_toric_p2();
  auto parametric = [&](const std::string& prefix) -> std::optional<int> {
    if (name.rfind(prefix, 0) != 0) return std::nullopt;
    std::string tail = name.substr(prefix.size());
    if (tail.empty() || tail.find_first_not_of("0123456789") != std::string::npos)
      return std::nullopt;
    int n = std::stoi(tail);
    return n >= 1 ? std::optional<int>(n) : std::nullopt;
  };
  if (auto n = parametric("projective-trivial-")) return detail::fixture_projective_trivial(*n);
  if (auto n = parametric("projective-chain-")) {
    if (*n >= 2) return detail::fixture_projective_chain(*n);
  }
  throw UnknownFixture("no fixture named " + name);
}

inline std::vector<std::string> fixture_names() {
  return {"label-example",        "fano-a2",  "projective-trivial-N", "projective-chain-N",
          "diag-a1",              "diag-a3",  "toric-p1",             "toric-p2"};
}

}  // namespace clift
