// Minimal monomial lifting: from a base seed t and lifting data (D, nu),
// build the lifted seed on the vertex set I + D with matrix (B; -nu B),
// lifted cluster variables X^{nu_col} * x_j, fresh frozen variables X_d, and
// the canonical Z^D-grading. Also: the restriction X_d = 1, monomial-wise
// homogenization, cluster valuations at frozen vertices, and the symbolic
// equality certificates.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "clift/grading.hpp"
#include "clift/seed.hpp"

namespace clift {

struct LiftingData {
  std::vector<VertexId> D;                        // fresh vertex ids
  std::vector<VertexId> cols;                     // all vertices of the base
  std::vector<std::vector<long long>> nu;         // |D| x |I|
  VertexKind frozen_kind = VertexKind::HighlyFrozen;

  long long nu_entry(const VertexId& d, const VertexId& i) const {
    return nu[index_of(D, d, "nu row")][index_of(cols, i, "nu column")];
  }

  void check_dimensions() const {
    if (nu.size() != D.size()) throw MalformedNu("nu row count differs from |D|");
    for (const auto& r : nu)
      if (r.size() != cols.size()) throw MalformedNu("nu column count differs from |I|");
    if (frozen_kind == VertexKind::Unfrozen)
      throw InvalidConfiguration("lifting vertices must be frozen");
  }

 private:
  static size_t index_of(const std::vector<VertexId>& v, const VertexId& x,
                         const char* what) {
    auto it = std::find(v.begin(), v.end(), x);
    if (it == v.end()) throw MalformedNu(std::string("unknown ") + what + ": " + x);
    return static_cast<size_t>(it - v.begin());
  }
};

// Hypothesis report of the lifting: maximal rank of B, pairwise coprimality
// of the unfrozen variables, and coprimality of each x_k with its one-step
// exchange partner. Failures are warnings, never errors.
struct LiftReport {
  bool maximal_rank = false;
  std::vector<std::pair<VertexId, VertexId>> noncoprime_pairs;
  std::vector<VertexId> noncoprime_exchanges;
  bool hypotheses_hold() const {
    return maximal_rank && noncoprime_pairs.empty() && noncoprime_exchanges.empty();
  }
};

struct LiftedSeed {
  Seed seed;   // the lifted seed, a root seed over the extended universe
  Seed base;   // the seed that was lifted
  LiftingData data;
  DegreeConfiguration grading;  // the canonical Z^D grading
  LiftReport report;
};

namespace detail {

// Is p a unit of the Laurent ring, i.e. +-1 times a monomial?
inline bool is_unit(const LaurentPolynomial& p) {
  return p.is_monomial() && boost::multiprecision::abs(p.leading_term().second) == 1;
}

inline bool coprime(const RationalFunction& a, const RationalFunction& b) {
  // Denominators of cluster variables are monomials (units); coprimality is
  // decided on numerators.
  return is_unit(poly_gcd(a.numerator(), b.numerator()));
}

}  // namespace detail

inline LiftedSeed lift_seed(const Seed& t, const LiftingData& data) {
  data.check_dimensions();
  if (!t.provenance().empty())
    throw InvalidConfiguration("lifting expects a root seed (empty provenance)");
  for (const auto& d : data.D)
    if (t.vertices().count(d)) throw VertexCollision("lifting vertex already in seed: " + d);
  {
    std::set<VertexId> seen;
    for (const auto& d : data.D)
      if (!seen.insert(d).second) throw VertexCollision("duplicate lifting vertex: " + d);
  }
  std::set<VertexId> base_vs;
  for (const auto& [v, k] : t.vertices()) base_vs.insert(v);
  if (std::set<VertexId>(data.cols.begin(), data.cols.end()) != base_vs)
    throw MalformedNu("nu columns differ from the base vertex set");
  validate_seed(t);

  // Matrix (B ; -nu B).
  std::vector<VertexId> rows = t.matrix().rows();
  for (const auto& d : data.D) rows.push_back(d);
  const auto& cols = t.matrix().cols();
  std::vector<std::vector<long long>> entries;
  for (const auto& i : t.matrix().rows()) {
    std::vector<long long> r;
    for (const auto& k : cols) r.push_back(t.matrix().entry(i, k));
    entries.push_back(std::move(r));
  }
  for (const auto& d : data.D) {
    std::vector<long long> r;
    for (const auto& k : cols) {
      long long s = 0;
      for (const auto& i : t.matrix().rows()) s += data.nu_entry(d, i) * t.matrix().entry(i, k);
      r.push_back(-s);
    }
    entries.push_back(std::move(r));
  }

  std::map<VertexId, VertexKind> vertices = t.vertices();
  for (const auto& d : data.D) vertices[d] = data.frozen_kind;

  // Lifted cluster: X^{nu_col j} * x_j for base vertices, X_d for d in D,
  // all over the extended universe (base universe generators plus the X_d,
  // which reuse the vertex id d as variable name).
  std::map<VertexId, RationalFunction> cluster;
  for (const auto& [j, kind] : t.vertices()) {
    RationalFunction m(1);
    for (const auto& d : data.D)
      m *= RationalFunction::variable(d).pow(static_cast<int>(data.nu_entry(d, j)));
    cluster[j] = m * t.variable(j);
  }
  for (const auto& d : data.D) cluster[d] = RationalFunction::variable(d);

  // Universe generators expressed in the lifted seed's own formal variables:
  // x_j = sym_j * X^{-nu_col j}, X_d = sym_d.
  std::map<VariableId, RationalFunction> base_sym;
  for (const auto& [j, kind] : t.vertices()) {
    RationalFunction m = RationalFunction::variable(j);
    for (const auto& d : data.D)
      m *= RationalFunction::variable(d).pow(static_cast<int>(-data.nu_entry(d, j)));
    base_sym[j] = m;
  }
  std::map<VariableId, RationalFunction> root_inverse;
  if (t.root_inverse().empty()) {
    root_inverse = base_sym;
  } else {
    for (const auto& [u, expr] : t.root_inverse()) root_inverse[u] = expr.substitute(base_sym);
  }
  for (const auto& d : data.D) root_inverse[d] = RationalFunction::variable(d);

  LiftedSeed L;
  L.seed = Seed(std::move(vertices), ExtendedExchangeMatrix(rows, cols, std::move(entries)),
                std::move(cluster), {}, std::move(root_inverse));
  L.base = t;
  L.data = data;

  for (const auto& [j, kind] : t.vertices()) {
    DegreeVector deg;
    for (const auto& d : data.D) deg.add(d, data.nu_entry(d, j));
    L.grading.degrees[j] = deg;
  }
  for (const auto& d : data.D) L.grading.degrees[d] = DegreeVector::basis(d);

  L.report.maximal_rank = is_maximal_rank(t.matrix());
  std::vector<VertexId> uf = t.mutable_vertices();
  for (size_t a = 0; a < uf.size(); ++a)
    for (size_t b = a + 1; b < uf.size(); ++b)
      if (!detail::coprime(t.variable(uf[a]), t.variable(uf[b])))
        L.report.noncoprime_pairs.emplace_back(uf[a], uf[b]);
  for (const auto& k : uf) {
    Seed m = t.mutate(k);
    if (!detail::coprime(t.variable(k), m.variable(k)))
      L.report.noncoprime_exchanges.push_back(k);
  }
  return L;
}

// The specialization X_d = 1 for all d in D.
inline RationalFunction restrict_iota(const RationalFunction& f,
                                      const std::vector<VertexId>& D) {
  std::map<VariableId, RationalFunction> image;
  for (const auto& d : D) image[d] = RationalFunction(1);
  return f.substitute(image);
}

inline RationalFunction restrict_iota(const RationalFunction& f, const LiftedSeed& L) {
  return restrict_iota(f, L.data.D);
}

// Monomial-wise homogenization: each monomial m of f (a polynomial in the
// base seed's cluster variables, as formal symbols) gets X-weight nu*m;
// n_d is the maximum weight and ftilde = sum_m c_m sym^m X^{n - nu m}, a
// polynomial in the lifted variables with X-exponents >= 0 and minimum 0.
struct Homogenization {
  DegreeVector n;
  LaurentPolynomial ftilde;  // in the lifted seed's formal variables
};

inline Homogenization homogenize(const LaurentPolynomial& f, const LiftedSeed& L) {
  if (f.is_zero()) throw ZeroPolynomial("homogenize of zero polynomial");
  if (f.has_negative_exponent())
    throw InvalidConfiguration("homogenize expects a polynomial, not a Laurent expression");
  // nu-weight of each monomial.
  std::map<VertexId, long long> nmax;
  bool first = true;
  std::vector<std::pair<Monomial, std::map<VertexId, long long>>> weights;
  for (const auto& [m, c] : f.terms()) {
    std::map<VertexId, long long> w;
    for (const auto& d : L.data.D) {
      long long s = 0;
      for (const auto& [v, e] : m) s += L.data.nu_entry(d, v) * e;
      w[d] = s;
    }
    for (const auto& d : L.data.D) {
      if (first || w[d] > nmax[d]) nmax[d] = w[d];
    }
    first = false;
    weights.emplace_back(m, std::move(w));
  }
  Homogenization h;
  for (const auto& [d, v] : nmax) h.n.add(d, v);
  size_t idx = 0;
  for (const auto& [m, c] : f.terms()) {
    Monomial mm = m;
    for (const auto& d : L.data.D) {
      long long e = nmax[d] - weights[idx].second[d];
      if (e != 0) mm[d] = static_cast<int>(e);
    }
    h.ftilde.add_term(mm, c);
    ++idx;
  }
  return h;
}

// The cluster valuation at the frozen vertex d: express f in the seed's own
// variables as a reduced fraction P/Q and read min-exponent(P) -
// min-exponent(Q) in d. No value means f = 0 (valuation infinity).
inline std::optional<long long> cluster_valuation(const RationalFunction& f, const Seed& s,
                                                  const VertexId& d) {
  if (!s.is_frozen(d)) throw NotFrozen("vertex is not frozen: " + d);
  if (f.is_zero()) return std::nullopt;
  RationalFunction g = express_in_seed(f, s);
  return static_cast<long long>(g.numerator().min_exponent(d)) -
         static_cast<long long>(g.denominator().min_exponent(d));
}

struct ValuationEntry {
  size_t element;  // index into the input list
  VertexId d;
  std::optional<long long> valuation;  // no value = infinity
  bool nonnegative = false;
};

struct EqualityConditionsReport {
  std::vector<ValuationEntry> entries;
  bool verdict = true;
};

inline EqualityConditionsReport check_equality_conditions(
    const std::vector<RationalFunction>& fs, const LiftedSeed& L) {
  EqualityConditionsReport r;
  for (size_t i = 0; i < fs.size(); ++i) {
    for (const auto& d : L.data.D) {
      ValuationEntry e;
      e.element = i;
      e.d = d;
      e.valuation = cluster_valuation(fs[i], L.seed, d);
      e.nonnegative = !e.valuation || *e.valuation >= 0;
      r.verdict = r.verdict && e.nonnegative;
      r.entries.push_back(std::move(e));
    }
  }
  return r;
}

struct ConsistencyEntry {
  VertexId vertex;
  bool restricts = false;    // iota of lifted variable equals base variable
  bool homogeneous = false;  // under the root grading of the lifted seed
  std::optional<DegreeVector> degree;
};

struct ConsistencyReport {
  std::vector<ConsistencyEntry> variables;
  std::vector<ConsistencyEntry> exchange_partners;
  bool ok = true;
};

// Mutate lifted and base seed in parallel along seq; check that every lifted
// variable restricts to the base one and is homogeneous (together with each
// one-step exchange partner) under the canonical grading.
inline ConsistencyReport verify_lifting_consistency(const LiftedSeed& L,
                                                    const MutationSequence& seq) {
  Seed lifted = L.seed.apply(seq);
  Seed base = L.base.apply(seq);
  ConsistencyReport r;
  for (const auto& [v, kind] : base.vertices()) {
    ConsistencyEntry e;
    e.vertex = v;
    e.restricts = restrict_iota(lifted.variable(v), L.data.D) == base.variable(v);
    e.degree = degree_of(lifted.variable(v), L.seed, L.grading);
    e.homogeneous = e.degree.has_value();
    r.ok = r.ok && e.restricts && e.homogeneous;
    r.variables.push_back(std::move(e));
  }
  for (const auto& k : lifted.mutable_vertices()) {
    ConsistencyEntry e;
    e.vertex = k;
    Seed m = lifted.mutate(k);
    e.restricts = restrict_iota(m.variable(k), L.data.D) == base.mutate(k).variable(k);
    e.degree = degree_of(m.variable(k), L.seed, L.grading);
    e.homogeneous = e.degree.has_value();
    r.ok = r.ok && e.restricts && e.homogeneous;
    r.exchange_partners.push_back(std::move(e));
  }
  return r;
}

}  // namespace clift
