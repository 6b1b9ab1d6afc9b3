// Multivariate polynomial gcd over the integers.
//
// Recursive primitive-part/content reduction with a subresultant PRS on the
// main variable; the main variable is chosen as the one of least maximal
// degree among the variables present. The result is normalized so that its
// lexicographically greatest monomial has a positive coefficient and divides
// both inputs exactly. Laurent inputs are handled by callers factoring out
// the common monomial first (see RationalFunction).
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <vector>

#include "clift/laurent.hpp"

namespace clift {

namespace detail {

// Packed-key long division for already-shifted polynomial operands (all
// exponents >= 0, both with per-variable minimum zero). Returns false when
// the operands do not fit the packed encoding; otherwise true, with `out`
// holding the quotient or nothing when the division is not exact or the
// cap is hit.
inline bool packed_divide(const LaurentPolynomial& a, const LaurentPolynomial& b,
                          size_t step_cap, std::optional<LaurentPolynomial>& out) {
  std::vector<VariableId> vars;
  if (!packed_vars(a, b, vars) || !packed_range_ok(a, b, vars, 0)) return false;
  const size_t nlanes = vars.size();

  // Divisor terms with the leading one first.
  std::vector<std::pair<PackedKey, Int>> bv;
  bv.reserve(b.term_count());
  for (const auto& [m, c] : b.terms()) bv.emplace_back(pack_monomial(m, vars, 0), c);
  std::sort(bv.begin(), bv.end(),
            [](const auto& x, const auto& y) { return x.first > y.first; });
  const PackedKey lk = bv.front().first;
  const Int& lc = bv.front().second;

  std::map<PackedKey, Int> r;
  for (const auto& [m, c] : a.terms()) r.emplace(pack_monomial(m, vars, 0), c);

  auto lane = [nlanes](PackedKey k, size_t i) {
    return static_cast<int>((k >> (16 * (nlanes - 1 - i))) & 0xFFFF);
  };

  std::vector<std::pair<PackedKey, Int>> q;
  size_t steps = 0;
  out.reset();
  while (!r.empty()) {
    if (step_cap && ++steps > step_cap) return true;
    auto lead = std::prev(r.end());
    const PackedKey rk = lead->first;
    const Int rc = lead->second;
    if (rc % lc != 0) return true;
    // Lane-wise borrow check: a negative quotient exponent proves the
    // division inexact (the exact quotient of min-zero polynomials is a
    // polynomial).
    for (size_t i = 0; i < nlanes; ++i)
      if (lane(rk, i) < lane(lk, i)) return true;
    const PackedKey qk = rk - lk;
    Int qc = rc / lc;
    q.emplace_back(qk, qc);
    for (const auto& [bk, bc] : bv) {
      PackedKey key = qk + bk;
      auto it = r.find(key);
      if (it == r.end()) {
        r.emplace(key, -qc * bc);
      } else {
        it->second -= qc * bc;
        if (it->second == 0) r.erase(it);
      }
    }
    if (!r.empty() && std::prev(r.end())->first >= rk) return true;
  }
  LaurentPolynomial result;
  for (auto it = q.rbegin(); it != q.rend(); ++it)
    result.add_term(unpack_monomial(it->first, vars, 0), it->second);
  out = std::move(result);
  return true;
}

}  // namespace detail

// Exact multivariate division (nonnegative exponents not required; the
// term order is translation-invariant so leading-term cancellation is
// sound for Laurent operands too). Returns nothing when not exact.
inline std::optional<LaurentPolynomial> divide_exact(const LaurentPolynomial& a,
                                                     const LaurentPolynomial& b,
                                                     size_t step_cap = 0) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return LaurentPolynomial();
  // Shift both operands to plain polynomials (per-variable minimum exponent
  // zero); then an exact quotient is itself a polynomial, so a quotient term
  // with a negative exponent proves the division inexact.
  Monomial sa = a.common_monomial();
  Monomial sb = b.common_monomial();
  LaurentPolynomial r = a.shift(monomial_inverse(sa));
  LaurentPolynomial bb = b.shift(monomial_inverse(sb));
  std::optional<LaurentPolynomial> packed;
  if (detail::packed_divide(r, bb, step_cap, packed)) {
    if (!packed) return std::nullopt;
    return packed->shift(monomial_mul(sa, monomial_inverse(sb)));
  }
  LaurentPolynomial q;
  const auto [lm, lc] = bb.leading_term();
  size_t steps = 0;
  while (!r.is_zero()) {
    if (step_cap && ++steps > step_cap) return std::nullopt;
    // Copy: the subtraction below rewrites r's term map.
    const auto [rm, rc] = r.leading_term();
    if (rc % lc != 0) return std::nullopt;
    Monomial qm = monomial_mul(rm, monomial_inverse(lm));
    for (const auto& [v, e] : qm)
      if (e < 0) return std::nullopt;
    Int qc = rc / lc;
    LaurentPolynomial t = LaurentPolynomial::term(qm, qc);
    q += t;
    r -= t * bb;
    // The leading monomial strictly decreases; bail out if it does not
    // (the division is not exact).
    if (!r.is_zero() && monomial_cmp(r.leading_term().first, rm) >= 0)
      return std::nullopt;
  }
  // Undo the shifts: a/b = (a0 * X^sa) / (b0 * X^sb).
  return q.shift(monomial_mul(sa, monomial_inverse(sb)));
}

inline LaurentPolynomial normalize_leading_sign(LaurentPolynomial p) {
  if (!p.is_zero() && p.leading_term().second < 0) return -p;
  return p;
}

namespace detail {

// View of p as a univariate polynomial in v with polynomial coefficients.
inline std::map<int, LaurentPolynomial> coefficients_in(const LaurentPolynomial& p,
                                                        const VariableId& v) {
  std::map<int, LaurentPolynomial> cs;
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    int e = 0;
    auto it = rest.find(v);
    if (it != rest.end()) {
      e = it->second;
      rest.erase(it);
    }
    cs[e].add_term(rest, c);
  }
  return cs;
}

inline int degree_in(const LaurentPolynomial& p, const VariableId& v) {
  return p.is_zero() ? -1 : p.max_exponent(v);
}

inline LaurentPolynomial leading_coefficient_in(const LaurentPolynomial& p,
                                                const VariableId& v) {
  auto cs = coefficients_in(p, v);
  return cs.empty() ? LaurentPolynomial() : cs.rbegin()->second;
}

// lc(g)^(deg f - deg g + 1) * f  mod  g, computed term by term in v.
inline LaurentPolynomial pseudo_remainder(LaurentPolynomial f,
                                          const LaurentPolynomial& g,
                                          const VariableId& v) {
  int dg = degree_in(g, v);
  LaurentPolynomial lcg = leading_coefficient_in(g, v);
  int df = degree_in(f, v);
  int steps = df - dg + 1;
  for (int i = 0; i < steps; ++i) {
    df = degree_in(f, v);
    if (df < dg) {
      f = f * lcg;
      continue;
    }
    LaurentPolynomial lcf = leading_coefficient_in(f, v);
    f = f * lcg - g * lcf * LaurentPolynomial::variable(v, df - dg);
  }
  return f;
}

}  // namespace detail

LaurentPolynomial poly_gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

namespace detail {

// gcd of all polynomial coefficients of p viewed in v.
inline LaurentPolynomial content_in(const LaurentPolynomial& p, const VariableId& v) {
  LaurentPolynomial g;
  for (const auto& [e, c] : coefficients_in(p, v)) {
    g = poly_gcd(g, c);
    if (g.is_one()) break;
  }
  return g;
}

inline Int poly_height(const LaurentPolynomial& p) {
  Int h = 0;
  for (const auto& [m, c] : p.terms()) {
    Int a = boost::multiprecision::abs(c);
    if (a > h) h = a;
  }
  return h;
}

inline LaurentPolynomial eval_variable(const LaurentPolynomial& p, const VariableId& v,
                                       const Int& xi) {
  LaurentPolynomial r;
  for (const auto& [m, c] : p.terms()) {
    auto it = m.find(v);
    if (it == m.end()) {
      r.add_term(m, c);
    } else {
      Monomial rest = m;
      rest.erase(v);
      r.add_term(rest, c * boost::multiprecision::pow(xi, static_cast<unsigned>(it->second)));
    }
  }
  return r;
}

// Heuristic gcd with verification: evaluate one variable at a large
// integer, recurse on the image, reconstruct a candidate from balanced
// xi-adic digits, and accept only when it divides both inputs exactly.
// Inputs must be nonzero polynomials with nonnegative exponents. No value
// means the heuristic gave up, not that the gcd is trivial.
inline std::optional<LaurentPolynomial> gcd_heuristic(const LaurentPolynomial& a,
                                                      const LaurentPolynomial& b,
                                                      int depth = 0) {
  std::set<VariableId> vars = a.variables();
  for (const auto& v : b.variables()) vars.insert(v);
  if (vars.empty())
    return LaurentPolynomial(boost::multiprecision::gcd(a.content(), b.content()));
  if (depth > 8) return std::nullopt;
  // The variable of least maximal degree keeps evaluations small.
  VariableId v;
  int vdeg = 0;
  bool first = true;
  for (const auto& u : vars) {
    int d = std::max(a.max_exponent(u), b.max_exponent(u));
    if (first || d < vdeg) {
      v = u;
      vdeg = d;
      first = false;
    }
  }
  Int ha = poly_height(a), hb = poly_height(b);
  Int xi = 2 * (ha < hb ? ha : hb) + 29;
  int coprime_confirmations = 0;
  for (int trial = 0; trial < 6; ++trial) {
    // Refuse astronomically large evaluations.
    if ((boost::multiprecision::msb(xi) + 1) * static_cast<size_t>(vdeg + 1) > (1u << 22))
      return std::nullopt;
    LaurentPolynomial A = eval_variable(a, v, xi);
    LaurentPolynomial B = eval_variable(b, v, xi);
    if (!A.is_zero() && !B.is_zero()) {
      auto gamma = gcd_heuristic(A, B, depth + 1);
      if (gamma && !gamma->is_zero()) {
        // Balanced xi-adic reconstruction of the candidate in v.
        LaurentPolynomial g;
        LaurentPolynomial rem = *gamma;
        for (int i = 0; !rem.is_zero() && i <= vdeg + 1; ++i) {
          LaurentPolynomial digit, next;
          for (const auto& [m, c] : rem.terms()) {
            Int d = c % xi;
            if (d < 0) d += xi;
            if (2 * d > xi) d -= xi;
            if (d != 0) digit.add_term(m, d);
            Int q = (c - d) / xi;
            if (q != 0) next.add_term(m, q);
          }
          if (!digit.is_zero()) g += digit * LaurentPolynomial::variable(v, i);
          rem = std::move(next);
        }
        if (rem.is_zero() && !g.is_zero()) {
          Int cg = g.content();
          if (cg > 1) g = g.divide_by_int(cg);
          g = normalize_leading_sign(g);
          if (g.is_one()) {
            // A nonconstant common divisor can evaluate to a unit at one
            // point; require two independent points to agree before
            // declaring coprimality.
            if (++coprime_confirmations >= 2) return g;
          } else {
            size_t cap = 16 * (a.term_count() + b.term_count()) + 256;
            if (auto qa = divide_exact(a, g, cap))
              if (auto qb = divide_exact(b, g, cap)) return g;
          }
        }
      }
    }
    xi = (xi * 37) / 2 + 41;
  }
  return std::nullopt;
}

inline LaurentPolynomial subresultant_gcd(LaurentPolynomial f, LaurentPolynomial g,
                                          const VariableId& v) {
  if (degree_in(f, v) < degree_in(g, v)) std::swap(f, g);
  LaurentPolynomial gg(1), hh(1);
  for (;;) {
    int delta = degree_in(f, v) - degree_in(g, v);
    LaurentPolynomial r = pseudo_remainder(f, g, v);
    if (r.is_zero()) break;
    if (degree_in(r, v) == 0) return LaurentPolynomial(1);
    f = g;
    LaurentPolynomial divisor = gg * hh.pow(delta);
    auto q = divide_exact(r, divisor);
    g = q ? *q : r;  // subresultant theory guarantees exactness
    gg = leading_coefficient_in(f, v);
    if (delta >= 1) {
      auto h = divide_exact(gg.pow(delta), hh.pow(delta - 1));
      hh = h ? *h : gg.pow(delta);
    }
    // delta == 0 leaves hh unchanged.
  }
  // Primitive part of g in v.
  LaurentPolynomial cont = content_in(g, v);
  auto pp = divide_exact(g, cont);
  return pp ? *pp : g;
}

}  // namespace detail

// gcd in ZZ[vars]; inputs must have nonnegative exponents. gcd(0,0) = 0.
inline LaurentPolynomial poly_gcd(const LaurentPolynomial& a,
                                  const LaurentPolynomial& b) {
  if (a.is_zero()) return normalize_leading_sign(b);
  if (b.is_zero()) return normalize_leading_sign(a);
  if (a.is_monomial() || b.is_monomial()) {
    // gcd with a monomial: shared monomial factor plus integer content.
    Monomial ma = a.common_monomial();
    Monomial mb = b.common_monomial();
    Monomial m;
    for (const auto& [v, e] : ma) {
      auto it = mb.find(v);
      if (it != mb.end()) {
        int mn = std::min(e, it->second);
        if (mn != 0) m[v] = mn;
      }
    }
    Int c = boost::multiprecision::gcd(a.content(), b.content());
    return LaurentPolynomial::term(m, c);
  }

  Int ca = a.content();
  Int cb = b.content();
  Int cg = boost::multiprecision::gcd(ca, cb);
  LaurentPolynomial pa = a.divide_by_int(ca);
  LaurentPolynomial pb = b.divide_by_int(cb);

  // Monomial content (smallest exponents) also splits off.
  Monomial mma = pa.common_monomial();
  Monomial mmb = pb.common_monomial();
  Monomial mg;
  for (const auto& [v, e] : mma) {
    auto it = mmb.find(v);
    if (it != mmb.end()) {
      int mn = std::min(e, it->second);
      if (mn != 0) mg[v] = mn;
    }
  }
  pa = pa.shift(monomial_inverse(mma));
  pb = pb.shift(monomial_inverse(mmb));

  auto vars_a = pa.variables();
  auto vars_b = pb.variables();
  std::vector<VariableId> shared;
  for (const auto& v : vars_a)
    if (vars_b.count(v)) shared.push_back(v);

  LaurentPolynomial core(1);
  if (!shared.empty() && !pa.is_constant() && !pb.is_constant()) {
    // Main variable: least maximal degree.
    VariableId best = shared.front();
    int best_deg = std::max(pa.max_exponent(best), pb.max_exponent(best));
    for (const auto& v : shared) {
      int d = std::max(pa.max_exponent(v), pb.max_exponent(v));
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    const VariableId& v = best;
    LaurentPolynomial cont_a = detail::content_in(pa, v);
    LaurentPolynomial cont_b = detail::content_in(pb, v);
    LaurentPolynomial cont_g = poly_gcd(cont_a, cont_b);
    auto ppa = divide_exact(pa, cont_a);
    auto ppb = divide_exact(pb, cont_b);
    const LaurentPolynomial& fa = ppa ? *ppa : pa;
    const LaurentPolynomial& fb = ppb ? *ppb : pb;
    LaurentPolynomial prim;
    if (auto heur = detail::gcd_heuristic(fa, fb)) {
      prim = *heur;
      // The verified candidate is a common divisor; absorb any common
      // factor left between the quotients (rare, degrees strictly drop).
      if (!prim.is_one()) {
        auto qa = divide_exact(fa, prim);
        auto qb = divide_exact(fb, prim);
        if (qa && qb && !qa->is_constant() && !qb->is_constant()) {
          LaurentPolynomial extra = poly_gcd(*qa, *qb);
          if (!extra.is_constant()) prim = prim * extra;
        }
      }
    } else {
      prim = detail::subresultant_gcd(fa, fb, v);
    }
    core = cont_g * prim;
  }

  return normalize_leading_sign(LaurentPolynomial::term(mg, cg) * core);
}

}  // namespace clift
