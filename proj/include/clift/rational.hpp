// Exact rational functions: reduced fractions of polynomials with
// nonnegative exponents. The denominator is never zero, shares no factor
// with the numerator, and is normalized so its lexicographically greatest
// monomial has a positive coefficient.
#pragma once

#include <map>
#include <string>

#include "clift/gcd.hpp"
#include "clift/laurent.hpp"

namespace clift {

class RationalFunction {
 public:
  RationalFunction() : num_(), den_(1) {}
  RationalFunction(long long c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(const LaurentPolynomial& p) : num_(p), den_(1) {  // NOLINT
    clear_laurent();
    reduce();
  }
  RationalFunction(const LaurentPolynomial& num, const LaurentPolynomial& den)
      : num_(num), den_(den) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    clear_laurent();
    reduce();
  }

  static RationalFunction variable(const VariableId& v, int exp = 1) {
    return RationalFunction(LaurentPolynomial::variable(v, exp));
  }

  const LaurentPolynomial& numerator() const { return num_; }
  const LaurentPolynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_constant(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ - b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
  RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
  RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
  RationalFunction& operator/=(const RationalFunction& b) { return *this = *this / b; }

  RationalFunction pow(int n) const {
    if (n < 0) {
      if (is_zero()) throw DivisionByZero("negative power of zero");
      RationalFunction inv;
      inv.num_ = den_;
      inv.den_ = num_;
      inv.normalize_sign();
      return inv.pow(-n);
    }
    RationalFunction r(1);
    RationalFunction base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !(a == b);
  }

  // Exact substitution; variables without an image are kept. Throws
  // DivisionByZero when a substituted denominator vanishes. Both halves are
  // substituted with polynomial arithmetic over a single common
  // denominator, so only the final construction reduces a fraction.
  RationalFunction substitute(const std::map<VariableId, RationalFunction>& image) const {
    auto [pn, pd] = substitute_poly_pair(num_, image);
    auto [qn, qd] = substitute_poly_pair(den_, image);
    if (qn.is_zero()) throw DivisionByZero("substitution produced a zero denominator");
    return RationalFunction(pn * qd, pd * qn);
  }

  std::string to_string() const {
    if (den_.is_one()) return num_.to_string();
    if (den_.is_monomial()) {
      // Fold the monomial denominator into negative exponents: the result
      // stays inside the expression grammar.
      const auto& [m, c] = den_.leading_term();
      LaurentPolynomial folded = num_.shift(monomial_inverse(m));
      if (c == 1) return folded.to_string();
      return "(" + folded.to_string() + ")/" + c.str();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
  }

  // As a Laurent polynomial when the denominator is a unit monomial.
  bool is_laurent_polynomial() const {
    return den_.is_monomial() && boost::multiprecision::abs(den_.leading_term().second) == 1;
  }
  LaurentPolynomial as_laurent_polynomial() const {
    if (!is_laurent_polynomial())
      throw Error("rational function is not a Laurent polynomial: " + to_string());
    const auto& [m, c] = den_.leading_term();
    LaurentPolynomial folded = num_.shift(monomial_inverse(m));
    return c == 1 ? folded : -folded;
  }

 private:
  // subst(p) as an unreduced pair (P, Q): every substituted variable v with
  // image A_v/B_v contributes A_v^{e_v} B_v^{dmax_v - e_v} to each term and
  // B_v^{dmax_v} to the common denominator, after multiplying p by enough
  // v^{s_v} to clear negative exponents (compensated through the pair).
  static std::pair<LaurentPolynomial, LaurentPolynomial> substitute_poly_pair(
      const LaurentPolynomial& p, const std::map<VariableId, RationalFunction>& image) {
    if (p.is_zero()) return {LaurentPolynomial(), LaurentPolynomial(1)};
    std::map<VariableId, int> shift, dmax;
    for (const auto& [v, f] : image) {
      bool present = false;
      bool first = true;
      int mn = 0, mx = 0;
      for (const auto& [m, c] : p.terms()) {
        auto it = m.find(v);
        int e = (it == m.end()) ? 0 : it->second;
        if (first || e < mn) mn = e;
        if (first || e > mx) mx = e;
        first = false;
        if (it != m.end()) present = true;
      }
      if (!present) continue;
      shift[v] = mn < 0 ? -mn : 0;
      dmax[v] = mx + shift[v];
    }
    if (shift.empty()) return {p, LaurentPolynomial(1)};

    // Power tables for the numerators and denominators of the images.
    std::map<VariableId, std::vector<LaurentPolynomial>> apow, bpow;
    for (const auto& [v, d0] : dmax) {
      const RationalFunction& f = image.at(v);
      int d = std::max(d0, shift[v]);
      apow[v].push_back(LaurentPolynomial(1));
      bpow[v].push_back(LaurentPolynomial(1));
      for (int i = 1; i <= d; ++i) {
        apow[v].push_back(apow[v].back() * f.numerator());
        bpow[v].push_back(bpow[v].back() * f.denominator());
      }
    }

    LaurentPolynomial num;
    for (const auto& [m, c] : p.terms()) {
      Monomial rest;
      LaurentPolynomial t(c);
      for (const auto& [v, e] : m)
        if (!shift.count(v)) rest[v] = e;
      // Every substituted variable contributes, also at exponent zero,
      // because each term is scaled to the common denominator.
      for (const auto& [v, s] : shift) {
        auto it = m.find(v);
        int ee = ((it == m.end()) ? 0 : it->second) + s;
        t *= apow[v][ee];
        t *= bpow[v][dmax[v] - ee];
      }
      num += t.shift(rest);
    }
    LaurentPolynomial den(1);
    for (const auto& [v, d] : dmax) den *= bpow[v][d];
    // Undo the clearing shifts: p = p2 * v^{-s_v}, so divide by (A/B)^{s_v}.
    for (const auto& [v, s] : shift) {
      if (s == 0) continue;
      num *= bpow[v][s];
      den *= apow[v][s];
    }
    return {num, den};
  }

  // Multiply numerator and denominator by a monomial so all exponents are >= 0.
  void clear_laurent() {
    Monomial shift;
    for (const auto* p : {&num_, &den_}) {
      if (p->is_zero()) continue;
      for (const auto& [m, c] : p->terms()) {
        for (const auto& [v, e] : m) {
          if (e < 0) {
            auto it = shift.find(v);
            if (it == shift.end() || it->second < -e) shift[v] = -e;
          }
        }
      }
    }
    if (!shift.empty()) {
      num_ = num_.shift(shift);
      den_ = den_.shift(shift);
    }
  }

  void normalize_sign() {
    if (!den_.is_zero() && den_.leading_term().second < 0) {
      den_ = -den_;
      num_ = -num_;
    }
  }

  void reduce() {
    if (num_.is_zero()) {
      den_ = LaurentPolynomial(1);
      return;
    }
    // Monomial and integer content first: cluster arithmetic almost always
    // has a monomial denominator, which this path reduces without a full gcd.
    Monomial mn = num_.common_monomial();
    Monomial md = den_.common_monomial();
    Monomial common;
    for (const auto& [v, e] : mn) {
      auto it = md.find(v);
      if (it != md.end()) {
        int c = std::min(e, it->second);
        if (c != 0) common[v] = c;
      }
    }
    if (!common.empty()) {
      Monomial inv = monomial_inverse(common);
      num_ = num_.shift(inv);
      den_ = den_.shift(inv);
    }
    Int cn = num_.content();
    Int cd = den_.content();
    Int cg = boost::multiprecision::gcd(cn, cd);
    if (cg > 1) {
      num_ = num_.divide_by_int(cg);
      den_ = den_.divide_by_int(cg);
    }
    if (!den_.is_monomial() && !num_.is_monomial()) {
      // Exchange relations divide exactly; try that before a full gcd. A
      // necessary condition at the all-ones point filters most failures,
      // and the step cap keeps the remaining attempts cheap.
      Int n1 = 0, d1 = 0;
      for (const auto& [m, c] : num_.terms()) n1 += c;
      for (const auto& [m, c] : den_.terms()) d1 += c;
      bool plausible = (d1 == 0) ? (n1 == 0) : (n1 % d1 == 0);
      if (plausible) {
        size_t cap = 8 * (num_.term_count() + den_.term_count()) + 64;
        if (auto q = divide_exact(num_, den_, cap)) {
          // The exact quotient of the Laurent division may carry negative
          // exponents; restore the canonical polynomial/polynomial form.
          num_ = *q;
          den_ = LaurentPolynomial(1);
          clear_laurent();
          normalize_sign();
          return;
        }
      }
      LaurentPolynomial g = poly_gcd(num_, den_);
      if (!g.is_one() && !g.is_zero()) {
        auto qn = divide_exact(num_, g);
        auto qd = divide_exact(den_, g);
        if (qn && qd) {
          num_ = *qn;
          den_ = *qd;
          clear_laurent();
        }
      }
    }
    normalize_sign();
  }

  LaurentPolynomial num_, den_;
};

}  // namespace clift
