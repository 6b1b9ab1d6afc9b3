// Exact sparse multivariate Laurent polynomials over arbitrary-precision
// integers.
//
// A monomial is a sparse map from variable name to (possibly negative)
// exponent; zero exponents are never stored. A polynomial is a sparse map
// from monomial to nonzero coefficient, so equal values always have equal
// term maps (canonical form).
//
// The canonical monomial order is plain lexicographic on exponent vectors,
// reading variables in increasing name order with missing exponents as 0.
// This order is translation-invariant (m1 < m2 implies m1*m < m2*m), which
// the exact-division routine relies on.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clift/errors.hpp"

namespace clift {

using Int = boost::multiprecision::cpp_int;
using VariableId = std::string;
using Monomial = std::map<VariableId, int>;

// Lexicographic comparison of exponent vectors; earlier variable names are
// more significant, larger exponent wins.
inline int monomial_cmp(const Monomial& a, const Monomial& b) {
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    VariableId va = (ia != a.end()) ? ia->first : VariableId();
    VariableId vb = (ib != b.end()) ? ib->first : VariableId();
    VariableId v;
    if (ia == a.end()) {
      v = vb;
    } else if (ib == b.end()) {
      v = va;
    } else {
      v = (va < vb) ? va : vb;
    }
    int ea = (ia != a.end() && ia->first == v) ? ia->second : 0;
    int eb = (ib != b.end() && ib->first == v) ? ib->second : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
    if (ia != a.end() && ia->first == v) ++ia;
    if (ib != b.end() && ib->first == v) ++ib;
  }
  return 0;
}

struct MonomialLess {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return monomial_cmp(a, b) < 0;
  }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r = a;
  for (const auto& [v, e] : b) {
    int ne = r[v] + e;
    if (ne == 0)
      r.erase(v);
    else
      r[v] = ne;
  }
  return r;
}

inline Monomial monomial_inverse(const Monomial& a) {
  Monomial r;
  for (const auto& [v, e] : a) r[v] = -e;
  return r;
}

// a / b, or no value when some exponent of b exceeds the one in a.
// Only meaningful for monomials with nonnegative exponents.
inline bool monomial_divides(const Monomial& b, const Monomial& a) {
  for (const auto& [v, e] : b) {
    auto it = a.find(v);
    int ea = (it == a.end()) ? 0 : it->second;
    if (ea < e) return false;
  }
  return true;
}

class LaurentPolynomial {
 public:
  using TermMap = std::map<Monomial, Int, MonomialLess>;

  LaurentPolynomial() = default;
  LaurentPolynomial(long long c) {  // NOLINT: implicit by design
    if (c != 0) terms_[Monomial{}] = c;
  }
  explicit LaurentPolynomial(const Int& c) {
    if (c != 0) terms_[Monomial{}] = c;
  }

  static LaurentPolynomial variable(const VariableId& v, int exp = 1) {
    LaurentPolynomial p;
    if (exp == 0) {
      p.terms_[Monomial{}] = 1;
    } else {
      p.terms_[Monomial{{v, exp}}] = 1;
    }
    return p;
  }

  static LaurentPolynomial term(const Monomial& m, const Int& c) {
    LaurentPolynomial p;
    if (c != 0) p.terms_[m] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_.begin()->first.empty() &&
           terms_.begin()->second == 1;
  }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
  }
  bool is_monomial() const { return terms_.size() == 1; }

  size_t term_count() const { return terms_.size(); }

  void add_term(const Monomial& m, const Int& c) {
    if (c == 0) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
      terms_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  friend LaurentPolynomial operator+(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
  }

  friend LaurentPolynomial operator-(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b) {
    LaurentPolynomial r = a;
    for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
    return r;
  }

  LaurentPolynomial operator-() const {
    LaurentPolynomial r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
  }

  friend LaurentPolynomial operator*(const LaurentPolynomial& a,
                                     const LaurentPolynomial& b);

  LaurentPolynomial& operator+=(const LaurentPolynomial& b) { return *this = *this + b; }
  LaurentPolynomial& operator-=(const LaurentPolynomial& b) { return *this = *this - b; }
  LaurentPolynomial& operator*=(const LaurentPolynomial& b) { return *this = *this * b; }

  friend bool operator==(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPolynomial& a, const LaurentPolynomial& b) {
    return !(a == b);
  }

  LaurentPolynomial pow(int n) const {
    if (n < 0) throw Error("LaurentPolynomial::pow: negative exponent");
    LaurentPolynomial r(1);
    LaurentPolynomial base = *this;
    while (n > 0) {
      if (n & 1) r *= base;
      base *= base;
      n >>= 1;
    }
    return r;
  }

  // Minimum exponent of v over stored monomials; the order of vanishing
  // read off a frozen variable.
  int min_exponent(const VariableId& v) const {
    if (is_zero()) throw ZeroPolynomial("min_exponent of zero polynomial");
    bool first = true;
    int best = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(v);
      int e = (it == m.end()) ? 0 : it->second;
      if (first || e < best) best = e;
      first = false;
    }
    return best;
  }

  int max_exponent(const VariableId& v) const {
    if (is_zero()) throw ZeroPolynomial("max_exponent of zero polynomial");
    bool first = true;
    int best = 0;
    for (const auto& [m, c] : terms_) {
      auto it = m.find(v);
      int e = (it == m.end()) ? 0 : it->second;
      if (first || e > best) best = e;
      first = false;
    }
    return best;
  }

  std::set<VariableId> variables() const {
    std::set<VariableId> vs;
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m) vs.insert(v);
    return vs;
  }

  bool has_negative_exponent() const {
    for (const auto& [m, c] : terms_)
      for (const auto& [v, e] : m)
        if (e < 0) return true;
    return false;
  }

  // Componentwise minimum of exponent vectors over all terms; the largest
  // monomial dividing every term (possibly with negative exponents).
  Monomial common_monomial() const {
    if (is_zero()) throw ZeroPolynomial("common_monomial of zero polynomial");
    Monomial r = terms_.begin()->first;
    for (const auto& [m, c] : terms_) {
      Monomial next;
      for (const auto& [v, e] : r) {
        auto it = m.find(v);
        int em = (it == m.end()) ? 0 : it->second;
        int mn = e < em ? e : em;
        if (mn != 0) next[v] = mn;
      }
      // Variables of m that are absent from r contribute exponent 0 except
      // when negative in m.
      for (const auto& [v, e] : m) {
        if (e < 0 && r.find(v) == r.end()) next[v] = e;
      }
      r = std::move(next);
    }
    return r;
  }

  LaurentPolynomial shift(const Monomial& m) const {
    LaurentPolynomial r;
    for (const auto& [mm, c] : terms_) r.terms_[monomial_mul(mm, m)] = c;
    return r;
  }

  // gcd of all coefficients, positive; 0 for the zero polynomial.
  Int content() const {
    Int g = 0;
    for (const auto& [m, c] : terms_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1) break;
    }
    return g < 0 ? Int(-g) : g;
  }

  const std::pair<const Monomial, Int>& leading_term() const {
    if (is_zero()) throw ZeroPolynomial("leading_term of zero polynomial");
    return *terms_.rbegin();
  }

  LaurentPolynomial divide_by_int(const Int& d) const {
    LaurentPolynomial r;
    for (const auto& [m, c] : terms_) {
      if (c % d != 0) throw Error("divide_by_int: not exact");
      r.terms_[m] = c / d;
    }
    return r;
  }

  // Substitute each variable by a Laurent polynomial; exponents of
  // substituted variables must be nonnegative. Variables without an image
  // are kept. (Field-level substitution lives in RationalFunction.)
  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    // Print from the greatest monomial down.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const Monomial& m = it->first;
      Int c = it->second;
      if (first) {
        if (c < 0) {
          os << "-";
          c = -c;
        }
      } else {
        os << (c < 0 ? " - " : " + ");
        if (c < 0) c = -c;
      }
      first = false;
      if (m.empty()) {
        os << c;
        continue;
      }
      bool printed = false;
      if (c != 1) {
        os << c;
        printed = true;
      }
      for (const auto& [v, e] : m) {
        if (printed) os << "*";
        os << v;
        if (e != 1) os << "^" << e;
        printed = true;
      }
    }
    return os.str();
  }

 private:
  TermMap terms_;
};

namespace detail {

// Packed monomials: up to 8 variables as biased 16-bit exponent lanes in a
// 128-bit key, most significant lane = alphabetically first variable, so
// unsigned key comparison coincides with the canonical monomial order.
using PackedKey = unsigned __int128;

struct PackedKeyHash {
  size_t operator()(PackedKey k) const {
    auto lo = static_cast<std::uint64_t>(k);
    auto hi = static_cast<std::uint64_t>(k >> 64);
    std::uint64_t x = lo ^ (hi * 0x9e3779b97f4a7c15ULL + 0x7f4a7c15ULL);
    x ^= x >> 30;
    x *= 0xbf58476d1ce4e5b9ULL;
    x ^= x >> 27;
    x *= 0x94d049bb133111ebULL;
    x ^= x >> 31;
    return static_cast<size_t>(x);
  }
};

// Union of variables of both operands when packing applies (at most 8).
inline bool packed_vars(const LaurentPolynomial& a, const LaurentPolynomial& b,
                        std::vector<VariableId>& vars) {
  std::set<VariableId> vs;
  for (const auto& [m, c] : a.terms())
    for (const auto& [v, e] : m) vs.insert(v);
  for (const auto& [m, c] : b.terms())
    for (const auto& [v, e] : m) vs.insert(v);
  if (vs.size() > 8) return false;
  vars.assign(vs.begin(), vs.end());
  return true;
}

inline bool packed_range_ok(const LaurentPolynomial& a, const LaurentPolynomial& b,
                            const std::vector<VariableId>& vars, int bias) {
  for (const auto& v : vars) {
    long long amin = 0, amax = 0, bmin = 0, bmax = 0;
    for (const auto& [m, c] : a.terms()) {
      auto it = m.find(v);
      long long e = (it == m.end()) ? 0 : it->second;
      amin = std::min(amin, e);
      amax = std::max(amax, e);
    }
    for (const auto& [m, c] : b.terms()) {
      auto it = m.find(v);
      long long e = (it == m.end()) ? 0 : it->second;
      bmin = std::min(bmin, e);
      bmax = std::max(bmax, e);
    }
    if (amin + bmin + 2LL * bias < 0) return false;
    if (amax + bmax + 2LL * bias > 0xFFFF) return false;
  }
  return true;
}

inline PackedKey pack_monomial(const Monomial& m, const std::vector<VariableId>& vars,
                               int bias) {
  PackedKey key = 0;
  for (const auto& v : vars) {
    auto it = m.find(v);
    long long e = (it == m.end()) ? 0 : it->second;
    key = (key << 16) | static_cast<PackedKey>(static_cast<std::uint64_t>(e + bias));
  }
  return key;
}

inline Monomial unpack_monomial(PackedKey key, const std::vector<VariableId>& vars,
                                int bias) {
  Monomial m;
  for (size_t i = vars.size(); i > 0; --i) {
    int e = static_cast<int>(key & 0xFFFF) - bias;
    key >>= 16;
    if (e != 0) m[vars[i - 1]] = e;
  }
  return m;
}

}  // namespace detail

inline LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  if (a.terms_.empty() || b.terms_.empty()) return r;
  constexpr int kBias = 4096;
  std::vector<VariableId> vars;
  if (a.terms_.size() * b.terms_.size() >= 64 && detail::packed_vars(a, b, vars) &&
      detail::packed_range_ok(a, b, vars, kBias)) {
    std::vector<std::pair<detail::PackedKey, Int>> ka, kb;
    ka.reserve(a.terms_.size());
    kb.reserve(b.terms_.size());
    for (const auto& [m, c] : a.terms_)
      ka.emplace_back(detail::pack_monomial(m, vars, kBias), c);
    for (const auto& [m, c] : b.terms_)
      kb.emplace_back(detail::pack_monomial(m, vars, kBias), c);
    std::unordered_map<detail::PackedKey, Int, detail::PackedKeyHash> acc;
    acc.reserve(ka.size() + kb.size());
    for (const auto& [mka, ca] : ka)
      for (const auto& [mkb, cb] : kb) acc[mka + mkb] += ca * cb;
    std::vector<std::pair<detail::PackedKey, Int>> out;
    out.reserve(acc.size());
    for (auto& [k, c] : acc)
      if (c != 0) out.emplace_back(k, std::move(c));
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [k, c] : out)
      r.terms_.emplace_hint(r.terms_.end(), detail::unpack_monomial(k, vars, 2 * kBias),
                            std::move(c));
    return r;
  }
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
  return r;
}

}  // namespace clift
