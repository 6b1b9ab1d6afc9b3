// Degree configurations: vertex-indexed families of integer degree vectors
// making every exchange relation homogeneous, their mutation rule, and the
// degree of an arbitrary rational function in a graded seed.
#pragma once

#include <map>
#include <optional>
#include <string>

#include "clift/seed.hpp"

namespace clift {

// Sparse integer vector over named basis labels; zero entries never stored.
using BasisLabel = std::string;

class DegreeVector {
 public:
  DegreeVector() = default;

  long long coord(const BasisLabel& l) const {
    auto it = coords_.find(l);
    return it == coords_.end() ? 0 : it->second;
  }
  void set(const BasisLabel& l, long long v) {
    if (v == 0)
      coords_.erase(l);
    else
      coords_[l] = v;
  }
  void add(const BasisLabel& l, long long v) { set(l, coord(l) + v); }
  const std::map<BasisLabel, long long>& coords() const { return coords_; }
  bool is_zero() const { return coords_.empty(); }

  static DegreeVector basis(const BasisLabel& l) {
    DegreeVector d;
    d.set(l, 1);
    return d;
  }

  friend DegreeVector operator+(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r = a;
    for (const auto& [l, v] : b.coords_) r.add(l, v);
    return r;
  }
  friend DegreeVector operator-(const DegreeVector& a, const DegreeVector& b) {
    DegreeVector r = a;
    for (const auto& [l, v] : b.coords_) r.add(l, -v);
    return r;
  }
  friend DegreeVector operator*(long long c, const DegreeVector& a) {
    DegreeVector r;
    for (const auto& [l, v] : a.coords_) r.set(l, c * v);
    return r;
  }
  DegreeVector operator-() const { return -1 * *this; }
  DegreeVector& operator+=(const DegreeVector& b) { return *this = *this + b; }
  DegreeVector& operator-=(const DegreeVector& b) { return *this = *this - b; }

  friend bool operator==(const DegreeVector& a, const DegreeVector& b) {
    return a.coords_ == b.coords_;
  }
  friend bool operator!=(const DegreeVector& a, const DegreeVector& b) { return !(a == b); }
  friend bool operator<(const DegreeVector& a, const DegreeVector& b) {
    return a.coords_ < b.coords_;
  }

  std::string to_string() const {
    if (coords_.empty()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [l, v] : coords_) {
      if (!first) s += v > 0 ? " + " : " - ";
      else if (v < 0) s += "-";
      long long a = v > 0 ? v : -v;
      if (a != 1) s += std::to_string(a) + "*";
      s += "e_" + l;
      first = false;
    }
    return s;
  }

 private:
  std::map<BasisLabel, long long> coords_;
};

struct DegreeConfiguration {
  std::map<VertexId, DegreeVector> degrees;

  const DegreeVector& at(const VertexId& v) const {
    auto it = degrees.find(v);
    if (it == degrees.end()) throw KeyMismatch("no degree for vertex " + v);
    return it->second;
  }

  friend bool operator==(const DegreeConfiguration& a, const DegreeConfiguration& b) {
    return a.degrees == b.degrees;
  }
  friend bool operator!=(const DegreeConfiguration& a, const DegreeConfiguration& b) {
    return !(a == b);
  }
};

// The grading condition: for every mutable column k, the positive and
// negative parts of column k weigh the same.
inline bool is_degree_configuration(const Seed& s, const DegreeConfiguration& sigma) {
  for (const auto& [v, k] : s.vertices())
    if (!sigma.degrees.count(v)) throw KeyMismatch("no degree for vertex " + v);
  if (sigma.degrees.size() != s.vertices().size())
    throw KeyMismatch("degree configuration has extra vertices");
  for (const auto& k : s.matrix().cols()) {
    DegreeVector plus, minus;
    for (const auto& i : s.matrix().rows()) {
      long long b = s.matrix().entry(i, k);
      if (b > 0) plus += b * sigma.at(i);
      if (b < 0) minus += (-b) * sigma.at(i);
    }
    if (plus != minus) return false;
  }
  return true;
}

// sigma'_k = sigma^{B+_{.k}} - sigma_k, everything else unchanged; uses the
// matrix of s (before mutation).
inline DegreeConfiguration mutate_degree_configuration(const Seed& s,
                                                       const DegreeConfiguration& sigma,
                                                       const VertexId& k) {
  if (!s.is_mutable(k)) throw NotMutable("vertex is not mutable: " + k);
  if (!is_degree_configuration(s, sigma))
    throw InvalidConfiguration("grading condition fails before mutation at " + k);
  DegreeConfiguration r = sigma;
  DegreeVector plus;
  for (const auto& i : s.matrix().rows()) {
    long long b = s.matrix().entry(i, k);
    if (b > 0) plus += b * sigma.at(i);
  }
  r.degrees[k] = plus - sigma.at(k);
  return r;
}

// Degree of f in the graded seed (s, sigma): express f in s's variables;
// homogeneous iff all numerator monomials share one degree and likewise the
// denominator. Returns nothing when f is not homogeneous.
inline std::optional<DegreeVector> degree_of(const RationalFunction& f, const Seed& s,
                                             const DegreeConfiguration& sigma) {
  RationalFunction g = express_in_seed(f, s);
  if (g.is_zero()) return DegreeVector{};
  auto degree_of_poly = [&](const LaurentPolynomial& p) -> std::optional<DegreeVector> {
    std::optional<DegreeVector> deg;
    for (const auto& [m, c] : p.terms()) {
      DegreeVector d;
      for (const auto& [v, e] : m) d += static_cast<long long>(e) * sigma.at(v);
      if (!deg)
        deg = d;
      else if (*deg != d)
        return std::nullopt;
    }
    return deg;
  };
  auto u = degree_of_poly(g.numerator());
  auto v = degree_of_poly(g.denominator());
  if (!u || !v) return std::nullopt;
  return *u - *v;
}

}  // namespace clift
