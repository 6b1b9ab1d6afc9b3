// Laurent-ring and upper-bound membership, canonical seed keys up to
// relabeling of mutable vertices, and breadth-first exchange-graph
// exploration with a node cap.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "clift/seed.hpp"

namespace clift {

// f belongs to L(s) = coef[x_i^{+-1}, i unfrozen]: expressed in s's
// variables, the reduced denominator must be a monomial supported on
// invertible vertices (unfrozen or semifrozen; highly frozen variables are
// not invertible).
inline bool laurent_membership(const RationalFunction& f, const Seed& s) {
  RationalFunction g = express_in_seed(f, s);
  if (g.is_zero()) return true;
  const LaurentPolynomial& q = g.denominator();
  if (!q.is_monomial()) return false;
  if (boost::multiprecision::abs(q.leading_term().second) != 1) return false;
  for (const auto& [v, e] : q.leading_term().first) {
    auto it = s.vertices().find(v);
    if (it == s.vertices().end()) return false;
    if (it->second == VertexKind::HighlyFrozen) return false;
  }
  // Numerator coefficients are integers by construction; also require the
  // numerator's negative exponents (if any, from folded form) to be absent:
  // the reduced numerator is a plain polynomial here by RationalFunction
  // invariants.
  return true;
}

struct UpperBoundResult {
  bool member = false;
  bool exact = false;  // true iff the seed has maximal rank, so the upper
                       // bound equals the upper cluster algebra
};

// Membership in U(t) = L(t) intersect L(mu_i(t)) over all mutable i.
inline UpperBoundResult upper_bound_membership(const RationalFunction& f, const Seed& t) {
  UpperBoundResult r;
  r.exact = is_maximal_rank(t.matrix());
  if (!laurent_membership(f, t)) return r;
  for (const auto& k : t.mutable_vertices())
    if (!laurent_membership(f, t.mutate(k))) return r;
  r.member = true;
  return r;
}

using SeedKey = std::string;

namespace detail {

inline std::string serialize_relabeled(const Seed& s,
                                       const std::map<VertexId, std::string>& label) {
  // Matrix under the new labels, rows and columns sorted by new label.
  std::vector<std::pair<std::string, VertexId>> rows, cols;
  for (const auto& v : s.matrix().rows()) rows.emplace_back(label.at(v), v);
  for (const auto& v : s.matrix().cols()) cols.emplace_back(label.at(v), v);
  std::sort(rows.begin(), rows.end());
  std::sort(cols.begin(), cols.end());
  std::ostringstream os;
  for (const auto& [l, v] : rows) {
    os << l << ":" << to_string(s.kind(v)) << ";";
    for (const auto& [lc, vc] : cols) os << s.matrix().entry(v, vc) << ",";
    os << "|";
  }
  os << "#";
  for (const auto& [l, v] : rows) os << l << "=" << s.variable(v).to_string() << ";";
  return os.str();
}

}  // namespace detail

// Canonical form of a seed up to relabeling of its mutable vertices: sort
// mutable vertices by the canonical string of their cluster variable, then
// break ties by trying every permutation inside each tie group and keeping
// the lexicographically least serialization.
inline SeedKey seed_key(const Seed& s) {
  std::vector<std::pair<std::string, VertexId>> order;
  for (const auto& v : s.mutable_vertices()) order.emplace_back(s.variable(v).to_string(), v);
  std::sort(order.begin(), order.end());

  // Tie groups of equal variable strings.
  std::vector<std::pair<size_t, size_t>> groups;  // [begin, end)
  for (size_t i = 0; i < order.size();) {
    size_t j = i;
    while (j < order.size() && order[j].first == order[i].first) ++j;
    if (j - i > 8) throw TieExplosion("tie group of size " + std::to_string(j - i));
    if (j - i > 1) groups.emplace_back(i, j);
    i = j;
  }

  auto base_label = [&](size_t pos) {
    std::string n = std::to_string(pos);
    return std::string("m") + std::string(4 - std::min<size_t>(4, n.size()), '0') + n;
  };
  std::map<VertexId, std::string> label;
  for (const auto& [v, k] : s.vertices())
    if (k != VertexKind::Unfrozen) label[v] = "f_" + v;
  for (size_t i = 0; i < order.size(); ++i) label[order[i].second] = base_label(i);

  if (groups.empty()) return detail::serialize_relabeled(s, label);

  // Enumerate permutations within tie groups (product over groups) and keep
  // the least serialization.
  std::string best;
  std::vector<std::vector<size_t>> perms(groups.size());
  for (size_t g = 0; g < groups.size(); ++g)
    for (size_t i = groups[g].first; i < groups[g].second; ++i) perms[g].push_back(i);
  // Odometer over per-group permutations.
  std::vector<std::vector<size_t>> current = perms;
  std::function<void(size_t)> rec = [&](size_t g) {
    if (g == groups.size()) {
      std::string ser = detail::serialize_relabeled(s, label);
      if (best.empty() || ser < best) best = ser;
      return;
    }
    std::vector<size_t> idx = perms[g];
    std::sort(idx.begin(), idx.end());
    do {
      for (size_t i = 0; i < idx.size(); ++i)
        label[order[idx[i]].second] = base_label(groups[g].first + i);
      rec(g + 1);
    } while (std::next_permutation(idx.begin(), idx.end()));
  };
  rec(0);
  return best;
}

inline std::string fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << h;
  return os.str();
}

struct ExchangeGraph {
  std::map<SeedKey, Seed> nodes;
  std::set<std::tuple<SeedKey, VertexId, SeedKey>> edges;
  bool complete = false;
  size_t cap = 0;
  SeedKey root;
  std::set<std::string> cluster_variables;  // distinct mutable variables seen
};

// Breadth-first closure of the mutation class, identifying seeds by
// seed_key, halting when the node count would exceed cap.
inline ExchangeGraph explore_exchange_graph(const Seed& t, size_t cap) {
  if (cap == 0) throw InvalidConfiguration("exploration cap must be positive");
  validate_seed(t);
  ExchangeGraph g;
  g.cap = cap;
  g.root = seed_key(t);
  g.nodes.emplace(g.root, t);
  for (const auto& v : t.mutable_vertices())
    g.cluster_variables.insert(t.variable(v).to_string());
  std::deque<SeedKey> frontier{g.root};
  bool capped = false;
  while (!frontier.empty()) {
    SeedKey key = frontier.front();
    frontier.pop_front();
    Seed s = g.nodes.at(key);
    for (const auto& k : s.mutable_vertices()) {
      Seed m = s.mutate(k);
      SeedKey mk = seed_key(m);
      auto it = g.nodes.find(mk);
      if (it == g.nodes.end()) {
        if (g.nodes.size() >= cap) {
          capped = true;
          continue;
        }
        g.nodes.emplace(mk, m);
        for (const auto& v : m.mutable_vertices())
          g.cluster_variables.insert(m.variable(v).to_string());
        frontier.push_back(mk);
      }
      g.edges.emplace(key, k, mk);
    }
  }
  g.complete = !capped;
  return g;
}

}  // namespace clift
