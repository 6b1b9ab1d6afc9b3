// Seeds of geometric type with mixed frozen statuses, matrix and cluster
// mutation, mutation sequences, and re-expression of rational functions in
// the variables of any mutated seed.
//
// Vertex identity is nominal: matrices carry explicit row/column labels and
// are stored with rows and columns sorted by vertex id, so structural
// equality is label equality. Cluster variables are stored as rational
// functions in the root seed's variable universe; a seed is immutable and
// every operation returns a new value.
#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "clift/rational.hpp"

namespace clift {

using VertexId = std::string;

enum class VertexKind { Unfrozen, Semifrozen, HighlyFrozen };

inline std::string to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Unfrozen: return "unfrozen";
    case VertexKind::Semifrozen: return "semifrozen";
    case VertexKind::HighlyFrozen: return "highlyfrozen";
  }
  return "?";
}

class ExtendedExchangeMatrix {
 public:
  ExtendedExchangeMatrix() = default;
  ExtendedExchangeMatrix(std::vector<VertexId> rows, std::vector<VertexId> cols,
                         std::vector<std::vector<long long>> entries) {
    if (entries.size() != rows.size())
      throw MalformedSeed("matrix row count does not match labels");
    for (const auto& r : entries)
      if (r.size() != cols.size())
        throw MalformedSeed("matrix column count does not match labels");
    // Canonical storage order: rows and columns sorted by id.
    std::vector<size_t> rp = sorted_permutation(rows);
    std::vector<size_t> cp = sorted_permutation(cols);
    rows_.reserve(rows.size());
    for (size_t i : rp) rows_.push_back(rows[i]);
    cols_.reserve(cols.size());
    for (size_t j : cp) cols_.push_back(cols[j]);
    entries_.assign(rows.size(), std::vector<long long>(cols.size(), 0));
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < cols.size(); ++j) entries_[i][j] = entries[rp[i]][cp[j]];
    build_index();
    for (const auto& c : cols_)
      if (!row_index_.count(c)) throw MalformedSeed("column vertex missing from rows: " + c);
  }

  const std::vector<VertexId>& rows() const { return rows_; }
  const std::vector<VertexId>& cols() const { return cols_; }
  const std::vector<std::vector<long long>>& entries() const { return entries_; }

  bool has_col(const VertexId& j) const { return col_index_.count(j) != 0; }
  bool has_row(const VertexId& i) const { return row_index_.count(i) != 0; }

  long long entry(const VertexId& i, const VertexId& j) const {
    return entries_[row_index_.at(i)][col_index_.at(j)];
  }

  friend bool operator==(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }
  friend bool operator!=(const ExtendedExchangeMatrix& a, const ExtendedExchangeMatrix& b) {
    return !(a == b);
  }

 private:
  static std::vector<size_t> sorted_permutation(const std::vector<VertexId>& v) {
    std::vector<size_t> p(v.size());
    for (size_t i = 0; i < p.size(); ++i) p[i] = i;
    std::sort(p.begin(), p.end(), [&](size_t a, size_t b) { return v[a] < v[b]; });
    return p;
  }
  void build_index() {
    row_index_.clear();
    col_index_.clear();
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (!row_index_.emplace(rows_[i], i).second)
        throw MalformedSeed("duplicate row vertex: " + rows_[i]);
    }
    for (size_t j = 0; j < cols_.size(); ++j) {
      if (!col_index_.emplace(cols_[j], j).second)
        throw MalformedSeed("duplicate column vertex: " + cols_[j]);
    }
  }

  std::vector<VertexId> rows_, cols_;
  std::vector<std::vector<long long>> entries_;
  std::map<VertexId, size_t> row_index_, col_index_;
};

// One mutation step of the extended exchange matrix.
inline ExtendedExchangeMatrix mutate_matrix(const ExtendedExchangeMatrix& B,
                                            const VertexId& k) {
  if (!B.has_col(k)) throw NotMutable("vertex is not mutable: " + k);
  auto pos = [](long long x) { return x > 0 ? x : 0; };
  auto neg = [](long long x) { return x < 0 ? -x : 0; };
  std::vector<std::vector<long long>> e = B.entries();
  size_t ki = 0, kj = 0;
  for (size_t i = 0; i < B.rows().size(); ++i)
    if (B.rows()[i] == k) ki = i;
  for (size_t j = 0; j < B.cols().size(); ++j)
    if (B.cols()[j] == k) kj = j;
  std::vector<std::vector<long long>> r = e;
  for (size_t i = 0; i < B.rows().size(); ++i) {
    // Column index of row vertex i, when the row is also a column.
    for (size_t j = 0; j < B.cols().size(); ++j) {
      if (i == ki || j == kj) {
        r[i][j] = -e[i][j];
      } else {
        long long bik = e[i][kj];
        long long bkj = 0;
        // b_{kj}: row k, column j.
        bkj = e[ki][j];
        r[i][j] = e[i][j] + pos(bik) * pos(bkj) - neg(bik) * neg(bkj);
      }
    }
  }
  return ExtendedExchangeMatrix(B.rows(), B.cols(), std::move(r));
}

// Exact rank via fraction-free (Bareiss-style) elimination; true iff the
// rank equals the number of columns.
inline bool is_maximal_rank(const ExtendedExchangeMatrix& B) {
  size_t m = B.rows().size(), n = B.cols().size();
  if (n == 0) return true;
  if (m < n) return false;
  std::vector<std::vector<Int>> a(m, std::vector<Int>(n));
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < n; ++j) a[i][j] = B.entries()[i][j];
  size_t rank = 0;
  Int prev = 1;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pivot = rank;
    while (pivot < m && a[pivot][col] == 0) ++pivot;
    if (pivot == m) return false;  // rank-deficient column
    std::swap(a[pivot], a[rank]);
    for (size_t i = rank + 1; i < m; ++i) {
      for (size_t j = col + 1; j < n; ++j)
        a[i][j] = (a[rank][col] * a[i][j] - a[i][col] * a[rank][j]) / prev;
      a[i][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank == n;
}

struct MutationSequence {
  std::vector<VertexId> steps;
};

class Seed {
 public:
  Seed() = default;
  Seed(std::map<VertexId, VertexKind> vertices, ExtendedExchangeMatrix matrix,
       std::map<VertexId, RationalFunction> cluster = {},
       std::vector<VertexId> provenance = {},
       std::map<VariableId, RationalFunction> root_inverse = {})
      : vertices_(std::move(vertices)),
        matrix_(std::move(matrix)),
        cluster_(std::move(cluster)),
        provenance_(std::move(provenance)),
        root_inverse_(std::move(root_inverse)) {
    if (cluster_.empty()) {
      for (const auto& [v, k] : vertices_) cluster_[v] = RationalFunction::variable(v);
    }
    check_structure();
  }

  const std::map<VertexId, VertexKind>& vertices() const { return vertices_; }
  const ExtendedExchangeMatrix& matrix() const { return matrix_; }
  const std::map<VertexId, RationalFunction>& cluster() const { return cluster_; }
  const std::vector<VertexId>& provenance() const { return provenance_; }
  const std::map<VariableId, RationalFunction>& root_inverse() const { return root_inverse_; }

  VertexKind kind(const VertexId& v) const {
    auto it = vertices_.find(v);
    if (it == vertices_.end()) throw MalformedSeed("unknown vertex: " + v);
    return it->second;
  }
  bool is_mutable(const VertexId& v) const { return kind(v) == VertexKind::Unfrozen; }
  bool is_frozen(const VertexId& v) const { return !is_mutable(v); }

  const RationalFunction& variable(const VertexId& v) const {
    auto it = cluster_.find(v);
    if (it == cluster_.end()) throw MalformedSeed("unknown vertex: " + v);
    return it->second;
  }

  std::vector<VertexId> mutable_vertices() const {
    std::vector<VertexId> r;
    for (const auto& [v, k] : vertices_)
      if (k == VertexKind::Unfrozen) r.push_back(v);
    return r;
  }

  // The two exchange monomials x^{B+_{.k}} and x^{B-_{.k}}, expanded into
  // the root universe.
  std::pair<RationalFunction, RationalFunction> exchange_monomials(const VertexId& k) const {
    if (!is_mutable(k)) throw NotMutable("vertex is not mutable: " + k);
    RationalFunction plus(1), minus(1);
    for (const auto& i : matrix_.rows()) {
      long long b = matrix_.entry(i, k);
      if (b > 0) plus *= variable(i).pow(static_cast<int>(b));
      if (b < 0) minus *= variable(i).pow(static_cast<int>(-b));
    }
    return {plus, minus};
  }

  Seed mutate(const VertexId& k) const {
    auto [plus, minus] = exchange_monomials(k);
    Seed r = *this;
    r.matrix_ = mutate_matrix(matrix_, k);
    r.cluster_[k] = (plus + minus) / cluster_.at(k);
    r.provenance_.push_back(k);
    return r;
  }

  Seed apply(const MutationSequence& seq) const {
    Seed r = *this;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
      if (!r.is_mutable(seq.steps[i]))
        throw NotMutable("step " + std::to_string(i) + " mutates non-mutable vertex " +
                         seq.steps[i]);
      r = r.mutate(seq.steps[i]);
    }
    return r;
  }

  // Seed identity ignores provenance: same vertices, matrix, and cluster.
  friend bool operator==(const Seed& a, const Seed& b) {
    return a.vertices_ == b.vertices_ && a.matrix_ == b.matrix_ && a.cluster_ == b.cluster_;
  }
  friend bool operator!=(const Seed& a, const Seed& b) { return !(a == b); }

 private:
  void check_structure() const {
    std::set<VertexId> vs;
    for (const auto& [v, k] : vertices_) vs.insert(v);
    std::set<VertexId> rs(matrix_.rows().begin(), matrix_.rows().end());
    if (vs != rs) throw MalformedSeed("matrix rows differ from vertex set");
    for (const auto& c : matrix_.cols())
      if (kind(c) != VertexKind::Unfrozen)
        throw MalformedSeed("matrix column at frozen vertex: " + c);
    for (const auto& [v, k] : vertices_)
      if (k == VertexKind::Unfrozen && !matrix_.has_col(v))
        throw MalformedSeed("unfrozen vertex missing matrix column: " + v);
    std::set<VertexId> cs;
    for (const auto& [v, f] : cluster_) cs.insert(v);
    if (cs != vs) throw MalformedSeed("cluster keys differ from vertex set");
    for (const auto& p : provenance_)
      if (!vertices_.count(p)) throw MalformedSeed("provenance step at unknown vertex: " + p);
  }

  std::map<VertexId, VertexKind> vertices_;
  ExtendedExchangeMatrix matrix_;
  std::map<VertexId, RationalFunction> cluster_;
  std::vector<VertexId> provenance_;
  // Optional expression of the universe generators in the root seed's own
  // cluster variables (as formal symbols). Empty means the root cluster is
  // exactly the universe generators.
  std::map<VariableId, RationalFunction> root_inverse_;
};

// Minimal positive integer symmetrizer d with d_i b_ij = -d_j b_ji on the
// principal part, found by ratio propagation over connected components with
// cycle-consistency checks. Also re-checks the structural invariants.
inline std::map<VertexId, Int> validate_seed(const Seed& s) {
  const auto& B = s.matrix();
  const auto& cols = B.cols();
  size_t n = cols.size();
  std::map<VertexId, size_t> idx;
  for (size_t i = 0; i < n; ++i) idx[cols[i]] = i;

  // Sign pattern: b_ij and b_ji must be zero together or have opposite signs.
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) {
      long long bij = B.entry(cols[i], cols[j]);
      long long bji = B.entry(cols[j], cols[i]);
      if ((bij == 0) != (bji == 0) || bij * bji > 0)
        throw NotSkewSymmetrizable("sign condition fails at (" + cols[i] + "," + cols[j] + ")");
    }
  }

  // d_i / d_j = |b_ji| / |b_ij| along every edge; propagate rationals
  // (num, den) from an arbitrary root of each component.
  std::vector<Int> num(n, 0), den(n, 1);
  for (size_t start = 0; start < n; ++start) {
    if (num[start] != 0) continue;
    num[start] = 1;
    std::vector<size_t> stack{start};
    std::vector<size_t> component{start};
    while (!stack.empty()) {
      size_t i = stack.back();
      stack.pop_back();
      for (size_t j = 0; j < n; ++j) {
        long long bij = B.entry(cols[i], cols[j]);
        if (bij == 0) continue;
        long long bji = B.entry(cols[j], cols[i]);
        // d_j = d_i * |b_ij| / |b_ji|.
        Int nj = num[i] * Int(std::abs(bij));
        Int dj = den[i] * Int(std::abs(bji));
        Int g = boost::multiprecision::gcd(nj, dj);
        nj /= g;
        dj /= g;
        if (num[j] == 0) {
          num[j] = nj;
          den[j] = dj;
          stack.push_back(j);
          component.push_back(j);
        } else if (num[j] * dj != nj * den[j]) {
          throw NotSkewSymmetrizable("cycle inconsistency at vertex " + cols[j]);
        }
      }
    }
    // Scale the component to minimal positive integers.
    Int l = 1;
    for (size_t i : component) l = l / boost::multiprecision::gcd(l, den[i]) * den[i];
    Int g = 0;
    for (size_t i : component) {
      num[i] = num[i] * (l / den[i]);
      den[i] = 1;
      g = boost::multiprecision::gcd(g, num[i]);
    }
    for (size_t i : component) num[i] /= g;
  }

  // Verify the relation itself (ratio propagation fixes magnitudes; this
  // catches e.g. b_ij = 2, b_ji = -2 with inconsistent neighbors).
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      long long bij = B.entry(cols[i], cols[j]);
      long long bji = B.entry(cols[j], cols[i]);
      if (num[i] * bij != -num[j] * bji)
        throw NotSkewSymmetrizable("no integer symmetrizer at (" + cols[i] + "," + cols[j] + ")");
    }

  std::map<VertexId, Int> d;
  for (size_t i = 0; i < n; ++i) d[cols[i]] = num[i];
  return d;
}

// Rewrite f (a rational function in the root universe) in the variables of
// the seed s, treated as fresh independent generators. Replays the
// provenance: after a mutation at k, the old x_k equals the exchange
// binomial of the new seed divided by the new variable.
inline RationalFunction express_in_seed(const RationalFunction& f, const Seed& s) {
  RationalFunction r = f;
  if (!s.root_inverse().empty()) r = r.substitute(s.root_inverse());
  // Reconstruct matrices along the provenance by un-mutating from s.
  const auto& prov = s.provenance();
  std::vector<ExtendedExchangeMatrix> mats(prov.size() + 1);
  mats[prov.size()] = s.matrix();
  for (size_t j = prov.size(); j > 0; --j)
    mats[j - 1] = mutate_matrix(mats[j], prov[j - 1]);
  for (size_t j = 0; j < prov.size(); ++j) {
    const VertexId& k = prov[j];
    const ExtendedExchangeMatrix& B = mats[j];
    RationalFunction plus(1), minus(1);
    for (const auto& i : B.rows()) {
      long long b = B.entry(i, k);
      if (b > 0) plus *= RationalFunction::variable(i).pow(static_cast<int>(b));
      if (b < 0) minus *= RationalFunction::variable(i).pow(static_cast<int>(-b));
    }
    std::map<VariableId, RationalFunction> image;
    image[k] = (plus + minus) / RationalFunction::variable(k);
    r = r.substitute(image);
  }
  return r;
}

}  // namespace clift
