// Shared test utilities: deterministic RNG and random skew-symmetrizable
// seed generation at desk scale.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "clift/lifting.hpp"
#include "clift/seed.hpp"

namespace testutil {

using namespace clift;

// Random seed with n_uf mutable and n_f highly frozen vertices; the
// principal part is a_ij * d_j with a skew-symmetric and d_j in {1,2}, so it
// is skew-symmetrizable by construction with entries in [-2,2].
inline Seed random_seed(std::mt19937& rng, int n_uf, int n_f,
                        bool semifrozen_allowed = true) {
  std::uniform_int_distribution<int> a_dist(-1, 1);
  std::uniform_int_distribution<int> d_dist(1, 2);
  std::uniform_int_distribution<int> f_dist(-2, 2);
  std::uniform_int_distribution<int> kind_dist(0, 1);

  std::vector<int> d(n_uf);
  for (int j = 0; j < n_uf; ++j) d[j] = d_dist(rng);
  std::vector<std::vector<int>> a(n_uf, std::vector<int>(n_uf, 0));
  for (int i = 0; i < n_uf; ++i)
    for (int j = i + 1; j < n_uf; ++j) {
      a[i][j] = a_dist(rng);
      a[j][i] = -a[i][j];
    }

  std::map<VertexId, VertexKind> vs;
  std::vector<VertexId> rows, cols;
  for (int i = 0; i < n_uf; ++i) {
    VertexId id = "u" + std::to_string(i + 1);
    vs[id] = VertexKind::Unfrozen;
    rows.push_back(id);
    cols.push_back(id);
  }
  for (int i = 0; i < n_f; ++i) {
    VertexId id = "f" + std::to_string(i + 1);
    vs[id] = (semifrozen_allowed && kind_dist(rng)) ? VertexKind::Semifrozen
                                                    : VertexKind::HighlyFrozen;
    rows.push_back(id);
  }
  std::vector<std::vector<long long>> entries;
  for (int i = 0; i < n_uf; ++i) {
    std::vector<long long> r;
    for (int j = 0; j < n_uf; ++j) r.push_back(static_cast<long long>(a[i][j]) * d[j]);
    entries.push_back(std::move(r));
  }
  for (int i = 0; i < n_f; ++i) {
    std::vector<long long> r;
    for (int j = 0; j < n_uf; ++j) r.push_back(f_dist(rng));
    entries.push_back(std::move(r));
  }
  return Seed(vs, ExtendedExchangeMatrix(rows, cols, entries));
}

inline std::vector<VertexId> random_sequence(std::mt19937& rng, const Seed& s, int len) {
  std::vector<VertexId> uf = s.mutable_vertices();
  std::vector<VertexId> seq;
  if (uf.empty()) return seq;
  std::uniform_int_distribution<size_t> pick(0, uf.size() - 1);
  for (int i = 0; i < len; ++i) seq.push_back(uf[pick(rng)]);
  return seq;
}

// Random graded seed: lift a random base seed by a random integer matrix;
// the canonical grading of the lift satisfies the grading condition by
// construction.
inline std::pair<Seed, DegreeConfiguration> random_graded_seed(std::mt19937& rng, int n_uf,
                                                               int n_f, int n_d) {
  Seed base = random_seed(rng, n_uf, n_f);
  std::uniform_int_distribution<int> nu_dist(-2, 2);
  LiftingData data;
  for (const auto& [v, k] : base.vertices()) data.cols.push_back(v);
  for (int i = 0; i < n_d; ++i) {
    data.D.push_back("d" + std::to_string(i + 1));
    std::vector<long long> row;
    for (size_t j = 0; j < data.cols.size(); ++j) row.push_back(nu_dist(rng));
    data.nu.push_back(std::move(row));
  }
  LiftedSeed L = lift_seed(base, data);
  return {L.seed, L.grading};
}

}  // namespace testutil
