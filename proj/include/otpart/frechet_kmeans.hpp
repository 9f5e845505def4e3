#pragma once

#include <cstdint>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"

namespace otpart {

enum class SeedMode { Random, PlusPlusOnV, PlusPlusOnD, PlusPlusOnD1 };

struct Seeding {
  SeedMode mode = SeedMode::PlusPlusOnD;
  std::uint64_t rng_seed = 0;
};

// The metric a seeding mode runs on, given the base matrix d:
//   PlusPlusOnV / Random -> d itself
//   PlusPlusOnD          -> Euclidean distances between rows of d
//   PlusPlusOnD1         -> Euclidean distances between rows of the
//                           embedded matrix (one more embedding step)
DistanceMatrix seeding_metric(const DistanceMatrix& d, SeedMode mode);

// k-means++ seeding: first center uniform, each next center sampled with
// probability proportional to the squared distance to the nearest chosen
// center. Returns k distinct node ids. Throws KTooLarge when k > N.
std::vector<std::size_t> kmeanspp_seed(const DistanceMatrix& d, std::size_t k,
                                       const Seeding& seeding);

// Nearest-center hard assignment under the seeding-mode metric (ties ->
// smallest center index); the standard way to turn seeds into an initial
// partition or transport plan.
Partition assign_to_centers(const DistanceMatrix& metric,
                            const std::vector<std::size_t>& centers);

struct KmeansResult {
  Partition partition;
  std::vector<std::size_t> centers;
  std::vector<double> objective_trace;  // objective after init, then per sweep
  std::size_t iterations = 0;
};

// Lloyd iteration on (V, d): nearest-center assignment alternating with
// medoid updates restricted to cluster members, m_j = argmin_{x in C_j}
// sum_{v in C_j} d(v,x)^2 mu(v). Ties break to the smallest index; an
// empty cluster keeps its previous center. Stops on a center fixpoint or
// after max_iter sweeps. Throws InvalidCenters on duplicate / out-of-range
// / wrongly sized init_centers.
KmeansResult lloyd_frechet(const DistanceMatrix& d,
                           const std::vector<double>& mu, std::size_t k,
                           const std::vector<std::size_t>& init_centers,
                           std::size_t max_iter = 100);

// sum_j sum_{v in C_j} d(v, m_j)^2 mu(v)
double frechet_objective(const DistanceMatrix& d,
                         const std::vector<double>& mu, const Partition& p,
                         const std::vector<std::size_t>& centers);

}  // namespace otpart
