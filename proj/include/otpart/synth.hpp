#pragma once

#include <cstdint>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"
#include "otpart/mat.hpp"
#include "otpart/rng.hpp"

namespace otpart {

enum class Shape { FullyConnected, Sparse, Chain, Donut, Star };

struct BlockModelConfig {
  std::size_t k = 5;
  std::vector<std::size_t> sizes;  // per-group node counts
  Shape shape = Shape::FullyConnected;
  double b = 0.15;  // upper bound of the uniform base entries
  double t = 1.0;  // structure-strength boost on the diagonal
  std::uint64_t rng_seed = 0;
};

// Community connection matrix: A ~ U(0,b) entrywise, shape mask applied
// (Sparse keeps each off-diagonal pair with probability 1/2, resampling
// the mask until the kept pairs form a connected group graph; Chain keeps
// |r-s| <= 1; Donut adds the {0, k-1} wrap; Star keeps pairs involving
// group 0), then P = A + t*I, symmetrize, column-normalize, symmetrize
// again so the Bernoulli parameters stay symmetric, clip to [0,1].
Mat block_matrix(const BlockModelConfig& cfg);

struct SbmSample {
  AttributedGraph graph;
  Partition labels;
};

// One Bernoulli draw per unordered node pair with probability
// p[group(i)][group(j)]; unit edge lengths, uniform node weights, nodes
// ordered group by group. Disconnected draws are retried on the same
// stream up to max_retries, then DisconnectedSample is thrown.
SbmSample sample_sbm(const Mat& p, const std::vector<std::size_t>& sizes,
                     Rng& rng, std::size_t max_retries = 50);

// --- cubic B-spline machinery (clamped basis on [0,1]) ---

// Clamped knot vector for n_basis cubic basis functions: endpoint knots
// repeated degree+1 times, interior knots uniform.
std::vector<double> bspline_knots(std::size_t n_basis, int degree);

// Evaluate sum_l coeffs[l] * B_{l,degree}(x) for every x in grid.
std::vector<double> eval_bspline(const std::vector<double>& coeffs,
                                 int degree,
                                 const std::vector<double>& knots,
                                 const std::vector<double>& grid);

std::vector<double> uniform_grid(std::size_t n);  // n points spanning [0,1]

// Group-wise functional attributes: per group, 24 base coefficients
// U(0,1); per node, the base plus U(-epsilon, epsilon) coefficient noise;
// curves sampled on a uniform grid. Nodes come out group-major.
std::vector<Curve> gen_splines(std::size_t k,
                               const std::vector<std::size_t>& counts,
                               double epsilon, Rng& rng,
                               std::size_t grid_size = 96);

// Group-wise histogram attributes: per group a base distribution drawn
// from Dirichlet(U(0,1) concentrations); per node a draw from
// Dirichlet(c * base). Larger c concentrates nodes near the base.
std::vector<Histogram> gen_histograms(std::size_t k,
                                      const std::vector<std::size_t>& counts,
                                      double c, std::size_t support_size,
                                      Rng& rng, double bin_width = 1.0);

struct PerturbationLevel {
  int level = 1;
  double epsilon = 0.05;  // spline coefficient noise amplitude
  double c = 1000.0;      // Dirichlet concentration scale
};

// The five calibrated (epsilon, c) pairs; BadLevel outside 1..5.
PerturbationLevel perturbation_level(int level);

// Attach one curve + one histogram per node (group-major generation
// matches the sample_sbm node order).
void attach_attributes(AttributedGraph& g, const Partition& labels,
                       const PerturbationLevel& level, Rng& rng,
                       std::size_t support_size = 20,
                       std::size_t grid_size = 96);

// Structure-free stand-in for a distance matrix: symmetric U(0,1)
// off-diagonal entries, zero diagonal.
DistanceMatrix noise_distance_matrix(std::size_t n, Rng& rng);

// Additive N(0, sigma) on the off-diagonal entries (one draw per pair),
// clipped at zero.
DistanceMatrix add_gaussian_noise(const DistanceMatrix& d, double sigma,
                                  Rng& rng);

}  // namespace otpart
