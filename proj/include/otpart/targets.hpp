#pragma once

#include <cstddef>

#include "otpart/distance_matrix.hpp"
#include "otpart/mat.hpp"

namespace otpart {

enum class TargetKind { EquidistantMean, EquidistantMax, Coarsened };
enum class DeltaMode { Mean, Max };

struct TargetSpec {
  TargetKind kind = TargetKind::EquidistantMean;
  std::size_t k = 1;
  Mat block;  // k x k connection probabilities; Coarsened only
};

// delta * (all-ones minus identity). Throws BadDelta when delta <= 0.
DistanceMatrix equidistant_target(std::size_t k, double delta);

// Scale pulled from a source matrix: mean of off-diagonal entries, or the
// global maximum. Throws DegenerateMatrix when N < 2.
double delta_from(const DistanceMatrix& d, DeltaMode mode);

// Treat the block matrix as an adjacency matrix: edge (r, s) iff p_rs > 0
// with length 1 / p_rs (self entries ignored); return all-pairs shortest
// paths. Throws DisconnectedTarget / ShapeMismatch / InvalidArgument.
DistanceMatrix coarsened_target(const Mat& p);

// Resolve a TargetSpec against the source structure matrix.
DistanceMatrix build_target(const TargetSpec& spec, const DistanceMatrix& source);

}  // namespace otpart
