#pragma once

#include <cstddef>
#include <utility>

#include "otpart/mat.hpp"

namespace otpart {

// Square symmetric matrix with zero diagonal and finite non-negative
// entries; the constructor validates all of that.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;
  explicit DistanceMatrix(Mat m);

  std::size_t size() const { return mat_.rows; }
  double operator()(std::size_t i, std::size_t j) const { return mat_(i, j); }
  const Mat& mat() const { return mat_; }

  double max_entry() const;
  // mean over the off-diagonal entries; N < 2 throws DegenerateMatrix
  double mean_offdiag() const;

 private:
  Mat mat_;
};

// entries divided by the maximum; throws DegenerateMatrix when max == 0
DistanceMatrix normalize_max(const DistanceMatrix& d);

// off-diagonal entries affinely mapped onto [0, 1]; throws DegenerateMatrix
// when all off-diagonal entries are equal (nothing to spread)
DistanceMatrix minmax_normalize(const DistanceMatrix& d);

// alpha * ds + (1 - alpha) * da, both inputs expected in [0, 1]
DistanceMatrix combine_alpha(const DistanceMatrix& ds,
                             const DistanceMatrix& da, double alpha);

// entrywise square root (metric-preserving concave transform)
DistanceMatrix sqrt_transform(const DistanceMatrix& d);

}  // namespace otpart
