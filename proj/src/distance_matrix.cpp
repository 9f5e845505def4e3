#include "otpart/distance_matrix.hpp"

#include <cmath>
#include <limits>

#include "otpart/errors.hpp"

namespace otpart {

DistanceMatrix::DistanceMatrix(Mat m) : mat_(std::move(m)) {
  if (mat_.rows != mat_.cols) {
    throw ShapeMismatch("distance matrix must be square");
  }
  const std::size_t n = mat_.rows;
  for (std::size_t i = 0; i < n; ++i) {
    if (mat_(i, i) != 0.0) {
      throw InvalidArgument("distance matrix must have zero diagonal");
    }
    for (std::size_t j = 0; j < n; ++j) {
      const double v = mat_(i, j);
      if (!std::isfinite(v) || v < 0.0) {
        throw InvalidArgument(
            "distance matrix entries must be finite and non-negative");
      }
      if (mat_(j, i) != v) {
        throw InvalidArgument("distance matrix must be symmetric");
      }
    }
  }
}

double DistanceMatrix::max_entry() const {
  double m = 0.0;
  for (double v : mat_.data) m = std::max(m, v);
  return m;
}

double DistanceMatrix::mean_offdiag() const {
  const std::size_t n = size();
  if (n < 2) throw DegenerateMatrix("mean_offdiag needs at least two points");
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) acc += mat_(i, j);
    }
  }
  return acc / static_cast<double>(n * (n - 1));
}

DistanceMatrix normalize_max(const DistanceMatrix& d) {
  const double m = d.max_entry();
  if (m <= 0.0) {
    throw DegenerateMatrix("normalize_max: all distances are zero");
  }
  Mat out = d.mat();
  for (auto& v : out.data) v /= m;
  return DistanceMatrix(std::move(out));
}

DistanceMatrix minmax_normalize(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      lo = std::min(lo, d(i, j));
      hi = std::max(hi, d(i, j));
    }
  }
  if (!(hi > lo)) {
    throw DegenerateMatrix("minmax_normalize: off-diagonal range is empty");
  }
  Mat out(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = (d(i, j) - lo) / (hi - lo);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(out));
}

DistanceMatrix combine_alpha(const DistanceMatrix& ds,
                             const DistanceMatrix& da, double alpha) {
  if (ds.size() != da.size()) {
    throw ShapeMismatch("combine_alpha: matrices differ in size");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("combine_alpha: alpha must lie in [0, 1]");
  }
  const std::size_t n = ds.size();
  Mat out(n, n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = alpha * ds(i, j) + (1.0 - alpha) * da(i, j);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(out));
}

DistanceMatrix sqrt_transform(const DistanceMatrix& d) {
  Mat out = d.mat();
  for (auto& v : out.data) v = std::sqrt(v);
  return DistanceMatrix(std::move(out));
}

}  // namespace otpart
