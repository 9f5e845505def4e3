#include "otpart/embeddings.hpp"

#include "otpart/errors.hpp"
#include "otpart/kernels.hpp"

namespace otpart {

Mat embed_rows(const DistanceMatrix& d) { return d.mat(); }

Mat embed_rows_alpha(const DistanceMatrix& ds, const DistanceMatrix& da,
                     double alpha) {
  if (ds.size() != da.size()) {
    throw ShapeMismatch("embed_rows_alpha: matrices differ in size");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0)) {
    throw InvalidArgument("embed_rows_alpha: alpha must lie in [0, 1]");
  }
  const std::size_t n = ds.size();
  Mat pts(n, n, 0.0);
  for (std::size_t i = 0; i < pts.data.size(); ++i) {
    pts.data[i] = alpha * ds.mat().data[i] + (1.0 - alpha) * da.mat().data[i];
  }
  return pts;
}

DistanceMatrix euclidean_pairwise(const Mat& pts) {
  if (pts.rows < 2) {
    throw DimensionMismatch("euclidean_pairwise: need at least two points");
  }
  Mat out(pts.rows, pts.rows, 0.0);
  kernels::pairwise_euclidean(pts, out);
  return DistanceMatrix(std::move(out));
}

DistanceMatrix embed(const DistanceMatrix& d) {
  return euclidean_pairwise(embed_rows(d));
}

}  // namespace otpart
