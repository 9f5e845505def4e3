#pragma once

#include "otpart/distance_matrix.hpp"
#include "otpart/mat.hpp"

namespace otpart {

// Node i embedded as row i of the distance matrix.
Mat embed_rows(const DistanceMatrix& d);

// Convex combination of the two row maps: point i = alpha * row i of ds
// + (1 - alpha) * row i of da (coincides with the rows of the combined
// distance matrix). Throws ShapeMismatch / InvalidArgument.
Mat embed_rows_alpha(const DistanceMatrix& ds, const DistanceMatrix& da,
                     double alpha);

// Euclidean distances between the rows of pts. Throws DimensionMismatch
// when fewer than two points are given.
DistanceMatrix euclidean_pairwise(const Mat& pts);

// One embedding step: distances between the rows of d.
DistanceMatrix embed(const DistanceMatrix& d);

}  // namespace otpart
