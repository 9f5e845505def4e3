#pragma once

#include <cstddef>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"

namespace otpart {

// Dynamic time warping with |f_a - g_b| pointwise cost over full monotone
// alignments. Curves may differ in length. Throws EmptyCurve.
double dtw(const Curve& a, const Curve& b);

// 1-Wasserstein distance between histograms on the same grid:
// bin_width * sum of absolute CDF differences. Throws GridMismatch when
// bin counts or widths differ.
double wasserstein1_hist(const Histogram& a, const Histogram& b);

// Averaged Hausdorff set distance: mean of the two directed averages
// of element-to-set minima under dist(x, y). Throws EmptySet.
template <class T, class Dist>
double hausdorff_avg(const std::vector<T>& xs, const std::vector<T>& ys,
                     Dist&& dist) {
  if (xs.empty() || ys.empty()) {
    throw EmptySet("hausdorff_avg: both sets must be non-empty");
  }
  auto directed = [&](const std::vector<T>& from, const std::vector<T>& to) {
    double acc = 0.0;
    for (const auto& x : from) {
      double best = dist(x, to.front());
      for (std::size_t i = 1; i < to.size(); ++i) {
        best = std::min(best, dist(x, to[i]));
      }
      acc += best;
    }
    return acc / static_cast<double>(from.size());
  };
  return 0.5 * (directed(xs, ys) + directed(ys, xs));
}

// Unnormalized beta-combination of the two components between bundles:
// beta * curve part + (1 - beta) * histogram part, each part an averaged
// Hausdorff distance over the bundle's sets (a plain pairwise distance
// when both sets are singletons). Both bundles must expose the same
// component kinds; BundleMismatch otherwise. Normalization across a node
// population happens in attribute_distance_matrix.
double attribute_distance(const AttributeBundle& a, const AttributeBundle& b,
                          double beta = 0.5);

// Pairwise node attribute distances: per component a full pairwise
// matrix, min-max normalized over off-diagonal entries (a component with
// zero spread contributes zeros), then beta-combined. When only one
// component kind is present it carries full weight. Throws BundleMismatch
// on inconsistent component kinds and EmptySet when bundles is empty.
DistanceMatrix attribute_distance_matrix(
    const std::vector<AttributeBundle>& bundles, double beta = 0.5);

}  // namespace otpart
