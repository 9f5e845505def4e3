#include "otpart/attribute_metrics.hpp"

#include <cmath>
#include <limits>

#include "otpart/kernels.hpp"

namespace otpart {

double dtw(const Curve& a, const Curve& b) {
  const std::size_t n = a.samples.size();
  const std::size_t m = b.samples.size();
  if (n == 0 || m == 0) throw EmptyCurve("dtw: curves must be non-empty");
  const double inf = std::numeric_limits<double>::infinity();
  // two-row DP over the alignment grid
  std::vector<double> prev(m + 1, inf), cur(m + 1, inf);
  prev[0] = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    cur[0] = inf;
    const double ai = a.samples[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const double c = std::abs(ai - b.samples[j - 1]);
      const double best = std::min(prev[j], std::min(cur[j - 1], prev[j - 1]));
      cur[j] = c + best;
    }
    std::swap(prev, cur);
  }
  return prev[m];
}

double wasserstein1_hist(const Histogram& a, const Histogram& b) {
  if (a.masses.size() != b.masses.size() || a.bin_width != b.bin_width) {
    throw GridMismatch("wasserstein1_hist: histograms on different grids");
  }
  double cdf_diff = 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < a.masses.size(); ++i) {
    cdf_diff += a.masses[i] - b.masses[i];
    acc += std::abs(cdf_diff);
  }
  return a.bin_width * acc;
}

namespace {

struct Components {
  bool curves = false;
  bool histograms = false;
};

Components common_components(const AttributeBundle& a,
                             const AttributeBundle& b) {
  if (a.curves.empty() != b.curves.empty() ||
      a.histograms.empty() != b.histograms.empty()) {
    throw BundleMismatch("bundles expose different component kinds");
  }
  Components c{!a.curves.empty(), !a.histograms.empty()};
  if (!c.curves && !c.histograms) {
    throw BundleMismatch("bundles have no attributes");
  }
  return c;
}

double curve_part(const AttributeBundle& a, const AttributeBundle& b) {
  return hausdorff_avg(a.curves, b.curves,
                       [](const Curve& x, const Curve& y) { return dtw(x, y); });
}

double hist_part(const AttributeBundle& a, const AttributeBundle& b) {
  return hausdorff_avg(a.histograms, b.histograms,
                       [](const Histogram& x, const Histogram& y) {
                         return wasserstein1_hist(x, y);
                       });
}

}  // namespace

double attribute_distance(const AttributeBundle& a, const AttributeBundle& b,
                          double beta) {
  const Components c = common_components(a, b);
  if (c.curves && c.histograms) {
    return beta * curve_part(a, b) + (1.0 - beta) * hist_part(a, b);
  }
  return c.curves ? curve_part(a, b) : hist_part(a, b);
}

namespace {

// min-max over off-diagonal entries, in place; zero spread flattens the
// whole component to zero instead of erroring (identical attributes are
// a legitimate input here)
void minmax_inplace(Mat& m) {
  const std::size_t n = m.rows;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      lo = std::min(lo, m(i, j));
      hi = std::max(hi, m(i, j));
    }
  }
  if (!(hi > lo)) {
    for (auto& v : m.data) v = 0.0;
    return;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = (m(i, j) - lo) / (hi - lo);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
}

}  // namespace

DistanceMatrix attribute_distance_matrix(
    const std::vector<AttributeBundle>& bundles, double beta) {
  if (bundles.empty()) {
    throw EmptySet("attribute_distance_matrix: no bundles");
  }
  const std::size_t n = bundles.size();
  const Components c = common_components(bundles.front(), bundles.front());
  for (const auto& b : bundles) {
    (void)common_components(bundles.front(), b);
  }
  Mat curves_m, hists_m;
  if (c.curves) {
    curves_m = Mat(n, n, 0.0);
    kernels::fill_symmetric(curves_m, [&](std::size_t i, std::size_t j) {
      return curve_part(bundles[i], bundles[j]);
    });
    minmax_inplace(curves_m);
  }
  if (c.histograms) {
    hists_m = Mat(n, n, 0.0);
    kernels::fill_symmetric(hists_m, [&](std::size_t i, std::size_t j) {
      return hist_part(bundles[i], bundles[j]);
    });
    minmax_inplace(hists_m);
  }
  if (c.curves && c.histograms) {
    Mat out(n, n, 0.0);
    for (std::size_t i = 0; i < out.data.size(); ++i) {
      out.data[i] = beta * curves_m.data[i] + (1.0 - beta) * hists_m.data[i];
    }
    return DistanceMatrix(std::move(out));
  }
  return DistanceMatrix(c.curves ? std::move(curves_m) : std::move(hists_m));
}

}  // namespace otpart
