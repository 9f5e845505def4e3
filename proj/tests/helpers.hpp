#pragma once

// Random test-data builders shared by the suites; all deterministic in
// the caller-provided Rng.

#include <cstdint>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"
#include "otpart/mat.hpp"
#include "otpart/rng.hpp"

namespace testdata {

inline otpart::DistanceMatrix random_distance_matrix(std::size_t n,
                                                     otpart::Rng& rng,
                                                     double lo = 0.1,
                                                     double hi = 1.0) {
  otpart::Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = rng.uniform(lo, hi);
      m(i, j) = v;
      m(j, i) = v;
    }
  }
  return otpart::DistanceMatrix(std::move(m));
}

inline std::vector<double> random_mu(std::size_t n, otpart::Rng& rng) {
  std::vector<double> mu(n);
  double total = 0.0;
  for (auto& v : mu) {
    v = 0.2 + rng.uniform01();
    total += v;
  }
  for (auto& v : mu) v /= total;
  return mu;
}

inline std::vector<double> uniform_mu(std::size_t n) {
  return std::vector<double>(n, 1.0 / static_cast<double>(n));
}

// Random feasible soft plan: positive rows rescaled to mu.
inline otpart::Mat random_plan(const std::vector<double>& mu, std::size_t k,
                               otpart::Rng& rng) {
  otpart::Mat t(mu.size(), k);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    double total = 0.0;
    for (std::size_t l = 0; l < k; ++l) {
      t(i, l) = 0.05 + rng.uniform01();
      total += t(i, l);
    }
    for (std::size_t l = 0; l < k; ++l) t(i, l) *= mu[i] / total;
  }
  return t;
}

inline otpart::Partition random_partition(std::size_t n, std::uint32_t k,
                                          otpart::Rng& rng) {
  otpart::Partition p;
  p.k = k;
  p.assign.resize(n);
  for (auto& a : p.assign) {
    a = static_cast<std::uint32_t>(rng.uniform_index(k));
  }
  return p;
}

inline otpart::Curve random_curve(std::size_t len, otpart::Rng& rng) {
  otpart::Curve c;
  c.samples.resize(len);
  for (auto& s : c.samples) s = rng.uniform(-1.0, 1.0);
  return c;
}

inline otpart::Histogram random_histogram(std::size_t bins, otpart::Rng& rng,
                                          double bin_width = 1.0) {
  otpart::Histogram h;
  h.bin_width = bin_width;
  h.masses.resize(bins);
  double total = 0.0;
  for (auto& m : h.masses) {
    m = 0.01 + rng.uniform01();
    total += m;
  }
  for (auto& m : h.masses) m /= total;
  return h;
}

}  // namespace testdata
