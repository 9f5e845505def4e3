#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <omp.h>

#include "otpart/mat.hpp"
#include "otpart/parallel.hpp"

// Hot loops, each in a serial reference version and an OpenMP version.
// The unsuffixed entry points dispatch on par::max_threads(). Parallel
// versions only split loops with disjoint outputs, so the two always
// produce bitwise-identical results (the test suite checks this).
namespace otpart::kernels {

// Fills a symmetric zero-diagonal n x n matrix from f(i, j) on i < j.
template <class F>
void fill_symmetric_serial(Mat& out, F&& f) {
  const std::size_t n = out.rows;
  for (std::size_t i = 0; i < n; ++i) {
    out(i, i) = 0.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double v = f(i, j);
      out(i, j) = v;
      out(j, i) = v;
    }
  }
}

template <class F>
void fill_symmetric_parallel(Mat& out, F&& f) {
  const std::int64_t n = static_cast<std::int64_t>(out.rows);
#pragma omp parallel for schedule(dynamic, 1) num_threads(par::max_threads())
  for (std::int64_t i = 0; i < n; ++i) {
    out(i, i) = 0.0;
    for (std::int64_t j = i + 1; j < n; ++j) {
      const double v = f(static_cast<std::size_t>(i),
                         static_cast<std::size_t>(j));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
}

template <class F>
void fill_symmetric(Mat& out, F&& f) {
  if (par::max_threads() > 1) {
    fill_symmetric_parallel(out, std::forward<F>(f));
  } else {
    fill_symmetric_serial(out, std::forward<F>(f));
  }
}

// Weighted adjacency list; undirected edges stored in both directions.
struct AdjGraph {
  std::size_t n = 0;
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
};

// All-pairs shortest path lengths (Dijkstra per source); unreachable
// pairs come out as +infinity.
void apsp_serial(const AdjGraph& g, Mat& out);
void apsp_parallel(const AdjGraph& g, Mat& out);
void apsp(const AdjGraph& g, Mat& out);

// out = a * b, shapes (n x m) (m x p)
void gemm_serial(const Mat& a, const Mat& b, Mat& out);
void gemm_parallel(const Mat& a, const Mat& b, Mat& out);
void gemm(const Mat& a, const Mat& b, Mat& out);

// Euclidean distances between the rows of pts (n x d) into out (n x n)
void pairwise_euclidean_serial(const Mat& pts, Mat& out);
void pairwise_euclidean_parallel(const Mat& pts, Mat& out);
void pairwise_euclidean(const Mat& pts, Mat& out);

}  // namespace otpart::kernels
