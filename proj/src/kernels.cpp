#include "otpart/kernels.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <queue>

#include <omp.h>

#include "otpart/parallel.hpp"

namespace otpart::par {

namespace {
std::atomic<int> g_max_threads{0};  // 0 = hardware default
}

int max_threads() {
  const int v = g_max_threads.load(std::memory_order_relaxed);
  return v > 0 ? v : omp_get_max_threads();
}

void set_max_threads(int n) {
  g_max_threads.store(n > 0 ? n : 0, std::memory_order_relaxed);
}

}  // namespace otpart::par

namespace otpart::kernels {

namespace {

void dijkstra_row(const AdjGraph& g, std::size_t src, double* dist) {
  const double inf = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < g.n; ++i) dist[i] = inf;
  dist[src] = 0.0;
  using Item = std::pair<double, std::uint32_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
  pq.emplace(0.0, static_cast<std::uint32_t>(src));
  while (!pq.empty()) {
    const auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    for (const auto& [v, w] : g.adj[u]) {
      const double nd = d + w;
      if (nd < dist[v]) {
        dist[v] = nd;
        pq.emplace(nd, v);
      }
    }
  }
}

}  // namespace

void apsp_serial(const AdjGraph& g, Mat& out) {
  for (std::size_t s = 0; s < g.n; ++s) dijkstra_row(g, s, out.row(s));
}

void apsp_parallel(const AdjGraph& g, Mat& out) {
  const std::int64_t n = static_cast<std::int64_t>(g.n);
#pragma omp parallel for schedule(dynamic, 4) num_threads(par::max_threads())
  for (std::int64_t s = 0; s < n; ++s) {
    dijkstra_row(g, static_cast<std::size_t>(s),
                 out.row(static_cast<std::size_t>(s)));
  }
}

void apsp(const AdjGraph& g, Mat& out) {
  if (par::max_threads() > 1) {
    apsp_parallel(g, out);
  } else {
    apsp_serial(g, out);
  }
}

namespace {

inline void gemm_row(const Mat& a, const Mat& b, Mat& out, std::size_t i) {
  double* oi = out.row(i);
  for (std::size_t j = 0; j < out.cols; ++j) oi[j] = 0.0;
  const double* ai = a.row(i);
  for (std::size_t l = 0; l < a.cols; ++l) {
    const double ail = ai[l];
    if (ail == 0.0) continue;
    const double* bl = b.row(l);
    for (std::size_t j = 0; j < out.cols; ++j) oi[j] += ail * bl[j];
  }
}

}  // namespace

void gemm_serial(const Mat& a, const Mat& b, Mat& out) {
  for (std::size_t i = 0; i < a.rows; ++i) gemm_row(a, b, out, i);
}

void gemm_parallel(const Mat& a, const Mat& b, Mat& out) {
  const std::int64_t n = static_cast<std::int64_t>(a.rows);
#pragma omp parallel for schedule(static) num_threads(par::max_threads())
  for (std::int64_t i = 0; i < n; ++i) {
    gemm_row(a, b, out, static_cast<std::size_t>(i));
  }
}

void gemm(const Mat& a, const Mat& b, Mat& out) {
  if (par::max_threads() > 1) {
    gemm_parallel(a, b, out);
  } else {
    gemm_serial(a, b, out);
  }
}

namespace {

inline double row_distance(const Mat& pts, std::size_t i, std::size_t j) {
  const double* a = pts.row(i);
  const double* b = pts.row(j);
  double acc = 0.0;
  for (std::size_t d = 0; d < pts.cols; ++d) {
    const double diff = a[d] - b[d];
    acc += diff * diff;
  }
  return std::sqrt(acc);
}

}  // namespace

void pairwise_euclidean_serial(const Mat& pts, Mat& out) {
  fill_symmetric_serial(
      out, [&](std::size_t i, std::size_t j) { return row_distance(pts, i, j); });
}

void pairwise_euclidean_parallel(const Mat& pts, Mat& out) {
  fill_symmetric_parallel(
      out, [&](std::size_t i, std::size_t j) { return row_distance(pts, i, j); });
}

void pairwise_euclidean(const Mat& pts, Mat& out) {
  if (par::max_threads() > 1) {
    pairwise_euclidean_parallel(pts, out);
  } else {
    pairwise_euclidean_serial(pts, out);
  }
}

}  // namespace otpart::kernels
