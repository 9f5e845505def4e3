// Serial vs OpenMP variants of the shared kernels on synthetic inputs.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "otpart/kernels.hpp"
#include "otpart/mat.hpp"
#include "otpart/rng.hpp"

namespace {

using namespace otpart;
using namespace otpart::kernels;

Mat random_mat(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  Rng rng(seed);
  Mat m(rows, cols);
  for (auto& v : m.data) v = rng.uniform01();
  return m;
}

AdjGraph ring_graph(std::size_t n, std::size_t extra, std::uint64_t seed) {
  Rng rng(seed);
  AdjGraph g;
  g.n = n;
  g.adj.resize(n);
  auto add = [&g](std::size_t i, std::size_t j, double w) {
    g.adj[i].push_back({static_cast<std::uint32_t>(j), w});
    g.adj[j].push_back({static_cast<std::uint32_t>(i), w});
  };
  for (std::size_t i = 0; i < n; ++i) {
    add(i, (i + 1) % n, 1.0 + rng.uniform01());
  }
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t i = rng.uniform_index(n);
    const std::size_t j = rng.uniform_index(n);
    if (i != j) add(i, j, 1.0 + rng.uniform01());
  }
  return g;
}

void BM_apsp_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdjGraph g = ring_graph(n, n * 3, 7);
  Mat out(n, n);
  for (auto _ : state) {
    apsp_serial(g, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_apsp_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const AdjGraph g = ring_graph(n, n * 3, 7);
  Mat out(n, n);
  for (auto _ : state) {
    apsp_parallel(g, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_gemm_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 11);
  const Mat b = random_mat(n, 8, 13);
  Mat out(n, 8);
  for (auto _ : state) {
    gemm_serial(a, b, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_gemm_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat a = random_mat(n, n, 11);
  const Mat b = random_mat(n, 8, 13);
  Mat out(n, 8);
  for (auto _ : state) {
    gemm_parallel(a, b, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_pairwise_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat rows = random_mat(n, 16, 17);
  Mat out(n, n);
  for (auto _ : state) {
    pairwise_euclidean_serial(rows, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_pairwise_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Mat rows = random_mat(n, 16, 17);
  Mat out(n, n);
  for (auto _ : state) {
    pairwise_euclidean_parallel(rows, out);
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_fill_symmetric_serial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat out(n, n);
  for (auto _ : state) {
    fill_symmetric_serial(out, [](std::size_t i, std::size_t j) {
      return static_cast<double>(i * 31 + j);
    });
    benchmark::DoNotOptimize(out.data.data());
  }
}

void BM_fill_symmetric_parallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Mat out(n, n);
  for (auto _ : state) {
    fill_symmetric_parallel(out, [](std::size_t i, std::size_t j) {
      return static_cast<double>(i * 31 + j);
    });
    benchmark::DoNotOptimize(out.data.data());
  }
}

}  // namespace

BENCHMARK(BM_apsp_serial)->Arg(100)->Arg(300);
BENCHMARK(BM_apsp_parallel)->Arg(100)->Arg(300);
BENCHMARK(BM_gemm_serial)->Arg(100)->Arg(300);
BENCHMARK(BM_gemm_parallel)->Arg(100)->Arg(300);
BENCHMARK(BM_pairwise_serial)->Arg(100)->Arg(300);
BENCHMARK(BM_pairwise_parallel)->Arg(100)->Arg(300);
BENCHMARK(BM_fill_symmetric_serial)->Arg(200)->Arg(500);
BENCHMARK(BM_fill_symmetric_parallel)->Arg(200)->Arg(500);

BENCHMARK_MAIN();
