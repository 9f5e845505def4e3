#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "oracles.hpp"
#include "otpart/kernels.hpp"
#include "otpart/parallel.hpp"
#include "otpart/rng.hpp"

using namespace otpart;
using namespace otpart::kernels;

namespace {

AdjGraph random_connected_graph(std::size_t n, std::size_t extra, Rng& rng,
                                std::vector<AttributedGraph::Edge>* edges_out) {
  AdjGraph g;
  g.n = n;
  g.adj.resize(n);
  std::vector<AttributedGraph::Edge> edges;
  auto add = [&](std::size_t i, std::size_t j, double w) {
    g.adj[i].push_back({static_cast<std::uint32_t>(j), w});
    g.adj[j].push_back({static_cast<std::uint32_t>(i), w});
    edges.push_back({static_cast<std::uint32_t>(i),
                     static_cast<std::uint32_t>(j), w});
  };
  for (std::size_t i = 1; i < n; ++i) {
    add(i, rng.uniform_index(i), 0.5 + rng.uniform01());
  }
  for (std::size_t e = 0; e < extra; ++e) {
    const std::size_t i = rng.uniform_index(n);
    const std::size_t j = rng.uniform_index(n);
    if (i != j) add(i, j, 0.5 + rng.uniform01());
  }
  if (edges_out != nullptr) *edges_out = edges;
  return g;
}

struct ThreadGuard {
  explicit ThreadGuard(std::size_t n) { par::set_max_threads(n); }
  ~ThreadGuard() { par::set_max_threads(1); }
};

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("apsp matches Floyd-Warshall and handles unreachable pairs") {
  Rng rng(101);
  for (int rep = 0; rep < 5; ++rep) {
    std::vector<AttributedGraph::Edge> edges;
    const AdjGraph g = random_connected_graph(12, 10, rng, &edges);
    Mat got(12, 12);
    apsp_serial(g, got);
    const Mat want = oracle::apsp_fw(12, edges);
    for (std::size_t i = 0; i < 12; ++i) {
      for (std::size_t j = 0; j < 12; ++j) {
        CHECK(got(i, j) == doctest::Approx(want(i, j)).epsilon(1e-12));
      }
    }
  }

  AdjGraph two;
  two.n = 2;
  two.adj.resize(2);
  Mat d(2, 2);
  apsp_serial(two, d);
  CHECK(d(0, 0) == 0.0);
  CHECK(std::isinf(d(0, 1)));
}

TEST_CASE("serial and parallel kernels are bitwise identical") {
  Rng rng(202);
  std::vector<AttributedGraph::Edge> edges;
  const AdjGraph g = random_connected_graph(30, 40, rng, &edges);

  Mat a(30, 30);
  for (auto& v : a.data) v = rng.uniform01();
  Mat b(30, 7);
  for (auto& v : b.data) v = rng.uniform01();
  Mat pts(30, 5);
  for (auto& v : pts.data) v = rng.uniform01();

  Mat apsp_s(30, 30), apsp_p(30, 30);
  Mat gemm_s(30, 7), gemm_p(30, 7);
  Mat pair_s(30, 30), pair_p(30, 30);
  Mat fill_s(30, 30), fill_p(30, 30);

  apsp_serial(g, apsp_s);
  gemm_serial(a, b, gemm_s);
  pairwise_euclidean_serial(pts, pair_s);
  auto f = [&](std::size_t i, std::size_t j) {
    return a(i, j) * 3.0 + b(i % 30, j % 7);
  };
  fill_symmetric_serial(fill_s, f);

  {
    ThreadGuard threads(4);
    apsp_parallel(g, apsp_p);
    gemm_parallel(a, b, gemm_p);
    pairwise_euclidean_parallel(pts, pair_p);
    fill_symmetric_parallel(fill_p, f);
  }

  CHECK(apsp_s.data == apsp_p.data);
  CHECK(gemm_s.data == gemm_p.data);
  CHECK(pair_s.data == pair_p.data);
  CHECK(fill_s.data == fill_p.data);
}

TEST_CASE("dispatch follows the thread budget") {
  Rng rng(303);
  Mat a(8, 8);
  for (auto& v : a.data) v = rng.uniform01();
  Mat b(8, 3);
  for (auto& v : b.data) v = rng.uniform01();

  Mat direct(8, 3), via_one(8, 3), via_many(8, 3);
  gemm_serial(a, b, direct);
  gemm(a, b, via_one);
  {
    ThreadGuard threads(3);
    gemm(a, b, via_many);
  }
  CHECK(direct.data == via_one.data);
  CHECK(direct.data == via_many.data);
}

TEST_CASE("gemm and pairwise against naive loops") {
  Rng rng(404);
  Mat a(6, 9);
  for (auto& v : a.data) v = rng.uniform(-1.0, 1.0);
  Mat b(9, 4);
  for (auto& v : b.data) v = rng.uniform(-1.0, 1.0);
  Mat got(6, 4);
  gemm_serial(a, b, got);
  for (std::size_t i = 0; i < 6; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      double want = 0.0;
      for (std::size_t t = 0; t < 9; ++t) want += a(i, t) * b(t, j);
      CHECK(got(i, j) == doctest::Approx(want).epsilon(1e-12));
    }
  }

  Mat pts(7, 3);
  for (auto& v : pts.data) v = rng.uniform(-2.0, 2.0);
  Mat dist(7, 7);
  pairwise_euclidean_serial(pts, dist);
  for (std::size_t i = 0; i < 7; ++i) {
    for (std::size_t j = 0; j < 7; ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < 3; ++t) {
        const double diff = pts(i, t) - pts(j, t);
        acc += diff * diff;
      }
      CHECK(dist(i, j) == doctest::Approx(std::sqrt(acc)).epsilon(1e-12));
    }
  }
}

TEST_CASE("fill_symmetric writes a symmetric zero-diagonal matrix") {
  Mat m(5, 5, -1.0);
  fill_symmetric_serial(m, [](std::size_t i, std::size_t j) {
    return static_cast<double>(10 * i + j);
  });
  for (std::size_t i = 0; i < 5; ++i) {
    CHECK(m(i, i) == 0.0);
    for (std::size_t j = 0; j < 5; ++j) CHECK(m(i, j) == m(j, i));
  }
  CHECK(m(0, 1) == 1.0);  // computed once from the upper triangle
}

}  // TEST_SUITE
