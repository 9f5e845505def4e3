#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "otpart/errors.hpp"
#include "otpart/graph.hpp"
#include "otpart/graph_core.hpp"
#include "otpart/rng.hpp"

using namespace otpart;

namespace {

AttributedGraph sample_graph() {
  AttributedGraph g = AttributedGraph::with_uniform_mu(
      4, {{0, 1, 1.0}, {1, 2, 0.5}, {2, 3, 2.0}, {0, 3, 0.25}});
  AttributeBundle b;
  b.curves.push_back({{0.0, 0.5, 1.0}});
  b.histograms.push_back({{0.25, 0.75}, 1.0});
  g.attributes.assign(4, b);
  g.attributes[2].curves[0].samples[1] = -3.0;
  return g;
}

std::string temp_path(const char* name) {
  return std::string("/tmp/otpart_test_") + name;
}

}  // namespace

TEST_SUITE("graph") {

TEST_CASE("validate accepts the sample and rejects broken graphs") {
  AttributedGraph g = sample_graph();
  CHECK_NOTHROW(g.validate());

  AttributedGraph empty;
  CHECK_THROWS_AS(empty.validate(), EmptyGraph);

  AttributedGraph self = g;
  self.edges.push_back({1, 1, 1.0});
  CHECK_THROWS_AS(self.validate(), InvalidArgument);

  AttributedGraph zero_len = g;
  zero_len.edges[0].length = 0.0;
  CHECK_THROWS_AS(zero_len.validate(), InvalidArgument);

  AttributedGraph bad_mu = g;
  bad_mu.mu[0] += 0.5;
  CHECK_THROWS_AS(bad_mu.validate(), InvalidArgument);

  AttributedGraph bad_bundle = g;
  bad_bundle.attributes[1] = AttributeBundle{};
  CHECK_THROWS_AS(bad_bundle.validate(), InvalidArgument);

  AttributedGraph bad_hist = g;
  bad_hist.attributes[0].histograms[0].masses = {0.2, 0.2};
  CHECK_THROWS_AS(bad_hist.validate(), InvalidArgument);

  AttributedGraph few = g;
  few.attributes.pop_back();
  CHECK_THROWS_AS(few.validate(), ShapeMismatch);
}

TEST_CASE("JSON round trip is exact") {
  const AttributedGraph g = sample_graph();
  const AttributedGraph back = graph_from_json(graph_to_json(g));
  CHECK(back.n == g.n);
  REQUIRE(back.edges.size() == g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    CHECK(back.edges[e].i == g.edges[e].i);
    CHECK(back.edges[e].j == g.edges[e].j);
    CHECK(back.edges[e].length == g.edges[e].length);  // bitwise
  }
  CHECK(back.mu == g.mu);
  REQUIRE(back.attributes.size() == 4);
  CHECK(back.attributes[2].curves[0].samples == g.attributes[2].curves[0].samples);
  CHECK(back.attributes[0].histograms[0].masses ==
        g.attributes[0].histograms[0].masses);
  CHECK(back.attributes[0].histograms[0].bin_width == 1.0);

  // awkward doubles survive
  AttributedGraph tricky = g;
  tricky.edges[0].length = 0.1 + 0.2;  // not representable tidily
  const AttributedGraph t2 = graph_from_json(graph_to_json(tricky));
  CHECK(t2.edges[0].length == tricky.edges[0].length);
}

TEST_CASE("file I/O and CSV round trips") {
  const AttributedGraph g = sample_graph();
  const std::string gp = temp_path("graph.json");
  save_graph(g, gp);
  const AttributedGraph back = load_graph(gp);
  CHECK(back.n == g.n);
  CHECK(back.mu == g.mu);

  Partition p;
  p.k = 3;
  p.assign = {0, 2, 1, 2};
  const std::string lp = temp_path("labels.csv");
  save_labels_csv(p, lp);
  const Partition lb = load_labels_csv(lp);
  CHECK(lb.assign == p.assign);
  CHECK(lb.k == 3);

  std::ifstream in(lp);
  std::string header;
  std::getline(in, header);
  CHECK(header == "node_id,group");

  const std::string pp = temp_path("partition.csv");
  save_partition_csv(p, pp);
  std::ifstream pin(pp);
  std::getline(pin, header);
  CHECK(header == "node_id,cluster");
  std::string row;
  std::getline(pin, row);
  CHECK(row == "0,0");

  CHECK_THROWS_AS(load_graph(temp_path("missing.json")), IoError);
  std::remove(gp.c_str());
  std::remove(lp.c_str());
  std::remove(pp.c_str());
}

TEST_CASE("geodesic distances agree with Floyd-Warshall") {
  Rng rng(55);
  for (int rep = 0; rep < 4; ++rep) {
    std::vector<AttributedGraph::Edge> edges;
    const std::size_t n = 9;
    for (std::size_t i = 1; i < n; ++i) {
      edges.push_back({static_cast<std::uint32_t>(rng.uniform_index(i)),
                       static_cast<std::uint32_t>(i),
                       0.25 + rng.uniform01()});
    }
    for (int e = 0; e < 6; ++e) {
      const auto i = static_cast<std::uint32_t>(rng.uniform_index(n));
      const auto j = static_cast<std::uint32_t>(rng.uniform_index(n));
      if (i != j) edges.push_back({i, j, 0.25 + rng.uniform01()});
    }
    const AttributedGraph g = AttributedGraph::with_uniform_mu(n, edges);
    const DistanceMatrix got = geodesic_distances(g);
    const Mat want = oracle::apsp_fw(n, edges);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        CHECK(got(i, j) == doctest::Approx(want(i, j)).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("geodesic error paths") {
  CHECK_THROWS_AS(geodesic_distances(AttributedGraph{}), EmptyGraph);
  const AttributedGraph split =
      AttributedGraph::with_uniform_mu(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK_THROWS_AS(geodesic_distances(split), DisconnectedGraph);
}

TEST_CASE("parallel edges collapse to the shortest length") {
  const AttributedGraph g = AttributedGraph::with_uniform_mu(
      2, {{0, 1, 5.0}, {0, 1, 2.0}, {1, 0, 9.0}});
  const DistanceMatrix d = geodesic_distances(g);
  CHECK(d(0, 1) == 2.0);
}

TEST_CASE("dual graph of a path and a triangle") {
  // path 0-1-2: two primal edges sharing node 1 -> dual K2
  const AttributedGraph path =
      AttributedGraph::with_uniform_mu(3, {{0, 1, 1.0}, {1, 2, 3.0}});
  const AttributedGraph dp = dual_graph(path);
  CHECK(dp.n == 2);
  REQUIRE(dp.edges.size() == 1);
  CHECK(dp.edges[0].length == doctest::Approx(2.0));  // mean of 1 and 3
  CHECK(dp.mu == std::vector<double>{0.5, 0.5});

  // triangle: three edges, each pair shares a node -> dual triangle
  const AttributedGraph tri = AttributedGraph::with_uniform_mu(
      3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  const AttributedGraph dt = dual_graph(tri);
  CHECK(dt.n == 3);
  CHECK(dt.edges.size() == 3);

  CHECK_THROWS_AS(dual_graph(AttributedGraph::with_uniform_mu(3, {})),
                  EmptyGraph);
}

}  // TEST_SUITE
