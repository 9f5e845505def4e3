#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otpart/errors.hpp"

namespace otpart {

// Evenly sampled function values (e.g. an elevation profile).
struct Curve {
  std::vector<double> samples;
};

// Discrete histogram on a shared integer-indexed grid with uniform bins.
struct Histogram {
  std::vector<double> masses;
  double bin_width = 1.0;
};

// Per-node attribute payload: a set of curves and a set of histograms.
struct AttributeBundle {
  std::vector<Curve> curves;
  std::vector<Histogram> histograms;
  bool empty() const { return curves.empty() && histograms.empty(); }
};

struct AttributedGraph {
  struct Edge {
    std::uint32_t i = 0;
    std::uint32_t j = 0;
    double length = 1.0;
  };

  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<double> mu;                   // node weights, sums to 1
  std::vector<AttributeBundle> attributes;  // empty, or one bundle per node

  bool attributed() const { return !attributes.empty(); }

  static AttributedGraph with_uniform_mu(std::size_t n,
                                         std::vector<Edge> edges);

  // Throws (EmptyGraph, ShapeMismatch, InvalidArgument) on violated
  // invariants: valid endpoints, positive lengths, no self loops,
  // mu a probability vector, bundles consistent with n and non-empty,
  // histogram masses on matching grids summing to one.
  void validate() const;
};

// Hard labeling of nodes into k clusters (ids 0..k-1; clusters may be empty).
struct Partition {
  std::vector<std::uint32_t> assign;
  std::uint32_t k = 0;
};

// JSON (de)serialization; numbers survive a round trip exactly.
std::string graph_to_json(const AttributedGraph& g);
AttributedGraph graph_from_json(const std::string& text);
void save_graph(const AttributedGraph& g, const std::string& path);
AttributedGraph load_graph(const std::string& path);

// labels CSV header: "node_id,group"; partition CSV header:
// "node_id,cluster"; one row per node either way, nodes in order.
void save_labels_csv(const Partition& p, const std::string& path);
void save_partition_csv(const Partition& p, const std::string& path);
Partition load_labels_csv(const std::string& path);

}  // namespace otpart
