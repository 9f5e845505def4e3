#pragma once

#include "otpart/distance_matrix.hpp"
#include "otpart/graph.hpp"

namespace otpart {

// Shortest-path distances along edge lengths. Throws EmptyGraph /
// DisconnectedGraph.
DistanceMatrix geodesic_distances(const AttributedGraph& g);

// Line-graph construction: one node per primal edge, dual edges between
// primal edges sharing an endpoint, dual length = mean of the two primal
// lengths. Primal attributes are not carried over. Parallel primal edges
// (same endpoints) each become their own dual node. Throws EmptyGraph
// when there are no primal edges.
AttributedGraph dual_graph(const AttributedGraph& primal);

}  // namespace otpart
