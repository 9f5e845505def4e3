#include "otpart/graph_core.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "otpart/kernels.hpp"

namespace otpart {

DistanceMatrix geodesic_distances(const AttributedGraph& g) {
  if (g.n == 0) throw EmptyGraph("geodesic_distances: graph has no nodes");
  kernels::AdjGraph adj;
  adj.n = g.n;
  adj.adj.resize(g.n);
  for (const auto& e : g.edges) {
    adj.adj[e.i].emplace_back(e.j, e.length);
    adj.adj[e.j].emplace_back(e.i, e.length);
  }
  Mat out(g.n, g.n, 0.0);
  kernels::apsp(adj, out);
  for (double v : out.data) {
    if (!std::isfinite(v)) {
      throw DisconnectedGraph("geodesic_distances: graph is not connected");
    }
  }
  // Dijkstra from i and from j agree up to float noise only in exotic
  // cases; force exact symmetry so the DistanceMatrix invariant holds.
  for (std::size_t i = 0; i < g.n; ++i) {
    for (std::size_t j = i + 1; j < g.n; ++j) {
      const double v = std::min(out(i, j), out(j, i));
      out(i, j) = v;
      out(j, i) = v;
    }
  }
  return DistanceMatrix(std::move(out));
}

AttributedGraph dual_graph(const AttributedGraph& primal) {
  if (primal.edges.empty()) {
    throw EmptyGraph("dual_graph: primal graph has no edges");
  }
  const std::size_t m = primal.edges.size();
  std::vector<std::vector<std::uint32_t>> incident(primal.n);
  for (std::size_t e = 0; e < m; ++e) {
    incident[primal.edges[e].i].push_back(static_cast<std::uint32_t>(e));
    incident[primal.edges[e].j].push_back(static_cast<std::uint32_t>(e));
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
  std::vector<AttributedGraph::Edge> dual_edges;
  for (const auto& inc : incident) {
    for (std::size_t a = 0; a < inc.size(); ++a) {
      for (std::size_t b = a + 1; b < inc.size(); ++b) {
        const auto lo = std::min(inc[a], inc[b]);
        const auto hi = std::max(inc[a], inc[b]);
        if (lo == hi) continue;  // same primal edge via both endpoints
        if (!seen.emplace(lo, hi).second) continue;
        AttributedGraph::Edge de;
        de.i = lo;
        de.j = hi;
        de.length =
            0.5 * (primal.edges[lo].length + primal.edges[hi].length);
        dual_edges.push_back(de);
      }
    }
  }
  return AttributedGraph::with_uniform_mu(m, std::move(dual_edges));
}

}  // namespace otpart
