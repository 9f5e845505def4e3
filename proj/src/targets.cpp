#include "otpart/targets.hpp"

#include <cmath>

#include "otpart/errors.hpp"
#include "otpart/kernels.hpp"

namespace otpart {

DistanceMatrix equidistant_target(std::size_t k, double delta) {
  if (k == 0) throw InvalidArgument("equidistant_target: k must be positive");
  if (!(delta > 0.0)) {
    throw BadDelta("equidistant_target: delta must be positive");
  }
  Mat out(k, k, delta);
  for (std::size_t i = 0; i < k; ++i) out(i, i) = 0.0;
  return DistanceMatrix(std::move(out));
}

double delta_from(const DistanceMatrix& d, DeltaMode mode) {
  if (d.size() < 2) throw DegenerateMatrix("delta_from: need N >= 2");
  return mode == DeltaMode::Mean ? d.mean_offdiag() : d.max_entry();
}

DistanceMatrix coarsened_target(const Mat& p) {
  if (p.rows != p.cols || p.rows == 0) {
    throw ShapeMismatch("coarsened_target: block matrix must be square");
  }
  const std::size_t k = p.rows;
  kernels::AdjGraph adj;
  adj.n = k;
  adj.adj.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const double pr = p(r, s);
      const double ps = p(s, r);
      if (!(pr >= 0.0) || !(ps >= 0.0) || !std::isfinite(pr) ||
          !std::isfinite(ps)) {
        throw InvalidArgument(
            "coarsened_target: block entries must be non-negative");
      }
      if (pr != ps) {
        throw InvalidArgument("coarsened_target: block matrix must be symmetric");
      }
      if (pr > 0.0) {
        const double len = 1.0 / pr;
        adj.adj[r].emplace_back(static_cast<std::uint32_t>(s), len);
        adj.adj[s].emplace_back(static_cast<std::uint32_t>(r), len);
      }
    }
  }
  Mat out(k, k, 0.0);
  kernels::apsp_serial(adj, out);
  for (double v : out.data) {
    if (!std::isfinite(v)) {
      throw DisconnectedTarget("coarsened_target: block graph is disconnected");
    }
  }
  for (std::size_t r = 0; r < k; ++r) {
    for (std::size_t s = r + 1; s < k; ++s) {
      const double v = std::min(out(r, s), out(s, r));
      out(r, s) = v;
      out(s, r) = v;
    }
  }
  return DistanceMatrix(std::move(out));
}

DistanceMatrix build_target(const TargetSpec& spec,
                            const DistanceMatrix& source) {
  switch (spec.kind) {
    case TargetKind::EquidistantMean:
      return equidistant_target(spec.k, delta_from(source, DeltaMode::Mean));
    case TargetKind::EquidistantMax:
      return equidistant_target(spec.k, delta_from(source, DeltaMode::Max));
    case TargetKind::Coarsened: {
      if (spec.block.rows != spec.k) {
        throw ShapeMismatch("build_target: block size differs from k");
      }
      return coarsened_target(spec.block);
    }
  }
  throw InvalidArgument("build_target: unknown target kind");
}

}  // namespace otpart
