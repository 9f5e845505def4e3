#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "otpart/distance_matrix.hpp"
#include "otpart/frechet_kmeans.hpp"
#include "otpart/graph.hpp"
#include "otpart/ot_solvers.hpp"
#include "otpart/targets.hpp"

namespace otpart {

enum class Algo { FrechetKmeans, Srgw, Srfgw };

// A clustering method as benchmarked: algorithm x target x plain/embedded.
struct MethodSpec {
  Algo algo = Algo::Srgw;
  TargetKind target = TargetKind::EquidistantMean;
  bool embedded = false;
};

std::string method_name(const MethodSpec& m);   // e.g. "embedded-srgw-mean"
MethodSpec parse_method(const std::string& algo, const std::string& target,
                        bool embedded);
// Inverse of method_name; throws ConfigError on anything it never prints.
MethodSpec parse_method_name(const std::string& name);

// Everything a method run needs, prepared once per replication and shared
// across methods: normalized structure matrix, combined attribute matrix,
// node weights, cluster count, and the block matrix for coarsened targets.
struct ProblemInstance {
  DistanceMatrix ds;
  std::optional<DistanceMatrix> da;
  std::vector<double> mu;
  std::size_t k = 1;
  Mat block;
  double alpha = 0.5;  // structure weight when attributes are present
  double beta = 0.5;   // curve weight inside the attribute distance
  bool attributed() const { return da.has_value(); }
};

struct MethodOutput {
  Partition partition;
  double final_loss = 0.0;
  std::uint32_t nonempty_k = 0;
  std::vector<double> loss_trace;
  std::vector<std::size_t> barycenter_ids;
};

// Runs one method on a prepared instance. Initialization is k-means++ on
// the combined matrix (embedded variants seed one embedding level up);
// solvers start from the induced hard plan. seed fixes the seeding draw.
MethodOutput run_method(const ProblemInstance& inst, const MethodSpec& spec,
                        const LossParams& params, std::uint64_t seed);

}  // namespace otpart
