#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "otpart/graph.hpp"
#include "otpart/methods.hpp"
#include "otpart/synth.hpp"

namespace otpart {

// Fraction of node pairs placed consistently (same/same or diff/diff).
double rand_index(const Partition& p1, const Partition& p2);

// Chance-adjusted Rand index (contingency-table form); degenerate
// normalizer (both partitions trivial) yields 1.
double ari(const Partition& p1, const Partition& p2);

// One benchmark cell: generator knobs shared by every method.
struct SweepSetting {
  Shape shape = Shape::FullyConnected;
  double t = 1.0;
  double b = 0.15;
  int level = 0;           // 0 = no attributes, 1..5 = perturbation level
  double alpha = 0.5;      // structure weight when attributed
  std::size_t n = 200;
  std::size_t k = 5;
  bool noise_structure = false;  // replace the structure matrix by noise
};

struct SweepConfig {
  std::vector<SweepSetting> settings;
  std::vector<MethodSpec> methods;
  std::size_t reps = 100;
  std::uint64_t master_seed = 0;
  int q = 2;
  double beta = 0.5;
  std::size_t support_size = 20;
  std::size_t grid_size = 96;
  std::size_t sbm_retries = 50;
};

struct SweepRow {
  SweepSetting setting;
  MethodSpec method;
  std::size_t reps = 0;
  double mean_ari = 0.0;
  double std_ari = 0.0;
  double mean_seconds = 0.0;  // wall time; reported apart from the CSV
};

// Near-equal community sizes (remainder spread over the first groups).
std::vector<std::size_t> split_sizes(std::size_t n, std::size_t k);

// Builds one replication's shared inputs from its derived seed.
ProblemInstance make_instance(const SweepSetting& s, const SweepConfig& cfg,
                              std::uint64_t rep_seed, Partition* truth);

// Monte-Carlo sweep: per (setting, method), mean/std ARI against planted
// labels over reps replications. Replication r of setting s runs on the
// seed stream derived from (master_seed, s, r), so results are identical
// for any worker count.
std::vector<SweepRow> monte_carlo(const SweepConfig& cfg);

std::string shape_name(Shape s);
Shape parse_shape(const std::string& name);

// Deterministic results table (no timing column; see SweepRow).
void write_results_csv(const std::vector<SweepRow>& rows,
                       const std::string& path);
std::vector<SweepRow> load_results_csv(const std::string& path);

}  // namespace otpart
