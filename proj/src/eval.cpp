#include "otpart/eval.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "otpart/attribute_metrics.hpp"
#include "otpart/errors.hpp"
#include "otpart/graph_core.hpp"
#include "otpart/parallel.hpp"
#include "otpart/rng.hpp"

namespace otpart {

namespace {

// contingency[a][b] = number of nodes labelled a in p1 and b in p2
std::vector<std::vector<std::size_t>> contingency(const Partition& p1,
                                                  const Partition& p2) {
  if (p1.assign.size() != p2.assign.size()) {
    throw SizeMismatch("partitions label different node counts");
  }
  std::vector<std::vector<std::size_t>> table(
      p1.k, std::vector<std::size_t>(p2.k, 0));
  for (std::size_t i = 0; i < p1.assign.size(); ++i) {
    ++table[p1.assign[i]][p2.assign[i]];
  }
  return table;
}

double comb2(double x) { return x * (x - 1.0) / 2.0; }

}  // namespace

double rand_index(const Partition& p1, const Partition& p2) {
  const auto table = contingency(p1, p2);
  const double n = static_cast<double>(p1.assign.size());
  if (n < 2.0) return 1.0;
  double same_same = 0.0;
  double row_pairs = 0.0;
  double col_pairs = 0.0;
  std::vector<double> col_tot(p2.k, 0.0);
  for (std::size_t a = 0; a < table.size(); ++a) {
    double row_tot = 0.0;
    for (std::size_t b = 0; b < table[a].size(); ++b) {
      same_same += comb2(static_cast<double>(table[a][b]));
      row_tot += static_cast<double>(table[a][b]);
      col_tot[b] += static_cast<double>(table[a][b]);
    }
    row_pairs += comb2(row_tot);
  }
  for (double c : col_tot) col_pairs += comb2(c);
  const double total = comb2(n);
  // agreements = pairs together in both + pairs apart in both
  const double agree = total + 2.0 * same_same - row_pairs - col_pairs;
  return agree / total;
}

double ari(const Partition& p1, const Partition& p2) {
  const auto table = contingency(p1, p2);
  const double n = static_cast<double>(p1.assign.size());
  double index = 0.0;
  double row_pairs = 0.0;
  double col_pairs = 0.0;
  std::vector<double> col_tot(p2.k, 0.0);
  for (std::size_t a = 0; a < table.size(); ++a) {
    double row_tot = 0.0;
    for (std::size_t b = 0; b < table[a].size(); ++b) {
      index += comb2(static_cast<double>(table[a][b]));
      row_tot += static_cast<double>(table[a][b]);
      col_tot[b] += static_cast<double>(table[a][b]);
    }
    row_pairs += comb2(row_tot);
  }
  for (double c : col_tot) col_pairs += comb2(c);
  const double total = comb2(n);
  if (total <= 0.0) return 1.0;
  const double expected = row_pairs * col_pairs / total;
  const double max_index = 0.5 * (row_pairs + col_pairs);
  const double denom = max_index - expected;
  if (denom == 0.0) return 1.0;  // both partitions trivial: treat as agreement
  return (index - expected) / denom;
}

std::vector<std::size_t> split_sizes(std::size_t n, std::size_t k) {
  if (k == 0 || n < k) throw InvalidArgument("need n >= k >= 1 communities");
  std::vector<std::size_t> sizes(k, n / k);
  for (std::size_t r = 0; r < n % k; ++r) ++sizes[r];
  return sizes;
}

ProblemInstance make_instance(const SweepSetting& s, const SweepConfig& cfg,
                              std::uint64_t rep_seed, Partition* truth) {
  const auto sizes = split_sizes(s.n, s.k);

  BlockModelConfig bm;
  bm.k = s.k;
  bm.sizes = sizes;
  bm.shape = s.shape;
  bm.b = s.b;
  bm.t = s.t;
  bm.rng_seed = derive_seed(rep_seed, 1, 0);
  const Mat block = block_matrix(bm);

  Rng sbm_rng(derive_seed(rep_seed, 2, 0));
  SbmSample sample = sample_sbm(block, sizes, sbm_rng, cfg.sbm_retries);

  ProblemInstance inst;
  inst.k = s.k;
  inst.block = block;
  inst.alpha = s.alpha;
  inst.beta = cfg.beta;
  inst.mu = sample.graph.mu;

  if (s.noise_structure) {
    Rng noise_rng(derive_seed(rep_seed, 5, 0));
    inst.ds = noise_distance_matrix(s.n, noise_rng);
  } else {
    inst.ds = normalize_max(geodesic_distances(sample.graph));
  }

  if (s.level > 0) {
    Rng attr_rng(derive_seed(rep_seed, 3, 0));
    attach_attributes(sample.graph, sample.labels, perturbation_level(s.level),
                      attr_rng, cfg.support_size, cfg.grid_size);
    inst.da = attribute_distance_matrix(sample.graph.attributes, cfg.beta);
  }

  if (truth != nullptr) *truth = sample.labels;
  return inst;
}

std::vector<SweepRow> monte_carlo(const SweepConfig& cfg) {
  if (cfg.settings.empty() || cfg.methods.empty() || cfg.reps == 0) {
    throw InvalidArgument("sweep needs settings, methods and reps >= 1");
  }
  const std::size_t ns = cfg.settings.size();
  const std::size_t nm = cfg.methods.size();

  // slot-indexed scores: [setting][method][rep], filled in any order
  std::vector<double> scores(ns * nm * cfg.reps, 0.0);
  std::vector<double> seconds(ns * nm * cfg.reps, 0.0);

  struct Job {
    std::size_t s, r;
  };
  std::vector<Job> jobs;
  jobs.reserve(ns * cfg.reps);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t r = 0; r < cfg.reps; ++r) jobs.push_back({s, r});
  }

  LossParams params;
  params.q = cfg.q;

  const long njobs = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic, 1) \
    num_threads(par::max_threads())
  for (long ji = 0; ji < njobs; ++ji) {
    const Job job = jobs[static_cast<std::size_t>(ji)];
    const SweepSetting& st = cfg.settings[job.s];
    const std::uint64_t rep_seed = derive_seed(cfg.master_seed, job.s, job.r);
    Partition truth;
    const ProblemInstance inst = make_instance(st, cfg, rep_seed, &truth);
    const std::uint64_t init_seed = derive_seed(rep_seed, 4, 0);
    for (std::size_t m = 0; m < nm; ++m) {
      const auto start = std::chrono::steady_clock::now();
      const MethodOutput out =
          run_method(inst, cfg.methods[m], params, init_seed);
      const auto stop = std::chrono::steady_clock::now();
      const std::size_t slot = (job.s * nm + m) * cfg.reps + job.r;
      scores[slot] = ari(out.partition, truth);
      seconds[slot] =
          std::chrono::duration<double>(stop - start).count();
    }
  }

  std::vector<SweepRow> rows;
  rows.reserve(ns * nm);
  for (std::size_t s = 0; s < ns; ++s) {
    for (std::size_t m = 0; m < nm; ++m) {
      SweepRow row;
      row.setting = cfg.settings[s];
      row.method = cfg.methods[m];
      row.reps = cfg.reps;
      double sum = 0.0, time_sum = 0.0;
      for (std::size_t r = 0; r < cfg.reps; ++r) {
        const std::size_t slot = (s * nm + m) * cfg.reps + r;
        sum += scores[slot];
        time_sum += seconds[slot];
      }
      row.mean_ari = sum / static_cast<double>(cfg.reps);
      row.mean_seconds = time_sum / static_cast<double>(cfg.reps);
      double sq = 0.0;
      for (std::size_t r = 0; r < cfg.reps; ++r) {
        const std::size_t slot = (s * nm + m) * cfg.reps + r;
        const double dev = scores[slot] - row.mean_ari;
        sq += dev * dev;
      }
      row.std_ari = std::sqrt(sq / static_cast<double>(cfg.reps));
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::FullyConnected: return "full";
    case Shape::Sparse: return "sparse";
    case Shape::Chain: return "chain";
    case Shape::Donut: return "donut";
    case Shape::Star: return "star";
  }
  throw InvalidArgument("unknown shape value");
}

Shape parse_shape(const std::string& name) {
  if (name == "full") return Shape::FullyConnected;
  if (name == "sparse") return Shape::Sparse;
  if (name == "chain") return Shape::Chain;
  if (name == "donut") return Shape::Donut;
  if (name == "star") return Shape::Star;
  throw ConfigError("unknown shape: " + name);
}

namespace {

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

}  // namespace

void write_results_csv(const std::vector<SweepRow>& rows,
                       const std::string& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << "shape,t,b,level,alpha,n,k,noise_structure,method,reps,"
         "mean_ari,std_ari\n";
  for (const auto& row : rows) {
    const auto& s = row.setting;
    out << shape_name(s.shape) << ',' << fmt_double(s.t) << ','
        << fmt_double(s.b) << ',' << s.level << ',' << fmt_double(s.alpha)
        << ',' << s.n << ',' << s.k << ',' << (s.noise_structure ? 1 : 0)
        << ',' << method_name(row.method) << ',' << row.reps << ','
        << fmt_double(row.mean_ari) << ',' << fmt_double(row.std_ari)
        << '\n';
  }
  if (!out) throw IoError("write failed: " + path);
}

std::vector<SweepRow> load_results_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open for reading: " + path);
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty results file: " + path);
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    if (fields.size() != 12) throw IoError("malformed results row: " + line);
    SweepRow row;
    row.setting.shape = parse_shape(fields[0]);
    row.setting.t = std::stod(fields[1]);
    row.setting.b = std::stod(fields[2]);
    row.setting.level = std::stoi(fields[3]);
    row.setting.alpha = std::stod(fields[4]);
    row.setting.n = static_cast<std::size_t>(std::stoul(fields[5]));
    row.setting.k = static_cast<std::size_t>(std::stoul(fields[6]));
    row.setting.noise_structure = fields[7] == "1";
    row.method = parse_method_name(fields[8]);
    row.reps = static_cast<std::size_t>(std::stoul(fields[9]));
    row.mean_ari = std::stod(fields[10]);
    row.std_ari = std::stod(fields[11]);
    rows.push_back(row);
  }
  return rows;
}

}  // namespace otpart
