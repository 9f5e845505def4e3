// Command-line front end: generate benchmark graphs, cluster a single
// graph, run Monte-Carlo sweeps, and summarize result tables.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "otpart/attribute_metrics.hpp"
#include "otpart/errors.hpp"
#include "otpart/eval.hpp"
#include "otpart/graph.hpp"
#include "otpart/graph_core.hpp"
#include "otpart/methods.hpp"
#include "otpart/parallel.hpp"
#include "otpart/rng.hpp"
#include "otpart/synth.hpp"

namespace {

using nlohmann::json;
using namespace otpart;

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("bad JSON in " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open for writing: " + path);
  out << text;
  if (!out) throw IoError("write failed: " + path);
}

// ---------------------------------------------------------------- generate

struct GenerateOpts {
  std::string config;
  std::string out_graph = "graph.json";
  std::string out_labels = "labels.csv";
  std::optional<std::uint64_t> seed;
  std::optional<std::string> shape;
  std::optional<std::size_t> n, k;
  std::optional<double> t, b;
  std::optional<int> level;
};

int cmd_generate(const GenerateOpts& opt) {
  json cfg = json::object();
  if (!opt.config.empty()) cfg = load_json_file(opt.config);

  const std::string shape_str =
      opt.shape.value_or(cfg.value("shape", std::string("full")));
  const std::size_t k = opt.k.value_or(cfg.value("k", std::size_t{5}));
  const std::size_t n = opt.n.value_or(cfg.value("n", std::size_t{200}));
  const double t = opt.t.value_or(cfg.value("t", 1.0));
  const double b = opt.b.value_or(cfg.value("b", 0.15));
  const int level = opt.level.value_or(cfg.value("level", 0));
  const std::size_t support = cfg.value("support_size", std::size_t{20});
  const std::size_t grid = cfg.value("grid_size", std::size_t{96});
  const std::uint64_t seed =
      opt.seed.value_or(cfg.value("seed", std::uint64_t{0}));

  std::vector<std::size_t> sizes;
  if (cfg.contains("sizes")) {
    sizes = cfg.at("sizes").get<std::vector<std::size_t>>();
    if (sizes.size() != k) throw ConfigError("sizes must list k group counts");
  } else {
    sizes = split_sizes(n, k);
  }

  BlockModelConfig bm;
  bm.k = k;
  bm.sizes = sizes;
  bm.shape = parse_shape(shape_str);
  bm.b = b;
  bm.t = t;
  bm.rng_seed = derive_seed(seed, 1, 0);
  const Mat block = block_matrix(bm);

  Rng sbm_rng(derive_seed(seed, 2, 0));
  SbmSample sample = sample_sbm(block, sizes, sbm_rng);

  if (level > 0) {
    Rng attr_rng(derive_seed(seed, 3, 0));
    attach_attributes(sample.graph, sample.labels, perturbation_level(level),
                      attr_rng, support, grid);
  }

  sample.graph.validate();
  save_graph(sample.graph, opt.out_graph);
  save_labels_csv(sample.labels, opt.out_labels);
  std::cout << "generate: wrote " << opt.out_graph << " ("
            << sample.graph.n << " nodes, " << sample.graph.edges.size()
            << " edges) and " << opt.out_labels << "\n";
  return 0;
}

// ----------------------------------------------------------------- cluster

struct ClusterOpts {
  std::string config;
  std::string graph;
  std::string method;
  std::string target = "mean";
  bool embedded = false;
  std::size_t k = 0;
  double alpha = 0.5;
  double beta = 0.5;
  int q = 2;
  std::uint64_t seed = 0;
  std::string out_partition = "partition.csv";
  std::string out_record = "run_record.json";
};

int cmd_cluster(ClusterOpts opt) {
  if (!opt.config.empty()) {
    const json cfg = load_json_file(opt.config);
    if (opt.graph.empty()) opt.graph = cfg.value("graph", std::string());
    if (opt.method.empty()) opt.method = cfg.value("method", std::string());
    opt.target = cfg.value("target", opt.target);
    opt.embedded = cfg.value("embedded", opt.embedded);
    if (opt.k == 0) opt.k = cfg.value("k", std::size_t{0});
    opt.alpha = cfg.value("alpha", opt.alpha);
    opt.beta = cfg.value("beta", opt.beta);
    opt.q = cfg.value("q", opt.q);
    opt.seed = cfg.value("seed", opt.seed);
  }
  if (opt.graph.empty()) throw ConfigError("cluster needs --graph");
  if (opt.method.empty()) throw ConfigError("cluster needs --method");
  if (opt.k == 0) throw ConfigError("cluster needs --k >= 1");

  const MethodSpec spec = parse_method(opt.method, opt.target, opt.embedded);
  if (spec.target == TargetKind::Coarsened) {
    throw ConfigError(
        "coarsened targets need the generating block matrix; use sweep");
  }

  AttributedGraph g = load_graph(opt.graph);
  g.validate();

  ProblemInstance inst;
  inst.ds = normalize_max(geodesic_distances(g));
  if (g.attributed()) {
    inst.da = attribute_distance_matrix(g.attributes, opt.beta);
  }
  inst.mu = g.mu;
  inst.k = opt.k;
  inst.alpha = opt.alpha;
  inst.beta = opt.beta;

  LossParams params;
  params.q = opt.q;
  params.alpha = opt.alpha;

  const auto start = std::chrono::steady_clock::now();
  const MethodOutput out = run_method(inst, spec, params, opt.seed);
  const auto stop = std::chrono::steady_clock::now();

  save_partition_csv(out.partition, opt.out_partition);

  json record;
  record["command"] = "cluster";
  record["graph"] = opt.graph;
  record["method"] = method_name(spec);
  record["n"] = g.n;
  record["k"] = opt.k;
  record["alpha"] = opt.alpha;
  record["beta"] = opt.beta;
  record["q"] = opt.q;
  record["seed"] = opt.seed;
  record["final_loss"] = out.final_loss;
  record["nonempty_k"] = out.nonempty_k;
  record["iterations"] = out.loss_trace.size();
  record["loss_trace"] = out.loss_trace;
  record["barycenter_ids"] = out.barycenter_ids;
  record["partition_file"] = opt.out_partition;
  record["seconds"] =
      std::chrono::duration<double>(stop - start).count();
  write_text_file(opt.out_record, record.dump(2) + "\n");

  std::cout << "cluster: " << method_name(spec) << " on " << g.n
            << " nodes -> " << out.nonempty_k << " non-empty clusters, loss "
            << out.final_loss << "\n";
  return 0;
}

// ------------------------------------------------------------------- sweep

SweepSetting setting_from_json(const json& j) {
  SweepSetting s;
  s.shape = parse_shape(j.value("shape", std::string("full")));
  s.t = j.value("t", 1.0);
  s.b = j.value("b", 0.15);
  s.level = j.value("level", 0);
  s.alpha = j.value("alpha", 0.5);
  s.n = j.value("n", std::size_t{200});
  s.k = j.value("k", std::size_t{5});
  s.noise_structure = j.value("noise_structure", false);
  return s;
}

MethodSpec method_from_json(const json& j) {
  if (j.is_string()) return parse_method_name(j.get<std::string>());
  return parse_method(j.value("algo", std::string("srgw")),
                      j.value("target", std::string("mean")),
                      j.value("embedded", false));
}

std::string setting_label(const SweepSetting& s) {
  std::ostringstream os;
  os << shape_name(s.shape) << " t=" << s.t;
  if (s.level > 0) os << " L" << s.level;
  if (s.noise_structure) os << " noise";
  return os.str();
}

const char* kPalette[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                          "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                          "#9c755f", "#bab0ac"};

// Grouped bar chart of mean ARI per (setting, method). Plain hand-rolled
// SVG; presentation only.
std::string results_svg(const std::vector<SweepRow>& rows) {
  std::vector<std::string> settings;
  std::vector<std::string> methods;
  std::map<std::pair<std::size_t, std::size_t>, double> value;
  for (const auto& row : rows) {
    const std::string sl = setting_label(row.setting);
    const std::string ml = method_name(row.method);
    std::size_t si = settings.size(), mi = methods.size();
    for (std::size_t i = 0; i < settings.size(); ++i) {
      if (settings[i] == sl) { si = i; break; }
    }
    if (si == settings.size()) settings.push_back(sl);
    for (std::size_t i = 0; i < methods.size(); ++i) {
      if (methods[i] == ml) { mi = i; break; }
    }
    if (mi == methods.size()) methods.push_back(ml);
    value[{si, mi}] = row.mean_ari;
  }

  const double width = 180.0 + 140.0 * static_cast<double>(settings.size());
  const double height = 420.0;
  const double left = 60.0, bottom = 360.0, top = 40.0;
  const double span = bottom - top;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << " "
     << height << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<text x=\"" << left << "\" y=\"24\" font-family=\"sans-serif\" "
        "font-size=\"15\">mean ARI by setting and method</text>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    const double v = 0.2 * tick;
    const double y = bottom - span * v;
    os << "<line x1=\"" << left << "\" y1=\"" << y << "\" x2=\""
       << width - 20.0 << "\" y2=\"" << y
       << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    os << "<text x=\"" << left - 36.0 << "\" y=\"" << y + 4.0
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << v
       << "</text>\n";
  }
  const double group_w = 140.0;
  const double bar_w =
      methods.empty() ? 10.0
                      : std::min(24.0, (group_w - 30.0) /
                                           static_cast<double>(methods.size()));
  for (std::size_t si = 0; si < settings.size(); ++si) {
    const double gx = left + 20.0 + group_w * static_cast<double>(si);
    for (std::size_t mi = 0; mi < methods.size(); ++mi) {
      const auto it = value.find({si, mi});
      if (it == value.end()) continue;
      const double v = std::max(0.0, std::min(1.0, it->second));
      const double h = span * v;
      os << "<rect x=\"" << gx + bar_w * static_cast<double>(mi) << "\" y=\""
         << bottom - h << "\" width=\"" << bar_w - 2.0 << "\" height=\"" << h
         << "\" fill=\"" << kPalette[mi % 10] << "\"/>\n";
    }
    os << "<text x=\"" << gx << "\" y=\"" << bottom + 16.0
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << settings[si]
       << "</text>\n";
  }
  for (std::size_t mi = 0; mi < methods.size(); ++mi) {
    const double y = top + 16.0 * static_cast<double>(mi);
    os << "<rect x=\"" << width - 170.0 << "\" y=\"" << y - 9.0
       << "\" width=\"10\" height=\"10\" fill=\"" << kPalette[mi % 10]
       << "\"/>\n";
    os << "<text x=\"" << width - 156.0 << "\" y=\"" << y
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << methods[mi]
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

struct SweepOpts {
  std::string config;
  std::uint64_t seed = 0;
  std::size_t jobs = 0;
  std::optional<std::size_t> reps;
  std::string out = "results.csv";
  std::string svg;
};

int cmd_sweep(const SweepOpts& opt) {
  const json cfg = load_json_file(opt.config);

  SweepConfig sc;
  sc.master_seed = opt.seed;
  sc.reps = opt.reps.value_or(cfg.value("reps", std::size_t{100}));
  sc.q = cfg.value("q", 2);
  sc.beta = cfg.value("beta", 0.5);
  sc.support_size = cfg.value("support_size", std::size_t{20});
  sc.grid_size = cfg.value("grid_size", std::size_t{96});
  if (!cfg.contains("settings") || !cfg.contains("methods")) {
    throw ConfigError("sweep config needs settings[] and methods[]");
  }
  for (const auto& j : cfg.at("settings")) {
    sc.settings.push_back(setting_from_json(j));
  }
  for (const auto& j : cfg.at("methods")) {
    sc.methods.push_back(method_from_json(j));
  }

  par::set_max_threads(opt.jobs);

  const auto start = std::chrono::steady_clock::now();
  const std::vector<SweepRow> rows = monte_carlo(sc);
  const auto stop = std::chrono::steady_clock::now();

  write_results_csv(rows, opt.out);
  if (!opt.svg.empty()) write_text_file(opt.svg, results_svg(rows));

  std::cout << "sweep: " << sc.settings.size() << " settings x "
            << sc.methods.size() << " methods x " << sc.reps << " reps in "
            << std::chrono::duration<double>(stop - start).count()
            << " s -> " << opt.out << "\n";
  return 0;
}

// ------------------------------------------------------------------ report

struct ReportOpts {
  std::string results;
  std::string out;
  std::string svg;
};

int cmd_report(const ReportOpts& opt) {
  const std::vector<SweepRow> rows = load_results_csv(opt.results);
  if (rows.empty()) throw IoError("no rows in " + opt.results);

  std::vector<std::string> settings;
  for (const auto& row : rows) {
    const std::string sl = setting_label(row.setting);
    bool seen = false;
    for (const auto& s : settings) seen = seen || s == sl;
    if (!seen) settings.push_back(sl);
  }

  std::ostringstream os;
  os << "results: " << opt.results << " (" << rows.size() << " rows)\n";
  for (const auto& sl : settings) {
    os << "\n" << sl << "\n";
    std::vector<const SweepRow*> group;
    for (const auto& row : rows) {
      if (setting_label(row.setting) == sl) group.push_back(&row);
    }
    std::sort(group.begin(), group.end(),
              [](const SweepRow* a, const SweepRow* b) {
                if (a->mean_ari != b->mean_ari)
                  return a->mean_ari > b->mean_ari;
                return method_name(a->method) < method_name(b->method);
              });
    for (const SweepRow* row : group) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "  %-28s ARI %.3f +/- %.3f  (%zu reps)",
                    method_name(row->method).c_str(), row->mean_ari,
                    row->std_ari, row->reps);
      os << buf << "\n";
    }
  }

  if (opt.out.empty()) {
    std::cout << os.str();
  } else {
    write_text_file(opt.out, os.str());
    std::cout << "report: wrote " << opt.out << "\n";
  }
  if (!opt.svg.empty()) write_text_file(opt.svg, results_svg(rows));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"optimal-transport graph partitioning toolkit"};
  app.require_subcommand(1);

  GenerateOpts gen;
  auto* cgen = app.add_subcommand(
      "generate", "sample a block-model graph (+ labels, attributes)");
  cgen->add_option("--config", gen.config, "JSON config file");
  cgen->add_option("--out-graph", gen.out_graph, "graph JSON output path");
  cgen->add_option("--out-labels", gen.out_labels, "labels CSV output path");
  std::uint64_t gen_seed = 0;
  auto* gen_seed_opt = cgen->add_option("--seed", gen_seed, "RNG seed");
  std::string gen_shape;
  auto* gen_shape_opt = cgen->add_option("--shape", gen_shape,
                                         "full|sparse|chain|donut|star");
  std::size_t gen_n = 0, gen_k = 0;
  auto* gen_n_opt = cgen->add_option("--n", gen_n, "node count");
  auto* gen_k_opt = cgen->add_option("--k", gen_k, "community count");
  double gen_t = 0.0, gen_b = 0.0;
  auto* gen_t_opt = cgen->add_option("--t", gen_t, "structure strength");
  auto* gen_b_opt = cgen->add_option("--b", gen_b, "base intensity bound");
  int gen_level = 0;
  auto* gen_level_opt =
      cgen->add_option("--level", gen_level, "attribute noise level (1-5)");

  ClusterOpts clu;
  auto* cclu = app.add_subcommand("cluster", "partition one graph file");
  cclu->add_option("--config", clu.config, "JSON config file");
  cclu->add_option("--graph", clu.graph, "graph JSON input");
  cclu->add_option("--method", clu.method,
                   "frechet-kmeans|srgw|srfgw");
  cclu->add_option("--target", clu.target, "mean|max");
  cclu->add_flag("--embedded", clu.embedded, "run on embedded distances");
  cclu->add_option("--k", clu.k, "cluster count");
  cclu->add_option("--alpha", clu.alpha, "structure weight");
  cclu->add_option("--beta", clu.beta, "curve weight in attribute distance");
  cclu->add_option("--q", clu.q, "cost exponent");
  cclu->add_option("--seed", clu.seed, "RNG seed for the initialization");
  cclu->add_option("--out-partition", clu.out_partition,
                   "partition CSV output path");
  cclu->add_option("--out-record", clu.out_record,
                   "run record JSON output path");

  SweepOpts swp;
  auto* cswp = app.add_subcommand("sweep", "Monte-Carlo benchmark sweep");
  cswp->add_option("--config", swp.config, "JSON sweep config")->required();
  cswp->add_option("--seed", swp.seed, "master seed")->required();
  cswp->add_option("--jobs", swp.jobs, "worker threads (0 = all cores)");
  std::size_t swp_reps = 0;
  auto* swp_reps_opt =
      cswp->add_option("--reps", swp_reps, "replications per setting");
  cswp->add_option("--out", swp.out, "results CSV output path");
  cswp->add_option("--svg", swp.svg, "optional SVG chart path");

  ReportOpts rep;
  auto* crep = app.add_subcommand("report", "summarize a results CSV");
  crep->add_option("--results", rep.results, "results CSV input")->required();
  crep->add_option("--out", rep.out, "text report path (default stdout)");
  crep->add_option("--svg", rep.svg, "optional SVG chart path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (cgen->parsed()) {
      if (*gen_seed_opt) gen.seed = gen_seed;
      if (*gen_shape_opt) gen.shape = gen_shape;
      if (*gen_n_opt) gen.n = gen_n;
      if (*gen_k_opt) gen.k = gen_k;
      if (*gen_t_opt) gen.t = gen_t;
      if (*gen_b_opt) gen.b = gen_b;
      if (*gen_level_opt) gen.level = gen_level;
      return cmd_generate(gen);
    }
    if (cclu->parsed()) return cmd_cluster(clu);
    if (cswp->parsed()) {
      if (*swp_reps_opt) swp.reps = swp_reps;
      return cmd_sweep(swp);
    }
    if (crep->parsed()) return cmd_report(rep);
  } catch (const Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Unhandled: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
