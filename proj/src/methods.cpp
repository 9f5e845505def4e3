#include "otpart/methods.hpp"

#include "otpart/embeddings.hpp"
#include "otpart/errors.hpp"

namespace otpart {

std::string method_name(const MethodSpec& m) {
  std::string name;
  if (m.embedded) name += "embedded-";
  switch (m.algo) {
    case Algo::FrechetKmeans: name += "frechet-kmeans"; break;
    case Algo::Srgw: name += "srgw"; break;
    case Algo::Srfgw: name += "srfgw"; break;
  }
  if (m.algo != Algo::FrechetKmeans) {
    switch (m.target) {
      case TargetKind::EquidistantMean: name += "-mean"; break;
      case TargetKind::EquidistantMax: name += "-max"; break;
      case TargetKind::Coarsened: name += "-coarsened"; break;
    }
  }
  return name;
}

MethodSpec parse_method(const std::string& algo, const std::string& target,
                        bool embedded) {
  MethodSpec m;
  m.embedded = embedded;
  if (algo == "frechet-kmeans") {
    m.algo = Algo::FrechetKmeans;
  } else if (algo == "srgw") {
    m.algo = Algo::Srgw;
  } else if (algo == "srfgw") {
    m.algo = Algo::Srfgw;
  } else {
    throw ConfigError("unknown method: " + algo);
  }
  if (target == "mean") {
    m.target = TargetKind::EquidistantMean;
  } else if (target == "max") {
    m.target = TargetKind::EquidistantMax;
  } else if (target == "coarsened") {
    m.target = TargetKind::Coarsened;
  } else {
    throw ConfigError("unknown target: " + target);
  }
  return m;
}

MethodSpec parse_method_name(const std::string& name) {
  std::string rest = name;
  bool embedded = false;
  const std::string prefix = "embedded-";
  if (rest.rfind(prefix, 0) == 0) {
    embedded = true;
    rest = rest.substr(prefix.size());
  }
  if (rest == "frechet-kmeans") return parse_method(rest, "mean", embedded);
  const auto dash = rest.rfind('-');
  if (dash == std::string::npos) {
    throw ConfigError("malformed method name: " + name);
  }
  return parse_method(rest.substr(0, dash), rest.substr(dash + 1), embedded);
}

MethodOutput run_method(const ProblemInstance& inst, const MethodSpec& spec,
                        const LossParams& params, std::uint64_t seed) {
  const DistanceMatrix dalpha =
      inst.attributed() ? combine_alpha(inst.ds, *inst.da, inst.alpha)
                        : inst.ds;

  Seeding seeding;
  seeding.mode = spec.embedded ? SeedMode::PlusPlusOnD1 : SeedMode::PlusPlusOnD;
  seeding.rng_seed = seed;
  const std::vector<std::size_t> centers =
      kmeanspp_seed(dalpha, inst.k, seeding);
  const DistanceMatrix seed_metric = seeding_metric(dalpha, seeding.mode);
  const Partition init = assign_to_centers(seed_metric, centers);

  MethodOutput out;
  switch (spec.algo) {
    case Algo::FrechetKmeans: {
      const DistanceMatrix run_matrix =
          spec.embedded ? embed(dalpha) : dalpha;
      KmeansResult res = lloyd_frechet(run_matrix, inst.mu, inst.k, centers);
      out.partition = std::move(res.partition);
      out.loss_trace = std::move(res.objective_trace);
      out.final_loss = out.loss_trace.back();
      std::vector<char> used(inst.k, 0);
      for (auto a : out.partition.assign) used[a] = 1;
      for (char u : used) out.nonempty_k += u;
      break;
    }
    case Algo::Srgw: {
      const DistanceMatrix run_matrix =
          spec.embedded ? embed(dalpha) : dalpha;
      TargetSpec tspec{spec.target, inst.k, inst.block};
      const DistanceMatrix r2 = build_target(tspec, run_matrix);
      const Mat t0 = plan_from_partition(init, inst.mu);
      SolverReport rep = srgw_solve(run_matrix, inst.mu, r2, t0, params);
      auto [hard, part] = hard_project(rep.plan, inst.mu);
      (void)hard;
      out.partition = std::move(part);
      out.loss_trace = std::move(rep.loss_trace);
      out.final_loss = out.loss_trace.back();
      out.nonempty_k = rep.nonempty_k;
      break;
    }
    case Algo::Srfgw: {
      if (!inst.attributed()) {
        throw AttributesRequired("run_method: srfgw needs attributes");
      }
      // only the structure matrix is embedded; attributes stay native
      const DistanceMatrix structure =
          spec.embedded ? embed(inst.ds) : inst.ds;
      TargetSpec tspec{spec.target, inst.k, inst.block};
      const Mat t0 = plan_from_partition(init, inst.mu);
      // the instance's alpha governs both the combined matrix and the
      // fused objective
      const LossParams fused{params.q, inst.alpha};
      PartitionResult res = srfgw_partition(structure, *inst.da, inst.mu,
                                            tspec, fused, t0);
      out.partition = std::move(res.partition);
      out.loss_trace = std::move(res.report.loss_trace);
      out.final_loss = out.loss_trace.back();
      out.nonempty_k = res.report.nonempty_k;
      out.barycenter_ids = std::move(res.report.barycenter_ids);
      break;
    }
  }
  return out;
}

}  // namespace otpart
