#include "doctest.h"

#include <vector>

#include "helpers.hpp"
#include "otpart/errors.hpp"
#include "otpart/eval.hpp"
#include "otpart/methods.hpp"
#include "otpart/rng.hpp"

using namespace otpart;

namespace {

ProblemInstance structured_instance(int level, std::uint64_t seed,
                                    std::size_t n = 30, std::size_t k = 3,
                                    double t = 2.0) {
  SweepSetting s;
  s.shape = Shape::FullyConnected;
  s.t = t;
  s.level = level;
  s.n = n;
  s.k = k;
  s.alpha = 0.5;
  SweepConfig cfg;
  return make_instance(s, cfg, seed, nullptr);
}

}  // namespace

TEST_SUITE("methods") {

TEST_CASE("every method family runs and yields a full partition") {
  const ProblemInstance inst = structured_instance(1, 881);
  LossParams params;
  for (const Algo algo : {Algo::FrechetKmeans, Algo::Srgw, Algo::Srfgw}) {
    for (const bool embedded : {false, true}) {
      MethodSpec spec;
      spec.algo = algo;
      spec.embedded = embedded;
      const MethodOutput out = run_method(inst, spec, params, 5);
      CHECK(out.partition.assign.size() == 30);
      CHECK(out.partition.k >= 1);
      CHECK(out.nonempty_k >= 1);
      CHECK(out.nonempty_k <= 3);
      CHECK(!out.loss_trace.empty());
      CHECK(out.final_loss == doctest::Approx(out.loss_trace.back()));
    }
  }
}

TEST_CASE("run_method is deterministic in the seed") {
  const ProblemInstance inst = structured_instance(1, 882);
  MethodSpec spec;
  spec.algo = Algo::Srfgw;
  LossParams params;
  const MethodOutput a = run_method(inst, spec, params, 9);
  const MethodOutput b = run_method(inst, spec, params, 9);
  CHECK(a.partition.assign == b.partition.assign);
  CHECK(a.final_loss == b.final_loss);
  CHECK(a.loss_trace == b.loss_trace);
}

TEST_CASE("srfgw needs attributes, others cope without") {
  const ProblemInstance bare = structured_instance(0, 883);
  LossParams params;
  MethodSpec fgw;
  fgw.algo = Algo::Srfgw;
  CHECK_THROWS_AS(run_method(bare, fgw, params, 1), AttributesRequired);

  MethodSpec gw;
  gw.algo = Algo::Srgw;
  CHECK_NOTHROW(run_method(bare, gw, params, 1));
  MethodSpec km;
  km.algo = Algo::FrechetKmeans;
  CHECK_NOTHROW(run_method(bare, km, params, 1));
}

TEST_CASE("srfgw at alpha = 1 gives the srgw partition") {
  ProblemInstance inst = structured_instance(1, 884);
  inst.alpha = 1.0;  // attribute term switched off
  LossParams params;
  MethodSpec gw, fgw;
  gw.algo = Algo::Srgw;
  fgw.algo = Algo::Srfgw;
  const MethodOutput a = run_method(inst, gw, params, 17);
  const MethodOutput b = run_method(inst, fgw, params, 17);
  CHECK(a.partition.assign == b.partition.assign);
}

TEST_CASE("coarsened targets consume the instance block matrix") {
  const ProblemInstance inst = structured_instance(0, 885);
  REQUIRE(inst.block.rows == 3);
  MethodSpec spec;
  spec.algo = Algo::Srgw;
  spec.target = TargetKind::Coarsened;
  LossParams params;
  const MethodOutput out = run_method(inst, spec, params, 3);
  CHECK(out.partition.assign.size() == 30);
}

TEST_CASE("strong structure is recovered by every method") {
  Partition truth;
  SweepSetting s;
  s.shape = Shape::FullyConnected;
  s.t = 5.0;
  s.level = 1;
  s.n = 24;
  s.k = 3;
  SweepConfig cfg;
  const ProblemInstance inst = make_instance(s, cfg, 886, &truth);
  LossParams params;
  for (const Algo algo : {Algo::FrechetKmeans, Algo::Srgw, Algo::Srfgw}) {
    MethodSpec spec;
    spec.algo = algo;
    const MethodOutput out = run_method(inst, spec, params, 11);
    CHECK(ari(out.partition, truth) == doctest::Approx(1.0));
  }
}

}  // TEST_SUITE
