#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "otpart/errors.hpp"
#include "otpart/rng.hpp"
#include "otpart/targets.hpp"

using namespace otpart;

TEST_SUITE("targets") {

TEST_CASE("equidistant target shape and scale") {
  const DistanceMatrix t = equidistant_target(3, 0.4);
  CHECK(t.size() == 3);
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(t(i, i) == 0.0);
    for (std::size_t j = 0; j < 3; ++j) {
      if (i != j) CHECK(t(i, j) == 0.4);
    }
  }
  CHECK_THROWS_AS(equidistant_target(3, 0.0), BadDelta);
  CHECK_THROWS_AS(equidistant_target(3, -1.0), BadDelta);
}

TEST_CASE("delta_from pulls mean or max off the source") {
  Mat m(3, 3);
  m(0, 1) = m(1, 0) = 1.0;
  m(0, 2) = m(2, 0) = 2.0;
  m(1, 2) = m(2, 1) = 6.0;
  const DistanceMatrix d(m);
  CHECK(delta_from(d, DeltaMode::Mean) == doctest::Approx(3.0));
  CHECK(delta_from(d, DeltaMode::Max) == doctest::Approx(6.0));
  CHECK_THROWS_AS(delta_from(DistanceMatrix(Mat(1, 1)), DeltaMode::Mean),
                  DegenerateMatrix);
}

TEST_CASE("coarsened target runs shortest paths on inverse probabilities") {
  // 3 blocks: strong 1-2 link, weak 1-3 link, no 2-3 link
  Mat p(3, 3);
  p(0, 0) = 0.9; p(1, 1) = 0.9; p(2, 2) = 0.9;
  p(0, 1) = p(1, 0) = 0.5;   // length 2
  p(0, 2) = p(2, 0) = 0.1;   // length 10
  const DistanceMatrix t = coarsened_target(p);
  CHECK(t(0, 1) == doctest::Approx(2.0));
  CHECK(t(0, 2) == doctest::Approx(10.0));
  // 1-2 to 1-3 goes through block 0: 2 + 10
  CHECK(t(1, 2) == doctest::Approx(12.0));
  for (std::size_t i = 0; i < 3; ++i) CHECK(t(i, i) == 0.0);

  // direct link beaten by a two-hop path
  Mat q(3, 3);
  q(0, 1) = q(1, 0) = 0.9;   // 1.11
  q(1, 2) = q(2, 1) = 0.9;   // 1.11
  q(0, 2) = q(2, 0) = 0.1;   // 10 direct, 2.22 via 1
  const DistanceMatrix t2 = coarsened_target(q);
  CHECK(t2(0, 2) == doctest::Approx(2.0 / 0.9));

  // disconnected block graph
  Mat iso(2, 2);
  iso(0, 0) = 1.0;
  iso(1, 1) = 1.0;
  CHECK_THROWS_AS(coarsened_target(iso), DisconnectedTarget);

  CHECK_THROWS_AS(coarsened_target(Mat(2, 3)), ShapeMismatch);
  Mat asym(2, 2);
  asym(0, 1) = 0.5;
  asym(1, 0) = 0.6;
  CHECK_THROWS_AS(coarsened_target(asym), InvalidArgument);
}

TEST_CASE("build_target dispatches on the spec") {
  Rng rng(41);
  const DistanceMatrix src = testdata::random_distance_matrix(8, rng);

  TargetSpec mean_spec;
  mean_spec.kind = TargetKind::EquidistantMean;
  mean_spec.k = 4;
  const DistanceMatrix tm = build_target(mean_spec, src);
  CHECK(tm.size() == 4);
  CHECK(tm(0, 1) == doctest::Approx(src.mean_offdiag()));

  TargetSpec max_spec;
  max_spec.kind = TargetKind::EquidistantMax;
  max_spec.k = 3;
  const DistanceMatrix tx = build_target(max_spec, src);
  CHECK(tx(1, 2) == doctest::Approx(src.max_entry()));

  TargetSpec coarse;
  coarse.kind = TargetKind::Coarsened;
  coarse.k = 2;
  coarse.block = Mat(2, 2);
  coarse.block(0, 0) = 0.8;
  coarse.block(1, 1) = 0.8;
  coarse.block(0, 1) = coarse.block(1, 0) = 0.25;
  const DistanceMatrix tc = build_target(coarse, src);
  CHECK(tc(0, 1) == doctest::Approx(4.0));
}

}  // TEST_SUITE
