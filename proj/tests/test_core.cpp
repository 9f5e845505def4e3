#include "doctest.h"

#include <cmath>

#include "helpers.hpp"
#include "otpart/distance_matrix.hpp"
#include "otpart/errors.hpp"
#include "otpart/mat.hpp"
#include "otpart/rng.hpp"

using namespace otpart;

TEST_SUITE("core") {

TEST_CASE("Mat reductions") {
  Mat m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 4; m(1, 1) = 5; m(1, 2) = 6;
  CHECK(row_sums(m) == std::vector<double>{6.0, 15.0});
  CHECK(col_sums(m) == std::vector<double>{5.0, 7.0, 9.0});
  CHECK(dot(m, m) == doctest::Approx(91.0));
  CHECK(m.same_shape(Mat(2, 3)));
  CHECK(!m.same_shape(Mat(3, 2)));
}

TEST_CASE("DistanceMatrix validates its invariants") {
  Mat ok(2, 2);
  ok(0, 1) = ok(1, 0) = 1.5;
  CHECK_NOTHROW(DistanceMatrix(ok));

  Mat rect(2, 3);
  CHECK_THROWS_AS(DistanceMatrix{rect}, ShapeMismatch);

  Mat asym(2, 2);
  asym(0, 1) = 1.0;
  asym(1, 0) = 1.0 + 1e-6;
  CHECK_THROWS_AS(DistanceMatrix{asym}, InvalidArgument);

  Mat diag(2, 2);
  diag(0, 0) = 0.1;
  diag(0, 1) = diag(1, 0) = 1.0;
  CHECK_THROWS_AS(DistanceMatrix{diag}, InvalidArgument);

  Mat neg(2, 2);
  neg(0, 1) = neg(1, 0) = -0.5;
  CHECK_THROWS_AS(DistanceMatrix{neg}, InvalidArgument);

  Mat inf(2, 2);
  inf(0, 1) = inf(1, 0) = std::numeric_limits<double>::infinity();
  CHECK_THROWS_AS(DistanceMatrix{inf}, InvalidArgument);
}

TEST_CASE("summary statistics") {
  Mat m(3, 3);
  m(0, 1) = m(1, 0) = 1.0;
  m(0, 2) = m(2, 0) = 2.0;
  m(1, 2) = m(2, 1) = 6.0;
  const DistanceMatrix d(m);
  CHECK(d.max_entry() == 6.0);
  CHECK(d.mean_offdiag() == doctest::Approx(3.0));

  Mat tiny(1, 1);
  CHECK_THROWS_AS(DistanceMatrix(tiny).mean_offdiag(), DegenerateMatrix);
}

TEST_CASE("normalize_max") {
  Rng rng(7);
  const DistanceMatrix d = testdata::random_distance_matrix(6, rng, 0.2, 5.0);
  const DistanceMatrix n = normalize_max(d);
  CHECK(n.max_entry() == doctest::Approx(1.0));
  CHECK(n(1, 2) == doctest::Approx(d(1, 2) / d.max_entry()));
  CHECK_THROWS_AS(normalize_max(DistanceMatrix(Mat(3, 3))), DegenerateMatrix);
}

TEST_CASE("minmax_normalize maps the off-diagonal onto [0, 1]") {
  Mat m(3, 3);
  m(0, 1) = m(1, 0) = 2.0;
  m(0, 2) = m(2, 0) = 4.0;
  m(1, 2) = m(2, 1) = 6.0;
  const DistanceMatrix n = minmax_normalize(DistanceMatrix(m));
  CHECK(n(0, 1) == doctest::Approx(0.0));
  CHECK(n(0, 2) == doctest::Approx(0.5));
  CHECK(n(1, 2) == doctest::Approx(1.0));

  Mat flat(3, 3);
  flat(0, 1) = flat(1, 0) = 1.0;
  flat(0, 2) = flat(2, 0) = 1.0;
  flat(1, 2) = flat(2, 1) = 1.0;
  CHECK_THROWS_AS(minmax_normalize(DistanceMatrix(flat)), DegenerateMatrix);
}

TEST_CASE("combine_alpha blends entrywise") {
  Rng rng(8);
  const DistanceMatrix a = testdata::random_distance_matrix(5, rng);
  const DistanceMatrix b = testdata::random_distance_matrix(5, rng);
  const DistanceMatrix c = combine_alpha(a, b, 0.3);
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = 0; j < 5; ++j) {
      CHECK(c(i, j) ==
            doctest::Approx(0.3 * a(i, j) + 0.7 * b(i, j)).epsilon(1e-12));
    }
  }
  CHECK(combine_alpha(a, b, 1.0)(1, 3) == a(1, 3));
  CHECK(combine_alpha(a, b, 0.0)(1, 3) == b(1, 3));

  const DistanceMatrix small = testdata::random_distance_matrix(4, rng);
  CHECK_THROWS_AS(combine_alpha(a, small, 0.5), ShapeMismatch);
  CHECK_THROWS_AS(combine_alpha(a, b, -0.1), InvalidArgument);
  CHECK_THROWS_AS(combine_alpha(a, b, 1.1), InvalidArgument);
}

TEST_CASE("sqrt_transform") {
  Rng rng(9);
  const DistanceMatrix d = testdata::random_distance_matrix(4, rng);
  const DistanceMatrix s = sqrt_transform(d);
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(s(i, j) == doctest::Approx(std::sqrt(d(i, j))).epsilon(1e-12));
    }
  }
}

TEST_CASE("error names are exposed for the CLI") {
  try {
    throw BadDelta("scale must be positive");
  } catch (const Error& e) {
    CHECK(e.name() == "BadDelta");
    CHECK(std::string(e.what()) == "scale must be positive");
  }
}

TEST_CASE("rng determinism and ranges") {
  Rng a(123), b(123), c(124);
  bool all_equal = true;
  for (int i = 0; i < 100; ++i) {
    const double x = a.uniform01();
    all_equal = all_equal && x == b.uniform01();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  CHECK(all_equal);
  CHECK(a.next_u64() != c.next_u64());

  CHECK(derive_seed(1, 2, 3) == derive_seed(1, 2, 3));
  CHECK(derive_seed(1, 2, 3) != derive_seed(1, 3, 2));
  CHECK(derive_seed(1, 2, 3) != derive_seed(2, 2, 3));
}

TEST_CASE("rng moments are roughly right") {
  Rng rng(42);
  double sum = 0.0, sq = 0.0;
  const int m = 20000;
  for (int i = 0; i < m; ++i) {
    const double x = rng.normal();
    sum += x;
    sq += x * x;
  }
  CHECK(std::fabs(sum / m) < 0.03);
  CHECK(sq / m == doctest::Approx(1.0).epsilon(0.05));

  // gamma(shape) has mean shape and variance shape
  double gs = 0.0;
  for (int i = 0; i < m; ++i) gs += rng.gamma(2.5);
  CHECK(gs / m == doctest::Approx(2.5).epsilon(0.05));

  // dirichlet sums to one, categorical respects weights
  const auto p = rng.dirichlet({1.0, 2.0, 3.0});
  double total = 0.0;
  for (double v : p) total += v;
  CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

  int hits = 0;
  for (int i = 0; i < m; ++i) {
    if (rng.categorical({1.0, 3.0}) == 1) ++hits;
  }
  CHECK(static_cast<double>(hits) / m == doctest::Approx(0.75).epsilon(0.05));
}

}  // TEST_SUITE
