#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plk/egf.hpp"

using namespace plk;

TEST_CASE("series basics") {
  EGFSeries x = EGFSeries::x(6);
  CHECK(x.coeff(1) == 1);
  CHECK(x.coeff(2) == 0);
  CHECK(x.min_support() == 1);
  CHECK(EGFSeries(6).min_support() == 7);

  EGFSeries f = EGFSeries::from_dims({Integer(1), Integer(3)}, 2, 6);
  CHECK(f.coeff(2) == Rational(1, 2));
  CHECK(f.coeff(3) == Rational(1, 2));
  CHECK(f.dim(3) == 3);
}

TEST_CASE("composition with the identity series") {
  std::mt19937 rng(5);
  EGFSeries f(8);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int n = 1; n <= 8; ++n) f.set_coeff(n, Rational(num(rng), 1 + n));
  CHECK(compose(f, EGFSeries::x(8)) == f);
}

TEST_CASE("composition is associative up to truncation") {
  std::mt19937 rng(6);
  auto random_series = [&](int N) {
    EGFSeries f(N);
    std::uniform_int_distribution<int> num(-4, 4);
    for (int n = 1; n <= N; ++n) f.set_coeff(n, Rational(num(rng), 1 + (n % 3)));
    return f;
  };
  for (int trial = 0; trial < 10; ++trial) {
    EGFSeries f = random_series(7), g = random_series(7), h = random_series(7);
    CHECK(compose(f, compose(g, h)) == compose(compose(f, g), h));
  }
}

TEST_CASE("composition matches the set-partition sum") {
  // n! [x^n] f(g) = sum over partitions of [n]: dim_f(#blocks) prod dim_g(|B|)
  EGFSeries f = EGFSeries::from_dims({Integer(1), Integer(2), Integer(1), Integer(3), Integer(1), Integer(4)}, 1, 6);
  EGFSeries g = EGFSeries::from_dims({Integer(2), Integer(1), Integer(3), Integer(1), Integer(2), Integer(1)}, 1, 6);
  EGFSeries fg = compose(f, g);
  for (int n = 1; n <= 6; ++n) {
    Rational total = 0;
    for (const auto& assign : oracle::set_partitions(n)) {
      int blocks = 1 + *std::max_element(assign.begin(), assign.end());
      std::vector<int> sizes(blocks, 0);
      for (int b : assign) ++sizes[b];
      Rational prod = f.dim(blocks);
      for (int b = 0; b < blocks; ++b) prod *= g.dim(sizes[b]);
      total += prod;
    }
    CHECK(fg.dim(n) == total);
  }
}

TEST_CASE("free operad series") {
  // no generators: t = x
  CHECK(free_operad_series(EGFSeries(6)) == EGFSeries::x(6));

  // one symmetric binary generator: dimensions (2n-3)!!
  EGFSeries c(8);
  c.set_coeff(2, Rational(1, 2));
  EGFSeries t = free_operad_series(c);
  for (int n = 1; n <= 8; ++n)
    CHECK(t.dim(n) == Rational(oracle::double_factorial_odd(2 * n - 3)));

  // fixed point: t = x + c(t) exactly to the truncation order
  CHECK(t == EGFSeries::x(8) + compose(c, t));

  // generator dims (n-2)! give t3 = 2/3
  EGFSeries cl = EGFSeries::from_dims({Integer(1), Integer(1), Integer(2)}, 2, 5);
  EGFSeries tcl = free_operad_series(cl);
  CHECK(tcl.coeff(2) == Rational(1, 2));
  CHECK(tcl.coeff(3) == Rational(2, 3));

  EGFSeries bad(5);
  bad.set_coeff(1, 1);
  CHECK_THROWS_AS(free_operad_series(bad), std::invalid_argument);
}

TEST_CASE("dimension identity table") {
  // computed generator dims (n-2)! up to arity 6, extrapolated beyond
  std::vector<Integer> dims{1, 1, 2, 6, 24};
  EgfReport report = verify_dimension_identity(dims, 8);
  CHECK(report.ok);
  REQUIRE(report.rows.size() == 8);
  CHECK(report.rows[1].actual == Rational(2));   // n = 2
  CHECK(report.rows[2].actual == Rational(9));   // n = 3: ell(t) has coefficient 3/2
  CHECK(report.rows[7].expected == Integer(2097152));  // 8^7
  CHECK(report.rows[7].actual == Rational(Integer(2097152)));
  CHECK_FALSE(report.rows[5].extrapolated);  // n = 6 computed
  CHECK(report.rows[6].extrapolated);        // n = 7 extrapolated
  CHECK(report.rows[7].extrapolated);

  // a wrong generator dimension breaks the identity
  std::vector<Integer> wrong{1, 2};
  CHECK_FALSE(verify_dimension_identity(wrong, 6).ok);
}
