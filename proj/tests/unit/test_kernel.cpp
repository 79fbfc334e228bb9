#include "generators.hpp"

#include "multischur/errors.hpp"
#include "multischur/kernel.hpp"
#include "multischur/measure.hpp"
#include "multischur/multicritical.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <cmath>

using namespace multischur;

TEST_CASE("Plancherel kernel diagonal") {
  const DiscreteKernel k(Specialization(std::vector<double>{1.0}));
  const double j0 = oracle::bessel_j(0, 2.0);
  CHECK(k.density(0) == doctest::Approx((1 - j0 * j0) / 2).epsilon(1e-13));
  CHECK(k.density(0) == doctest::Approx(0.474936).epsilon(1e-6));
  CHECK(1.0 - k.density(-30) < 1e-15);
  CHECK(k.entry(2, 5) == doctest::Approx(k.entry(5, 2)).epsilon(1e-15));
}

TEST_CASE("kernel vanishes as theta goes to zero") {
  const DiscreteKernel k(Specialization(std::vector<double>{1e-9}));
  CHECK(k.density(0) < 1e-17);
  CHECK(gap_probability(k, 0) == doctest::Approx(1.0));
}

TEST_CASE("marginals against enumeration") {
  const auto params = oe_params(2, Rational(3, 5));
  const DiscreteKernel k(params.spec());
  const EnumeratedMeasure mu(params.spec(), 24);
  for (int m : {0, 1, -1}) {
    const int site[] = {m};
    CHECK(std::abs(k.density(m) - mu.correlation(site)) < 1e-8);
  }
  const int pair[] = {1, -2};
  CHECK(std::abs(correlation(k, pair) - mu.correlation(pair)) < 1e-8);
}

TEST_CASE("gap probability") {
  const double theta = 0.8;
  CHECK(gap_probability(Specialization(std::vector<double>{theta}), 0) ==
        doctest::Approx(std::exp(-theta * theta)).epsilon(1e-12));
  for (int l = 0; l <= 3; ++l) CHECK(gap_probability(Specialization(std::vector<double>{0.0}), l) == 1.0);

  const auto params = oe_params(2, Rational(3, 5));
  const EnumeratedMeasure mu(params.spec(), 30);
  CHECK(std::abs(gap_probability(params.spec(), 3) - mu.first_part_cdf(3)) < 1e-9);

  const auto detail = gap_probability_detail(DiscreteKernel(params.spec()), -1);
  CHECK(detail.impossible);
  CHECK(detail.value == 0.0);
}

TEST_CASE("length cdf") {
  const Specialization plancherel(std::vector<double>{1.0});
  const double expected = std::exp(-1.0) * oracle::bessel_i(0, 2.0);
  CHECK(length_cdf(plancherel, 1) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(length_cdf(plancherel, 1) == doctest::Approx(0.8391).epsilon(1e-3));
  CHECK(length_cdf(plancherel, 60) == doctest::Approx(1.0).epsilon(1e-14));

  const Specialization odd = o_params(2, Rational(3, 5)).spec();
  for (int l = 0; l <= 5; ++l) CHECK(std::abs(length_cdf(odd, l) - gap_probability(odd, l)) < 1e-12);
}

TEST_CASE("window determinant") {
  Eigen::MatrixXd k = Eigen::MatrixXd::Zero(2, 2);
  k(0, 0) = 0.5;
  k(1, 1) = 0.25;
  CHECK(determinant_one_minus(k).value == doctest::Approx(0.375));
  CHECK_FALSE(determinant_one_minus(k).psd_violation);
  k(0, 0) = 1.5;
  const auto r = determinant_one_minus(k);
  CHECK(r.psd_violation);
  CHECK(r.value == doctest::Approx(-0.375));
}

TEST_CASE("edge scaling") {
  const auto p = o_params(1, 100);
  const auto e = edge_scaling(p, EdgeStatistic::lambda1, ScalingConvention::theta_times_d);
  CHECK(e.center == doctest::Approx(200));
  CHECK(e.exponent_denominator == 3);
  CHECK(edge_scaled_cdf(p, EdgeStatistic::lambda1, 0.0, ScalingConvention::theta_times_d).l == 200);
  CHECK(edge_scaled_cdf(p, EdgeStatistic::lambda1, 20.0, kDefaultRightConvention).value >= 1 - 1e-6);

  const auto oe = oe_params(2, 8);
  const auto over = edge_scaling(oe, EdgeStatistic::lambda1, ScalingConvention::theta_over_d);
  CHECK(over.center == doctest::Approx(12));
  CHECK(over.scale == doctest::Approx(std::pow(2.0, 0.2)));
  const auto left = edge_scaling(oe, EdgeStatistic::length, ScalingConvention::theta_times_d);
  CHECK(left.center == doctest::Approx(20));
  CHECK(left.scale == doctest::Approx(std::cbrt(16.0)));

  CHECK_THROWS_AS(edge_scaling(o_params(1, 0), EdgeStatistic::lambda1, kDefaultRightConvention),
                  ValidationError);
  CHECK(parse_scaling_convention(to_string(ScalingConvention::theta_over_d)) ==
        ScalingConvention::theta_over_d);
  CHECK(parse_edge_statistic("length") == EdgeStatistic::length);
}

TEST_CASE("property: kernel is a contraction and gaps are monotone") {
  gen::Rng rng(17);
  for (int trial = 0; trial < 6; ++trial) {
    const Specialization s = gen::real_spec(rng, 3, 2.0);
    const DiscreteKernel k(s);
    const auto w = k.window(-8, 8);
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(w.values);
    CHECK(eig.eigenvalues().minCoeff() > -1e-10);
    CHECK(eig.eigenvalues().maxCoeff() < 1 + 1e-10);
    double previous = 0.0;
    for (int l = 0; l <= 10; ++l) {
      const double g = gap_probability(k, l);
      CHECK(g >= previous - 1e-12);
      CHECK(g <= 1 + 1e-12);
      previous = g;
    }
  }
}
