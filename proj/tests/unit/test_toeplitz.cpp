#include "multischur/kernel.hpp"
#include "multischur/laurent.hpp"
#include "multischur/measure.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/toeplitz.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <cmath>
#include <numbers>

using namespace multischur;

TEST_CASE("toeplitz determinant basics") {
  const Specialization plancherel(std::vector<double>{1.0});
  const auto f = symbol_coeffs(plancherel, SymbolFamily::f, 10);
  CHECK(toeplitz_det(f, 0) == 1.0);
  CHECK(toeplitz_det(f, 1) == doctest::Approx(oracle::bessel_i(0, 2.0)).epsilon(1e-13));
  CHECK_THROWS(toeplitz_det(f, 12));
}

TEST_CASE("Gessel identity at l = 1") {
  const Specialization s = oe_params(2, Rational(3, 5)).spec();
  const double z = std::exp(s.log_normalizer());
  CHECK(std::abs(toeplitz_length(s, 1) / z - length_cdf(s, 1)) < 1e-10);
}

TEST_CASE("verify_gessel reports") {
  const auto zero = verify_gessel(Specialization(std::vector<double>{0.0}), 2, 10);
  CHECK(zero.enumeration == doctest::Approx(1.0));
  CHECK(zero.toeplitz == doctest::Approx(1.0));

  const auto pl = verify_gessel(Specialization(std::vector<Rational>{Rational(3, 5)}), 2, 30);
  CHECK(pl.difference < 1e-9);
  const auto odd = verify_gessel(o_params(2, Rational(3, 5)).spec(), 3, 30);
  CHECK(odd.difference < 1e-9);
}

TEST_CASE("g-symbol Toeplitz determinant gives the first-part cdf") {
  const Specialization s = oe_params(2, Rational(3, 5)).spec();
  const double z = std::exp(s.log_normalizer());
  for (int l = 0; l <= 5; ++l)
    CHECK(std::abs(toeplitz_first_part(s, l) / z - gap_probability(s, l)) < 1e-9);
}

TEST_CASE("Haar Monte Carlo") {
  const auto trivial = haar_expectation_mc(Specialization(std::vector<double>{0.0}), 2, 200, 1);
  CHECK(trivial.mean == doctest::Approx(1.0));
  CHECK(trivial.std_error == doctest::Approx(0.0));

  // l = 1: the average of exp(2 theta cos t) over the circle.
  const double theta = 0.6;
  const Specialization s(std::vector<double>{theta});
  const double exact = oracle::adaptive_simpson(
      [&](double t) { return std::exp(2 * theta * std::cos(t)) / (2 * std::numbers::pi); }, 0.0,
      2 * std::numbers::pi);
  const auto one = haar_expectation_mc(s, 1, 20000, 9);
  CHECK(std::abs(one.mean - exact) < 4 * one.std_error);

  const auto three = haar_expectation_mc(s, 3, 20000, 9, SymbolFamily::f, 2);
  CHECK(std::abs(three.mean - toeplitz_length(s, 3)) < 4 * three.std_error);
  const auto again = haar_expectation_mc(s, 3, 20000, 9, SymbolFamily::f, 1);
  CHECK(again.mean == three.mean);
}

TEST_CASE("Haar unitary is unitary") {
  std::mt19937_64 rng(4);
  const Eigen::MatrixXcd u = haar_unitary(5, rng);
  CHECK((u.adjoint() * u - Eigen::MatrixXcd::Identity(5, 5)).norm() < 1e-12);
}

TEST_CASE("four-way equality for the odd measure") {
  for (int n : {1, 2}) {
    const auto params = o_params(n, Rational(3, 5));
    const Specialization s = params.spec();
    const double z = std::exp(s.log_normalizer());
    const EnumeratedMeasure mu(s, 30);
    for (int l = 0; l <= 5; ++l) {
      const double e = mu.first_part_cdf(l);
      CHECK(std::abs(length_cdf(s, l) - e) < 1e-9);
      CHECK(std::abs(gap_probability(s, l) - e) < 1e-9);
      CHECK(std::abs(toeplitz_length(s, l) / z - e) < 1e-9);
      CHECK(std::abs(toeplitz_first_part(s, l) / z - e) < 1e-9);
    }
  }
}
