#include "multischur/limit_shape.hpp"
#include "multischur/multicritical.hpp"

#include <doctest.h>
#include <oracles.hpp>

#include <cmath>
#include <numbers>

using namespace multischur;

namespace {
double binom(int n, int k) { return to_double(Rational(binomial(n, k))); }
}  // namespace

TEST_CASE("n = 1 is the VKLS density") {
  for (double u = -2.0; u <= 2.0; u += 0.125) {
    const double vkls = std::acos(u / 2) / std::numbers::pi;
    CHECK(std::abs(rho_oe(1, u) - vkls) < 1e-12);
    CHECK(std::abs(rho_o(1, u) - vkls) < 1e-10);
  }
  CHECK(rho_oe(1, 0.0) == doctest::Approx(0.5));
  for (double u : {0.0, 1.0}) {
    const double closed = 2 / std::numbers::pi * (u * std::asin(u / 2) + std::sqrt(4 - u * u));
    CHECK(omega(MeasureKind::odd, 1, u) == doctest::Approx(closed).epsilon(1e-9));
  }
  CHECK(omega(MeasureKind::odd_even, 1, 0.0) == doctest::Approx(4 / std::numbers::pi).epsilon(1e-9));
}

TEST_CASE("edges and symmetry") {
  for (int n = 1; n <= 4; ++n) {
    const auto oe = oe_params(n, 1);
    const double b = to_double(oe.b), bt = to_double(*oe.b_tilde);
    CHECK(rho_oe(n, b) == doctest::Approx(0.0));
    CHECK(rho_oe(n, -bt) == doctest::Approx(1.0));
    CHECK(rho_oe(n, b + 1) == 0.0);
    CHECK(rho_oe(n, -bt - 1) == 1.0);
    CHECK(omega(MeasureKind::odd_even, n, -bt) == doctest::Approx(bt).epsilon(1e-10));
    CHECK(omega(MeasureKind::odd_even, n, b) == doctest::Approx(b).epsilon(1e-8));

    const double bo = to_double(o_params(n, 1).b);
    CHECK(rho_o(n, 0.0) == doctest::Approx(0.5).epsilon(1e-10));
    CHECK(rho_o(n, bo) == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(rho_o(n, -bo) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(omega(MeasureKind::odd, n, bo) == doctest::Approx(bo).epsilon(1e-8));
    for (double u = -bo; u <= bo; u += 0.1)
      CHECK(rho_o(n, u) + rho_o(n, -u) == doctest::Approx(1.0).epsilon(1e-10));
  }
}

TEST_CASE("sine power integral against quadrature") {
  for (int n = 1; n <= 5; ++n) {
    const double total = oracle::adaptive_simpson(
        [&](double p) { return std::pow(2 * std::sin(p), 2 * n - 1); }, 0.0, std::numbers::pi);
    CHECK(sine_power_integral(n, std::numbers::pi) == doctest::Approx(total).epsilon(1e-11));
    const double bo = to_double(o_params(n, 1).b);
    CHECK(total == doctest::Approx(2 * bo * binom(2 * n - 1, n)).epsilon(1e-11));
  }
  CHECK(sine_power_integral(2, std::numbers::pi) == doctest::Approx(32.0 / 3));
}

TEST_CASE("density is nonincreasing") {
  for (MeasureKind kind : {MeasureKind::odd_even, MeasureKind::odd})
    for (int n = 1; n <= 3; ++n) {
      const auto profile = density_profile(kind, n, 0.05);
      for (std::size_t i = 1; i < profile.points.size(); ++i)
        CHECK(profile.points[i].rho <= profile.points[i - 1].rho + 1e-12);
    }
}

TEST_CASE("kernel density approaches the limit shape") {
  const auto p1 = o_params(1, 200);
  const double zero[] = {0.0};
  CHECK(std::abs(compare_density(p1, zero).rows[0].kernel - 0.5) <= 0.02);
  const double outside[] = {2.5};
  CHECK(compare_density(p1, outside).rows[0].kernel <= 1e-4);

  const auto p2 = oe_params(2, 200);
  std::vector<double> grid;
  for (double u = -2.3; u <= 1.3; u += 0.2) grid.push_back(u);
  CHECK(compare_density(p2, grid).max_difference <= 0.05);
}
