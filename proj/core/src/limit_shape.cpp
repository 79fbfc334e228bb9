#include "multischur/limit_shape.hpp"

#include "multischur/errors.hpp"
#include "multischur/kernel.hpp"

#include <boost/math/quadrature/tanh_sinh.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>

namespace multischur {

namespace {

constexpr double kPi = std::numbers::pi;

struct Edges {
  double b = 0.0;
  double b_left = 0.0;
};

Edges edges(MeasureKind kind, int n) {
  if (n < 1) throw ValidationError("n must be at least 1");
  const MulticriticalParams p = make_params(kind, n, Rational(1));
  return {to_double(p.b), to_double(p.left_b())};
}

double binom(int a, int b) { return to_double(Rational(binomial(a, b))); }

}  // namespace

double rho_oe(int n, double u) {
  const Edges e = edges(MeasureKind::odd_even, n);
  if (u <= -e.b_left) return 1.0;
  if (u >= e.b) return 0.0;
  const double arg = 1.0 - 0.5 * std::pow(binom(2 * n, n - 1), 1.0 / n) * std::pow(e.b - u, 1.0 / n);
  if (arg < -1.0 - 1e-12 || arg > 1.0 + 1e-12)
    throw Error("arccos argument " + std::to_string(arg) + " outside [-1, 1] inside the support");
  return std::acos(std::clamp(arg, -1.0, 1.0)) / kPi;
}

double sine_power_integral(int n, double chi) {
  // 2^{2n-1} int_{cos chi}^1 (1 - c^2)^{n-1} dc
  const double c0 = std::cos(chi);
  double sum = 0.0;
  for (int k = 0; k <= n - 1; ++k) {
    const double term = binom(n - 1, k) * (1.0 - std::pow(c0, 2 * k + 1)) / (2 * k + 1);
    sum += (k % 2 == 0) ? term : -term;
  }
  return std::ldexp(sum, 2 * n - 1);
}

double rho_o(int n, double u) {
  const Edges e = edges(MeasureKind::odd, n);
  if (u <= -e.b) return 1.0;
  if (u >= e.b) return 0.0;
  const double target = binom(2 * n - 1, n) * (e.b - u);
  double lo = 0.0, hi = kPi;
  for (int iter = 0; iter < 200 && hi - lo > 1e-13; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (sine_power_integral(n, mid) < target) lo = mid;
    else hi = mid;
  }
  if (hi - lo > 1e-12) throw ConvergenceError("rho_o bisection did not converge");
  return 0.5 * (lo + hi) / kPi;
}

double rho(MeasureKind kind, int n, double u) {
  return kind == MeasureKind::odd_even ? rho_oe(n, u) : rho_o(n, u);
}

double omega(MeasureKind kind, int n, double u) {
  const Edges e = edges(kind, n);
  if (u <= -e.b_left || u >= e.b) return std::abs(u);
  boost::math::quadrature::tanh_sinh<double> integrator;
  const double integral =
      integrator.integrate([&](double v) { return 1.0 - 2.0 * rho(kind, n, v); }, -e.b_left, u);
  return e.b_left + integral;
}

DensityProfile density_profile(MeasureKind kind, int n, double step, double pad) {
  if (!(step > 0.0)) throw ValidationError("grid step must be positive");
  const Edges e = edges(kind, n);
  DensityProfile profile;
  profile.kind = kind;
  profile.n = n;
  profile.left_edge = -e.b_left;
  profile.right_edge = e.b;
  const double from = -e.b_left - pad;
  const auto count = static_cast<int>(std::floor((e.b + pad - from) / step + 1e-9));
  for (int i = 0; i <= count; ++i) {
    const double u = from + i * step;
    profile.points.push_back({u, rho(kind, n, u), omega(kind, n, u)});
  }
  return profile;
}

DensityComparison compare_density(const MulticriticalParams& params, std::span<const double> grid) {
  DensityComparison out;
  out.theta = params.theta_value();
  const DiscreteKernel kernel(params.spec());
  for (double u : grid) {
    DensityComparisonRow row;
    row.u = u;
    row.site = static_cast<int>(std::floor(out.theta * u));
    row.kernel = kernel.density(row.site);
    row.rho = rho(params.kind, params.n, u);
    row.difference = std::abs(row.kernel - row.rho);
    out.max_difference = std::max(out.max_difference, row.difference);
    out.rows.push_back(row);
  }
  return out;
}

}  // namespace multischur
