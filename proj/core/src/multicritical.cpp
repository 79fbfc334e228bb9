#include "multischur/multicritical.hpp"

#include "multischur/errors.hpp"

#include <cmath>

namespace multischur {

std::string to_string(MeasureKind kind) {
  return kind == MeasureKind::odd_even ? "odd_even" : "odd";
}

MeasureKind parse_measure_kind(std::string_view text) {
  if (text == "oe" || text == "odd_even" || text == "odd-even") return MeasureKind::odd_even;
  if (text == "o" || text == "odd") return MeasureKind::odd;
  throw ValidationError("unknown measure kind '" + std::string(text) + "' (expected oe or odd)");
}

Specialization MulticriticalParams::spec() const {
  std::vector<Rational> thetas;
  thetas.reserve(ratios.size());
  for (const auto& r : ratios) thetas.push_back(r * theta);
  return Specialization(std::move(thetas));
}

namespace {

void check_inputs(int n, const Rational& theta) {
  if (n < 1) throw ValidationError("n must be >= 1");
  if (theta < 0) throw ValidationError("theta must be nonnegative");
}

Rational ratio(const BigInt& num, const BigInt& den) { return Rational(num, den); }

}  // namespace

MulticriticalParams oe_params(int n, const Rational& theta) {
  check_inputs(n, theta);
  MulticriticalParams p;
  p.kind = MeasureKind::odd_even;
  p.n = n;
  p.theta = theta;
  for (int i = 1; i <= n; ++i) {
    const BigInt num = factorial(n - 1) * factorial(n + 1);
    const BigInt den = factorial(n - i) * factorial(n + i);
    p.ratios.push_back((i % 2 ? 1 : -1) * ratio(num, den));
  }
  p.b = Rational(n + 1, n);
  p.d = Rational(binomial(2 * n, n - 1));
  p.b_tilde = Rational(n + 1, n) * (ratio(double_factorial(2 * n), double_factorial(2 * n - 1)) - 1);
  p.d_tilde = ratio(BigInt(1) << (2 * n - 2), 1) * n / Rational(binomial(2 * n, n - 1));
  return p;
}

MulticriticalParams o_params(int n, const Rational& theta) {
  check_inputs(n, theta);
  MulticriticalParams p;
  p.kind = MeasureKind::odd;
  p.n = n;
  p.theta = theta;
  p.ratios.assign(static_cast<std::size_t>(2 * n - 1), Rational(0));
  for (int i = 1; i <= n; ++i) {
    const BigInt num = factorial(n - 1) * factorial(n);
    const BigInt den = (2 * i - 1) * factorial(n - i) * factorial(n + i - 1);
    p.ratios[static_cast<std::size_t>(2 * i - 2)] = (i % 2 ? 1 : -1) * ratio(num, den);
  }
  const BigInt central = binomial(2 * n, n);
  p.b = ratio(BigInt(1) << (4 * n - 1), n * central * central);
  p.d = ratio(double_factorial(2 * n - 1), double_factorial(2 * n - 2));
  return p;
}

MulticriticalParams make_params(MeasureKind kind, int n, const Rational& theta) {
  return kind == MeasureKind::odd_even ? oe_params(n, theta) : o_params(n, theta);
}

std::complex<double> action_S0(const MulticriticalParams& params, std::complex<double> z) {
  if (z == 0.0) throw ValidationError("S_0 is singular at z = 0");
  std::complex<double> acc = 0.0;
  for (std::size_t i = 0; i < params.ratios.size(); ++i) {
    const int j = static_cast<int>(i) + 1;
    acc += to_double(params.ratios[i]) / j * (std::pow(z, j) - std::pow(z, -j));
  }
  return acc;
}

namespace {

// j (j-1) ... (j-k+1)
Rational falling(int j, int k) {
  Rational r = 1;
  for (int t = 0; t < k; ++t) r *= (j - t);
  return r;
}

Rational signed_power(int z0, int e) { return (z0 == -1 && (e % 2 != 0)) ? Rational(-1) : Rational(1); }

void require_unit(int z0) {
  if (z0 != 1 && z0 != -1) throw ValidationError("exact derivatives only at z = 1 or z = -1");
}

}  // namespace

Rational ExactLaurent::derivative(int k, int z0) const {
  require_unit(z0);
  Rational acc = 0;
  for (const auto& [j, a] : coeffs) acc += a * falling(j, k) * signed_power(z0, j - k);
  if (k >= 1 && log_coeff != 0) {
    // (d/dz)^k log z = (-1)^{k-1} (k-1)! z^{-k}
    acc += log_coeff * ((k - 1) % 2 ? -1 : 1) * Rational(factorial(k - 1)) * signed_power(z0, k);
  }
  return acc;
}

Rational ExactLaurent::euler_derivative(int k, int z0) const {
  require_unit(z0);
  Rational acc = 0;
  for (const auto& [j, a] : coeffs) {
    Rational jk = 1;
    for (int t = 0; t < k; ++t) jk *= j;
    acc += a * jk * signed_power(z0, j);
  }
  if (k == 1) acc += log_coeff;
  return acc;
}

BigInt stirling2(int k, int j) {
  if (k == 0 && j == 0) return 1;
  if (k <= 0 || j <= 0 || j > k) return 0;
  std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
  row[0] = 1;
  for (int r = 1; r <= k; ++r) {
    for (int c = std::min(r, k); c >= 1; --c) row[c] = c * row[c] + row[c - 1];
    row[0] = 0;
  }
  return row[static_cast<std::size_t>(j)];
}

Rational euler_derivative_via_stirling(const ExactLaurent& f, int k, int z0) {
  if (k == 0) return f.derivative(0, z0);
  Rational acc = 0;
  for (int j = 1; j <= k; ++j) acc += Rational(stirling2(k, j)) * signed_power(z0, j) * f.derivative(j, z0);
  return acc;
}

ExactLaurent action_polynomial(const MulticriticalParams& params) {
  ExactLaurent s;
  for (std::size_t i = 0; i < params.ratios.size(); ++i) {
    if (params.ratios[i] == 0) continue;
    const int j = static_cast<int>(i) + 1;
    s.coeffs[j] += params.ratios[i] / j;
    s.coeffs[-j] -= params.ratios[i] / j;
  }
  return s;
}

CriticalityReport verify_criticality(const MulticriticalParams& params) {
  const int n = params.n;
  CriticalityReport r;
  r.kind = params.kind;
  r.n = n;

  ExactLaurent right = action_polynomial(params);
  right.log_coeff = -params.b;
  for (int i = 1; i <= 2 * n; ++i) {
    r.euler_derivatives.push_back(right.euler_derivative(i, 1));
    if (r.euler_derivatives.back() != 0)
      r.failures.push_back("(z d/dz)^" + std::to_string(i) + " [S0 - b log z](1) = " +
                           to_string(r.euler_derivatives.back()) + " != 0");
  }
  const int sign = (n + 1) % 2 ? -1 : 1;
  r.top_derivative = right.derivative(2 * n + 1, 1);
  r.top_expected = Rational(sign * factorial(2 * n)) / params.d;
  r.top_alternative = Rational(sign * factorial(2 * n)) * params.d;
  if (r.top_derivative != r.top_expected)
    r.failures.push_back("(d/dz)^" + std::to_string(2 * n + 1) + " [S0 - b log z](1) = " +
                         to_string(r.top_derivative) + " != (-1)^{n+1}(2n)!/d = " +
                         to_string(r.top_expected));

  auto moment = [&](int power) {
    Rational acc = 0;
    for (std::size_t i = 0; i < params.ratios.size(); ++i) {
      Rational ip = 1;
      for (int t = 0; t < power; ++t) ip *= static_cast<int>(i) + 1;
      acc += ip * params.ratios[i];
    }
    return acc;
  };
  r.sum_ratio = moment(0);
  r.half_b = params.b / 2;
  if (r.sum_ratio != r.half_b)
    r.failures.push_back("sum theta_i = " + to_string(r.sum_ratio) + " theta != b theta / 2");
  for (int j = 1; j <= n - 1; ++j) {
    r.even_moments.push_back(moment(2 * j));
    if (r.even_moments.back() != 0)
      r.failures.push_back("sum i^" + std::to_string(2 * j) + " theta_i = " +
                           to_string(r.even_moments.back()) + " theta != 0");
  }
  r.top_moment = moment(2 * n);
  r.top_moment_remark = Rational(factorial(2 * n)) * params.d;
  r.top_moment_consistent = Rational(sign * factorial(2 * n)) / (2 * params.d);
  if (r.top_moment != r.top_moment_consistent)
    r.failures.push_back("sum i^{2n} theta_i = " + to_string(r.top_moment) +
                         " theta != (-1)^{n+1}(2n)!/(2d) theta");

  if (params.kind == MeasureKind::odd) {
    bool symmetric = true;
    for (const auto& [j, a] : right.coeffs) {
      auto it = right.coeffs.find(-j);
      const Rational mirror = it == right.coeffs.end() ? Rational(0) : it->second;
      if (a + mirror != 0) symmetric = false;
    }
    for (std::size_t i = 1; i < params.ratios.size(); i += 2)
      if (params.ratios[i] != 0) symmetric = false;
    r.odd_symmetry = symmetric;
    if (!symmetric) r.failures.push_back("odd kind: S0(z) + S0(1/z) is not identically zero");
  } else {
    ExactLaurent left = action_polynomial(params);
    left.log_coeff = *params.b_tilde;
    int order = 0;
    for (int k = 1; k <= 2 * n + 2; ++k) {
      if (left.derivative(k, -1) != 0) break;
      order = k;
    }
    r.left_order = order;
    r.left_third_derivative = left.derivative(3, -1);
    if (order != 2)
      r.failures.push_back("left edge: critical point of S0 + b~ log z at z = -1 has order " +
                           std::to_string(order) + ", expected 2");
    if (*r.left_third_derivative != 2 * *params.d_tilde)
      r.failures.push_back("left edge: (d/dz)^3 [S0 + b~ log z](-1) = " +
                           to_string(*r.left_third_derivative) + " != 2 d~");
    const Rational four_n = Rational(BigInt(1) << (2 * n));
    r.left_edge_identity = (params.b + *params.b_tilde) * Rational(binomial(2 * n, n - 1)) == four_n;
    if (!*r.left_edge_identity) r.failures.push_back("(b + b~) binom(2n, n-1) != 4^n");
  }
  return r;
}

}  // namespace multischur
