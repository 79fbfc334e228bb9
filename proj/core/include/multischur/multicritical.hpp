#pragma once

#include "multischur/rational.hpp"
#include "multischur/specialization.hpp"

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace multischur {

/// odd_even: theta_1..theta_n nonzero; odd: theta_1, theta_3, ..., theta_{2n-1}.
enum class MeasureKind { odd_even, odd };

std::string to_string(MeasureKind kind);
/// Accepts "oe", "odd_even", "odd-even", "o", "odd".
MeasureKind parse_measure_kind(std::string_view text);

/// A multicritical Schur measure: the exact ratios theta_i / theta and the
/// edge constants. b, d locate and scale the right edge (lambda_1);
/// b_tilde, d_tilde the left edge (length) of the odd-even measure.
struct MulticriticalParams {
  MeasureKind kind = MeasureKind::odd;
  int n = 1;
  Rational theta = 1;
  std::vector<Rational> ratios;  // ratios[i-1] = theta_i / theta
  Rational b;
  Rational d;
  std::optional<Rational> b_tilde;
  std::optional<Rational> d_tilde;

  /// beta = b * theta, kept positive (see the sum rule sum_i theta_i = beta / 2).
  Rational beta() const { return b * theta; }
  double theta_value() const { return to_double(theta); }
  Specialization spec() const;
  /// Left-edge constants; for the odd kind these are b and d again.
  Rational left_b() const { return b_tilde.value_or(b); }
  Rational left_d() const { return d_tilde.value_or(d); }
};

MulticriticalParams oe_params(int n, const Rational& theta);
MulticriticalParams o_params(int n, const Rational& theta);
MulticriticalParams make_params(MeasureKind kind, int n, const Rational& theta);

/// S_0(z) = (V(z) - V(1/z)) / theta. Throws ValidationError at z = 0.
std::complex<double> action_S0(const MulticriticalParams& params, std::complex<double> z);

/// sum_j a_j z^j + c log z with rational coefficients, differentiated exactly.
struct ExactLaurent {
  std::map<int, Rational> coeffs;
  Rational log_coeff = 0;

  /// (d/dz)^k at z0, z0 = +1 or -1.
  Rational derivative(int k, int z0) const;
  /// (z d/dz)^k at z0, z0 = +1 or -1.
  Rational euler_derivative(int k, int z0) const;
};

/// Stirling numbers of the second kind, S(k, j).
BigInt stirling2(int k, int j);
/// (z d/dz)^k at z0 rebuilt from ordinary derivatives through
/// (z d/dz)^k = sum_j S(k, j) z^j (d/dz)^j.
Rational euler_derivative_via_stirling(const ExactLaurent& f, int k, int z0);

/// The action S_0 as an exact Laurent polynomial (no log term).
ExactLaurent action_polynomial(const MulticriticalParams& params);

struct CriticalityReport {
  MeasureKind kind = MeasureKind::odd;
  int n = 1;
  /// (z d/dz)^i [S_0 - b log z] at z = 1, i = 1..2n.
  std::vector<Rational> euler_derivatives;
  /// (d/dz)^{2n+1} [S_0 - b log z] at z = 1.
  Rational top_derivative;
  /// (-1)^{n+1} (2n)! / d: the value the expansion around z = 1 needs for
  /// the (theta / d)^{1/(2n+1)} edge scale.
  Rational top_expected;
  /// (-1)^{n+1} (2n)! * d, the alternative normalization; agrees with
  /// top_expected only when d = 1.
  Rational top_alternative;

  /// sum_i theta_i / theta against b / 2 (and the opposite sign convention).
  Rational sum_ratio;
  Rational half_b;
  /// sum_i i^{2j} theta_i / theta for j = 1..n-1 (all must vanish).
  std::vector<Rational> even_moments;
  /// sum_i i^{2n} theta_i / theta with two candidate closed forms.
  Rational top_moment;
  Rational top_moment_remark;      // (2n)! d
  Rational top_moment_consistent;  // (-1)^{n+1} (2n)! / (2d)

  /// odd kind: S_0(z) + S_0(1/z) == 0 coefficientwise.
  std::optional<bool> odd_symmetry;
  /// odd_even kind: order of the critical point of S_0 + b~ log z at z = -1
  /// and its third derivative there (expected 2 d~).
  std::optional<int> left_order;
  std::optional<Rational> left_third_derivative;
  std::optional<bool> left_edge_identity;  // (b + b~) binom(2n, n-1) == 4^n

  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
  bool top_matches_alternative() const { return top_derivative == top_alternative; }
};

/// Exact check of the criticality conditions. Every violated condition is
/// recorded in failures with the index that failed.
CriticalityReport verify_criticality(const MulticriticalParams& params);

}  // namespace multischur
