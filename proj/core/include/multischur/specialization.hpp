#pragma once

#include "multischur/partition.hpp"
#include "multischur/rational.hpp"

#include <complex>
#include <optional>
#include <span>
#include <vector>

namespace multischur {

/// A specialization p_i -> theta_i of the ring of symmetric functions with
/// finitely many nonzero theta_i, used on both sides of the Schur measure
/// (theta_i = theta'_i). When built from rationals the exact values are
/// kept alongside the doubles so Schur values can be computed exactly.
class Specialization {
 public:
  Specialization() = default;
  explicit Specialization(std::vector<double> theta);
  explicit Specialization(std::vector<Rational> theta);

  /// Index of the last nonzero theta (0 for the trivial specialization).
  int degree() const { return static_cast<int>(theta_.size()); }
  /// theta_i for i >= 1; zero past the degree.
  double theta(int i) const;
  std::span<const double> thetas() const { return theta_; }

  bool is_exact() const { return exact_.has_value(); }
  /// Throws ValidationError for a floating-point specialization.
  const std::vector<Rational>& exact_thetas() const;

  /// log Z = sum_i theta_i^2 / i.
  double log_normalizer() const;
  /// sum_i |theta_i|.
  double l1_norm() const;

  friend bool operator==(const Specialization& a, const Specialization& b) {
    return a.theta_ == b.theta_;
  }

 private:
  std::vector<double> theta_;
  std::optional<std::vector<Rational>> exact_;
};

/// theta_i -> (-1)^{i-1} theta_i, the image of the involution omega; under
/// it s_lambda becomes s_{lambda'}.
Specialization omega_involution(const Specialization& spec);

/// h_0..h_max_k from sum_k h_k z^k = exp(sum_i theta_i z^i / i), via the
/// recurrence k h_k = sum_{i=1}^{k} theta_i h_{k-i}.
std::vector<double> h_series(const Specialization& spec, int max_k);
std::vector<Rational> h_series_exact(const Specialization& spec, int max_k);

/// Evaluates s_lambda by the Jacobi-Trudi determinant det[h_{lambda_i - i + j}]
/// against a cached h table. Partial-pivot LU.
class JacobiTrudi {
 public:
  JacobiTrudi(const Specialization& spec, int max_index);
  double operator()(const Partition& lambda) const;
  int max_index() const { return static_cast<int>(h_.size()) - 1; }

 private:
  std::vector<double> h_;
};

double schur_value(const Partition& lambda, const Specialization& spec);
/// Fraction-free (Bareiss) elimination over the rationals. Requires an exact
/// specialization.
Rational schur_value_exact(const Partition& lambda, const Specialization& spec);

/// V(z) = sum_i theta_i z^i / i.
std::complex<double> potential_V(const Specialization& spec, std::complex<double> z);

/// Coefficients (constant term first) of the polynomial Vt with
/// Vt(z + 1/z) = V(z) + V(1/z).
std::vector<double> tilde_V_poly(const Specialization& spec);
std::vector<Rational> tilde_V_poly_exact(const Specialization& spec);

double evaluate_polynomial(std::span<const double> coeffs, double x);

}  // namespace multischur
