#pragma once

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multischur {

/// Ai_{2n+1}(x) = int exp(s zeta^{2n+1}/(2n+1) - x zeta) dzeta/(2 pi i),
/// s = (-1)^{n-1}, the up-oriented contour deformed onto two rays at angles
/// +-ray_angle() along which s zeta^{2n+1} is real and negative.
class AiryFunction {
 public:
  explicit AiryFunction(int order);

  int order() const { return order_; }
  int n() const { return (order_ - 1) / 2; }
  /// (-1)^{n-1}, the sign in the ODE A^{(2n)} = sign * x A.
  int sign() const { return sign_; }
  double ray_angle() const { return angle_; }

  /// j-th derivative, 0 <= j <= 2n.
  double operator()(double x, int deriv = 0) const;
  /// Ai^{(0)}(x), ..., Ai^{(count-1)}(x). Orders above 2n come from the ODE.
  std::vector<double> derivatives(double x, int count) const;

 private:
  int order_;
  int sign_;
  double angle_;
};

enum class KernelRepresentation { contour, product_integral, derivative_sum };

std::string to_string(KernelRepresentation rep);
KernelRepresentation parse_kernel_representation(std::string_view text);

/// The higher order Airy kernel A_{2n+1}(x, y).
class AiryKernel {
 public:
  explicit AiryKernel(int order);

  const AiryFunction& airy() const { return airy_; }
  int order() const { return airy_.order(); }

  double operator()(double x, double y,
                    KernelRepresentation rep = KernelRepresentation::derivative_sum) const;
  /// [A(xs_i, ys_j)].
  Eigen::MatrixXd matrix(std::span<const double> xs, std::span<const double> ys,
                         KernelRepresentation rep = KernelRepresentation::derivative_sum) const;

  /// Derivative-sum form from precomputed derivative tables (2n+4 entries each).
  double from_derivatives(double x, std::span<const double> dx, double y,
                          std::span<const double> dy) const;
  /// Number of derivatives from_derivatives expects.
  int derivative_count() const { return 2 * airy_.n() + 4; }

  /// Argument beyond which Ai_{2n+1} is negligible (|Ai|^2 < e^{-80}).
  double decay_cutoff() const;

 private:
  Eigen::MatrixXd product_integral(std::span<const double> xs, std::span<const double> ys) const;
  Eigen::MatrixXd contour(std::span<const double> xs, std::span<const double> ys) const;

  AiryFunction airy_;
};

/// Distance below which derivative_sum switches to its Taylor expansion.
inline constexpr double kDiagonalSwitch = 1e-3;

}  // namespace multischur
