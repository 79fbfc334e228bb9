#pragma once

#include "multischur/laurent.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/specialization.hpp"

#include <Eigen/Dense>

#include <span>
#include <string>
#include <string_view>

namespace multischur {

// Sites of the lattice Z + 1/2 are addressed by the integer m = k - 1/2
// everywhere in this module.

inline constexpr double kWindowTailTolerance = 1e-14;

/// K restricted to the sites [lo, hi].
struct DiscreteKernelMatrix {
  int lo = 0;
  int hi = -1;
  Eigen::MatrixXd values;
  /// sum_{m > hi} K(m, m): the trace that the window leaves out.
  double truncation_tail = 0.0;

  int size() const { return hi - lo + 1; }
  double operator()(int a, int b) const { return values(a - lo, b - lo); }
};

/// Correlation kernel of S(lambda) for a real specialization. With
/// J(z) = exp(V(z) - V(1/z)) = sum_m kappa_m z^m, coefficient extraction in
/// the double contour integral leaves K(a, b) = sum_{j >= 1} kappa_{a+j} kappa_{b+j}.
class DiscreteKernel {
 public:
  explicit DiscreteKernel(const Specialization& spec);

  const Specialization& spec() const { return spec_; }
  const LaurentCoefficients& kappa() const { return kappa_; }

  double entry(int a, int b) const;
  /// One-point function K(a, a) = P(a in S(lambda)).
  double density(int a) const { return entry(a, a); }
  /// sum_{m >= a} K(m, m).
  double trace_tail(int a) const;
  /// Smallest R with trace_tail(R) < tolerance.
  int truncation_radius(double tolerance = kWindowTailTolerance) const;

  DiscreteKernelMatrix window(int lo, int hi) const;

 private:
  double kappa_at(int m) const { return kappa_[m]; }
  // sum_{j > a} kappa_j^2, tabulated for a in [-M-1, M].
  double tail_squares(int a) const;

  Specialization spec_;
  LaurentCoefficients kappa_;
  std::vector<double> tail_;        // tail_[a + M + 1] = sum_{j > a} kappa_j^2
  std::vector<double> trace_tail_;  // trace_tail_[a + M + 1] = sum_{m >= a} K(m, m)
};

struct GapResult {
  double value = 1.0;
  int window_lo = 0;
  int window_hi = -1;
  double truncation_tail = 0.0;
  /// l < 0: lambda_1 <= l cannot happen, value is 0.
  bool impossible = false;
  /// A pivot of the symmetric factorization of I - K fell below -1e-10 and
  /// the determinant was recomputed by LU.
  bool psd_violation = false;
};

/// P(lambda_1 <= l) = det(I - K) on {l, l+1, ...}, truncated where the
/// remaining trace drops below kWindowTailTolerance.
GapResult gap_probability_detail(const DiscreteKernel& kernel, int l);
double gap_probability(const DiscreteKernel& kernel, int l);
double gap_probability(const Specialization& spec, int l);

/// P(l(lambda) <= l), the gap probability of the conjugate specialization.
double length_cdf(const Specialization& spec, int l);

/// det[K(a_i, a_j)]: probability that all sites belong to S(lambda).
double correlation(const DiscreteKernel& kernel, std::span<const int> sites);

/// det(I - K) of a symmetric window, by pivoted LDL^T with an LU fallback.
struct WindowDeterminant {
  double value = 1.0;
  bool psd_violation = false;
};
WindowDeterminant determinant_one_minus(const Eigen::MatrixXd& k);

enum class EdgeStatistic { lambda1, length };
/// How the fluctuation scale combines theta with d (or d~):
/// theta_over_d -> (theta / d)^{1/q}, theta_times_d -> (theta d)^{1/q}.
enum class ScalingConvention { theta_over_d, theta_times_d };

std::string to_string(EdgeStatistic statistic);
EdgeStatistic parse_edge_statistic(std::string_view text);
std::string to_string(ScalingConvention convention);
ScalingConvention parse_scaling_convention(std::string_view text);

/// Conventions selected after comparing both against the limiting laws at
/// finite theta (see the scaling-disambiguation check): the right edge
/// follows theta / d, the left edge of the odd-even measure theta * d~.
inline constexpr ScalingConvention kDefaultRightConvention = ScalingConvention::theta_over_d;
inline constexpr ScalingConvention kDefaultLeftConvention = ScalingConvention::theta_times_d;

/// Centre and width of the edge window: statistic ~ center + s * scale.
struct EdgeScaling {
  double center = 0.0;
  double scale = 1.0;
  int exponent_denominator = 3;  // the q in theta^{1/q}
};

EdgeScaling edge_scaling(const MulticriticalParams& params, EdgeStatistic statistic,
                         ScalingConvention convention);

struct EdgeCdf {
  int l = 0;
  double value = 0.0;
  bool below_zero = false;
};

/// P(statistic <= floor(center + s * scale)).
EdgeCdf edge_scaled_cdf(const MulticriticalParams& params, EdgeStatistic statistic, double s,
                        ScalingConvention convention);
/// Same, reusing a kernel built for params.spec() (lambda1) or its conjugate (length).
EdgeCdf edge_scaled_cdf(const DiscreteKernel& kernel, const MulticriticalParams& params,
                        EdgeStatistic statistic, double s, ScalingConvention convention);

}  // namespace multischur
