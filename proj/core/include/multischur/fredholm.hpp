#pragma once

#include "multischur/airy.hpp"

namespace multischur {

struct FredholmOptions {
  int nodes = 80;
  int max_nodes = 1280;
  /// Required |F_m - F_2m|.
  double tolerance = 1e-8;
  /// The kernel trace left beyond the upper endpoint.
  double tail_tolerance = 1e-12;
};

struct FredholmResult {
  double value = 1.0;
  double lower = 0.0;
  double upper = 0.0;
  /// Gauss-Legendre nodes of the reported (finer) discretization.
  int nodes = 0;
  /// |F_m - F_2m| at the final doubling.
  double self_convergence = 0.0;
};

/// F(2n+1; s) = det(1 - A_{2n+1}) on L^2(s, infinity) by Gauss-Legendre
/// Nystrom discretization with symmetric square-root weights.
class TracyWidom {
 public:
  explicit TracyWidom(int order, FredholmOptions options = {});

  int order() const { return kernel_.order(); }
  const AiryKernel& kernel() const { return kernel_; }
  /// s + T: the kernel trace beyond this point is below the tail tolerance.
  double upper_endpoint() const { return upper_; }

  FredholmResult evaluate(double s) const;
  double operator()(double s) const { return evaluate(s).value; }

  /// One discretization with m nodes on (s, upper).
  double discretized(double s, double upper, int m) const;

 private:
  AiryKernel kernel_;
  FredholmOptions options_;
  double upper_;
};

double tracy_widom(int order, double s);

}  // namespace multischur
