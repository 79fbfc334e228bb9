#pragma once

#include "multischur/multicritical.hpp"

#include <span>
#include <vector>

namespace multischur {

/// rho^oe(u) = arccos(1 - binom(2n, n-1)^{1/n} (b - u)^{1/n} / 2) / pi on
/// [-b~, b]; 1 to the left, 0 to the right.
double rho_oe(int n, double u);

/// int_0^chi (2 sin phi)^{2n-1} dphi, in closed form.
double sine_power_integral(int n, double chi);

/// rho^o(u) = chi(u) / pi with int_0^chi (2 sin phi)^{2n-1} = binom(2n-1, n) (b - u).
double rho_o(int n, double u);

double rho(MeasureKind kind, int n, double u);

/// Omega(u) = left + int_{-left}^u (1 - 2 rho); |u| outside the support.
double omega(MeasureKind kind, int n, double u);

struct ProfilePoint {
  double u = 0.0;
  double rho = 0.0;
  double omega = 0.0;
};

struct DensityProfile {
  MeasureKind kind = MeasureKind::odd;
  int n = 1;
  double left_edge = 0.0;   // -b~ or -b
  double right_edge = 0.0;  // b
  std::vector<ProfilePoint> points;
};

/// Profile on a grid of step `step` covering the support plus `pad` on each side.
DensityProfile density_profile(MeasureKind kind, int n, double step, double pad = 0.5);

struct DensityComparisonRow {
  double u = 0.0;
  int site = 0;  // m with k = m + 1/2 = floor(theta u) + 1/2
  double kernel = 0.0;
  double rho = 0.0;
  double difference = 0.0;
};

struct DensityComparison {
  double theta = 0.0;
  std::vector<DensityComparisonRow> rows;
  double max_difference = 0.0;
};

/// K(k, k) at k = theta u against rho(u), for the specialization of params.
DensityComparison compare_density(const MulticriticalParams& params, std::span<const double> grid);

}  // namespace multischur
