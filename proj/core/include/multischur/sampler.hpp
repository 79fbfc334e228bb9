#pragma once

#include "multischur/kernel.hpp"
#include "multischur/multicritical.hpp"
#include "multischur/partition.hpp"
#include "multischur/specialization.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace multischur {

struct SampleWindow {
  int lo = -10;  // sites below lo are taken to be occupied
  int hi = 10;
};

/// Covers [-(b~ + D) theta, (b + D) theta], D = 4 (d theta)^{1/(2n+1)} / theta,
/// plus `margin` sites on both sides.
SampleWindow auto_window(const MulticriticalParams& params, int margin = 10);

struct SamplerOptions {
  std::optional<SampleWindow> window;
  int threads = 1;
};

struct SampleBatch {
  Specialization spec;
  std::optional<MulticriticalParams> params;
  SampleWindow window;
  std::uint64_t seed = 0;
  std::vector<Partition> partitions;
  /// Draws whose particle count in the window did not match the vacuum
  /// charge; they were redrawn.
  long rejected = 0;
  /// Eigenvalues of the window kernel pulled back into [0, 1].
  int clamped_eigenvalues = 0;
  /// Mean and variance of the number of selected eigenvectors.
  double mean_selected = 0.0;
  double var_selected = 0.0;

  double rejection_rate() const {
    const double total = static_cast<double>(partitions.size()) + static_cast<double>(rejected);
    return total > 0 ? static_cast<double>(rejected) / total : 0.0;
  }
  bool accepted() const { return rejection_rate() < 1e-3; }
};

/// Exact samples of S(lambda) restricted to a window, by spectral
/// decomposition of the windowed kernel. Sample i uses its own generator
/// seeded with mix_seed(seed, i).
SampleBatch sample(const Specialization& spec, SampleWindow window, long count, std::uint64_t seed,
                   int threads = 1);
SampleBatch sample(const MulticriticalParams& params, long count, std::uint64_t seed,
                   SamplerOptions options = {});

/// Empirical CDF of the edge-rescaled statistic.
class EmpiricalEdgeCdf {
 public:
  EmpiricalEdgeCdf(const SampleBatch& batch, EdgeStatistic statistic, ScalingConvention convention);

  const EdgeScaling& scaling() const { return scaling_; }
  /// Fraction of samples with statistic <= floor(center + s * scale).
  double operator()(double s) const;
  /// Fraction with statistic <= l.
  double at(int l) const;
  /// Rescaled sample values (statistic - center) / scale, sorted.
  std::vector<double> rescaled() const;

 private:
  EdgeScaling scaling_;
  std::vector<int> values_;  // sorted
};

EmpiricalEdgeCdf empirical_edge_cdf(const SampleBatch& batch, EdgeStatistic statistic,
                                    ScalingConvention convention = kDefaultRightConvention);

}  // namespace multischur
