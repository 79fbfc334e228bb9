#pragma once

#include "multischur/kernel.hpp"
#include "multischur/multicritical.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace multischur::checks {

struct CheckResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string summary;
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0.0;
};

struct CheckOptions {
  int threads = 1;
  std::uint64_t seed = 20240531;
  /// four-way parameters
  MeasureKind kind = MeasureKind::odd;
  int n = 2;
  Rational theta = Rational(3, 5);
};

/// Acceptance criteria 1..13.
inline constexpr int kCriterionCount = 13;
CheckResult criterion(int id, const CheckOptions& options = {});

/// Named checks: "criterion-<k>", "four-way", "scaling-disambiguation",
/// "kernel-invariants", "airy-invariants", "limit-shape-invariants",
/// "sampler-invariants".
std::vector<std::string> check_ids();
CheckResult run_check(const std::string& id, const CheckOptions& options = {});

/// Four-way equality for one (kind, n, theta) and statistic, l = 0..l_max.
CheckResult four_way(MeasureKind kind, int n, const Rational& theta, EdgeStatistic statistic,
                     int l_max = 5, int enum_cap = 30);

struct ConventionTrace {
  ScalingConvention convention;
  std::vector<double> thetas;
  /// sup over the s grid of |edge cdf - limit|, per theta
  std::vector<double> literal;
  /// sup over every lattice point of the edge window, the cdf at l compared
  /// with the limit law at (l + 1/2 - center) / scale
  std::vector<double> lattice;
};

/// Distances of both scaling conventions to the limit law.
std::vector<ConventionTrace> convention_traces(MeasureKind kind, int n, EdgeStatistic statistic,
                                               const std::vector<double>& thetas,
                                               const std::vector<double>& s_grid);

nlohmann::json to_json(const CheckResult& r);

}  // namespace multischur::checks
