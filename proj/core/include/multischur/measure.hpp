#pragma once

#include "multischur/partition.hpp"
#include "multischur/specialization.hpp"

#include <functional>
#include <span>
#include <vector>

namespace multischur {

/// P(lambda) = s_lambda^2 / Z for a single partition.
double schur_probability(const Partition& lambda, const Specialization& spec);

/// Unnormalised exact weight s_lambda^2 (exact specializations only).
Rational schur_weight_exact(const Partition& lambda, const Specialization& spec);

/// The Schur measure tabulated on every partition with |lambda| <= max_size.
/// This is the brute-force route every determinantal or Toeplitz quantity is
/// checked against; mass beyond max_size is simply missing.
class EnumeratedMeasure {
 public:
  EnumeratedMeasure(const Specialization& spec, int max_size, int cap = kDefaultEnumerationCap);

  int max_size() const { return max_size_; }
  std::span<const Partition> partitions() const { return partitions_; }
  std::span<const double> probabilities() const { return probabilities_; }

  double total_mass() const;
  double mass_where(const std::function<bool(const Partition&)>& predicate) const;
  double first_part_cdf(int l) const;
  double length_cdf(int l) const;
  /// P(all given sites belong to S(lambda)), sites in the m = k - 1/2 encoding.
  double correlation(std::span<const int> sites) const;
  double mean_size() const;

 private:
  int max_size_;
  std::vector<Partition> partitions_;
  std::vector<double> probabilities_;
};

}  // namespace multischur
