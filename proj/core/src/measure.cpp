#include "multischur/measure.hpp"

#include <algorithm>
#include <cmath>

namespace multischur {

double schur_probability(const Partition& lambda, const Specialization& spec) {
  const double s = schur_value(lambda, spec);
  return s * s * std::exp(-spec.log_normalizer());
}

Rational schur_weight_exact(const Partition& lambda, const Specialization& spec) {
  const Rational s = schur_value_exact(lambda, spec);
  return s * s;
}

EnumeratedMeasure::EnumeratedMeasure(const Specialization& spec, int max_size, int cap)
    : max_size_(max_size), partitions_(enumerate_partitions(max_size, cap)) {
  const JacobiTrudi schur(spec, 2 * max_size + 1);
  const double normalizer = std::exp(-spec.log_normalizer());
  probabilities_.reserve(partitions_.size());
  for (const auto& lambda : partitions_) {
    const double s = schur(lambda);
    probabilities_.push_back(s * s * normalizer);
  }
}

double EnumeratedMeasure::total_mass() const {
  // Smallest terms first.
  std::vector<double> sorted(probabilities_);
  std::sort(sorted.begin(), sorted.end());
  double sum = 0.0;
  for (double p : sorted) sum += p;
  return sum;
}

double EnumeratedMeasure::mass_where(const std::function<bool(const Partition&)>& predicate) const {
  double sum = 0.0;
  for (std::size_t i = partitions_.size(); i-- > 0;)
    if (predicate(partitions_[i])) sum += probabilities_[i];
  return sum;
}

double EnumeratedMeasure::first_part_cdf(int l) const {
  return mass_where([l](const Partition& p) { return p.first() <= l; });
}

double EnumeratedMeasure::length_cdf(int l) const {
  return mass_where([l](const Partition& p) { return p.length() <= l; });
}

double EnumeratedMeasure::correlation(std::span<const int> sites) const {
  return mass_where([sites](const Partition& p) {
    return std::all_of(sites.begin(), sites.end(), [&](int m) {
      // S(lambda) = {lambda_i - i}: every m <= -l(lambda) - 1 is filled.
      if (m <= -p.length() - 1) return true;
      for (int i = 1; i <= p.length(); ++i)
        if (p[static_cast<std::size_t>(i - 1)] - i == m) return true;
      return false;
    });
  });
}

double EnumeratedMeasure::mean_size() const {
  double sum = 0.0;
  for (std::size_t i = partitions_.size(); i-- > 0;) sum += partitions_[i].size() * probabilities_[i];
  return sum;
}

}  // namespace multischur
