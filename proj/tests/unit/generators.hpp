#pragma once

// Small hand-rolled generators for property tests. Deterministic for a seed.

#include "multischur/partition.hpp"
#include "multischur/rational.hpp"
#include "multischur/specialization.hpp"

#include <cstdint>
#include <vector>

namespace gen {

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed * 0x9E3779B97F4A7C15ull + 1) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  /// Uniform in [lo, hi].
  int uniform(int lo, int hi) { return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1)); }
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Random partition of size exactly `size`: repeatedly strip a random part
/// bounded by the previous one.
inline multischur::Partition partition(Rng& rng, int size) {
  std::vector<int> parts;
  int left = size;
  int cap = size;
  while (left > 0) {
    const int p = rng.uniform(1, std::min(left, cap));
    parts.push_back(p);
    left -= p;
    cap = p;
  }
  return multischur::Partition(parts);
}

/// Rational specialization with degree <= max_degree, entries p/q with
/// |p| <= 5, 1 <= q <= 4.
inline multischur::Specialization rational_spec(Rng& rng, int max_degree) {
  const int degree = rng.uniform(1, max_degree);
  std::vector<multischur::Rational> t;
  for (int i = 0; i < degree; ++i) t.emplace_back(rng.uniform(-5, 5), rng.uniform(1, 4));
  if (t.back() == 0) t.back() = 1;
  return multischur::Specialization(t);
}

/// Real specialization with |theta_i| <= scale.
inline multischur::Specialization real_spec(Rng& rng, int max_degree, double scale) {
  const int degree = rng.uniform(1, max_degree);
  std::vector<double> t;
  for (int i = 0; i < degree; ++i) t.push_back(scale * (2.0 * rng.unit() - 1.0));
  return multischur::Specialization(t);
}

}  // namespace gen
