#pragma once

#include "multischur/rational.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace multischur {

/// Largest |lambda| that enumerate_partitions accepts unless the caller
/// raises the cap explicitly.
inline constexpr int kDefaultEnumerationCap = 40;

/// An integer partition stored as its weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws ValidationError unless parts are weakly decreasing; trailing
  /// zeros are dropped, any other non-positive part is rejected.
  explicit Partition(std::vector<int> parts);

  static Partition parse(std::string_view text);

  std::span<const int> parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// lambda_1, or 0 for the empty partition.
  int first() const { return parts_.empty() ? 0 : parts_.front(); }
  /// lambda_{i+1} (zero-based), 0 past the last part.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Comma-separated parts, "" for the empty partition.
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

Partition conjugate(const Partition& lambda);

/// S(lambda) under the integer encoding m = k - 1/2, i.e. {lambda_i - i},
/// listed in decreasing order down to (and including) window_low.
struct FermionicSet {
  int window_low = -1;
  std::vector<int> elements;

  bool contains(int m) const;
};

/// Throws ValidationError when window_low > -length(lambda): the window
/// would cut off a part of the configuration that differs from the vacuum.
FermionicSet fermionic_set(const Partition& lambda, int window_low);

/// Inverse of fermionic_set. The set must coincide with the vacuum
/// {-1, -2, ...} near window_low, otherwise ValidationError.
Partition partition_from_set(const FermionicSet& set);

/// Number of standard Young tableaux, by the hook length formula.
BigInt hook_count(const Partition& lambda);

/// Restartable stream over all partitions of size <= max_size, ordered by
/// size and then reverse-lexicographically: (), (1), (2), (1,1), (3), ...
class PartitionEnumerator {
 public:
  explicit PartitionEnumerator(int max_size, int cap = kDefaultEnumerationCap);

  std::optional<Partition> next();
  void reset();

 private:
  int max_size_;
  int current_size_ = 0;
  std::vector<int> parts_;
  bool started_ = false;
};

std::vector<Partition> enumerate_partitions(int max_size, int cap = kDefaultEnumerationCap);

}  // namespace multischur

template <>
struct std::hash<multischur::Partition> {
  std::size_t operator()(const multischur::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int part : p.parts()) h = (h ^ static_cast<std::size_t>(part)) * 1099511628211ull;
    return h;
  }
};
