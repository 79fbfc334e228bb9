#include "multischur/partition.hpp"

#include "multischur/errors.hpp"

#include <algorithm>
#include <charconv>

namespace multischur {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw ValidationError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw ValidationError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
      throw ValidationError("malformed partition part '" + std::string(token) + "'");
    parts.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

std::string Partition::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> columns(static_cast<std::size_t>(lambda.first()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++columns[static_cast<std::size_t>(j)];
  return Partition(std::move(columns));
}

bool FermionicSet::contains(int m) const {
  if (m < window_low) return true;
  return std::binary_search(elements.begin(), elements.end(), m, std::greater<>());
}

FermionicSet fermionic_set(const Partition& lambda, int window_low) {
  if (window_low > -lambda.length())
    throw ValidationError("window_low " + std::to_string(window_low) +
                          " truncates S(lambda); need <= " + std::to_string(-lambda.length()));
  FermionicSet set;
  set.window_low = window_low;
  for (int i = 1;; ++i) {
    const int m = lambda[static_cast<std::size_t>(i - 1)] - i;
    if (m < window_low) break;
    set.elements.push_back(m);
  }
  return set;
}

Partition partition_from_set(const FermionicSet& set) {
  // Charge zero: a window [w, inf) holds exactly -w particles.
  if (static_cast<int>(set.elements.size()) != -set.window_low)
    throw ValidationError("fermionic set has nonzero charge for its window");
  std::vector<int> parts;
  parts.reserve(set.elements.size());
  for (std::size_t i = 0; i < set.elements.size(); ++i) {
    const int m = set.elements[i];
    if (m < set.window_low) throw ValidationError("fermionic set element below its window");
    if (i > 0 && m >= set.elements[i - 1])
      throw ValidationError("fermionic set must be strictly decreasing");
    parts.push_back(m + static_cast<int>(i) + 1);
  }
  return Partition(std::move(parts));
}

BigInt hook_count(const Partition& lambda) {
  const Partition columns = conjugate(lambda);
  BigInt hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[static_cast<std::size_t>(i)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i)] - j - 1;
      const int leg = columns[static_cast<std::size_t>(j)] - i - 1;
      hooks *= arm + leg + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

PartitionEnumerator::PartitionEnumerator(int max_size, int cap) : max_size_(max_size) {
  if (max_size < 0) throw ValidationError("max_size must be non-negative");
  if (max_size > cap)
    throw ValidationError("max_size " + std::to_string(max_size) + " exceeds enumeration cap " +
                          std::to_string(cap));
}

void PartitionEnumerator::reset() {
  current_size_ = 0;
  parts_.clear();
  started_ = false;
}

std::optional<Partition> PartitionEnumerator::next() {
  if (!started_) {
    started_ = true;
    return Partition();
  }
  if (!parts_.empty()) {
    // Reverse-lexicographic successor: find the rightmost part > 1, decrement
    // it, and redistribute the remainder greedily with parts bounded by it.
    int remainder = 0;
    while (!parts_.empty() && parts_.back() == 1) {
      parts_.pop_back();
      ++remainder;
    }
    if (!parts_.empty()) {
      const int bound = --parts_.back();
      ++remainder;
      while (remainder > 0) {
        const int piece = std::min(bound, remainder);
        parts_.push_back(piece);
        remainder -= piece;
      }
      return Partition(parts_);
    }
  }
  if (current_size_ >= max_size_) return std::nullopt;
  ++current_size_;
  parts_ = {current_size_};
  return Partition(parts_);
}

std::vector<Partition> enumerate_partitions(int max_size, int cap) {
  std::vector<Partition> out;
  PartitionEnumerator stream(max_size, cap);
  while (auto p = stream.next()) out.push_back(std::move(*p));
  return out;
}

}  // namespace multischur
