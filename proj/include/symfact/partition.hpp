#ifndef SYMFACT_PARTITION_HPP
#define SYMFACT_PARTITION_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "symfact/errors.hpp"

namespace symfact {

class ShiftedPartition;

/// Weakly decreasing nonnegative integer vector of fixed length n. Trailing
/// zeros are significant: (1,0) and (1,0,0) are different partitions.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw StructuralError("partition has a negative part");
      if (i > 0 && parts_[i] > parts_[i - 1])
        throw StructuralError("partition parts must be weakly decreasing");
    }
  }
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  static Partition zero(std::size_t n) { return Partition(std::vector<int>(n, 0)); }

  std::size_t size() const { return parts_.size(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }

  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  /// lambda_i - lambda_j with 0-based indices and lambda_n = 0.
  int diff(std::size_t i, std::size_t j) const { return at_or_zero(i) - at_or_zero(j); }
  /// lambda_j - lambda_{j+1} (0-based j), the exponent of e_{j+1} in E_lambda.
  int gap(std::size_t j) const { return diff(j, j + 1); }

  bool is_zero() const { return weight() == 0; }

  /// (lambda_1, ..., lambda_n, 0)
  Partition append_zero() const {
    auto p = parts_;
    p.push_back(0);
    return Partition(std::move(p));
  }
  /// Drops the last part (which must be zero).
  Partition drop_trailing_zero() const {
    if (parts_.empty() || parts_.back() != 0) throw StructuralError("last part is not zero");
    return Partition(std::vector<int>(parts_.begin(), parts_.end() - 1));
  }

  ShiftedPartition staircase_shift() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  int at_or_zero(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  std::vector<int> parts_;
};

/// Strictly decreasing nonnegative vector mu = lambda + (n-1, ..., 1, 0).
class ShiftedPartition {
 public:
  explicit ShiftedPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 0) throw StructuralError("shifted partition has a negative part");
      if (i > 0 && parts_[i] >= parts_[i - 1])
        throw StructuralError("shifted partition must be strictly decreasing");
    }
  }
  std::size_t size() const { return parts_.size(); }
  const std::vector<int>& parts() const { return parts_; }
  int operator[](std::size_t i) const { return parts_[i]; }
  int weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

  friend bool operator==(const ShiftedPartition&, const ShiftedPartition&) = default;

 private:
  std::vector<int> parts_;
};

inline ShiftedPartition Partition::staircase_shift() const {
  std::vector<int> mu(parts_.size());
  const int n = static_cast<int>(parts_.size());
  for (int i = 0; i < n; ++i) mu[i] = parts_[i] + n - 1 - i;
  return ShiftedPartition(std::move(mu));
}

inline int weight(const Partition& p) { return p.weight(); }
inline ShiftedPartition staircase_shift(const Partition& p) { return p.staircase_shift(); }

/// mu <= lambda in dominance order: equal weight and every prefix sum of mu is
/// bounded by the corresponding prefix sum of lambda.
inline bool dominance_leq(const Partition& mu, const Partition& lambda) {
  if (mu.size() != lambda.size()) throw StructuralError("dominance comparison of different lengths");
  if (mu.weight() != lambda.weight()) return false;
  int a = 0, b = 0;
  for (std::size_t k = 0; k < mu.size(); ++k) {
    a += mu[k];
    b += lambda[k];
    if (a > b) return false;
  }
  return true;
}

/// All partitions of length n with weight <= maxWeight, ordered by weight and
/// then reverse-lexicographically ((2,0) before (1,1)).
inline std::vector<Partition> enumerate_partitions(int maxWeight, std::size_t n) {
  std::vector<Partition> out;
  std::vector<int> parts(n, 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t i, int remaining, int cap) {
    if (i == n) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    int slots = static_cast<int>(n - i);
    for (int v = std::min(cap, remaining); v >= 0; --v) {
      if (v * slots < remaining) break;
      parts[i] = v;
      rec(i + 1, remaining - v, v);
    }
    parts[i] = 0;
  };
  for (int w = 0; w <= maxWeight; ++w) {
    if (n == 0) {
      if (w == 0) out.emplace_back(std::vector<int>{});
      continue;
    }
    rec(0, w, w);
  }
  return out;
}

inline std::string to_string(const Partition& p) {
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

}  // namespace symfact

#endif  // SYMFACT_PARTITION_HPP
