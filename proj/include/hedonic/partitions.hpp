#ifndef HEDONIC_PARTITIONS_HPP
#define HEDONIC_PARTITIONS_HPP

#include <algorithm>
#include <limits>
#include <optional>
#include <type_traits>
#include <vector>

#include "hedonic/error.hpp"
#include "hedonic/outcome.hpp"

namespace hedonic {

/// Cap on how many partitions an exhaustive enumeration may visit.
/// The default admits every n <= 12 (Bell(12) = 4,213,597).
struct SizeGuard {
  unsigned long long max_partitions = 4213597ULL;
};

/// Number of set partitions of n elements, saturating at uint64 max.
inline unsigned long long bell_number(int n) {
  // Bell triangle with saturating addition.
  const unsigned long long kMax = std::numeric_limits<unsigned long long>::max();
  std::vector<unsigned long long> row{1};
  for (int i = 1; i <= n; ++i) {
    std::vector<unsigned long long> next(i + 1);
    next[0] = row.back();
    for (int j = 1; j <= i; ++j) {
      next[j] = (next[j - 1] > kMax - row[j - 1]) ? kMax : next[j - 1] + row[j - 1];
    }
    row = std::move(next);
  }
  return row[0];
}

/// Number of set partitions of n elements into at most k blocks, saturating.
inline unsigned long long partition_count(int n, std::optional<int> k = std::nullopt) {
  if (!k || *k >= n) return bell_number(n);
  const unsigned long long kMax = std::numeric_limits<unsigned long long>::max();
  const int cap = std::max(0, *k);
  // Stirling numbers of the second kind, summed over block counts 1..cap.
  std::vector<unsigned long long> s(cap + 1, 0);  // s[j] = S(i, j)
  s[0] = 1;                                       // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, cap); j >= 1; --j) {
      unsigned long long grow = (s[j] > kMax / j) ? kMax : s[j] * j;
      s[j] = (grow > kMax - s[j - 1]) ? kMax : grow + s[j - 1];
    }
    s[0] = 0;
  }
  unsigned long long total = 0;
  for (int j = 1; j <= cap; ++j) total = (total > kMax - s[j]) ? kMax : total + s[j];
  return total;
}

/// Iterates every set partition of {0..n-1} exactly once via restricted
/// growth strings, optionally only those with at most `max_blocks` blocks.
/// The string itself is the canonical coalition assignment.
class PartitionIterator {
 public:
  explicit PartitionIterator(int n, std::optional<int> max_blocks = std::nullopt)
      : n_(n), cap_(max_blocks ? *max_blocks : n) {
    if (n < 1) throw Error(Errc::InvalidPartition, "partition enumeration needs n >= 1");
    if (cap_ < 1) throw Error(Errc::InvalidK, "block cap must be at least 1");
    rgs_.assign(n_, 0);
    prefix_max_.assign(n_, 0);
    done_ = false;
  }

  bool done() const { return done_; }
  const std::vector<int>& assignment() const { return rgs_; }

  Outcome outcome() const { return Outcome::from_assignment(rgs_); }

  int block_count() const { return prefix_max_[n_ - 1] + 1; }

  void next() {
    // Find the rightmost position (never position 0) that can still grow.
    for (int i = n_ - 1; i >= 1; --i) {
      const int limit = std::min(prefix_max_[i - 1] + 1, cap_ - 1);
      if (rgs_[i] < limit) {
        ++rgs_[i];
        prefix_max_[i] = std::max(prefix_max_[i - 1], rgs_[i]);
        for (int j = i + 1; j < n_; ++j) {
          rgs_[j] = 0;
          prefix_max_[j] = prefix_max_[j - 1];
        }
        return;
      }
    }
    done_ = true;
  }

 private:
  int n_;
  int cap_;
  std::vector<int> rgs_;
  std::vector<int> prefix_max_;
  bool done_ = false;
};

/// Calls `fn(outcome)` for every partition (respecting the block cap),
/// guarding against explosions. `fn` may return void, or bool where false
/// stops the enumeration.
template <typename Fn>
void for_each_partition(int n, std::optional<int> k, const SizeGuard& guard, Fn&& fn) {
  const unsigned long long count = partition_count(n, k);
  if (count > guard.max_partitions) {
    throw Error(Errc::SizeGuardExceeded,
                "enumerating " + std::to_string(count) + " partitions exceeds the cap of " +
                    std::to_string(guard.max_partitions));
  }
  for (PartitionIterator it(n, k); !it.done(); it.next()) {
    if constexpr (std::is_same_v<decltype(fn(it.outcome())), bool>) {
      if (!fn(it.outcome())) return;
    } else {
      fn(it.outcome());
    }
  }
}

/// Materialized enumeration, in canonical (lexicographic) order.
inline std::vector<Outcome> enumerate_partitions(int n, std::optional<int> k = std::nullopt,
                                                 const SizeGuard& guard = {}) {
  std::vector<Outcome> all;
  for_each_partition(n, k, guard, [&](Outcome o) { all.push_back(std::move(o)); });
  return all;
}

}  // namespace hedonic

#endif  // HEDONIC_PARTITIONS_HPP
