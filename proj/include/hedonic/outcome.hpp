#ifndef HEDONIC_OUTCOME_HPP
#define HEDONIC_OUTCOME_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "hedonic/error.hpp"
#include "hedonic/game.hpp"

namespace hedonic {

/// Marker for deviations that open a fresh singleton coalition.
inline constexpr int kNewSingleton = -1;

/// A single-player move: to an existing coalition id or to a new singleton.
struct Deviation {
  PlayerId player = 0;
  int target = kNewSingleton;

  bool to_new_singleton() const { return target == kNewSingleton; }

  friend bool operator==(const Deviation& a, const Deviation& b) {
    return a.player == b.player && a.target == b.target;
  }
};

/// A partition of players 0..n-1 into coalitions, kept in canonical form:
/// members sorted ascending, coalitions ordered by smallest member, and
/// coalition ids equal to the rank in that order.
class Outcome {
 public:
  Outcome() = default;

  /// Canonicalizes an assignment player -> arbitrary coalition key.
  static Outcome from_assignment(const std::vector<int>& coalition_of) {
    const int n = static_cast<int>(coalition_of.size());
    Outcome out;
    out.assignment_.assign(n, -1);
    std::vector<int> keys;  // distinct keys in order of first appearance
    for (int i = 0; i < n; ++i) {
      int key = coalition_of[i];
      int id = -1;
      for (std::size_t k = 0; k < keys.size(); ++k) {
        if (keys[k] == key) {
          id = static_cast<int>(k);
          break;
        }
      }
      if (id < 0) {
        id = static_cast<int>(keys.size());
        keys.push_back(key);
        out.coalitions_.emplace_back();
      }
      out.assignment_[i] = id;
      out.coalitions_[id].push_back(i);
    }
    // First-appearance order already sorts coalitions by smallest member and
    // keeps members ascending.
    return out;
  }

  /// Validates a coalition list as a partition of 0..n-1 and canonicalizes.
  static Outcome from_coalitions(int player_count, const std::vector<std::vector<int>>& parts) {
    std::vector<int> assignment(player_count, -1);
    int next = 0;
    for (const auto& part : parts) {
      if (part.empty()) throw Error(Errc::InvalidPartition, "empty coalition");
      for (int member : part) {
        if (member < 0 || member >= player_count) {
          throw Error(Errc::InvalidPartition, "member " + std::to_string(member) + " out of range");
        }
        if (assignment[member] != -1) {
          throw Error(Errc::InvalidPartition,
                      "player " + std::to_string(member) + " appears in two coalitions");
        }
        assignment[member] = next;
      }
      ++next;
    }
    for (int i = 0; i < player_count; ++i) {
      if (assignment[i] == -1) {
        throw Error(Errc::InvalidPartition, "player " + std::to_string(i) + " not covered");
      }
    }
    return from_assignment(assignment);
  }

  static Outcome singletons(int player_count) {
    std::vector<int> a(player_count);
    for (int i = 0; i < player_count; ++i) a[i] = i;
    return from_assignment(a);
  }

  static Outcome grand_coalition(int player_count) {
    return from_assignment(std::vector<int>(player_count, 0));
  }

  int player_count() const { return static_cast<int>(assignment_.size()); }
  int coalition_count() const { return static_cast<int>(coalitions_.size()); }

  int coalition_of(PlayerId i) const {
    if (i < 0 || i >= player_count()) {
      throw Error(Errc::UnknownPlayer, "player " + std::to_string(i) + " out of range");
    }
    return assignment_[i];
  }

  const std::vector<int>& coalition(int id) const { return coalitions_.at(id); }
  const std::vector<std::vector<int>>& coalitions() const { return coalitions_; }
  const std::vector<int>& assignment() const { return assignment_; }

  bool is_singleton(PlayerId i) const { return coalitions_[coalition_of(i)].size() == 1; }

  /// Applies a deviation and returns the canonical successor outcome.
  Outcome moved(const Deviation& dev) const {
    const int from = coalition_of(dev.player);
    if (dev.to_new_singleton()) {
      if (coalitions_[from].size() == 1) {
        throw Error(Errc::InvalidDeviation, "singleton player moving to a new singleton");
      }
    } else {
      if (dev.target < 0 || dev.target >= coalition_count()) {
        throw Error(Errc::InvalidDeviation, "target coalition out of range");
      }
      if (dev.target == from) {
        throw Error(Errc::InvalidDeviation, "target equals current coalition");
      }
    }
    std::vector<int> a(assignment_);
    a[dev.player] = dev.to_new_singleton() ? coalition_count() : dev.target;
    return from_assignment(a);
  }

  /// Nonempty coalition count after the deviation, without materializing it.
  int coalition_count_after(const Deviation& dev) const {
    const int from = coalition_of(dev.player);
    const bool empties_old = coalitions_[from].size() == 1;
    if (dev.to_new_singleton()) return coalition_count() + 1 - (empties_old ? 1 : 0);
    return coalition_count() - (empties_old ? 1 : 0);
  }

  std::string str() const {
    std::string s = "[";
    for (std::size_t c = 0; c < coalitions_.size(); ++c) {
      if (c) s += ",";
      s += "[";
      for (std::size_t i = 0; i < coalitions_[c].size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coalitions_[c][i]);
      }
      s += "]";
    }
    s += "]";
    return s;
  }

  friend bool operator==(const Outcome& a, const Outcome& b) {
    return a.assignment_ == b.assignment_;
  }
  friend bool operator!=(const Outcome& a, const Outcome& b) { return !(a == b); }
  friend bool operator<(const Outcome& a, const Outcome& b) {
    return a.assignment_ < b.assignment_;
  }

 private:
  std::vector<int> assignment_;
  std::vector<std::vector<int>> coalitions_;
};

/// Canonicalizes a raw coalition list; rejects non-partitions.
inline Outcome canonical_form(int player_count, const std::vector<std::vector<int>>& parts) {
  return Outcome::from_coalitions(player_count, parts);
}

/// Idempotent by construction: outcomes are always canonical.
inline Outcome canonical_form(const Outcome& outcome) {
  return Outcome::from_coalitions(outcome.player_count(), outcome.coalitions());
}

}  // namespace hedonic

#endif  // HEDONIC_OUTCOME_HPP
