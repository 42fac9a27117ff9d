#ifndef HEDONIC_STABILITY_HPP
#define HEDONIC_STABILITY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"
#include "hedonic/potential.hpp"
#include "hedonic/rule.hpp"

namespace hedonic {

/// Rule-independent raw numbers for one deviation. Vote denominators count
/// edges present in the graph, never players; missing edges are excluded.
struct DeviationStats {
  Rational current_utility;  // value toward own coalition (= leave sum)
  Rational target_value;     // value toward target (= enter sum), 0 for a new singleton
  Rational gain;             // target_value - current_utility
  int enter_degree = 0;      // deviator's edges into the target coalition
  int enter_positive = 0;    // ... of which positive
  int leave_degree = 0;      // deviator's edges inside its own coalition
  int leave_negative = 0;    // ... of which negative
};

struct FeasibilityBreakdown {
  bool nash = false;
  bool enter_ok = false;
  bool leave_ok = false;
  Rational gain;
  std::optional<Rational> enter_fraction;  // positive/degree when degree > 0
  std::optional<Rational> leave_fraction;  // negative/degree when degree > 0
  Rational enter_sum;
  Rational leave_sum;

  bool feasible() const { return nash && enter_ok && leave_ok; }
};

struct StabilityVerdict {
  bool stable = true;
  std::optional<std::pair<Deviation, FeasibilityBreakdown>> witness;
};

namespace detail {

/// Per-player aggregates over its adjacency, bucketed by coalition id.
struct PlayerBuckets {
  std::vector<Rational> sum;    // per coalition id
  std::vector<int> degree;
  std::vector<int> positive;
  std::vector<int> negative;

  PlayerBuckets(const Game& game, const Outcome& outcome, PlayerId player) {
    const int m = outcome.coalition_count();
    sum.assign(m, Rational());
    degree.assign(m, 0);
    positive.assign(m, 0);
    negative.assign(m, 0);
    for (const auto& [other, w] : game.neighbors(player)) {
      const int c = outcome.coalition_of(other);
      sum[c] += w;
      ++degree[c];
      if (w.positive()) {
        ++positive[c];
      } else {
        ++negative[c];
      }
    }
  }

  DeviationStats stats_for(int own, int target) const {
    DeviationStats s;
    s.current_utility = sum[own];
    s.leave_degree = degree[own];
    s.leave_negative = negative[own];
    if (target != kNewSingleton) {
      s.target_value = sum[target];
      s.enter_degree = degree[target];
      s.enter_positive = positive[target];
    }
    s.gain = s.target_value - s.current_utility;
    return s;
  }
};

inline bool fraction_at_least(int part, int whole, const Rational& threshold) {
  // part/whole >= threshold, exact; whole == 0 handled by callers.
  return Rational(part) >= threshold * Rational(whole);
}

}  // namespace detail

/// Applies a rule to raw deviation numbers.
inline FeasibilityBreakdown evaluate_rule(const DeviationStats& stats, const Rule& rule) {
  FeasibilityBreakdown b;
  b.gain = stats.gain;
  b.nash = stats.gain.positive();
  b.enter_sum = stats.target_value;
  b.leave_sum = stats.current_utility;

  switch (rule.enter) {
    case EnterRestriction::None:
      b.enter_ok = true;
      break;
    case EnterRestriction::SumIn:
      b.enter_ok = stats.target_value >= Rational(0);
      break;
    case EnterRestriction::VoteIn:
      b.enter_ok = stats.enter_degree == 0 ||
                   detail::fraction_at_least(stats.enter_positive, stats.enter_degree, rule.t_in);
      break;
  }
  if (stats.enter_degree > 0) {
    b.enter_fraction = Rational(stats.enter_positive, stats.enter_degree);
  }

  switch (rule.leave) {
    case LeaveRestriction::None:
      b.leave_ok = true;
      break;
    case LeaveRestriction::SumOut:
      b.leave_ok = stats.current_utility <= Rational(0);
      break;
    case LeaveRestriction::VoteOut:
      b.leave_ok = stats.leave_degree == 0 ||
                   detail::fraction_at_least(stats.leave_negative, stats.leave_degree, rule.t_out);
      break;
  }
  if (stats.leave_degree > 0) {
    b.leave_fraction = Rational(stats.leave_negative, stats.leave_degree);
  }
  return b;
}

namespace detail {

inline void require_valid_deviation(const Outcome& outcome, const Deviation& dev) {
  const int own = outcome.coalition_of(dev.player);
  if (dev.to_new_singleton()) {
    if (outcome.coalition(own).size() == 1) {
      throw Error(Errc::InvalidDeviation, "singleton player deviating to a new singleton");
    }
    return;
  }
  if (dev.target < 0 || dev.target >= outcome.coalition_count()) {
    throw Error(Errc::InvalidDeviation, "target coalition out of range");
  }
  if (dev.target == own) {
    throw Error(Errc::InvalidDeviation, "target equals current coalition");
  }
}

inline std::optional<int> checked_k(std::optional<int> k) {
  if (k && *k < 2) throw Error(Errc::InvalidK, "coalition cap k must be at least 2");
  return k;
}

/// Visits deviations in canonical scan order (players ascending; existing
/// coalitions in canonical order, then the new singleton), skipping those
/// that would exceed the optional cap on nonempty coalitions. The visitor
/// returns false to stop the scan early.
template <typename Visitor>
void scan_deviations(const Game& game, const Outcome& outcome, std::optional<int> k,
                     Visitor&& visit) {
  checked_k(k);
  const int n = outcome.player_count();
  if (game.player_count() != n) {
    throw Error(Errc::InvalidPartition, "outcome does not match the game's player set");
  }
  const int m = outcome.coalition_count();
  for (PlayerId player = 0; player < n; ++player) {
    const PlayerBuckets buckets(game, outcome, player);
    const int own = outcome.coalition_of(player);
    const bool empties_old = outcome.coalition(own).size() == 1;
    for (int target = 0; target < m; ++target) {
      if (target == own) continue;
      if (k && m - (empties_old ? 1 : 0) > *k) continue;
      if (!visit(Deviation{player, target}, buckets.stats_for(own, target))) return;
    }
    if (!empties_old) {
      if (!k || m + 1 <= *k) {
        if (!visit(Deviation{player, kNewSingleton}, buckets.stats_for(own, kNewSingleton))) {
          return;
        }
      }
    }
  }
}

}  // namespace detail

/// Nash feasibility of one deviation: does the player strictly gain?
inline FeasibilityBreakdown nash_feasible(const Game& game, const Outcome& outcome,
                                          const Deviation& dev) {
  detail::require_valid_deviation(outcome, dev);
  const detail::PlayerBuckets buckets(game, outcome, dev.player);
  return evaluate_rule(buckets.stats_for(outcome.coalition_of(dev.player), dev.target),
                       Rule::nash_stable());
}

struct EnterCheck {
  bool ok = true;
  std::optional<Rational> fraction;
  Rational sum;
};

/// Entering side of a rule in isolation. A new singleton is permitted under
/// every enter restriction (there are no edges to an empty coalition).
inline EnterCheck enter_permits(const Game& game, const Outcome& outcome, const Deviation& dev,
                                EnterRestriction enter, const Rational& t_in = Rational(1)) {
  detail::require_valid_deviation(outcome, dev);
  const detail::PlayerBuckets buckets(game, outcome, dev.player);
  const DeviationStats stats = buckets.stats_for(outcome.coalition_of(dev.player), dev.target);
  Rule rule;
  rule.enter = enter;
  if (enter == EnterRestriction::VoteIn) rule.t_in = t_in;
  const FeasibilityBreakdown b = evaluate_rule(stats, rule);
  return EnterCheck{b.enter_ok, b.enter_fraction, b.enter_sum};
}

struct LeaveCheck {
  bool ok = true;
  std::optional<Rational> fraction;
  Rational sum;
};

/// Leaving side of a rule in isolation; a player with no edges inside its
/// coalition may always leave.
inline LeaveCheck leave_permits(const Game& game, const Outcome& outcome, PlayerId player,
                                LeaveRestriction leave, const Rational& t_out = Rational(1)) {
  game.require_player(player);
  const detail::PlayerBuckets buckets(game, outcome, player);
  const int own = outcome.coalition_of(player);
  const DeviationStats stats = buckets.stats_for(own, kNewSingleton);
  Rule rule;
  rule.leave = leave;
  if (leave == LeaveRestriction::VoteOut) rule.t_out = t_out;
  const FeasibilityBreakdown b = evaluate_rule(stats, rule);
  return LeaveCheck{b.leave_ok, b.leave_fraction, b.leave_sum};
}

/// All rule-feasible deviations in canonical scan order. With a cap k, a
/// deviation is excluded if the successor outcome would have more than k
/// nonempty coalitions.
inline std::vector<std::pair<Deviation, FeasibilityBreakdown>> feasible_deviations(
    const Game& game, const Outcome& outcome, const Rule& rule,
    std::optional<int> k = std::nullopt) {
  std::vector<std::pair<Deviation, FeasibilityBreakdown>> found;
  detail::scan_deviations(game, outcome, k,
                          [&](const Deviation& dev, const DeviationStats& stats) {
                            FeasibilityBreakdown b = evaluate_rule(stats, rule);
                            if (b.feasible()) found.emplace_back(dev, std::move(b));
                            return true;
                          });
  return found;
}

/// Stability verdict with the first feasible deviation as witness.
inline StabilityVerdict check_stable(const Game& game, const Outcome& outcome, const Rule& rule,
                                     std::optional<int> k = std::nullopt) {
  StabilityVerdict verdict;
  detail::scan_deviations(game, outcome, k,
                          [&](const Deviation& dev, const DeviationStats& stats) {
                            FeasibilityBreakdown b = evaluate_rule(stats, rule);
                            if (b.feasible()) {
                              verdict.stable = false;
                              verdict.witness = {dev, std::move(b)};
                              return false;
                            }
                            return true;
                          });
  return verdict;
}

}  // namespace hedonic

#endif  // HEDONIC_STABILITY_HPP
