#ifndef HEDONIC_ORACLE_HPP
#define HEDONIC_ORACLE_HPP

#include <optional>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"
#include "hedonic/partitions.hpp"
#include "hedonic/rule.hpp"

namespace hedonic::oracle {

// Definition-level re-derivation of stability, independent of the stability
// module's code path. Every sum and vote count below is recomputed from the
// raw edge list, so disagreements between this oracle and check_stable point
// at a real bug on one of the two sides.

/// Sum of weights from `player` into coalition `target` of `outcome`.
inline Rational raw_value(const Game& game, const Outcome& outcome, PlayerId player, int target) {
  Rational total;
  for (const auto& e : game.edges()) {
    PlayerId other = -1;
    if (e.u == player) other = e.v;
    if (e.v == player) other = e.u;
    if (other < 0) continue;
    if (outcome.coalition_of(other) == target) total += e.weight;
  }
  return total;
}

/// Is the deviation of `player` to coalition `target` (kNewSingleton for a
/// fresh coalition) feasible under `rule`? Recomputed from first principles.
inline bool raw_feasible(const Game& game, const Outcome& outcome, PlayerId player, int target,
                         const Rule& rule) {
  const int own = outcome.coalition_of(player);

  Rational own_value;
  int own_edges = 0, own_negative = 0;
  Rational target_value;
  int target_edges = 0, target_positive = 0;
  for (const auto& e : game.edges()) {
    PlayerId other = -1;
    if (e.u == player) other = e.v;
    if (e.v == player) other = e.u;
    if (other < 0) continue;
    const int c = outcome.coalition_of(other);
    if (c == own) {
      own_value += e.weight;
      ++own_edges;
      if (e.weight < Rational(0)) ++own_negative;
    }
    if (target != kNewSingleton && c == target) {
      target_value += e.weight;
      ++target_edges;
      if (e.weight > Rational(0)) ++target_positive;
    }
  }

  // Nash: the player wants to deviate (strict gain).
  if (!(own_value < target_value)) return false;

  switch (rule.enter) {
    case EnterRestriction::None:
      break;
    case EnterRestriction::SumIn:
      if (!(target_value >= Rational(0))) return false;
      break;
    case EnterRestriction::VoteIn:
      if (target_edges != 0 &&
          Rational(target_positive, target_edges) < rule.t_in) {
        return false;
      }
      break;
  }
  switch (rule.leave) {
    case LeaveRestriction::None:
      break;
    case LeaveRestriction::SumOut:
      if (!(own_value <= Rational(0))) return false;
      break;
    case LeaveRestriction::VoteOut:
      if (own_edges != 0 && Rational(own_negative, own_edges) < rule.t_out) {
        return false;
      }
      break;
  }
  return true;
}

/// One player's definition-level aggregates toward every coalition of the
/// outcome, from a single scan of the raw edge list.
struct RawPlayerView {
  std::vector<Rational> value;
  std::vector<int> edges;
  std::vector<int> positive;
  std::vector<int> negative;
};

inline RawPlayerView raw_player_view(const Game& game, const Outcome& outcome, PlayerId player) {
  RawPlayerView view;
  const int m = outcome.coalition_count();
  view.value.assign(m, Rational());
  view.edges.assign(m, 0);
  view.positive.assign(m, 0);
  view.negative.assign(m, 0);
  for (const auto& e : game.edges()) {
    PlayerId other = -1;
    if (e.u == player) other = e.v;
    if (e.v == player) other = e.u;
    if (other < 0) continue;
    const int c = outcome.coalition_of(other);
    view.value[c] += e.weight;
    ++view.edges[c];
    if (e.weight > Rational(0)) {
      ++view.positive[c];
    } else {
      ++view.negative[c];
    }
  }
  return view;
}

/// raw_feasible computed from a prebuilt view; kNewSingleton as target means
/// a fresh coalition.
inline bool raw_feasible_from_view(const RawPlayerView& view, int own, int target,
                                   const Rule& rule) {
  const Rational& own_value = view.value[own];
  const Rational target_value = target == kNewSingleton ? Rational(0) : view.value[target];
  if (!(own_value < target_value)) return false;
  switch (rule.enter) {
    case EnterRestriction::None:
      break;
    case EnterRestriction::SumIn:
      if (!(target_value >= Rational(0))) return false;
      break;
    case EnterRestriction::VoteIn: {
      const int d = target == kNewSingleton ? 0 : view.edges[target];
      if (d != 0 && Rational(view.positive[target], d) < rule.t_in) return false;
      break;
    }
  }
  switch (rule.leave) {
    case LeaveRestriction::None:
      break;
    case LeaveRestriction::SumOut:
      if (!(own_value <= Rational(0))) return false;
      break;
    case LeaveRestriction::VoteOut:
      if (view.edges[own] != 0 && Rational(view.negative[own], view.edges[own]) < rule.t_out) {
        return false;
      }
      break;
  }
  return true;
}

/// Definition-level stability of one outcome, optionally under a coalition
/// cap k (a move is only available if the successor stays within k blocks).
inline bool raw_stable(const Game& game, const Outcome& outcome, const Rule& rule,
                       std::optional<int> k = std::nullopt) {
  if (k && *k < 2) throw Error(Errc::InvalidK, "coalition cap k must be at least 2");
  const int n = outcome.player_count();
  const int m = outcome.coalition_count();
  for (PlayerId player = 0; player < n; ++player) {
    const int own = outcome.coalition_of(player);
    const bool alone = outcome.coalition(own).size() == 1;
    const RawPlayerView view = raw_player_view(game, outcome, player);
    for (int target = 0; target < m; ++target) {
      if (target == own) continue;
      if (k && m - (alone ? 1 : 0) > *k) continue;
      if (raw_feasible_from_view(view, own, target, rule)) return false;
    }
    if (!alone && (!k || m + 1 <= *k)) {
      if (raw_feasible_from_view(view, own, kNewSingleton, rule)) return false;
    }
  }
  return true;
}

/// Stability of one outcome under many rules at once: one raw scan per
/// player, every rule checked against every available deviation.
inline std::vector<bool> raw_stable_mask(const Game& game, const Outcome& outcome,
                                         const std::vector<Rule>& rules,
                                         std::optional<int> k = std::nullopt) {
  if (k && *k < 2) throw Error(Errc::InvalidK, "coalition cap k must be at least 2");
  const int n = outcome.player_count();
  const int m = outcome.coalition_count();
  std::vector<bool> stable(rules.size(), true);
  std::size_t remaining = rules.size();
  for (PlayerId player = 0; player < n && remaining > 0; ++player) {
    const int own = outcome.coalition_of(player);
    const bool alone = outcome.coalition(own).size() == 1;
    const RawPlayerView view = raw_player_view(game, outcome, player);
    const auto try_target = [&](int target) {
      for (std::size_t r = 0; r < rules.size(); ++r) {
        if (!stable[r]) continue;
        if (raw_feasible_from_view(view, own, target, rules[r])) {
          stable[r] = false;
          --remaining;
        }
      }
    };
    for (int target = 0; target < m && remaining > 0; ++target) {
      if (target == own) continue;
      if (k && m - (alone ? 1 : 0) > *k) continue;
      try_target(target);
    }
    if (!alone && (!k || m + 1 <= *k) && remaining > 0) try_target(kNewSingleton);
  }
  return stable;
}

/// Exhaustive stable set: every partition (within the cap k, if given) that
/// is stable under the rule. This is the independent test oracle.
inline std::vector<Outcome> brute_force_stable(const Game& game, const Rule& rule,
                                               std::optional<int> k = std::nullopt,
                                               const SizeGuard& guard = {}) {
  if (k && *k < 2) throw Error(Errc::InvalidK, "coalition cap k must be at least 2");
  std::vector<Outcome> stable;
  for_each_partition(game.player_count(), k, guard, [&](Outcome outcome) {
    if (raw_stable(game, outcome, rule, k)) stable.push_back(std::move(outcome));
  });
  return stable;
}

}  // namespace hedonic::oracle

#endif  // HEDONIC_ORACLE_HPP
