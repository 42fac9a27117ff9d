#ifndef HEDONIC_DYNAMICS_HPP
#define HEDONIC_DYNAMICS_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "hedonic/potential.hpp"
#include "hedonic/stability.hpp"

namespace hedonic {

/// How the engine picks among feasible deviations.
struct PivotPolicy {
  enum class Kind { FirstImprovement, BestImprovement, Random };
  Kind kind = Kind::FirstImprovement;
  std::uint64_t seed = 0;

  static PivotPolicy first_improvement() { return {}; }
  static PivotPolicy best_improvement() { return {Kind::BestImprovement, 0}; }
  static PivotPolicy random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

struct TraceStep {
  Deviation deviation;
  Rational gain;
  Rational total_happiness_after;
  long long signed_internal_after = 0;
};

/// Full record of a local-improvement run. Replaying `steps` from `start`
/// reproduces `final`.
struct Trace {
  Outcome start;
  std::vector<TraceStep> steps;
  Outcome final;
  bool converged = false;

  int step_count() const { return static_cast<int>(steps.size()); }
};

namespace detail {

/// Extra feasibility filters engines may layer on top of a rule.
struct EngineFilter {
  // Forbid joining a nonempty coalition the deviator has no positive edge to.
  bool require_positive_edge_to_target = false;

  bool admits(const DeviationStats& stats, const Deviation& dev) const {
    if (require_positive_edge_to_target && !dev.to_new_singleton() && stats.enter_positive == 0) {
      return false;
    }
    return true;
  }
};

inline std::optional<std::pair<Deviation, FeasibilityBreakdown>> pick_deviation(
    const Game& game, const Outcome& outcome, const Rule& rule, std::optional<int> k,
    const PivotPolicy& policy, std::mt19937_64* rng, const EngineFilter& filter) {
  std::optional<std::pair<Deviation, FeasibilityBreakdown>> chosen;
  std::vector<std::pair<Deviation, FeasibilityBreakdown>> pool;
  scan_deviations(game, outcome, k, [&](const Deviation& dev, const DeviationStats& stats) {
    if (!filter.admits(stats, dev)) return true;
    FeasibilityBreakdown b = evaluate_rule(stats, rule);
    if (!b.feasible()) return true;
    switch (policy.kind) {
      case PivotPolicy::Kind::FirstImprovement:
        chosen = {dev, std::move(b)};
        return false;
      case PivotPolicy::Kind::BestImprovement:
        if (!chosen || b.gain > chosen->second.gain) chosen = {dev, std::move(b)};
        return true;
      case PivotPolicy::Kind::Random:
        pool.emplace_back(dev, std::move(b));
        return true;
    }
    return true;
  });
  if (policy.kind == PivotPolicy::Kind::Random && !pool.empty()) {
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    chosen = pool[pick(*rng)];
  }
  return chosen;
}

inline Trace run_engine(const Game& game, Outcome current, const Rule& rule, std::optional<int> k,
                        const PivotPolicy& policy, long long step_limit,
                        const EngineFilter& filter = {}) {
  Trace trace;
  trace.start = current;
  std::mt19937_64 rng(policy.seed);
  while (true) {
    auto next = pick_deviation(game, current, rule, k, policy, &rng, filter);
    if (!next) {
      trace.converged = true;
      break;
    }
    if (static_cast<long long>(trace.steps.size()) >= step_limit) {
      trace.converged = false;
      break;
    }
    current = current.moved(next->first);
    trace.steps.push_back({next->first, next->second.gain, total_happiness(game, current),
                           signed_internal_count(game, current)});
  }
  trace.final = std::move(current);
  return trace;
}

}  // namespace detail

/// Default cap for the generic engine; generic Nash dynamics may need
/// pseudo-polynomially many steps, so this never promises convergence.
inline long long default_step_limit(const Game& game) {
  const long long size = game.player_count() + game.edge_count();
  return 10 * size * size;
}

/// One local-improvement step, or nothing if the outcome is already stable.
/// With the Random policy the seed is consumed for this single step.
inline std::optional<std::pair<Deviation, Outcome>> improvement_step(
    const Game& game, const Outcome& outcome, const Rule& rule,
    std::optional<int> k = std::nullopt, const PivotPolicy& policy = {}) {
  std::mt19937_64 rng(policy.seed);
  auto chosen = detail::pick_deviation(game, outcome, rule, k, policy, &rng, {});
  if (!chosen) return std::nullopt;
  return std::pair(chosen->first, outcome.moved(chosen->first));
}

/// Iterates improvement steps until stable or the step limit is reached.
/// Hitting the limit is reported via converged = false, not an error.
inline Trace run_local_search(const Game& game, const Outcome& start, const Rule& rule,
                              std::optional<int> k = std::nullopt, const PivotPolicy& policy = {},
                              std::optional<long long> step_limit = std::nullopt) {
  const long long limit = step_limit ? *step_limit : default_step_limit(game);
  if (limit < 0) throw Error(Errc::ValidationError, "negative step limit");
  return detail::run_engine(game, start, rule, k, policy, limit);
}

/// Local improvements from the all-singleton outcome, for rules with a
/// veto-in entering restriction and a leaving restriction that requires a
/// negative internal edge (sum-out, or vote-out with T > 0). Converges in at
/// most |V| improving steps; every non-singleton coalition of the result has
/// all-positive internal edges.
inline Trace run_singleton_seeded(const Game& game, const Rule& rule,
                                  const PivotPolicy& policy = {}) {
  if (!(rule.enter == EnterRestriction::VoteIn && rule.t_in == Rational(1))) {
    throw Error(Errc::RulePreconditionViolated,
                "singleton-seeded dynamics needs a veto-in entering restriction");
  }
  const bool leave_needs_negative_edge =
      rule.leave == LeaveRestriction::SumOut ||
      (rule.leave == LeaveRestriction::VoteOut && rule.t_out > Rational(0));
  if (!leave_needs_negative_edge) {
    throw Error(Errc::RulePreconditionViolated,
                "singleton-seeded dynamics needs a leaving restriction that requires "
                "a negative internal edge (sum-out, or vote-out with T > 0)");
  }
  return detail::run_engine(game, Outcome::singletons(game.player_count()), rule, std::nullopt,
                            policy, default_step_limit(game));
}

/// Contractual-individual-stability dynamics from the all-singleton outcome,
/// with joins restricted to coalitions the mover has a positive edge to.
/// Converges in at most 2|V| improving steps; the join restriction only
/// bounds the step count, the result is stable under unrestricted CIS.
inline Trace run_cis(const Game& game, const PivotPolicy& policy = {}) {
  detail::EngineFilter filter;
  filter.require_positive_edge_to_target = true;
  return detail::run_engine(game, Outcome::singletons(game.player_count()),
                            Rule::contractual_individual_stability(), std::nullopt, policy,
                            default_step_limit(game), filter);
}

}  // namespace hedonic

#endif  // HEDONIC_DYNAMICS_HPP
