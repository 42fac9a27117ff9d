#ifndef HEDONIC_POTENTIAL_HPP
#define HEDONIC_POTENTIAL_HPP

#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"

namespace hedonic {

/// A player's payoff: sum of edge weights to co-members of its coalition.
inline Rational utility(const Game& game, const Outcome& outcome, PlayerId player) {
  game.require_player(player);
  const int own = outcome.coalition_of(player);
  Rational total;
  for (const auto& [other, w] : game.neighbors(player)) {
    if (outcome.coalition_of(other) == own) total += w;
  }
  return total;
}

/// The potential function: sum of all utilities, equal to twice the total
/// weight of edges internal to coalitions.
inline Rational total_happiness(const Game& game, const Outcome& outcome) {
  Rational total;
  for (const auto& e : game.edges()) {
    if (outcome.coalition_of(e.u) == outcome.coalition_of(e.v)) total += e.weight;
  }
  return total + total;
}

/// Count of internal positive edges minus internal negative edges, the
/// potential used in the vote-in/vote-out convergence argument.
inline long long signed_internal_count(const Game& game, const Outcome& outcome) {
  long long count = 0;
  for (const auto& e : game.edges()) {
    if (outcome.coalition_of(e.u) == outcome.coalition_of(e.v)) {
      count += e.weight.positive() ? 1 : -1;
    }
  }
  return count;
}

}  // namespace hedonic

#endif  // HEDONIC_POTENTIAL_HPP
