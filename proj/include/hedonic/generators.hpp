#ifndef HEDONIC_GENERATORS_HPP
#define HEDONIC_GENERATORS_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hedonic/game.hpp"

namespace hedonic {

enum class GameFamily { Random, AllPositive, AllNegative, OneEnemy };

inline const char* family_name(GameFamily family) {
  switch (family) {
    case GameFamily::Random: return "random";
    case GameFamily::AllPositive: return "all-positive";
    case GameFamily::AllNegative: return "all-negative";
    case GameFamily::OneEnemy: return "one-enemy";
  }
  return "unknown";
}

struct GeneratorSpec {
  GameFamily family = GameFamily::Random;
  int players = 6;
  double density = 0.5;        // per-pair edge probability
  int weight_magnitude = 5;    // nonzero integer weights within +-magnitude
  std::uint64_t seed = 1;
};

/// Deterministic instance generator; the same spec always yields the same
/// game. Weights are nonzero integers.
inline Game generate_game(const GeneratorSpec& spec) {
  if (spec.players < 1) throw Error(Errc::ValidationError, "need at least one player");
  if (spec.weight_magnitude < 1) throw Error(Errc::ValidationError, "weight magnitude must be >= 1");
  if (spec.density < 0.0 || spec.density > 1.0) {
    throw Error(Errc::ValidationError, "density must lie in [0,1]");
  }
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> magnitude(1, spec.weight_magnitude);

  const int n = spec.players;
  std::vector<WeightedEdge> edges;

  const auto signed_weight = [&](int sign) { return Rational(sign * magnitude(rng)); };

  switch (spec.family) {
    case GameFamily::Random:
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng) > spec.density) continue;
          edges.push_back({u, v, signed_weight(coin(rng) < 0.5 ? 1 : -1)});
        }
      }
      break;
    case GameFamily::AllPositive:
    case GameFamily::AllNegative: {
      const int sign = spec.family == GameFamily::AllPositive ? 1 : -1;
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (coin(rng) > spec.density) continue;
          edges.push_back({u, v, signed_weight(sign)});
        }
      }
      break;
    }
    case GameFamily::OneEnemy: {
      // Negative edges form a partial matching; everything else is positive.
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      std::shuffle(order.begin(), order.end(), rng);
      std::vector<std::vector<bool>> taken(n, std::vector<bool>(n, false));
      for (int i = 0; i + 1 < n; i += 2) {
        if (coin(rng) < 0.6) {
          const int u = std::min(order[i], order[i + 1]);
          const int v = std::max(order[i], order[i + 1]);
          edges.push_back({u, v, signed_weight(-1)});
          taken[u][v] = true;
        }
      }
      for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
          if (taken[u][v] || coin(rng) > spec.density) continue;
          edges.push_back({u, v, signed_weight(1)});
        }
      }
      break;
    }
  }
  return Game(n, std::move(edges));
}

}  // namespace hedonic

#endif  // HEDONIC_GENERATORS_HPP
