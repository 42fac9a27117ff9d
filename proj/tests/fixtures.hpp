#ifndef HEDONIC_TESTS_FIXTURES_HPP
#define HEDONIC_TESTS_FIXTURES_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"

namespace fixtures {

using hedonic::Game;
using hedonic::Outcome;
using hedonic::Rational;
using hedonic::WeightedEdge;

/// Triangle game used across the suite: w(0,1)=4, w(0,2)=-1, w(1,2)=2.
inline Game triangle() {
  return Game(3, {{0, 1, 4}, {0, 2, -1}, {1, 2, 2}});
}

/// Six-player game realizing the coalition {{a,b,d},{c,e,f}} with utilities
/// (10, 5, -1, 5, 1, 4): players a..f are 0..5.
inline Game six_player() {
  return Game(6, {
                     {0, 1, 5},   // a-b
                     {0, 3, 5},   // a-d
                     {0, 4, 3},   // a-e
                     {1, 4, 2},   // b-e
                     {3, 4, -1},  // d-e
                     {2, 4, -2},  // c-e
                     {2, 5, 1},   // c-f
                     {4, 5, 3},   // e-f
                 });
}

inline Outcome six_player_reference_outcome() {
  return Outcome::from_coalitions(6, {{0, 1, 3}, {2, 4, 5}});
}

inline Game all_positive_clique(int n, long long w = 1) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Rational(w)});
  }
  return Game(n, std::move(edges));
}

inline Game all_negative_clique(int n, long long w = -1) {
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, Rational(w)});
  }
  return Game(n, std::move(edges));
}

/// Random game with integer weights in [lo, hi] \ {0}.
inline Game random_game(int n, double density, std::uint64_t seed, int lo = -5, int hi = 5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> weight(lo, hi);
  std::vector<WeightedEdge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) > density) continue;
      int w = 0;
      while (w == 0) w = weight(rng);
      edges.push_back({u, v, Rational(w)});
    }
  }
  return Game(n, std::move(edges));
}

/// Random partition of 0..n-1, canonicalized.
inline Outcome random_outcome(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, n - 1);
  std::vector<int> a(n);
  for (int i = 0; i < n; ++i) a[i] = pick(rng);
  return Outcome::from_assignment(a);
}

}  // namespace fixtures

#endif  // HEDONIC_TESTS_FIXTURES_HPP
