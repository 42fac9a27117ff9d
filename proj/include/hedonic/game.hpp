#ifndef HEDONIC_GAME_HPP
#define HEDONIC_GAME_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/error.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

using PlayerId = int;

/// Undirected weighted edge with endpoints stored as u < v.
struct WeightedEdge {
  PlayerId u = 0;
  PlayerId v = 0;
  Rational weight;
};

/// A symmetric additively-separable hedonic game: players 0..n-1 and an
/// undirected simple graph with nonzero exact-rational edge weights.
///
/// Immutable after construction; all member functions are const and safe to
/// call concurrently.
class Game {
 public:
  Game() = default;

  /// Validates and builds. Rejects self-loops, duplicate pairs, zero weights
  /// and out-of-range endpoints.
  Game(int player_count, std::vector<WeightedEdge> edges,
       std::vector<std::string> labels = {}) {
    if (player_count < 0) throw Error(Errc::UnknownPlayer, "negative player count");
    n_ = player_count;
    for (auto& e : edges) {
      if (e.u > e.v) std::swap(e.u, e.v);
      if (e.u < 0 || e.v >= n_) {
        throw Error(Errc::UnknownPlayer,
                    "edge endpoint out of range: (" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + ")");
      }
      if (e.u == e.v) throw Error(Errc::SelfLoop, "self-loop at player " + std::to_string(e.u));
      if (e.weight.is_zero()) {
        throw Error(Errc::ZeroWeightEdge, "zero-weight edge (" + std::to_string(e.u) + "," +
                                              std::to_string(e.v) + ")");
      }
    }
    std::sort(edges.begin(), edges.end(), [](const WeightedEdge& a, const WeightedEdge& b) {
      return std::pair(a.u, a.v) < std::pair(b.u, b.v);
    });
    for (std::size_t i = 1; i < edges.size(); ++i) {
      if (edges[i - 1].u == edges[i].u && edges[i - 1].v == edges[i].v) {
        throw Error(Errc::DuplicateEdge, "duplicate edge (" + std::to_string(edges[i].u) + "," +
                                             std::to_string(edges[i].v) + ")");
      }
    }
    edges_ = std::move(edges);
    adjacency_.assign(n_, {});
    for (const auto& e : edges_) {
      adjacency_[e.u].emplace_back(e.v, e.weight);
      adjacency_[e.v].emplace_back(e.u, e.weight);
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != n_) {
      labels.resize(n_);
    }
    labels_ = std::move(labels);
  }

  int player_count() const { return n_; }
  const std::vector<WeightedEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Neighbors of a player as (other, weight) pairs.
  const std::vector<std::pair<PlayerId, Rational>>& neighbors(PlayerId i) const {
    require_player(i);
    return adjacency_[i];
  }

  int degree(PlayerId i) const { return static_cast<int>(neighbors(i).size()); }

  int max_degree() const {
    int d = 0;
    for (PlayerId i = 0; i < n_; ++i) d = std::max(d, static_cast<int>(adjacency_[i].size()));
    return d;
  }

  std::optional<Rational> weight(PlayerId i, PlayerId j) const {
    require_player(i);
    require_player(j);
    for (const auto& [other, w] : adjacency_[i]) {
      if (other == j) return w;
    }
    return std::nullopt;
  }

  int negative_edge_count() const {
    int c = 0;
    for (const auto& e : edges_) c += e.weight.negative() ? 1 : 0;
    return c;
  }

  bool has_negative_edge() const {
    return std::any_of(edges_.begin(), edges_.end(),
                       [](const WeightedEdge& e) { return e.weight.negative(); });
  }

  Rational sum_abs_weights() const {
    Rational s;
    for (const auto& e : edges_) s += e.weight.abs();
    return s;
  }

  const std::string& label(PlayerId i) const {
    static const std::string kEmpty;
    require_player(i);
    if (labels_.empty()) return kEmpty;
    return labels_[i];
  }

  const std::vector<std::string>& labels() const { return labels_; }

  void require_player(PlayerId i) const {
    if (i < 0 || i >= n_) {
      throw Error(Errc::UnknownPlayer, "player " + std::to_string(i) + " out of range");
    }
  }

 private:
  int n_ = 0;
  std::vector<WeightedEdge> edges_;
  std::vector<std::vector<std::pair<PlayerId, Rational>>> adjacency_;
  std::vector<std::string> labels_;
};

/// Builds a validated Game from a raw edge list.
inline Game validate_game(int player_count, std::vector<WeightedEdge> edges,
                          std::vector<std::string> labels = {}) {
  return Game(player_count, std::move(edges), std::move(labels));
}

/// Sum of weights of edges from `player` to members of `coalition`, the RHS
/// of the deviation condition. Only edges to other players count; an empty
/// coalition or one with no edges to `player` contributes 0.
template <typename Members>
Rational coalition_value(const Game& game, PlayerId player, const Members& coalition) {
  game.require_player(player);
  Rational total;
  for (PlayerId member : coalition) {
    game.require_player(member);
    if (member == player) continue;
    if (auto w = game.weight(player, member)) total += *w;
  }
  return total;
}

}  // namespace hedonic

#endif  // HEDONIC_GAME_HPP
