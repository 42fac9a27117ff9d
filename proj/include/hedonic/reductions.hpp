#ifndef HEDONIC_REDUCTIONS_HPP
#define HEDONIC_REDUCTIONS_HPP

#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

enum class ReductionKind { Supernodes, SumCis, VoteInFollowers, KVoteOut, NorGadget };

inline const char* reduction_kind_name(ReductionKind kind) {
  switch (kind) {
    case ReductionKind::Supernodes: return "supernodes";
    case ReductionKind::SumCis: return "sumcis";
    case ReductionKind::VoteInFollowers: return "votein-followers";
    case ReductionKind::KVoteOut: return "kvoteout";
    case ReductionKind::NorGadget: return "nor";
  }
  return "unknown";
}

/// Provenance of a constructed instance plus everything the pull-back map
/// needs. `anchors` lists the supernodes whose coalitions define the labels
/// of the source solution, in label order.
struct ReductionRecord {
  ReductionKind kind = ReductionKind::Supernodes;
  std::string source;
  int source_player_count = 0;
  int reduced_player_count = 0;
  std::vector<int> added_players;
  std::vector<int> anchors;
  std::vector<int> ports;  // NOR gadget only: a, b, d
  std::map<std::string, Rational> parameters;
};

struct Reduced {
  Game game;
  ReductionRecord record;
};

/// Party affiliation view of a game: solutions are 2-labelings, the only
/// deviation is switching sides.
struct PartyAffiliationInstance {
  Game game;
};

namespace detail {

inline long long lcm_checked(long long a, long long b) {
  const long long g = std::gcd(a, b);
  const __int128 l = static_cast<__int128>(a / g) * b;
  if (l > std::numeric_limits<long long>::max()) {
    throw Error(Errc::Overflow, "weight denominators overflow");
  }
  return static_cast<long long>(l);
}

/// Smallest positive integer factor that clears every denominator.
inline Rational integer_scale(const std::vector<WeightedEdge>& edges) {
  long long l = 1;
  for (const auto& e : edges) l = lcm_checked(l, e.weight.den());
  return Rational(l);
}

inline std::vector<WeightedEdge> scaled_edges(const Game& game, const Rational& factor) {
  std::vector<WeightedEdge> edges;
  edges.reserve(game.edges().size());
  for (const auto& e : game.edges()) edges.push_back({e.u, e.v, e.weight * factor});
  return edges;
}

inline Rational pow3(int exponent) {
  Rational value(1);
  for (int i = 0; i < exponent; ++i) value *= Rational(3);
  return value;
}

}  // namespace detail

/// True iff every node has at most one incident negative edge.
inline bool one_enemy_check(const Game& game) {
  std::vector<int> negatives(game.player_count(), 0);
  for (const auto& e : game.edges()) {
    if (e.weight.negative()) {
      if (++negatives[e.u] > 1 || ++negatives[e.v] > 1) return false;
    }
  }
  return true;
}

/// No player strictly prefers the opposite side of the 2-labeling.
inline bool party_affiliation_stable(const Game& game, const std::vector<int>& sides) {
  if (static_cast<int>(sides.size()) != game.player_count()) {
    throw Error(Errc::RecordMismatch, "labeling size does not match the game");
  }
  for (PlayerId i = 0; i < game.player_count(); ++i) {
    Rational same, other;
    for (const auto& [j, w] : game.neighbors(i)) {
      if (sides[j] == sides[i]) {
        same += w;
      } else {
        other += w;
      }
    }
    if (other > same) return false;
  }
  return true;
}

/// All stable 2-labelings, by exhaustive scan (test oracle; n is capped).
inline std::vector<std::vector<int>> stable_party_labelings(const Game& game) {
  const int n = game.player_count();
  if (n > 20) throw Error(Errc::SizeGuardExceeded, "2^n labelings beyond n = 20");
  std::vector<std::vector<int>> stable;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> sides(n);
    for (int i = 0; i < n; ++i) sides[i] = mask >> i & 1u;
    if (party_affiliation_stable(game, sides)) stable.push_back(std::move(sides));
  }
  return stable;
}

/// For an all-positive game: no single side switch strictly increases the
/// weight crossing the 2-labeling.
inline bool locally_max_cut(const Game& game, const std::vector<int>& sides) {
  if (static_cast<int>(sides.size()) != game.player_count()) {
    throw Error(Errc::RecordMismatch, "labeling size does not match the game");
  }
  for (PlayerId i = 0; i < game.player_count(); ++i) {
    Rational same, crossing;
    for (const auto& [j, w] : game.neighbors(i)) {
      if (sides[j] == sides[i]) {
        same += w;
      } else {
        crossing += w;
      }
    }
    if (same > crossing) return false;  // flipping i would gain same - crossing
  }
  return true;
}

/// Supernode augmentation: k mutually hostile heavyweight players that force
/// exactly k coalitions in every Nash-stable outcome. Source weights are
/// scaled to integers first; W and M are the smallest integers with
/// W > sum|w| and M > |V|*W.
inline Reduced add_supernodes(const Game& source, int k, std::string source_description = {}) {
  if (k < 2) throw Error(Errc::InvalidK, "supernode count must be at least 2");
  const int n = source.player_count();

  const Rational scale = detail::integer_scale(source.edges());
  std::vector<WeightedEdge> edges = detail::scaled_edges(source, scale);
  Rational abs_sum;
  for (const auto& e : edges) abs_sum += e.weight.abs();
  const Rational big_w(abs_sum.floor() + 1);        // smallest integer > sum|w|
  const Rational big_m = Rational(n) * big_w + Rational(1);  // smallest integer > |V|*W

  std::vector<std::string> labels(source.labels());
  labels.resize(n + k);
  ReductionRecord record;
  record.kind = ReductionKind::Supernodes;
  record.source = source_description.empty() ? "party affiliation instance" : source_description;
  record.source_player_count = n;
  record.reduced_player_count = n + k;
  for (int j = 0; j < k; ++j) {
    const int super = n + j;
    labels[super] = "super:" + std::to_string(j);
    record.added_players.push_back(super);
    record.anchors.push_back(super);
    for (PlayerId i = 0; i < n; ++i) edges.push_back({i, super, big_w});
    for (int prev = 0; prev < j; ++prev) edges.push_back({n + prev, super, -big_m});
  }
  record.parameters["k"] = Rational(k);
  record.parameters["W"] = big_w;
  record.parameters["M"] = big_m;
  record.parameters["scale"] = scale;

  return Reduced{Game(n + k, std::move(edges), std::move(labels)), std::move(record)};
}

/// Local max cut to sum-in/sum-out stability: negate the weights, then hang
/// two supernodes with per-player edges -sigma_i/2 + 1/4 and a mutual edge
/// -M, and multiply everything by 4 to restore integrality.
inline Reduced reduce_maxcut_to_sumcis(const Game& maxcut, std::string source_description = {}) {
  const int n = maxcut.player_count();
  for (const auto& e : maxcut.edges()) {
    if (!e.weight.positive()) {
      throw Error(Errc::NonPositiveSourceWeight, "local max cut edges must be positive");
    }
    if (!e.weight.is_integer()) {
      throw Error(Errc::NonIntegerSourceWeight, "local max cut edges must be integers");
    }
  }

  std::vector<Rational> sigma(n);  // negated incident sums, each <= 0
  std::vector<WeightedEdge> edges;
  for (const auto& e : maxcut.edges()) {
    edges.push_back({e.u, e.v, -e.weight});
    sigma[e.u] -= e.weight;
    sigma[e.v] -= e.weight;
  }

  const int s0 = n, s1 = n + 1;
  Rational attachment_sum;
  for (PlayerId i = 0; i < n; ++i) {
    const Rational a = -sigma[i] / Rational(2) + Rational(1, 4);
    attachment_sum += a;
    edges.push_back({i, s0, a});
    edges.push_back({i, s1, a});
  }
  const Rational big_m = Rational(1) + attachment_sum;
  edges.push_back({s0, s1, -big_m});

  const Rational scale(4);
  for (auto& e : edges) e.weight *= scale;

  std::vector<std::string> labels(maxcut.labels());
  labels.resize(n + 2);
  labels[s0] = "super:0";
  labels[s1] = "super:1";

  ReductionRecord record;
  record.kind = ReductionKind::SumCis;
  record.source = source_description.empty() ? "local max cut instance" : source_description;
  record.source_player_count = n;
  record.reduced_player_count = n + 2;
  record.added_players = {s0, s1};
  record.anchors = {s0, s1};
  record.parameters["M"] = big_m;
  record.parameters["scale"] = scale;

  return Reduced{Game(n + 2, std::move(edges), std::move(labels)), std::move(record)};
}

/// Vote-in follower gadget: per negative edge (a,b), Delta-1 followers for
/// each endpoint (+delta to the leader, +epsilon to the other endpoint) so
/// that entering majorities always exist in stable outcomes, then two
/// supernodes sized to dominate everything. Requires a one-enemy source and
/// T_in <= (Delta-1)/Delta; the final instance is integral.
inline Reduced add_votein_followers(const Game& source, const Rational& t_in,
                                    std::string source_description = {}) {
  if (!one_enemy_check(source)) {
    throw Error(Errc::OneEnemyViolation, "source node with two or more negative edges");
  }
  if (t_in < Rational(0) || t_in > Rational(1)) {
    throw Error(Errc::ThresholdOutOfRange, "T_in must lie in [0,1]");
  }
  const int n = source.player_count();
  const int degree_bound = source.max_degree();
  const int negative_edges = source.negative_edge_count();
  if (negative_edges > 0 &&
      t_in * Rational(degree_bound) > Rational(degree_bound - 1)) {
    throw Error(Errc::ThresholdOutOfRange,
                "T_in above (Delta-1)/Delta is the veto-in regime, not this gadget");
  }

  const Rational scale1 = detail::integer_scale(source.edges());
  std::vector<WeightedEdge> edges = detail::scaled_edges(source, scale1);

  ReductionRecord record;
  record.kind = ReductionKind::VoteInFollowers;
  record.source = source_description.empty() ? "one-enemy party affiliation instance"
                                             : source_description;
  record.source_player_count = n;

  std::vector<std::string> labels(source.labels());
  int next = n;
  Rational epsilon, delta;
  if (negative_edges > 0) {
    epsilon = Rational(1, 4LL * negative_edges * degree_bound);
    delta = epsilon + epsilon;
    for (const auto& e : source.edges()) {
      if (!e.weight.negative()) continue;
      for (const auto [leader, other] : {std::pair(e.u, e.v), std::pair(e.v, e.u)}) {
        for (int f = 0; f < degree_bound - 1; ++f) {
          const int follower = next++;
          labels.resize(follower + 1);
          labels[follower] = "follower:" + std::to_string(leader);
          record.added_players.push_back(follower);
          edges.push_back({leader, follower, delta});
          edges.push_back({other, follower, epsilon});
        }
      }
    }
    // The gadget must not disturb original preferences: the total gadget
    // weight at any original node stays below the minimum integral gap.
    if (!(Rational(0) < epsilon && epsilon < delta)) {
      throw Error(Errc::ValidationError, "internal: epsilon/delta ordering violated");
    }
    const Rational incident_bound =
        (delta + epsilon) * Rational(degree_bound - 1);  // per negative edge endpoint
    if (!(incident_bound < Rational(1))) {
      throw Error(Errc::ValidationError, "internal: follower weights disturb the source");
    }
  }
  const int gadget_players = next;

  Rational abs_sum;
  for (const auto& e : edges) abs_sum += e.weight.abs();
  const Rational big_w(abs_sum.floor() + 1);
  const Rational big_m = Rational(gadget_players) * big_w + Rational(1);

  const int s0 = next, s1 = next + 1;
  labels.resize(s1 + 1);
  labels[s0] = "super:0";
  labels[s1] = "super:1";
  record.added_players.push_back(s0);
  record.added_players.push_back(s1);
  record.anchors = {s0, s1};
  for (PlayerId i = 0; i < gadget_players; ++i) {
    edges.push_back({i, s0, big_w});
    edges.push_back({i, s1, big_w});
  }
  edges.push_back({s0, s1, -big_m});
  record.reduced_player_count = s1 + 1;

  // Clear the follower denominators; every inequality is scale invariant.
  const Rational scale2 = detail::integer_scale(edges);
  for (auto& e : edges) e.weight *= scale2;

  record.parameters["T_in"] = t_in;
  record.parameters["Delta"] = Rational(degree_bound);
  record.parameters["epsilon"] = epsilon;
  record.parameters["delta"] = delta;
  record.parameters["W"] = big_w;
  record.parameters["M"] = big_m;
  record.parameters["scale"] = scale1 * scale2;

  return Reduced{Game(record.reduced_player_count, std::move(edges), std::move(labels)),
                 std::move(record)};
}

/// k-coalition vote-out hardness instance: first the Nash supernode step,
/// then s*Delta complete k-cliques of -M edges with -epsilon spokes to every
/// existing node, where s >= T_out/(1-T_out) guarantees leaving majorities.
inline Reduced reduce_to_kvoteout(const Game& source, int k, const Rational& t_out,
                                  std::string source_description = {}) {
  if (k < 2) throw Error(Errc::InvalidK, "coalition count k must be at least 2");
  if (t_out < Rational(0) || t_out >= Rational(1)) {
    throw Error(Errc::ThresholdOutOfRange, "T_out must lie in [0,1)");
  }
  if (!one_enemy_check(source)) {
    throw Error(Errc::OneEnemyViolation, "source node with two or more negative edges");
  }
  const int n = source.player_count();

  // Stage 1: one-enemy party affiliation -> one-enemy Nash-stable.
  Reduced nash = add_supernodes(source, 2, source_description);
  const int nash_players = nash.game.player_count();
  const int degree_bound = nash.game.max_degree();

  // Stage 2: the vote-out machinery.
  const Rational ratio = t_out / (Rational(1) - t_out);
  long long s = ratio.ceil();
  if (s < 1) s = 1;
  const Rational epsilon(1);
  const Rational big_m = Rational(nash_players) * Rational(degree_bound) * epsilon + Rational(1);

  std::vector<WeightedEdge> edges(nash.game.edges().begin(), nash.game.edges().end());
  std::vector<std::string> labels(nash.game.labels());
  ReductionRecord record = std::move(nash.record);
  record.kind = ReductionKind::KVoteOut;

  int next = nash_players;
  const long long cliques = s * degree_bound;
  for (long long c = 0; c < cliques; ++c) {
    std::vector<int> members;
    for (int j = 0; j < k; ++j) {
      const int node = next++;
      labels.resize(node + 1);
      labels[node] = "clique:" + std::to_string(c) + ":" + std::to_string(j);
      record.added_players.push_back(node);
      members.push_back(node);
      for (PlayerId existing = 0; existing < nash_players; ++existing) {
        edges.push_back({existing, node, -epsilon});
      }
    }
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        edges.push_back({members[i], members[j], -big_m});
      }
    }
  }
  record.reduced_player_count = next;
  record.parameters["k"] = Rational(k);
  record.parameters["T_out"] = t_out;
  record.parameters["s"] = Rational(s);
  record.parameters["epsilon"] = epsilon;
  record.parameters["M_cliques"] = big_m;
  record.parameters["Delta"] = Rational(degree_bound);

  return Reduced{Game(next, std::move(edges), std::move(labels)), std::move(record)};
}

/// A NOR gate as a party-affiliation fragment: ports a, b, d; the internal
/// node m computes OR of the inputs against a bias edge to the constant-1
/// side, and the single negative edge flips it into d. At level L the gate
/// reads its inputs with weight 3^L and tolerates consumer pulls on d of up
/// to 3^L - 1 (fan-out edges of lower levels weigh at most 2*3^(L-1)).
struct NorGadget {
  Game fragment;
  int a = 0;
  int b = 1;
  int m = 2;
  int d = 3;
  std::vector<std::pair<int, Rational>> bias_to_one;  // attach to the 1-side constant
  int level = 1;
};

inline NorGadget build_nor_gadget(int level) {
  if (level < 1) throw Error(Errc::ValidationError, "gate level must be at least 1");
  const Rational p = detail::pow3(level);
  const Rational r = p - Rational(1);
  NorGadget gadget;
  gadget.level = level;
  gadget.fragment = Game(4,
                         {
                             {0, 2, p},   // a - m
                             {1, 2, p},   // b - m
                             {2, 3, -r},  // m - d
                         },
                         {"nor:a", "nor:b", "nor:m", "nor:d"});
  gadget.bias_to_one = {{2, p}};
  return gadget;
}

/// The gate with two pinning supernodes attached and its inputs pinned to
/// fixed sides; Nash-stable outcomes of the result put d on side NOR(a, b).
inline Reduced pin_nor_gadget(const NorGadget& gadget, bool a_side, bool b_side) {
  const Rational p = detail::pow3(gadget.level);
  const Rational pin = detail::pow3(gadget.level + 1);

  std::vector<WeightedEdge> edges(gadget.fragment.edges().begin(), gadget.fragment.edges().end());
  Rational abs_sum = pin + pin;  // pin edges
  for (const auto& e : edges) abs_sum += e.weight.abs();
  for (const auto& [node, weight] : gadget.bias_to_one) abs_sum += weight.abs();
  const Rational big_w(abs_sum.floor() + 1);

  const int s0 = 4, s1 = 5;
  // Membership edges, with the pin and bias folded into the relevant side.
  for (int node = 0; node < 4; ++node) {
    Rational to_zero = big_w;
    Rational to_one = big_w;
    if (node == gadget.a) (a_side ? to_one : to_zero) += pin;
    if (node == gadget.b) (b_side ? to_one : to_zero) += pin;
    for (const auto& [biased, weight] : gadget.bias_to_one) {
      if (biased == node) to_one += weight;
    }
    edges.push_back({node, s0, to_zero});
    edges.push_back({node, s1, to_one});
  }
  const Rational big_m = Rational(4) * big_w + pin + pin + p + Rational(1);
  edges.push_back({s0, s1, -big_m});

  std::vector<std::string> labels = {"nor:a", "nor:b", "nor:m", "nor:d", "super:0", "super:1"};

  ReductionRecord record;
  record.kind = ReductionKind::NorGadget;
  record.source = std::string("nor gate, inputs pinned to (") + (a_side ? "1" : "0") + "," +
                  (b_side ? "1" : "0") + ")";
  record.source_player_count = 0;
  record.reduced_player_count = 6;
  record.added_players = {s0, s1};
  record.anchors = {s0, s1};
  record.ports = {gadget.a, gadget.b, gadget.d};
  record.parameters["level"] = Rational(gadget.level);
  record.parameters["p"] = p;
  record.parameters["r"] = p - Rational(1);
  record.parameters["pin"] = pin;
  record.parameters["W"] = big_w;
  record.parameters["M"] = big_m;
  record.parameters["pin_a"] = Rational(a_side ? 1 : 0);
  record.parameters["pin_b"] = Rational(b_side ? 1 : 0);

  return Reduced{Game(6, std::move(edges), std::move(labels)), std::move(record)};
}

/// Maps an outcome of the reduced instance back to a source solution: the
/// label of a source player is the index of the anchor supernode sharing its
/// coalition (0 if none, keeping the map total). For the NOR gadget the
/// solution is the side labels of the ports (a, b, d).
inline std::vector<int> pull_back(const ReductionRecord& record, const Outcome& reduced_outcome) {
  if (reduced_outcome.player_count() != record.reduced_player_count) {
    throw Error(Errc::RecordMismatch,
                "outcome has " + std::to_string(reduced_outcome.player_count()) +
                    " players, the record expects " +
                    std::to_string(record.reduced_player_count));
  }
  const auto label_of = [&](PlayerId player) {
    for (std::size_t j = 0; j < record.anchors.size(); ++j) {
      if (reduced_outcome.coalition_of(record.anchors[j]) ==
          reduced_outcome.coalition_of(player)) {
        return static_cast<int>(j);
      }
    }
    return 0;
  };
  std::vector<int> labels;
  if (record.kind == ReductionKind::NorGadget) {
    for (int port : record.ports) labels.push_back(label_of(port));
    return labels;
  }
  labels.reserve(record.source_player_count);
  for (PlayerId i = 0; i < record.source_player_count; ++i) labels.push_back(label_of(i));
  return labels;
}

}  // namespace hedonic

#endif  // HEDONIC_REDUCTIONS_HPP
