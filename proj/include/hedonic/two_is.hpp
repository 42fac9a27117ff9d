#ifndef HEDONIC_TWO_IS_HPP
#define HEDONIC_TWO_IS_HPP

#include <optional>
#include <vector>

#include "hedonic/flow.hpp"
#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"

namespace hedonic {

struct TwoIsStats {
  int phase1_flips = 0;
  Rational cut_value;
  bool used_flow = false;
};

/// Individually stable outcome under the two-coalition restriction.
///
/// With no negative edge the grand coalition is returned. Otherwise:
///   1. starting from everyone on side 0, flip any node that has negative
///      edges but none of them crossing (at most |E-| flips: each flip
///      strictly raises the number of crossing negative edges);
///   2. contract each side's negative-incident nodes into s and t, summing
///      parallel weights from the untouched nodes and dropping s-t edges;
///   3. split the remaining all-positive graph by a min s-t cut.
inline Outcome solve_two_is(const Game& game, TwoIsStats* stats_out = nullptr) {
  const int n = game.player_count();
  TwoIsStats stats;

  if (!game.has_negative_edge()) {
    if (stats_out) *stats_out = stats;
    return Outcome::grand_coalition(n);
  }

  std::vector<bool> negative_incident(n, false);
  for (const auto& e : game.edges()) {
    if (e.weight.negative()) {
      negative_incident[e.u] = true;
      negative_incident[e.v] = true;
    }
  }

  // Phase 1: unit local search on the negative-edge subgraph.
  std::vector<int> side(n, 0);
  const auto crossing_negative_degree = [&](PlayerId v) {
    int count = 0;
    for (const auto& [other, w] : game.neighbors(v)) {
      if (w.negative() && side[other] != side[v]) ++count;
    }
    return count;
  };
  for (bool changed = true; changed;) {
    changed = false;
    for (PlayerId v = 0; v < n; ++v) {
      if (!negative_incident[v]) continue;
      if (crossing_negative_degree(v) == 0) {
        side[v] ^= 1;
        ++stats.phase1_flips;
        changed = true;
      }
    }
  }
  for (PlayerId v = 0; v < n; ++v) {
    if (negative_incident[v] && crossing_negative_degree(v) == 0) {
      throw Error(Errc::ValidationError, "internal: phase 1 left a node with no crossing enemy");
    }
  }

  // Phase 2: contract negative-incident nodes per side into s and t; the
  // untouched nodes have only positive edges, so every remaining capacity is
  // positive.
  std::vector<int> flow_id(n, -1);
  const int kSource = 0, kSink = 1;
  int next_id = 2;
  for (PlayerId v = 0; v < n; ++v) {
    if (negative_incident[v]) {
      flow_id[v] = side[v] == 0 ? kSource : kSink;
    } else {
      flow_id[v] = next_id++;
    }
  }
  FlowNetwork network;
  network.node_count = next_id;
  network.source = kSource;
  network.sink = kSink;
  std::vector<std::vector<Rational>> to_terminal(n, std::vector<Rational>(2));
  for (const auto& e : game.edges()) {
    const bool u_terminal = flow_id[e.u] < 2;
    const bool v_terminal = flow_id[e.v] < 2;
    if (u_terminal && v_terminal) continue;  // inside s/t or between them: ignored
    if (!u_terminal && !v_terminal) {
      if (e.weight.negative() || e.weight.is_zero()) {
        throw Error(Errc::ValidationError, "internal: nonpositive edge in the flow graph");
      }
      network.arcs.push_back({flow_id[e.u], flow_id[e.v], e.weight});
      network.arcs.push_back({flow_id[e.v], flow_id[e.u], e.weight});
      continue;
    }
    const PlayerId free = u_terminal ? e.v : e.u;
    const int terminal = u_terminal ? flow_id[e.u] : flow_id[e.v];
    to_terminal[free][terminal] += e.weight;
  }
  for (PlayerId v = 0; v < n; ++v) {
    if (flow_id[v] < 2) continue;
    for (int terminal = 0; terminal < 2; ++terminal) {
      const Rational& w = to_terminal[v][terminal];
      if (w.is_zero()) continue;
      if (w.negative()) {
        throw Error(Errc::ValidationError, "internal: negative contracted capacity");
      }
      network.arcs.push_back({flow_id[v], terminal, w});
      network.arcs.push_back({terminal, flow_id[v], w});
    }
  }

  // Phase 3: min cut decides the untouched nodes.
  const MinCutResult cut = min_cut(network);
  stats.cut_value = cut.value;
  stats.used_flow = true;
  std::vector<int> assignment(n);
  for (PlayerId v = 0; v < n; ++v) {
    if (flow_id[v] < 2) {
      assignment[v] = side[v];
    } else {
      assignment[v] = cut.source_side[flow_id[v]] ? 0 : 1;
    }
  }
  if (stats_out) *stats_out = stats;
  return Outcome::from_assignment(assignment);
}

}  // namespace hedonic

#endif  // HEDONIC_TWO_IS_HPP
