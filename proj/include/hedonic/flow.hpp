#ifndef HEDONIC_FLOW_HPP
#define HEDONIC_FLOW_HPP

#include <deque>
#include <vector>

#include "hedonic/error.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

/// Directed flow network with exact nonnegative rational capacities.
struct FlowNetwork {
  struct Arc {
    int from = 0;
    int to = 0;
    Rational capacity;
  };

  int node_count = 0;
  int source = 0;
  int sink = 0;
  std::vector<Arc> arcs;

  void validate() const {
    if (node_count <= 0) throw Error(Errc::InvalidNetwork, "empty network");
    if (source == sink) throw Error(Errc::InvalidNetwork, "source equals sink");
    if (source < 0 || source >= node_count || sink < 0 || sink >= node_count) {
      throw Error(Errc::InvalidNetwork, "source or sink out of range");
    }
    for (const auto& a : arcs) {
      if (a.from < 0 || a.from >= node_count || a.to < 0 || a.to >= node_count) {
        throw Error(Errc::InvalidNetwork, "arc endpoint out of range");
      }
      if (a.capacity < Rational(0)) {
        throw Error(Errc::InvalidNetwork, "negative arc capacity");
      }
    }
  }
};

struct MinCutResult {
  Rational value;                 // max-flow value == capacity of the cut
  std::vector<bool> source_side;  // per node: on the source side of the cut
  std::vector<Rational> flow;     // per input arc, certifying feasible flow
};

/// Min s-t cut via Edmonds-Karp max flow on exact rationals. The returned
/// cut is certified internally: the flow is feasible, conserved, and its
/// value equals the capacity crossing the reported cut.
inline MinCutResult min_cut(const FlowNetwork& network) {
  network.validate();
  const int n = network.node_count;
  const int m = static_cast<int>(network.arcs.size());

  // Residual representation: forward arc 2i, reverse arc 2i+1.
  std::vector<Rational> residual(2 * m);
  std::vector<int> head(2 * m);
  std::vector<std::vector<int>> out(n);
  for (int i = 0; i < m; ++i) {
    const auto& a = network.arcs[i];
    residual[2 * i] = a.capacity;
    residual[2 * i + 1] = Rational(0);
    head[2 * i] = a.to;
    head[2 * i + 1] = a.from;
    out[a.from].push_back(2 * i);
    out[a.to].push_back(2 * i + 1);
  }

  Rational total_flow;
  std::vector<int> parent_arc(n);
  while (true) {
    std::fill(parent_arc.begin(), parent_arc.end(), -1);
    std::deque<int> queue{network.source};
    parent_arc[network.source] = -2;
    while (!queue.empty() && parent_arc[network.sink] == -1) {
      const int u = queue.front();
      queue.pop_front();
      for (int arc : out[u]) {
        const int v = head[arc];
        if (parent_arc[v] != -1 || residual[arc].is_zero()) continue;
        parent_arc[v] = arc;
        queue.push_back(v);
      }
    }
    if (parent_arc[network.sink] == -1) break;

    Rational bottleneck;
    bool first = true;
    for (int v = network.sink; v != network.source;) {
      const int arc = parent_arc[v];
      if (first || residual[arc] < bottleneck) bottleneck = residual[arc];
      first = false;
      v = head[arc ^ 1];
    }
    for (int v = network.sink; v != network.source;) {
      const int arc = parent_arc[v];
      residual[arc] -= bottleneck;
      residual[arc ^ 1] += bottleneck;
      v = head[arc ^ 1];
    }
    total_flow += bottleneck;
  }

  MinCutResult result;
  result.value = total_flow;
  result.source_side.assign(n, false);
  {
    std::deque<int> queue{network.source};
    result.source_side[network.source] = true;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int arc : out[u]) {
        const int v = head[arc];
        if (result.source_side[v] || residual[arc].is_zero()) continue;
        result.source_side[v] = true;
        queue.push_back(v);
      }
    }
  }
  result.flow.resize(m);
  for (int i = 0; i < m; ++i) result.flow[i] = residual[2 * i + 1];

  // Certification: feasibility, conservation, and value == cut capacity.
  std::vector<Rational> balance(n);
  Rational cut_capacity;
  for (int i = 0; i < m; ++i) {
    const auto& a = network.arcs[i];
    if (result.flow[i] < Rational(0) || result.flow[i] > a.capacity) {
      throw Error(Errc::InvalidNetwork, "internal: infeasible flow");
    }
    balance[a.from] -= result.flow[i];
    balance[a.to] += result.flow[i];
    if (result.source_side[a.from] && !result.source_side[a.to]) cut_capacity += a.capacity;
  }
  for (int v = 0; v < n; ++v) {
    if (v == network.source || v == network.sink) continue;
    if (!balance[v].is_zero()) throw Error(Errc::InvalidNetwork, "internal: flow not conserved");
  }
  if (balance[network.sink] != total_flow || cut_capacity != total_flow) {
    throw Error(Errc::InvalidNetwork, "internal: cut value not certified by the flow");
  }
  return result;
}

}  // namespace hedonic

#endif  // HEDONIC_FLOW_HPP
