#include "doctest.h"

#include <random>

#include "hedonic/flow.hpp"

using namespace hedonic;

TEST_CASE("min_cut on textbook networks") {
  SUBCASE("single arc") {
    FlowNetwork net{2, 0, 1, {{0, 1, 5}}};
    auto cut = min_cut(net);
    CHECK(cut.value == Rational(5));
    CHECK(cut.source_side[0]);
    CHECK_FALSE(cut.source_side[1]);
  }
  SUBCASE("two disjoint paths add up") {
    FlowNetwork net{4, 0, 3, {{0, 1, 2}, {1, 3, 2}, {0, 2, 3}, {2, 3, 3}}};
    CHECK(min_cut(net).value == Rational(5));
  }
  SUBCASE("bottleneck wins") {
    FlowNetwork net{3, 0, 2, {{0, 1, 10}, {1, 2, 1}}};
    auto cut = min_cut(net);
    CHECK(cut.value == Rational(1));
    CHECK(cut.source_side[1]);  // bottleneck arc crosses
  }
  SUBCASE("disconnected sink gives zero") {
    FlowNetwork net{3, 0, 2, {{0, 1, 4}}};
    CHECK(min_cut(net).value == Rational(0));
  }
  SUBCASE("rational capacities") {
    FlowNetwork net{3, 0, 2, {{0, 1, Rational(7, 3)}, {1, 2, Rational(1, 2)}}};
    CHECK(min_cut(net).value == Rational(1, 2));
  }
}

TEST_CASE("min_cut validation errors") {
  CHECK_THROWS_AS(min_cut(FlowNetwork{2, 0, 0, {}}), Error);
  CHECK_THROWS_AS(min_cut(FlowNetwork{2, 0, 5, {}}), Error);
  CHECK_THROWS_AS(min_cut(FlowNetwork{2, 0, 1, {{0, 1, -1}}}), Error);
  CHECK_THROWS_AS(min_cut(FlowNetwork{2, 0, 1, {{0, 3, 1}}}), Error);
}

TEST_CASE("max-flow value matches exhaustive min cut on random networks") {
  std::mt19937_64 rng(4711);
  std::uniform_int_distribution<int> cap(1, 9);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 4;
    FlowNetwork net;
    net.node_count = n;
    net.source = 0;
    net.sink = n - 1;
    for (int u = 0; u < n; ++u) {
      for (int v = 0; v < n; ++v) {
        if (u == v || coin(rng) > 0.5) continue;
        net.arcs.push_back({u, v, Rational(cap(rng), 1 + trial % 3)});
      }
    }
    const auto result = min_cut(net);

    // Exhaustive minimum over all cuts separating source from sink.
    Rational best;
    bool first = true;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (!(mask & 1u)) continue;                 // source on the s side
      if (mask & (1u << (n - 1))) continue;       // sink on the t side
      Rational capacity;
      for (const auto& a : net.arcs) {
        if ((mask >> a.from & 1u) && !(mask >> a.to & 1u)) capacity += a.capacity;
      }
      if (first || capacity < best) best = capacity;
      first = false;
    }
    CHECK(result.value == best);
  }
}
