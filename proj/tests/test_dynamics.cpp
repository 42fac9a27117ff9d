#include "doctest.h"

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "hedonic/dynamics.hpp"
#include "hedonic/oracle.hpp"

using namespace hedonic;

namespace {

/// Replays a trace and checks the recorded potentials step by step.
void verify_trace(const Game& game, const Trace& trace) {
  Outcome current = trace.start;
  Rational happiness = total_happiness(game, current);
  for (const TraceStep& step : trace.steps) {
    CHECK(step.gain.positive());
    current = current.moved(step.deviation);
    const Rational next_happiness = total_happiness(game, current);
    CHECK(next_happiness == step.total_happiness_after);
    CHECK(next_happiness - happiness == step.gain * Rational(2));
    CHECK(next_happiness > happiness);
    CHECK(signed_internal_count(game, current) == step.signed_internal_after);
    happiness = next_happiness;
  }
  CHECK(current == trace.final);
}

}  // namespace

TEST_CASE("improvement_step basics") {
  const Game g = fixtures::triangle();

  CHECK_FALSE(improvement_step(g, Outcome::grand_coalition(3), Rule::nash_stable()).has_value());

  auto step = improvement_step(g, Outcome::from_coalitions(3, {{0, 1}, {2}}), Rule::nash_stable());
  REQUIRE(step.has_value());
  CHECK(step->first == Deviation{2, 0});
  CHECK(step->second == Outcome::grand_coalition(3));
}

TEST_CASE("best improvement picks the largest gain, ties by scan order") {
  // Feasible gains from all-singletons: +1 (0 and 2 pair up) and +3 (1 and 2
  // pair up). The max gain is shared by {1 -> {2}} and {2 -> {1}}; the scan
  // order tiebreak selects player 1.
  const Game g(3, {{0, 2, 1}, {1, 2, 3}});
  const Outcome o = Outcome::from_coalitions(3, {{0}, {1}, {2}});
  auto step = improvement_step(g, o, Rule::nash_stable(), std::nullopt,
                               PivotPolicy::best_improvement());
  REQUIRE(step.has_value());
  CHECK(step->first == Deviation{1, 2});
  auto first = improvement_step(g, o, Rule::nash_stable());
  REQUIRE(first.has_value());
  CHECK(first->first == Deviation{0, 2});  // first feasible in scan order, gain +1
}

TEST_CASE("run_local_search converges and records a faithful trace") {
  const Game g = fixtures::triangle();

  Trace idle = run_local_search(g, Outcome::grand_coalition(3), Rule::nash_stable());
  CHECK(idle.converged);
  CHECK(idle.step_count() == 0);
  CHECK(idle.start == idle.final);

  Trace t = run_local_search(g, Outcome::singletons(3), Rule::nash_stable());
  CHECK(t.converged);
  verify_trace(g, t);
  CHECK(check_stable(g, t.final, Rule::nash_stable()).stable);
  auto nash_set = oracle::brute_force_stable(g, Rule::nash_stable());
  CHECK(std::find(nash_set.begin(), nash_set.end(), t.final) != nash_set.end());
}

TEST_CASE("step limit reports converged=false without error") {
  const Game g = fixtures::triangle();
  Trace t = run_local_search(g, Outcome::singletons(3), Rule::nash_stable(), std::nullopt, {}, 0);
  CHECK_FALSE(t.converged);
  CHECK(t.step_count() == 0);
  CHECK(t.start == t.final);
}

TEST_CASE("determinism: identical inputs give identical traces") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const Game g = fixtures::random_game(6, 0.5, rng());
    const Outcome start = fixtures::random_outcome(6, rng());
    for (const PivotPolicy& policy :
         {PivotPolicy::first_improvement(), PivotPolicy::best_improvement(),
          PivotPolicy::random(rng())}) {
      const Trace a = run_local_search(g, start, Rule::nash_stable(), std::nullopt, policy);
      const Trace b = run_local_search(g, start, Rule::nash_stable(), std::nullopt, policy);
      REQUIRE(a.step_count() == b.step_count());
      CHECK(a.final == b.final);
      for (int i = 0; i < a.step_count(); ++i) {
        CHECK(a.steps[i].deviation == b.steps[i].deviation);
      }
    }
  }
}

TEST_CASE("all policies converge to rule-stable outcomes on random games") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 12; ++trial) {
    const Game g = fixtures::random_game(5 + trial % 3, 0.6, rng());
    const Outcome start = fixtures::random_outcome(g.player_count(), rng());
    for (const char* cell : {"nash", "is", "cis", "sumcis"}) {
      const Rule rule = parse_rule(cell);
      const Trace t = run_local_search(g, start, rule, std::nullopt,
                                       PivotPolicy::random(trial * 31 + 1));
      REQUIRE(t.converged);
      verify_trace(g, t);
      CHECK(check_stable(g, t.final, rule).stable);
    }
  }
}

TEST_CASE("run_singleton_seeded: preconditions") {
  const Game g = fixtures::triangle();
  CHECK_THROWS_AS(run_singleton_seeded(g, Rule::nash_stable()), Error);
  CHECK_THROWS_AS(run_singleton_seeded(g, Rule::individual_stability()), Error);  // no leave rule
  CHECK_THROWS_AS(run_singleton_seeded(g, Rule::vote_in_out(Rational(1, 2), Rational(1, 2))),
                  Error);  // not veto-in
  CHECK_THROWS_AS(
      run_singleton_seeded(g, Rule::vote_in_out(Rational(1), Rational(0))),
      Error);  // vote-out with T = 0 lets anyone leave
  CHECK_NOTHROW(run_singleton_seeded(g, Rule::contractual_individual_stability()));
  CHECK_NOTHROW(run_singleton_seeded(
      g, Rule::make(EnterRestriction::VoteIn, LeaveRestriction::SumOut, Rational(1))));
}

TEST_CASE("run_singleton_seeded: bound, stability, all-positive coalitions") {
  SUBCASE("all-negative game stays at singletons") {
    const Game g = fixtures::all_negative_clique(4);
    const Trace t = run_singleton_seeded(g, Rule::contractual_individual_stability());
    CHECK(t.converged);
    CHECK(t.step_count() == 0);
    CHECK(t.final == Outcome::singletons(4));
  }

  SUBCASE("all-positive path converges within |V| steps") {
    const Game path(3, {{0, 1, 1}, {1, 2, 1}});
    const Rule rule = Rule::contractual_individual_stability();
    const Trace t = run_singleton_seeded(path, rule);
    CHECK(t.converged);
    CHECK(t.step_count() <= 3);
    CHECK(check_stable(path, t.final, rule).stable);
  }

  SUBCASE("triangle under veto-in + sum-out (cell 3B)") {
    const Game g = fixtures::triangle();
    const Rule rule = Rule::make(EnterRestriction::VoteIn, LeaveRestriction::SumOut, Rational(1));
    const Trace t = run_singleton_seeded(g, rule);
    CHECK(t.converged);
    CHECK(t.step_count() <= 3);
    CHECK(check_stable(g, t.final, rule).stable);
  }

  SUBCASE("random corpus: |V| bound and all-positive non-singleton coalitions") {
    std::mt19937_64 rng(23);
    const Rule rules[] = {
        Rule::make(EnterRestriction::VoteIn, LeaveRestriction::SumOut, Rational(1)),
        Rule::contractual_individual_stability(),
        Rule::make(EnterRestriction::VoteIn, LeaveRestriction::VoteOut, Rational(1),
                   Rational(1, 2)),
    };
    for (int trial = 0; trial < 15; ++trial) {
      const int n = 4 + trial % 5;
      const Game g = fixtures::random_game(n, 0.6, rng());
      for (const Rule& rule : rules) {
        const Trace t = run_singleton_seeded(g, rule);
        REQUIRE(t.converged);
        CHECK(t.step_count() <= n);
        verify_trace(g, t);
        CHECK(check_stable(g, t.final, rule).stable);
        for (const auto& coalition : t.final.coalitions()) {
          if (coalition.size() == 1) continue;
          for (std::size_t i = 0; i < coalition.size(); ++i) {
            for (std::size_t j = i + 1; j < coalition.size(); ++j) {
              if (auto w = g.weight(coalition[i], coalition[j])) CHECK(w->positive());
            }
          }
        }
      }
    }
  }
}

TEST_CASE("run_cis: bound and unrestricted CIS stability") {
  SUBCASE("all-negative game") {
    const Game g = fixtures::all_negative_clique(5);
    const Trace t = run_cis(g);
    CHECK(t.converged);
    CHECK(t.step_count() == 0);
  }

  SUBCASE("all-positive clique K3 reaches the grand coalition") {
    const Game g = fixtures::all_positive_clique(3);
    const Trace t = run_cis(g);
    CHECK(t.converged);
    CHECK(t.step_count() <= 6);
    CHECK(t.final == Outcome::grand_coalition(3));
    auto cis_set = oracle::brute_force_stable(g, Rule::contractual_individual_stability());
    CHECK(std::find(cis_set.begin(), cis_set.end(), t.final) != cis_set.end());
  }

  SUBCASE("triangle converges to a CIS-stable outcome") {
    const Game g = fixtures::triangle();
    const Trace t = run_cis(g);
    CHECK(t.converged);
    CHECK(t.step_count() <= 6);
    auto cis_set = oracle::brute_force_stable(g, Rule::contractual_individual_stability());
    CHECK(std::find(cis_set.begin(), cis_set.end(), t.final) != cis_set.end());
  }

  SUBCASE("random corpus: 2|V| bound, check_stable(CIS) on the result") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 25; ++trial) {
      const int n = 4 + trial % 8;
      const Game g = fixtures::random_game(n, 0.5, rng());
      const Trace t = run_cis(g);
      REQUIRE(t.converged);
      CHECK(t.step_count() <= 2 * n);
      verify_trace(g, t);
      CHECK(check_stable(g, t.final, Rule::contractual_individual_stability()).stable);
    }
  }
}

TEST_CASE("k-capped local search converges to k-capped stable outcomes") {
  std::mt19937_64 rng(73);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial % 4;
    const int k = 2 + trial % 2;
    const Game g = fixtures::random_game(n, 0.6, rng());
    // Start from a partition that already respects the cap.
    std::vector<int> a(n);
    for (int i = 0; i < n; ++i) a[i] = i % k;
    const Outcome start = Outcome::from_assignment(a);
    const Rule rule = trial % 2 == 0 ? Rule::nash_stable() : Rule::vote_out(Rational(1, 2));
    const Trace t = run_local_search(g, start, rule, k);
    REQUIRE(t.converged);
    CHECK(t.final.coalition_count() <= k);
    verify_trace(g, t);
    CHECK(check_stable(g, t.final, rule, k).stable);
  }
}

TEST_CASE("vote-in/out regime with both thresholds above 1/2: signed count climbs") {
  std::mt19937_64 rng(37);
  const Rule rule = Rule::vote_in_out(Rational(2, 3), Rational(2, 3));
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 4 + trial % 4;
    const Game g = fixtures::random_game(n, 0.6, rng());
    const Outcome start = fixtures::random_outcome(n, rng());
    const Trace t = run_local_search(g, start, rule);
    REQUIRE(t.converged);
    CHECK(t.step_count() <= 2 * g.edge_count());
    long long phi = signed_internal_count(g, t.start);
    for (const TraceStep& step : t.steps) {
      CHECK(step.signed_internal_after > phi);
      phi = step.signed_internal_after;
    }
  }
}
