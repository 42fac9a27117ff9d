#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "hedonic/io.hpp"
#include "hedonic/reductions.hpp"

using namespace hedonic;

TEST_CASE("parse_instance: minimal file and rational weights") {
  const io::Instance a = io::parse_instance(R"({"players": 2, "edges": [[0, 1, -3]]})");
  CHECK(a.game.player_count() == 2);
  CHECK(*a.game.weight(0, 1) == Rational(-3));

  const io::Instance b = io::parse_instance(R"({"players": 2, "edges": [[0, 1, "7/2"]]})");
  CHECK(*b.game.weight(0, 1) == Rational(7, 2));

  const io::Instance named =
      io::parse_instance(R"({"players": ["alice", "bob"], "edges": [[0, 1, "1"]]})");
  CHECK(named.game.player_count() == 2);
  CHECK(named.player_names == std::vector<std::string>{"alice", "bob"});
}

TEST_CASE("parse_instance: errors keep their specific codes") {
  const auto code_of = [](const std::string& bytes) {
    try {
      io::parse_instance(bytes);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::ValidationError;
  };
  CHECK(code_of(R"({"players": 2, "edges": [[0, 1, 0]]})") == Errc::ZeroWeightEdge);
  CHECK(code_of(R"({"players": 2, "edges": [[0, 0, 3]]})") == Errc::SelfLoop);
  CHECK(code_of(R"({"players": 2, "edges": [[0, 1, 1], [1, 0, 2]]})") == Errc::DuplicateEdge);
  CHECK(code_of(R"({"players": 2, "edges": [[0, 5, 1]]})") == Errc::UnknownPlayer);
  CHECK(code_of(R"(not json)") == Errc::ParseError);
  CHECK(code_of(R"({"players": 2, "edges": [[0, 1, 0.5]]})") == Errc::ParseError);
  CHECK(code_of(R"({"edges": []})") == Errc::ParseError);  // missing players
}

TEST_CASE("instance round-trip: parse then serialize is the identity on canonical bytes") {
  std::mt19937_64 rng(91);
  for (int trial = 0; trial < 20; ++trial) {
    const Game g = fixtures::random_game(6, 0.5, rng());
    const io::Instance original{g, std::nullopt, {}};
    const std::string bytes = io::serialize(original);
    const io::Instance parsed = io::parse_instance(bytes);
    CHECK(parsed.game.player_count() == g.player_count());
    CHECK(parsed.game.edges().size() == g.edges().size());
    CHECK(io::serialize(parsed) == bytes);  // canonical fixed point
  }
}

TEST_CASE("instance round-trip preserves player names") {
  const io::Instance original{Game(2, {{0, 1, Rational(7, 2)}}), std::nullopt, {"alice", "bob"}};
  const std::string bytes = io::serialize(original);
  const io::Instance parsed = io::parse_instance(bytes);
  CHECK(parsed.player_names == original.player_names);
  CHECK(io::serialize(parsed) == bytes);
}

TEST_CASE("instance round-trip preserves labels and reduction records") {
  const Game source(2, {{0, 1, -3}});
  Reduced reduced = add_supernodes(source, 2, "unit test source");
  const io::Instance original{reduced.game, reduced.record, {}};
  const std::string bytes = io::serialize(original);
  const io::Instance parsed = io::parse_instance(bytes);
  REQUIRE(parsed.record.has_value());
  CHECK(parsed.record->kind == ReductionKind::Supernodes);
  CHECK(parsed.record->source == "unit test source");
  CHECK(parsed.record->anchors == reduced.record.anchors);
  CHECK(parsed.record->parameters.at("W") == Rational(4));
  CHECK(parsed.record->parameters.at("M") == Rational(9));
  CHECK(parsed.game.label(2) == "super:0");
  CHECK(io::serialize(parsed) == bytes);

  // The parsed record still drives pull_back.
  const auto labels = pull_back(*parsed.record, Outcome::from_coalitions(4, {{0, 2}, {1, 3}}));
  CHECK(labels == std::vector<int>{0, 1});
}

TEST_CASE("outcome serialization matches the bracket rendering") {
  const Outcome o = Outcome::from_coalitions(4, {{3}, {1, 2}, {0}});
  CHECK(o.str() == "[[0],[1,2],[3]]");
  const std::string bytes = io::serialize(o);
  const Outcome back = io::parse_outcome(bytes, 4);
  CHECK(back == o);
  // Bare arrays parse too.
  CHECK(io::parse_outcome("[[1, 2], [0], [3]]", 4) == o);
  CHECK_THROWS_AS(io::parse_outcome("[[0]]", 2), Error);
  CHECK_THROWS_AS(io::parse_outcome("{}", 2), Error);
}

TEST_CASE("trace serialization records steps and potentials") {
  const Game g = fixtures::triangle();
  const Trace t = run_local_search(g, Outcome::singletons(3), Rule::nash_stable());
  const std::string bytes = io::serialize(t);
  const io::Json j = io::Json::parse(bytes);
  CHECK(j.at("converged").get<bool>());
  CHECK(j.at("step_count").get<int>() == t.step_count());
  CHECK(j.at("steps").size() == static_cast<std::size_t>(t.step_count()));
  if (t.step_count() > 0) {
    const auto& first = j.at("steps").at(0);
    CHECK(first.contains("player"));
    CHECK(first.contains("gain"));
    CHECK(first.contains("total_happiness"));
    CHECK(first.contains("signed_internal"));
  }
  // Zero-step traces serialize with start == final.
  const Trace idle = run_local_search(g, Outcome::grand_coalition(3), Rule::nash_stable());
  const io::Json ij = io::Json::parse(io::serialize(idle));
  CHECK(ij.at("start") == ij.at("final"));
  CHECK(ij.at("converged").get<bool>());
}

TEST_CASE("new-singleton deviations serialize as \"new\"") {
  // Player 0's only edge is negative, so it walks out into a fresh coalition.
  const Game g(3, {{0, 1, -2}, {1, 2, 5}});
  const Trace t = run_local_search(g, Outcome::grand_coalition(3), Rule::nash_stable());
  REQUIRE(t.converged);
  REQUIRE(t.step_count() >= 1);
  const io::Json j = io::Json::parse(io::serialize(t));
  bool saw_new = false;
  for (const auto& step : j.at("steps")) {
    if (step.at("target").is_string()) {
      CHECK(step.at("target").get<std::string>() == "new");
      saw_new = true;
    }
  }
  CHECK(saw_new);
}

TEST_CASE("serialization is deterministic") {
  const Game g = fixtures::six_player();
  const io::Instance instance{g, std::nullopt, {}};
  CHECK(io::serialize(instance) == io::serialize(instance));
  const Trace t = run_local_search(g, Outcome::singletons(6), Rule::nash_stable());
  CHECK(io::serialize(t) == io::serialize(t));
}
