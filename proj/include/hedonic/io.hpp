#ifndef HEDONIC_IO_HPP
#define HEDONIC_IO_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "hedonic/dynamics.hpp"
#include "hedonic/game.hpp"
#include "hedonic/outcome.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/rule.hpp"
#include "hedonic/stability.hpp"

namespace hedonic::io {

using Json = nlohmann::ordered_json;

inline constexpr int kFormatVersion = 1;

// ---------------------------------------------------------------------------
// Building blocks

inline Json rational_to_json(const Rational& r) { return Json(r.str()); }

inline Rational rational_from_json(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw Error(Errc::ParseError, where + ": weight must be an integer or a \"num/den\" string");
}

inline Json outcome_to_json(const Outcome& outcome) {
  Json parts = Json::array();
  for (const auto& coalition : outcome.coalitions()) parts.push_back(coalition);
  return parts;
}

inline Outcome outcome_from_json(const Json& j, int player_count) {
  if (!j.is_array()) throw Error(Errc::ParseError, "outcome: expected an array of coalitions");
  std::vector<std::vector<int>> parts;
  for (const auto& coalition : j) {
    if (!coalition.is_array()) {
      throw Error(Errc::ParseError, "outcome: each coalition must be an array of players");
    }
    parts.push_back(coalition.get<std::vector<int>>());
  }
  return Outcome::from_coalitions(player_count, parts);
}

// ---------------------------------------------------------------------------
// Reduction records

inline Json record_to_json(const ReductionRecord& record) {
  Json j;
  j["kind"] = reduction_kind_name(record.kind);
  j["source"] = record.source;
  j["source_players"] = record.source_player_count;
  j["reduced_players"] = record.reduced_player_count;
  j["added_players"] = record.added_players;
  j["anchors"] = record.anchors;
  if (!record.ports.empty()) j["ports"] = record.ports;
  Json params;
  for (const auto& [key, value] : record.parameters) params[key] = rational_to_json(value);
  j["parameters"] = std::move(params);
  return j;
}

inline ReductionRecord record_from_json(const Json& j) {
  ReductionRecord record;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "supernodes") {
    record.kind = ReductionKind::Supernodes;
  } else if (kind == "sumcis") {
    record.kind = ReductionKind::SumCis;
  } else if (kind == "votein-followers") {
    record.kind = ReductionKind::VoteInFollowers;
  } else if (kind == "kvoteout") {
    record.kind = ReductionKind::KVoteOut;
  } else if (kind == "nor") {
    record.kind = ReductionKind::NorGadget;
  } else {
    throw Error(Errc::ParseError, "unknown reduction kind '" + kind + "'");
  }
  record.source = j.value("source", std::string{});
  record.source_player_count = j.at("source_players").get<int>();
  record.reduced_player_count = j.at("reduced_players").get<int>();
  record.added_players = j.at("added_players").get<std::vector<int>>();
  record.anchors = j.at("anchors").get<std::vector<int>>();
  if (j.contains("ports")) record.ports = j.at("ports").get<std::vector<int>>();
  if (j.contains("parameters")) {
    for (const auto& [key, value] : j.at("parameters").items()) {
      record.parameters[key] = rational_from_json(value, "parameters." + key);
    }
  }
  return record;
}

// ---------------------------------------------------------------------------
// Instance files

struct Instance {
  Game game;
  std::optional<ReductionRecord> record;
  std::vector<std::string> player_names;  // optional, parallel to players
};

inline Json instance_to_json(const Instance& instance) {
  Json j;
  j["format_version"] = kFormatVersion;
  if (!instance.player_names.empty()) {
    j["players"] = instance.player_names;
  } else {
    j["players"] = instance.game.player_count();
  }
  Json edges = Json::array();
  for (const auto& e : instance.game.edges()) {
    edges.push_back(Json::array({e.u, e.v, rational_to_json(e.weight)}));
  }
  j["edges"] = std::move(edges);
  bool any_label = false;
  for (const auto& label : instance.game.labels()) any_label |= !label.empty();
  if (any_label) {
    Json labels;
    for (PlayerId i = 0; i < instance.game.player_count(); ++i) {
      if (!instance.game.label(i).empty()) labels[std::to_string(i)] = instance.game.label(i);
    }
    j["labels"] = std::move(labels);
  }
  if (instance.record) j["reduction"] = record_to_json(*instance.record);
  return j;
}

inline std::string serialize(const Instance& instance) {
  return instance_to_json(instance).dump(2) + "\n";
}

inline Instance instance_from_json(const Json& j) {
  if (!j.is_object()) throw Error(Errc::ParseError, "instance: expected a JSON object");
  if (j.contains("format_version") && j.at("format_version").get<int>() != kFormatVersion) {
    throw Error(Errc::ParseError, "unsupported format_version");
  }
  Instance instance;
  int player_count = 0;
  const Json& players = j.at("players");
  if (players.is_number_integer()) {
    player_count = players.get<int>();
  } else if (players.is_array()) {
    instance.player_names = players.get<std::vector<std::string>>();
    player_count = static_cast<int>(instance.player_names.size());
  } else {
    throw Error(Errc::ParseError, "players: expected a count or a list of names");
  }
  std::vector<WeightedEdge> edges;
  if (j.contains("edges")) {
    for (const auto& entry : j.at("edges")) {
      if (!entry.is_array() || entry.size() != 3) {
        throw Error(Errc::ParseError, "edges: expected [u, v, weight] triples");
      }
      edges.push_back({entry[0].get<int>(), entry[1].get<int>(),
                       rational_from_json(entry[2], "edge weight")});
    }
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    labels.resize(player_count);
    for (const auto& [key, value] : j.at("labels").items()) {
      const int index = std::stoi(key);
      if (index < 0 || index >= player_count) {
        throw Error(Errc::ParseError, "labels: player index out of range");
      }
      labels[index] = value.get<std::string>();
    }
  }
  instance.game = Game(player_count, std::move(edges), std::move(labels));
  if (j.contains("reduction")) instance.record = record_from_json(j.at("reduction"));
  return instance;
}

/// Parses instance bytes; JSON syntax and shape errors surface as ParseError
/// (with the byte position for syntax), validation failures keep their
/// specific codes.
inline Instance parse_instance(const std::string& bytes) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    return instance_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

// ---------------------------------------------------------------------------
// Outcomes, verdicts and traces

inline std::string serialize(const Outcome& outcome) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["coalitions"] = outcome_to_json(outcome);
  return j.dump(2) + "\n";
}

inline Outcome parse_outcome(const std::string& bytes, int player_count) {
  Json j;
  try {
    j = Json::parse(bytes);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  try {
    if (j.is_array()) return outcome_from_json(j, player_count);  // bare coalition list
    return outcome_from_json(j.at("coalitions"), player_count);
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

inline Json breakdown_to_json(const FeasibilityBreakdown& b) {
  Json j;
  j["nash"] = b.nash;
  j["enter_ok"] = b.enter_ok;
  j["leave_ok"] = b.leave_ok;
  j["gain"] = rational_to_json(b.gain);
  j["enter_sum"] = rational_to_json(b.enter_sum);
  j["leave_sum"] = rational_to_json(b.leave_sum);
  j["enter_fraction"] = b.enter_fraction ? rational_to_json(*b.enter_fraction) : Json(nullptr);
  j["leave_fraction"] = b.leave_fraction ? rational_to_json(*b.leave_fraction) : Json(nullptr);
  return j;
}

inline Json deviation_to_json(const Deviation& dev) {
  Json j;
  j["player"] = dev.player;
  if (dev.to_new_singleton()) {
    j["target"] = "new";
  } else {
    j["target"] = dev.target;
  }
  return j;
}

inline Json verdict_to_json(const StabilityVerdict& verdict, const Rule& rule,
                            std::optional<int> k) {
  Json j;
  j["rule"] = rule_name(rule);
  j["k"] = k ? Json(*k) : Json(nullptr);
  j["stable"] = verdict.stable;
  if (verdict.witness) {
    Json w = deviation_to_json(verdict.witness->first);
    w["feasibility"] = breakdown_to_json(verdict.witness->second);
    j["witness"] = std::move(w);
  }
  return j;
}

inline Json trace_to_json(const Trace& trace) {
  Json j;
  j["format_version"] = kFormatVersion;
  j["start"] = outcome_to_json(trace.start);
  Json steps = Json::array();
  for (const TraceStep& step : trace.steps) {
    Json s = deviation_to_json(step.deviation);
    s["gain"] = rational_to_json(step.gain);
    s["total_happiness"] = rational_to_json(step.total_happiness_after);
    s["signed_internal"] = step.signed_internal_after;
    steps.push_back(std::move(s));
  }
  j["steps"] = std::move(steps);
  j["final"] = outcome_to_json(trace.final);
  j["converged"] = trace.converged;
  j["step_count"] = trace.step_count();
  return j;
}

inline std::string serialize(const Trace& trace) { return trace_to_json(trace).dump(2) + "\n"; }

}  // namespace hedonic::io

#endif  // HEDONIC_IO_HPP
