#ifndef HEDONIC_CLI_HPP
#define HEDONIC_CLI_HPP

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hedonic/dynamics.hpp"
#include "hedonic/generators.hpp"
#include "hedonic/io.hpp"
#include "hedonic/oracle.hpp"
#include "hedonic/partitions.hpp"
#include "hedonic/reductions.hpp"
#include "hedonic/two_is.hpp"

namespace hedonic::cli {

// Exit codes: 0 stable / converged / success, 1 usage or parse error,
// 2 unstable (witness printed), 3 step limit hit before convergence.
inline constexpr int kOk = 0;
inline constexpr int kUsageError = 1;
inline constexpr int kUnstable = 2;
inline constexpr int kNotConverged = 3;

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

inline void emit(const std::string& text, const std::string& output_path, std::ostream& out) {
  if (output_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(output_path, std::ios::binary);
  if (!file) throw Error(Errc::ParseError, "cannot write '" + output_path + "'");
  file << text;
}

/// SizeGuard for enumeration, overridable via HEDONIC_SIZE_GUARD (a maximum
/// partition count).
inline SizeGuard size_guard_from_env() {
  SizeGuard guard;
  if (const char* raw = std::getenv("HEDONIC_SIZE_GUARD")) {
    try {
      guard.max_partitions = std::stoull(raw);
    } catch (...) {
      throw Error(Errc::ParseError, "HEDONIC_SIZE_GUARD must be an unsigned integer");
    }
  }
  return guard;
}

inline PivotPolicy policy_from(const std::string& name, std::uint64_t seed) {
  if (name == "first") return PivotPolicy::first_improvement();
  if (name == "best") return PivotPolicy::best_improvement();
  if (name == "random") return PivotPolicy::random(seed);
  throw Error(Errc::ParseError, "unknown policy '" + name + "'");
}

struct CommonState {
  std::string output_path;
};

}  // namespace detail

/// Runs the command-line interface on an argument vector (without the
/// program name). All output goes to the supplied streams.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"symmetric additively-separable hedonic games: stability checks, "
               "local-improvement dynamics, exact solvers, and gadget constructions"};
  app.require_subcommand(1);

  std::string instance_path, outcome_path, start_path, output_path;
  std::string rule_name_arg = "nash";
  std::optional<int> cap_k;
  std::string algo = "local-search";
  std::string policy_name = "first";
  std::uint64_t seed = 1;
  std::optional<long long> step_limit;

  auto* check = app.add_subcommand("check", "verdict for an outcome under a rule cell");
  check->add_option("instance", instance_path, "instance file")->required();
  check->add_option("outcome", outcome_path, "outcome file")->required();
  check->add_option("--rule", rule_name_arg, "rule cell (nash, is, cis, sumcis, votein:T, ...)");
  check->add_option("--k", cap_k, "allow at most k coalitions");
  check->add_option("--output,-o", output_path, "write the report to a file");

  auto* solve = app.add_subcommand("solve", "compute a stable outcome");
  solve->add_option("instance", instance_path, "instance file")->required();
  solve->add_option("--algo", algo, "two-is | cis | singleton-seeded | local-search")
      ->check(CLI::IsMember({"two-is", "cis", "singleton-seeded", "local-search"}));
  solve->add_option("--rule", rule_name_arg, "rule cell for local search / singleton-seeded");
  solve->add_option("--k", cap_k, "coalition cap for local search");
  solve->add_option("--policy", policy_name, "first | best | random");
  solve->add_option("--seed", seed, "seed for the random policy");
  solve->add_option("--limit", step_limit, "step limit for local search");
  solve->add_option("--start", start_path, "starting outcome file (default: all singletons)");
  solve->add_option("--output,-o", output_path, "write the result to a file");

  auto* enumerate = app.add_subcommand("enumerate", "list every stable outcome (oracle)");
  enumerate->add_option("instance", instance_path, "instance file")->required();
  enumerate->add_option("--rule", rule_name_arg, "rule cell");
  enumerate->add_option("--k", cap_k, "allow at most k coalitions");
  enumerate->add_option("--output,-o", output_path, "write the listing to a file");

  std::string family_name_arg = "random";
  GeneratorSpec generator;
  auto* generate = app.add_subcommand("generate", "emit a deterministic instance");
  generate->add_option("--family", family_name_arg,
                       "random | all-positive | all-negative | one-enemy")
      ->check(CLI::IsMember({"random", "all-positive", "all-negative", "one-enemy"}));
  generate->add_option("--players", generator.players, "number of players")->required();
  generate->add_option("--density", generator.density, "edge probability (default 0.5)");
  generate->add_option("--magnitude", generator.weight_magnitude,
                       "weights are nonzero integers within +-magnitude (default 5)");
  generate->add_option("--seed", generator.seed, "generator seed");
  generate->add_option("--output,-o", output_path, "write the instance to a file");

  std::string kind_name = "supernodes";
  int super_k = 2;
  std::string tin_text = "1/2", tout_text = "1/2";
  int nor_level = 1;
  int pin_a = 0, pin_b = 0;
  auto* reduce = app.add_subcommand("reduce", "construct a gadget instance with provenance");
  reduce->add_option("instance", instance_path, "source instance file (not used by --kind nor)");
  reduce->add_option("--kind", kind_name,
                     "supernodes | sumcis | votein-followers | kvoteout | nor")
      ->check(CLI::IsMember({"supernodes", "sumcis", "votein-followers", "kvoteout", "nor"}));
  reduce->add_option("--k", super_k, "supernode / coalition count (default 2)");
  reduce->add_option("--tin", tin_text, "vote-in threshold for votein-followers");
  reduce->add_option("--tout", tout_text, "vote-out threshold for kvoteout");
  reduce->add_option("--level", nor_level, "gate level for --kind nor (default 1)");
  reduce->add_option("--pin-a", pin_a, "pin input a of the gate to side 0 or 1")
      ->check(CLI::Range(0, 1));
  reduce->add_option("--pin-b", pin_b, "pin input b of the gate to side 0 or 1")
      ->check(CLI::Range(0, 1));
  reduce->add_option("--output,-o", output_path, "write the reduced instance to a file");

  auto* dynamics = app.add_subcommand("dynamics", "run local improvements and emit the trace");
  dynamics->add_option("instance", instance_path, "instance file")->required();
  dynamics->add_option("--rule", rule_name_arg, "rule cell");
  dynamics->add_option("--k", cap_k, "coalition cap");
  dynamics->add_option("--policy", policy_name, "first | best | random");
  dynamics->add_option("--seed", seed, "seed for the random policy");
  dynamics->add_option("--limit", step_limit, "step limit");
  dynamics->add_option("--start", start_path, "starting outcome file (default: all singletons)");
  dynamics->add_option("--output,-o", output_path, "write the trace to a file");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (*check) {
      const io::Instance instance = io::parse_instance(detail::read_file(instance_path));
      const Outcome outcome =
          io::parse_outcome(detail::read_file(outcome_path), instance.game.player_count());
      const Rule rule = parse_rule(rule_name_arg);
      const StabilityVerdict verdict = check_stable(instance.game, outcome, rule, cap_k);
      detail::emit(io::verdict_to_json(verdict, rule, cap_k).dump(2) + "\n", output_path, out);
      return verdict.stable ? kOk : kUnstable;
    }

    if (*solve) {
      const io::Instance instance = io::parse_instance(detail::read_file(instance_path));
      const Game& game = instance.game;
      io::Json report;
      report["algo"] = algo;
      if (algo == "two-is") {
        TwoIsStats stats;
        const Outcome result = solve_two_is(game, &stats);
        report["outcome"] = io::outcome_to_json(result);
        report["converged"] = true;
        report["phase1_flips"] = stats.phase1_flips;
        detail::emit(report.dump(2) + "\n", output_path, out);
        return kOk;
      }
      Trace trace;
      if (algo == "cis") {
        trace = run_cis(game, detail::policy_from(policy_name, seed));
        report["rule"] = "cis";
      } else {
        const Rule rule = parse_rule(rule_name_arg);
        report["rule"] = rule_name(rule);
        if (algo == "singleton-seeded") {
          trace = run_singleton_seeded(game, rule, detail::policy_from(policy_name, seed));
        } else {
          const Outcome start =
              start_path.empty()
                  ? Outcome::singletons(game.player_count())
                  : io::parse_outcome(detail::read_file(start_path), game.player_count());
          trace = run_local_search(game, start, rule, cap_k,
                                   detail::policy_from(policy_name, seed), step_limit);
        }
      }
      report["outcome"] = io::outcome_to_json(trace.final);
      report["converged"] = trace.converged;
      report["step_count"] = trace.step_count();
      detail::emit(report.dump(2) + "\n", output_path, out);
      return trace.converged ? kOk : kNotConverged;
    }

    if (*enumerate) {
      const io::Instance instance = io::parse_instance(detail::read_file(instance_path));
      const Rule rule = parse_rule(rule_name_arg);
      const auto stable =
          oracle::brute_force_stable(instance.game, rule, cap_k, detail::size_guard_from_env());
      io::Json report;
      report["rule"] = rule_name(rule);
      report["k"] = cap_k ? io::Json(*cap_k) : io::Json(nullptr);
      report["count"] = stable.size();
      io::Json outcomes = io::Json::array();
      for (const Outcome& o : stable) outcomes.push_back(io::outcome_to_json(o));
      report["stable_outcomes"] = std::move(outcomes);
      detail::emit(report.dump(2) + "\n", output_path, out);
      return kOk;
    }

    if (*generate) {
      if (family_name_arg == "random") generator.family = GameFamily::Random;
      if (family_name_arg == "all-positive") generator.family = GameFamily::AllPositive;
      if (family_name_arg == "all-negative") generator.family = GameFamily::AllNegative;
      if (family_name_arg == "one-enemy") generator.family = GameFamily::OneEnemy;
      io::Instance instance{generate_game(generator), std::nullopt, {}};
      detail::emit(io::serialize(instance), output_path, out);
      return kOk;
    }

    if (*reduce) {
      Reduced reduced;
      if (kind_name == "nor") {
        reduced = pin_nor_gadget(build_nor_gadget(nor_level), pin_a == 1, pin_b == 1);
      } else {
        if (instance_path.empty()) {
          throw Error(Errc::ParseError, "reduce --kind " + kind_name + " needs a source instance");
        }
        const io::Instance source = io::parse_instance(detail::read_file(instance_path));
        const std::string description = "file:" + instance_path;
        if (kind_name == "supernodes") {
          reduced = add_supernodes(source.game, super_k, description);
        } else if (kind_name == "sumcis") {
          reduced = reduce_maxcut_to_sumcis(source.game, description);
        } else if (kind_name == "votein-followers") {
          reduced = add_votein_followers(source.game, Rational::parse(tin_text), description);
        } else {
          reduced = reduce_to_kvoteout(source.game, super_k, Rational::parse(tout_text),
                                       description);
        }
      }
      io::Instance instance{std::move(reduced.game), std::move(reduced.record), {}};
      detail::emit(io::serialize(instance), output_path, out);
      return kOk;
    }

    if (*dynamics) {
      const io::Instance instance = io::parse_instance(detail::read_file(instance_path));
      const Game& game = instance.game;
      const Rule rule = parse_rule(rule_name_arg);
      const Outcome start =
          start_path.empty()
              ? Outcome::singletons(game.player_count())
              : io::parse_outcome(detail::read_file(start_path), game.player_count());
      const Trace trace = run_local_search(game, start, rule, cap_k,
                                           detail::policy_from(policy_name, seed), step_limit);
      detail::emit(io::serialize(trace), output_path, out);
      return trace.converged ? kOk : kNotConverged;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace hedonic::cli

#endif  // HEDONIC_CLI_HPP
