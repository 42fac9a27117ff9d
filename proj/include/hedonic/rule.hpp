#ifndef HEDONIC_RULE_HPP
#define HEDONIC_RULE_HPP

#include <optional>
#include <string>
#include <string_view>

#include "hedonic/error.hpp"
#include "hedonic/rational.hpp"

namespace hedonic {

enum class EnterRestriction { None, SumIn, VoteIn };
enum class LeaveRestriction { None, SumOut, VoteOut };

/// One cell of the enter/leave restriction grid. Veto-in is VoteIn with
/// threshold 1, veto-out is VoteOut with threshold 1.
struct Rule {
  EnterRestriction enter = EnterRestriction::None;
  Rational t_in = 1;  // meaningful only for VoteIn
  LeaveRestriction leave = LeaveRestriction::None;
  Rational t_out = 1;  // meaningful only for VoteOut

  static Rule nash_stable() { return {}; }

  static Rule individual_stability() {  // veto-in, no leave restriction
    Rule r;
    r.enter = EnterRestriction::VoteIn;
    r.t_in = 1;
    return r;
  }

  static Rule contractual_individual_stability() {  // veto-in + veto-out
    Rule r = individual_stability();
    r.leave = LeaveRestriction::VoteOut;
    r.t_out = 1;
    return r;
  }

  static Rule sum_cis() {  // sum-in + sum-out
    Rule r;
    r.enter = EnterRestriction::SumIn;
    r.leave = LeaveRestriction::SumOut;
    return r;
  }

  static Rule vote_in(const Rational& t) {
    Rule r;
    r.enter = EnterRestriction::VoteIn;
    r.t_in = checked_threshold(t);
    return r;
  }

  static Rule vote_out(const Rational& t) {
    Rule r;
    r.leave = LeaveRestriction::VoteOut;
    r.t_out = checked_threshold(t);
    return r;
  }

  static Rule vote_in_out(const Rational& tin, const Rational& tout) {
    Rule r = vote_in(tin);
    r.leave = LeaveRestriction::VoteOut;
    r.t_out = checked_threshold(tout);
    return r;
  }

  static Rule make(EnterRestriction enter, LeaveRestriction leave,
                   std::optional<Rational> tin = std::nullopt,
                   std::optional<Rational> tout = std::nullopt) {
    Rule r;
    r.enter = enter;
    r.leave = leave;
    if (enter == EnterRestriction::VoteIn) r.t_in = checked_threshold(tin.value_or(Rational(1)));
    if (leave == LeaveRestriction::VoteOut) r.t_out = checked_threshold(tout.value_or(Rational(1)));
    return r;
  }

  friend bool operator==(const Rule& a, const Rule& b) {
    if (a.enter != b.enter || a.leave != b.leave) return false;
    if (a.enter == EnterRestriction::VoteIn && a.t_in != b.t_in) return false;
    if (a.leave == LeaveRestriction::VoteOut && a.t_out != b.t_out) return false;
    return true;
  }

 private:
  static Rational checked_threshold(const Rational& t) {
    if (t < Rational(0) || t > Rational(1)) {
      throw Error(Errc::ThresholdOutOfRange, "voting threshold " + t.str() + " not in [0,1]");
    }
    return t;
  }
};

namespace detail {

inline Rational parse_threshold(std::string_view text) {
  Rational t = Rational::parse(text);
  if (t < Rational(0) || t > Rational(1)) {
    throw Error(Errc::ThresholdOutOfRange, "voting threshold " + t.str() + " not in [0,1]");
  }
  return t;
}

}  // namespace detail

/// Parses a rule-cell name. Accepted forms:
///   nash | is | cis | sumcis
///   votein:T | voteout:T | voteinout:Tin,Tout
///   <col><row>[:T[,T]] with col in 1..4 and row in a..d, e.g. 3b, 4d:2/3,1/2
/// Columns: 1 none, 2 sum-in, 3 veto-in, 4 vote-in (threshold required).
/// Rows:    a none, b sum-out, c veto-out, d vote-out (threshold required).
inline Rule parse_rule(std::string_view text) {
  const auto split_colon = [](std::string_view s) {
    auto pos = s.find(':');
    if (pos == std::string_view::npos) return std::pair(s, std::string_view{});
    return std::pair(s.substr(0, pos), s.substr(pos + 1));
  };
  auto [head, args] = split_colon(text);

  if (head == "nash" || head == "1a") {
    if (!args.empty()) throw Error(Errc::ParseError, "rule 'nash' takes no threshold");
    return Rule::nash_stable();
  }
  if (head == "is" || head == "3a") {
    if (!args.empty()) throw Error(Errc::ParseError, "rule 'is' takes no threshold");
    return Rule::individual_stability();
  }
  if (head == "cis" || head == "3c") {
    if (!args.empty()) throw Error(Errc::ParseError, "rule 'cis' takes no threshold");
    return Rule::contractual_individual_stability();
  }
  if (head == "sumcis" || head == "2b") {
    if (!args.empty()) throw Error(Errc::ParseError, "rule 'sumcis' takes no threshold");
    return Rule::sum_cis();
  }
  if (head == "votein") {
    if (args.empty()) throw Error(Errc::ParseError, "votein:T requires a threshold");
    return Rule::vote_in(detail::parse_threshold(args));
  }
  if (head == "voteout") {
    if (args.empty()) throw Error(Errc::ParseError, "voteout:T requires a threshold");
    return Rule::vote_out(detail::parse_threshold(args));
  }
  if (head == "voteinout") {
    auto comma = args.find(',');
    if (comma == std::string_view::npos) {
      throw Error(Errc::ParseError, "voteinout:Tin,Tout requires two thresholds");
    }
    return Rule::vote_in_out(detail::parse_threshold(args.substr(0, comma)),
                             detail::parse_threshold(args.substr(comma + 1)));
  }

  if (head.size() == 2 && head[0] >= '1' && head[0] <= '4' && head[1] >= 'a' && head[1] <= 'd') {
    const EnterRestriction enters[] = {EnterRestriction::None, EnterRestriction::SumIn,
                                       EnterRestriction::VoteIn, EnterRestriction::VoteIn};
    const LeaveRestriction leaves[] = {LeaveRestriction::None, LeaveRestriction::SumOut,
                                       LeaveRestriction::VoteOut, LeaveRestriction::VoteOut};
    const int col = head[0] - '1';
    const int row = head[1] - 'a';
    const bool needs_tin = col == 3;
    const bool needs_tout = row == 3;
    std::optional<Rational> tin, tout;
    if (!args.empty()) {
      auto comma = args.find(',');
      std::string_view first = comma == std::string_view::npos ? args : args.substr(0, comma);
      std::string_view second =
          comma == std::string_view::npos ? std::string_view{} : args.substr(comma + 1);
      if (needs_tin && needs_tout) {
        if (second.empty()) {
          throw Error(Errc::ParseError, "cell 4d requires thresholds Tin,Tout");
        }
        tin = detail::parse_threshold(first);
        tout = detail::parse_threshold(second);
      } else if (needs_tin) {
        tin = detail::parse_threshold(first);
      } else if (needs_tout) {
        tout = detail::parse_threshold(first);
      } else {
        throw Error(Errc::ParseError, "rule cell takes no threshold");
      }
    } else if (needs_tin || needs_tout) {
      throw Error(Errc::ParseError,
                  "rule cell '" + std::string(head) + "' requires voting threshold(s)");
    }
    Rule r;
    r.enter = enters[col];
    r.leave = leaves[row];
    if (col == 2) r.t_in = 1;  // veto-in
    if (col == 3) r.t_in = *tin;
    if (row == 2) r.t_out = 1;  // veto-out
    if (row == 3) r.t_out = *tout;
    return r;
  }

  throw Error(Errc::ParseError, "unknown rule '" + std::string(text) + "'");
}

/// Canonical display name, preferring the common aliases.
inline std::string rule_name(const Rule& rule) {
  if (rule == Rule::nash_stable()) return "nash";
  if (rule == Rule::individual_stability()) return "is";
  if (rule == Rule::contractual_individual_stability()) return "cis";
  if (rule == Rule::sum_cis()) return "sumcis";
  if (rule.enter == EnterRestriction::VoteIn && rule.leave == LeaveRestriction::None) {
    return "votein:" + rule.t_in.str();
  }
  if (rule.enter == EnterRestriction::None && rule.leave == LeaveRestriction::VoteOut) {
    return "voteout:" + rule.t_out.str();
  }
  if (rule.enter == EnterRestriction::VoteIn && rule.leave == LeaveRestriction::VoteOut) {
    return "voteinout:" + rule.t_in.str() + "," + rule.t_out.str();
  }
  std::string name;
  name += rule.enter == EnterRestriction::None ? '1'
          : rule.enter == EnterRestriction::SumIn
              ? '2'
              : (rule.t_in == Rational(1) ? '3' : '4');
  name += rule.leave == LeaveRestriction::None ? 'a'
          : rule.leave == LeaveRestriction::SumOut
              ? 'b'
              : (rule.t_out == Rational(1) ? 'c' : 'd');
  std::string args;
  if (name[0] == '4') args += rule.t_in.str();
  if (name[1] == 'd') {
    if (!args.empty()) args += ',';
    args += rule.t_out.str();
  }
  return args.empty() ? name : name + ":" + args;
}

}  // namespace hedonic

#endif  // HEDONIC_RULE_HPP
