#ifndef HEDONIC_ERROR_HPP
#define HEDONIC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace hedonic {

enum class Errc {
  ZeroWeightEdge,
  DuplicateEdge,
  SelfLoop,
  UnknownPlayer,
  InvalidPartition,
  InvalidDeviation,
  InvalidK,
  SizeGuardExceeded,
  RulePreconditionViolated,
  NonPositiveSourceWeight,
  NonIntegerSourceWeight,
  OneEnemyViolation,
  ThresholdOutOfRange,
  RecordMismatch,
  InvalidNetwork,
  ParseError,
  ValidationError,
  DivisionByZero,
  Overflow,
};

inline const char* errc_name(Errc code) {
  switch (code) {
    case Errc::ZeroWeightEdge: return "ZeroWeightEdge";
    case Errc::DuplicateEdge: return "DuplicateEdge";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::UnknownPlayer: return "UnknownPlayer";
    case Errc::InvalidPartition: return "InvalidPartition";
    case Errc::InvalidDeviation: return "InvalidDeviation";
    case Errc::InvalidK: return "InvalidK";
    case Errc::SizeGuardExceeded: return "SizeGuardExceeded";
    case Errc::RulePreconditionViolated: return "RulePreconditionViolated";
    case Errc::NonPositiveSourceWeight: return "NonPositiveSourceWeight";
    case Errc::NonIntegerSourceWeight: return "NonIntegerSourceWeight";
    case Errc::OneEnemyViolation: return "OneEnemyViolation";
    case Errc::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case Errc::RecordMismatch: return "RecordMismatch";
    case Errc::InvalidNetwork: return "InvalidNetwork";
    case Errc::ParseError: return "ParseError";
    case Errc::ValidationError: return "ValidationError";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::Overflow: return "Overflow";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

}  // namespace hedonic

#endif  // HEDONIC_ERROR_HPP
