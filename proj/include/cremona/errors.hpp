// Error taxonomy shared by all modules. One exception type carrying a kind
// tag so tools can map failures onto exit codes without string matching.
#ifndef CREMONA_ERRORS_HPP
#define CREMONA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cremona {

enum class ErrorKind {
  // input shape / usage
  InvalidArgument,
  ParseError,
  InvalidField,
  FieldMismatch,
  DegreeMismatch,
  NotDegree3,
  DuplicateGenerator,
  GeneratorOffCurve,
  PointNotOnCurve,
  UnknownId,
  NotAGenerator,
  NotInSuccRelation,
  WordNotReduced,
  // arithmetic
  DivisionByZero,
  NonDivisible,
  SingularMatrix,
  // verification failures (carry a counterexample in the message)
  Singular,
  Reducible,
  NotBirational,
  NotInInertia,
  NormalizationViolated,
  WrongMultiplicity,
  DegenerateConfiguration,
  ComposedToZero,
  ZeroMap,
  AssertionFailure,
  RecursionMismatch,
  // recoverable: the configuration is fine but not split over the base field
  QuarticNotSplit,
  BasePointsNotRational,
  // internal invariant violation (a bug, not an input problem)
  Internal,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::NotDegree3: return "NotDegree3";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::GeneratorOffCurve: return "GeneratorOffCurve";
    case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorKind::UnknownId: return "UnknownId";
    case ErrorKind::NotAGenerator: return "NotAGenerator";
    case ErrorKind::NotInSuccRelation: return "NotInSuccRelation";
    case ErrorKind::WordNotReduced: return "WordNotReduced";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonDivisible: return "NonDivisible";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::Singular: return "Singular";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NotBirational: return "NotBirational";
    case ErrorKind::NotInInertia: return "NotInInertia";
    case ErrorKind::NormalizationViolated: return "NormalizationViolated";
    case ErrorKind::WrongMultiplicity: return "WrongMultiplicity";
    case ErrorKind::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorKind::ComposedToZero: return "ComposedToZero";
    case ErrorKind::ZeroMap: return "ZeroMap";
    case ErrorKind::AssertionFailure: return "AssertionFailure";
    case ErrorKind::RecursionMismatch: return "RecursionMismatch";
    case ErrorKind::QuarticNotSplit: return "QuarticNotSplit";
    case ErrorKind::BasePointsNotRational: return "BasePointsNotRational";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + msg),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& msg) {
  throw Error(kind, msg);
}

inline void check(bool cond, ErrorKind kind, const std::string& msg) {
  if (!cond) raise(kind, msg);
}

}  // namespace cremona

#endif  // CREMONA_ERRORS_HPP
