#ifndef RAMREC_ERRORS_HPP
#define RAMREC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ramrec {

enum class ErrorKind {
  DivisionByZero,
  DivisionByZeroSeries,
  TruncationUnderflow,
  TruncationError,
  NoRamification,
  CoincidentRamification,
  UnsupportedAlgebraicLocus,
  DeckSolveFailure,
  ZeroOmega,
  DegenerateW02,
  ParseError,
  ValidationError,
  InternalError,
};

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DivisionByZeroSeries: return "DivisionByZeroSeries";
    case ErrorKind::TruncationUnderflow: return "TruncationUnderflow";
    case ErrorKind::TruncationError: return "TruncationError";
    case ErrorKind::NoRamification: return "NoRamification";
    case ErrorKind::CoincidentRamification: return "CoincidentRamification";
    case ErrorKind::UnsupportedAlgebraicLocus: return "UnsupportedAlgebraicLocus";
    case ErrorKind::DeckSolveFailure: return "DeckSolveFailure";
    case ErrorKind::ZeroOmega: return "ZeroOmega";
    case ErrorKind::DegenerateW02: return "DegenerateW02";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::InternalError: return "InternalError";
  }
  return "UnknownError";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

}  // namespace ramrec

#endif
