#pragma once
#include <stdexcept>
#include <string>

namespace chardeg {

// Every failure mode the library reports.  One exception class carrying a
// kind tag keeps call sites greppable and lets tests assert the exact mode.
enum class Err {
  FactorizationTimeout,
  MagnitudeExceeded,
  NotPrime,
  UndefinedCase,
  ParseError,
  InvalidParameters,
  NotSimple,
  NotLieType,
  ExceptionListed,
  NotExceptional,
  RowMissing,
  UnknownWitness,
  InvalidParams,
  UnknownSporadic,
  CapExceeded,
  SyntaxError,
  DuplicateId,
  UnboundParameter,
  EvaluationError,
};

const char* err_name(Err e);

class Error : public std::runtime_error {
public:
  Error(Err kind, const std::string& msg)
      : std::runtime_error(std::string(err_name(kind)) + ": " + msg), kind_(kind) {}
  Err kind() const { return kind_; }

private:
  Err kind_;
};

}  // namespace chardeg
