#pragma once

#include <stdexcept>
#include <string>

namespace nsalg {

enum class Err {
  UnknownElement,
  ShapeError,
  DuplicateLabel,
  IndexOutOfRange,
  UniverseMismatch,
  NotContained,
  NotASubgroup,
  SizeOverflow,
  NotNeutrosophicUniverse,
  EmptyImage,
  DuplicateParameter,
  ParameterMismatch,
  DisjointParameters,
  UnknownPredicate,
  TooFewParameters,
  KindMismatch,
  EmptyPart,
  NotASubNStructure,
  BadParams,
  ConstructionInvariantBroken,
  TooLarge,
  CorpusCorrupt,
  ClaimError,
  UnknownClaim,
  NoIdentity,
  ParseError,
  IoError,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
 public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

 private:
  Err code_;
};

[[noreturn]] inline void fail(Err code, const std::string& msg) { throw Error(code, msg); }

}  // namespace nsalg
