#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cantor {

enum class ErrorKind {
  InvalidMap,
  NoConvergence,
  Undecided,
  ParabolicSuspected,
  NoDomain,
  NearCriticalPoint,
  StepFloor,
  AmbiguousMatch,
  PresetOnly,
  NotContracting,
  Crowded,
  GrazingCut,
  NonInteger,
  DegreeMismatch,
  AlphabetEscape,
  NotSubgroup,
  NotNormal,
  InconsistentHomomorphism,
  CaseCountMismatch,
  NoWitness,
  ChainAmbiguous,
  ShapeMismatch,
  TopologyMismatch,
  Usage,
};

std::string_view to_string(ErrorKind kind);

// Every failure in the library is reported through this type; the kind
// tells the caller whether the problem is numeric, a budget issue, or a
// genuine negative result.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cantor
