#pragma once

#include <stdexcept>
#include <string>

namespace belt {

enum class ErrKind {
  Syntax,
  UnknownAtom,
  ThresholdOutOfRange,
  ThresholdNotInSet,
  AgentOutOfRange,
  SpaceMismatch,
  PointNotInCarrier,
  NonMeasurableMap,
  FactorIndexOutOfRange,
  VocabMismatch,
  BudgetExceeded,
  ArityMismatch,
  NonUniqueBeliefExtension,
  NonDenseThresholds,
  NonSingletonStateAlgebra,
  StateSpaceMismatch,
  Io,
  Schema,
};

const char* err_kind_name(ErrKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrKind kind, std::string message)
      : std::runtime_error(std::string(err_kind_name(kind)) + ": " + message),
        kind_(kind) {}

  ErrKind kind() const { return kind_; }

 private:
  ErrKind kind_;
};

}  // namespace belt
