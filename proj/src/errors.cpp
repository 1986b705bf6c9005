#include "belief/errors.hpp"

namespace belt {

const char* err_kind_name(ErrKind k) {
  switch (k) {
    case ErrKind::Syntax: return "SyntaxError";
    case ErrKind::UnknownAtom: return "UnknownAtom";
    case ErrKind::ThresholdOutOfRange: return "ThresholdOutOfRange";
    case ErrKind::ThresholdNotInSet: return "ThresholdNotInSet";
    case ErrKind::AgentOutOfRange: return "AgentOutOfRange";
    case ErrKind::SpaceMismatch: return "SpaceMismatch";
    case ErrKind::PointNotInCarrier: return "PointNotInCarrier";
    case ErrKind::NonMeasurableMap: return "NonMeasurableMap";
    case ErrKind::FactorIndexOutOfRange: return "FactorIndexOutOfRange";
    case ErrKind::VocabMismatch: return "VocabMismatch";
    case ErrKind::BudgetExceeded: return "BudgetExceeded";
    case ErrKind::ArityMismatch: return "ArityMismatch";
    case ErrKind::NonUniqueBeliefExtension: return "NonUniqueBeliefExtension";
    case ErrKind::NonDenseThresholds: return "NonDenseThresholds";
    case ErrKind::NonSingletonStateAlgebra: return "NonSingletonStateAlgebra";
    case ErrKind::StateSpaceMismatch: return "StateSpaceMismatch";
    case ErrKind::Io: return "IoError";
    case ErrKind::Schema: return "SchemaError";
  }
  return "Error";
}

}  // namespace belt
