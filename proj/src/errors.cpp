#include "symknot/errors.hpp"

namespace symknot {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::MalformedToken: return "MalformedToken";
    case ErrorKind::EdgeUsedWrongNumberOfTimes: return "EdgeUsedWrongNumberOfTimes";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::BadPermutation: return "BadPermutation";
    case ErrorKind::NoSuchEdge: return "NoSuchEdge";
    case ErrorKind::MultiComponentOperand: return "MultiComponentOperand";
    case ErrorKind::MultiComponent: return "MultiComponent";
    case ErrorKind::InvalidScheme: return "InvalidScheme";
    case ErrorKind::NotAKnot: return "NotAKnot";
    case ErrorKind::ArityMismatch: return "ArityMismatch";
    case ErrorKind::MalformedKnotoid: return "MalformedKnotoid";
    case ErrorKind::DegenerateDiagram: return "DegenerateDiagram";
    case ErrorKind::DuplicateName: return "DuplicateName";
    case ErrorKind::MalformedRow: return "MalformedRow";
    case ErrorKind::ResourceLimit: return "ResourceLimit";
  }
  return "UnknownError";
}

}  // namespace symknot
