#include "hopfkit/error.hpp"

namespace hopfkit {

const char* error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::AlphabetMismatch: return "AlphabetMismatch";
    case ErrorKind::InvalidGenerator: return "InvalidGenerator";
    case ErrorKind::TailNotSmaller: return "TailNotSmaller";
    case ErrorKind::TailNotNormal: return "TailNotNormal";
    case ErrorKind::ZeroQ: return "ZeroQ";
    case ErrorKind::NotConfluent: return "NotConfluent";
    case ErrorKind::NoCoproductAttached: return "NoCoproductAttached";
    case ErrorKind::QSkewRejected: return "QSkewRejected";
    case ErrorKind::BadCoproductShape: return "BadCoproductShape";
    case ErrorKind::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorKind::AxiomFailure: return "AxiomFailure";
    case ErrorKind::NotHopfAdmissible: return "NotHopfAdmissible";
    case ErrorKind::TailAboveHead: return "TailAboveHead";
    case ErrorKind::WindowTooSmall: return "WindowTooSmall";
    case ErrorKind::AmbientMismatch: return "AmbientMismatch";
    case ErrorKind::UnknownBuiltin: return "UnknownBuiltin";
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::DuplicateRelation: return "DuplicateRelation";
    case ErrorKind::Resource: return "ResourceError";
  }
  return "Error";
}

}  // namespace hopfkit
