#include "kn3/error.hpp"

namespace kn3 {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::OddOrder: return "OddOrder";
    case ErrorCode::UnsupportedCase: return "UnsupportedCase";
    case ErrorCode::VertexAbsent: return "VertexAbsent";
    case ErrorCode::MismatchedAmbient: return "MismatchedAmbient";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::NotAnEmbeddingSet: return "NotAnEmbeddingSet";
    case ErrorCode::NotQuadrilateral: return "NotQuadrilateral";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::GraphMismatch: return "GraphMismatch";
    case ErrorCode::NoCommonTransition: return "NoCommonTransition";
    case ErrorCode::BoundExceeded: return "BoundExceeded";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace kn3
