#include "ideal24/error.hpp"

namespace ideal24 {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NonFacetImage: return "NonFacetImage";
    case ErrorCode::InvalidIsometry: return "InvalidIsometry";
    case ErrorCode::DoublePairing: return "DoublePairing";
    case ErrorCode::SeedDoesNotExtend: return "SeedDoesNotExtend";
    case ErrorCode::ColorScopeEmpty: return "ColorScopeEmpty";
    case ErrorCode::HasBoundary: return "HasBoundary";
    case ErrorCode::AlreadyOrientable: return "AlreadyOrientable";
    case ErrorCode::NoBoundary: return "NoBoundary";
    case ErrorCode::NotBoundaryPreserving: return "NotBoundaryPreserving";
    case ErrorCode::NonFlatBoundary: return "NonFlatBoundary";
    case ErrorCode::UnclassifiedFlatType: return "UnclassifiedFlatType";
    case ErrorCode::UnclassifiedCompactType: return "UnclassifiedCompactType";
    case ErrorCode::BoundarySquareNonzero: return "BoundarySquareNonzero";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace ideal24
