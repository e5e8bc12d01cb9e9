#include "latnorm/error.hpp"

namespace latnorm {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotFullDimensional: return "NotFullDimensional";
    case ErrorKind::InvalidDilation: return "InvalidDilation";
    case ErrorKind::LevelOutOfRange: return "LevelOutOfRange";
    case ErrorKind::NotUnimodular: return "NotUnimodular";
    case ErrorKind::NotSmooth: return "NotSmooth";
    case ErrorKind::NotLatticeSlice: return "NotLatticeSlice";
    case ErrorKind::NotNefPair: return "NotNefPair";
    case ErrorKind::NotSmoothBase: return "NotSmoothBase";
    case ErrorKind::NonLatticeSlice: return "NonLatticeSlice";
    case ErrorKind::NonLatticeSplit: return "NonLatticeSplit";
    case ErrorKind::DegenerateSplit: return "DegenerateSplit";
    case ErrorKind::SlabUncertifiable: return "SlabUncertifiable";
    case ErrorKind::CertificationFailed: return "CertificationFailed";
    case ErrorKind::ConstraintViolation: return "ConstraintViolation";
    case ErrorKind::NotSmoothResult: return "NotSmoothResult";
    case ErrorKind::SamplingExhausted: return "SamplingExhausted";
    case ErrorKind::HypothesisNotMet: return "HypothesisNotMet";
    case ErrorKind::UnknownCatalogId: return "UnknownCatalogId";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::Internal: return "Internal";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind) {}

}  // namespace latnorm
