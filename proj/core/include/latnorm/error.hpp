#pragma once

#include <stdexcept>
#include <string>

namespace latnorm {

enum class ErrorKind {
  EmptyInput,
  DimensionMismatch,
  NotFullDimensional,
  InvalidDilation,
  LevelOutOfRange,
  NotUnimodular,
  NotSmooth,
  NotLatticeSlice,
  NotNefPair,
  NotSmoothBase,
  NonLatticeSlice,
  NonLatticeSplit,
  DegenerateSplit,
  SlabUncertifiable,
  CertificationFailed,
  ConstraintViolation,
  NotSmoothResult,
  SamplingExhausted,
  HypothesisNotMet,
  UnknownCatalogId,
  ParseError,
  Internal,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace latnorm
