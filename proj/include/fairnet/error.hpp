#pragma once

#include <stdexcept>
#include <string>

namespace fairnet {

enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  InvalidEpsilon,
  InvalidRatios,
  BadParams,
  EmptyGroup,
  EmptySubset,
  InsufficientColorPoints,
  UnnormalizedWeights,
  OddColorCount,
  NotPowerOfTwo,
  LeafSizeIncompatible,
  TargetExceedsInput,
  EmptyRange,
  LpInfeasible,
  NumericalBreakdown,
  RetriesExhausted,
  InstanceTooLarge,
  BadDistribution,
  TooManyAttributes,
  ParseError,
  ConfigError,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what, long long detail = -1)
      : std::runtime_error(what), code_(code), detail_(detail) {}

  ErrorCode code() const { return code_; }
  // Offending index (color id, range id, line number, ...) or -1.
  long long detail() const { return detail_; }

 private:
  ErrorCode code_;
  long long detail_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what, long long detail = -1) {
  throw Error(code, what, detail);
}

}  // namespace fairnet
