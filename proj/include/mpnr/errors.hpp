#pragma once

#include <stdexcept>
#include <string>

namespace mpnr {

/// Base class for all numerical failures raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Truncated basis too small: the state's tail mass exceeds the tolerance.
struct TruncationError : Error {
  using Error::Error;
};

/// A construction whose result is the zero vector (e.g. odd cat at alpha=0).
struct DegenerateInputError : Error {
  using Error::Error;
};

/// Squeeze-operator padding did not absorb the support growth.
struct PadInsufficientError : Error {
  using Error::Error;
};

struct DimensionMismatchError : Error {
  using Error::Error;
};

/// Detector parameters out of range or inconsistent.
struct InvalidSpecError : Error {
  using Error::Error;
};

/// Brute-force enumeration would exceed the configured bound.
struct EnumerationBoundError : Error {
  using Error::Error;
};

/// A series evaluation stopped before its tail estimate fell below tolerance.
struct SeriesNotConvergedError : Error {
  using Error::Error;
};

/// Conditioning on an outcome whose probability is numerically zero.
struct DegenerateConditionError : Error {
  using Error::Error;
};

/// A closed-form oracle evaluated outside its domain of validity.
struct OracleDomainError : Error {
  using Error::Error;
};

}  // namespace mpnr
