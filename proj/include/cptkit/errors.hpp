#ifndef CPTKIT_ERRORS_HPP
#define CPTKIT_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "cptkit/common.hpp"

namespace cptkit {

/// Base class for everything this library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidStateSpaceError : public Error {
 public:
  using Error::Error;
};

class InvalidActError : public Error {
 public:
  using Error::Error;
};

/// Two objects indexed against different state spaces were combined.
class SpaceMismatchError : public Error {
 public:
  using Error::Error;
};

class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Capacity table does not cover every subset of the space.
class MissingSubsetError : public CapacityError {
 public:
  using CapacityError::CapacityError;
};

/// v(empty) != 0 or v(S) != 1.
class NotNormalizedError : public CapacityError {
 public:
  NotNormalizedError(std::string message, SubsetMask endpoint, double observed)
      : CapacityError(std::move(message)), endpoint(endpoint), observed(observed) {}
  SubsetMask endpoint;
  double observed;
};

/// A subset pair A within B with v(A) > v(B); the witness is reported.
class NotMonotoneError : public CapacityError {
 public:
  NotMonotoneError(std::string message, SubsetMask subset, SubsetMask superset,
                   double value_subset, double value_superset)
      : CapacityError(std::move(message)),
        subset(subset),
        superset(superset),
        value_subset(value_subset),
        value_superset(value_superset) {}
  SubsetMask subset;
  SubsetMask superset;
  double value_subset;
  double value_superset;
};

/// CPT parameter invariant broken (mismatched spaces, lambda <= 0).
class InvalidParamsError : public Error {
 public:
  using Error::Error;
};

/// Malformed input file; the message carries file/row context.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Exact-rational arithmetic left the representable range.
class RationalOverflowError : public Error {
 public:
  using Error::Error;
};

/// Oracle registration failed (unit act does not evaluate to 1, or the
/// evaluator is not deterministic).
class OracleError : public Error {
 public:
  using Error::Error;
};

/// -I(-1_S) is not strictly positive: no loss-aversion coefficient exists.
class DegenerateLambdaError : public Error {
 public:
  DegenerateLambdaError(std::string message, double observed)
      : Error(std::move(message)), observed(observed) {}
  double observed;
};

/// Indicator extraction produced a table that is not a capacity.
class InvalidCapacityError : public Error {
 public:
  using Error::Error;
};

/// Extracted parameters fail to reproduce the oracle; carries a witness act.
class ReconstructionMismatchError : public Error {
 public:
  ReconstructionMismatchError(std::string message, std::vector<double> witness,
                              double deviation)
      : Error(std::move(message)), witness_payoffs(std::move(witness)), deviation(deviation) {}
  std::vector<double> witness_payoffs;
  double deviation;
};

/// Layer decomposition asked for on an act with a strictly positive entry.
class PositiveEntryError : public Error {
 public:
  using Error::Error;
};

/// Certainty-equivalent triple implies a non-positive loss-aversion
/// coefficient: the data refutes the model rather than leaving it open.
class InconsistentTripleError : public Error {
 public:
  InconsistentTripleError(std::string message, double lambda)
      : Error(std::move(message)), lambda(lambda) {}
  double lambda;
};

class OverlappingSupportsError : public Error {
 public:
  using Error::Error;
};

class WrongSignError : public Error {
 public:
  using Error::Error;
};

}  // namespace cptkit

#endif
