#pragma once

#include <stdexcept>
#include <string>

namespace melonic {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A transverse integral was requested on a term that does not decay fast
/// enough (fullpow <= 1) and is not the subtracted free propagator.
class DivergentIntegral : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A series term does not fit any slot of the closed-form ansatz.
class ShapeMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exact 2-point function left the real, positive-denominator region.
class EvaluationDomain : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two points of a tuple share a coordinate of the same colour.
class CoincidentCoordinates : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace melonic
