#pragma once

#include <stdexcept>
#include <string>

namespace pnr {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A (order, name) pair that is not in the built-in group catalog.
class CatalogMiss : public Error {
 public:
  using Error::Error;
};

/// Bad argument to an operation (zero where nonzero is required, non-prime-power order, ...).
class ArgumentError : public Error {
 public:
  using Error::Error;
};

/// Input data does not satisfy the axioms it claims to (tables, twists, documents).
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// Ferrero data that cannot produce a nearring (bad representative choice, non-fpf group).
class ConstructionError : public Error {
 public:
  using Error::Error;
};

/// A check that cannot be decided from the information available.
class IndeterminateError : public Error {
 public:
  using Error::Error;
};

/// Brute-force computation disagrees with a structural prediction.
class TheoremViolation : public Error {
 public:
  using Error::Error;
};

/// Malformed input document.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace pnr
