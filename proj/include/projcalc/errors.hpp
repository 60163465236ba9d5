#pragma once

#include <stdexcept>
#include <string>

namespace projcalc {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class NotAProjection : public Error {
 public:
  using Error::Error;
};

class NotIdempotent : public Error {
 public:
  using Error::Error;
};

// Raised when a decomposition fails or produces non-finite output.
class BackendFailure : public Error {
 public:
  using Error::Error;
};

// Part of the abstract ring contract: an element may lack an MP inverse.
// The matrix backends never raise it since every matrix over a field has one.
class MpInverseUnavailable : public Error {
 public:
  using Error::Error;
};

class UnknownStatement : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace projcalc
