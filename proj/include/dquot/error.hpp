#pragma once

#include <stdexcept>
#include <string>

namespace dquot {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed user input (files, polynomial strings, flags).
class InputError : public Error {
 public:
  using Error::Error;
};

class ParseError : public InputError {
 public:
  using InputError::InputError;
};

/// A pipeline could not produce a result for well-formed input.
class ComputationError : public Error {
 public:
  using Error::Error;
};

#define DQUOT_DECLARE_ERROR(Name, Base) \
  class Name : public Base {            \
   public:                              \
    using Base::Base;                   \
  }

DQUOT_DECLARE_ERROR(NotContained, ComputationError);
DQUOT_DECLARE_ERROR(NotAnIdeal, ComputationError);
DQUOT_DECLARE_ERROR(NotAssociative, InputError);
DQUOT_DECLARE_ERROR(NotIdempotent, InputError);
DQUOT_DECLARE_ERROR(UnsupportedCharacteristic, ComputationError);
DQUOT_DECLARE_ERROR(DegreeBoundInsufficient, ComputationError);
DQUOT_DECLARE_ERROR(TooManyPaths, ComputationError);
DQUOT_DECLARE_ERROR(DimensionBlowup, ComputationError);
DQUOT_DECLARE_ERROR(WindowExceedsDepth, ComputationError);
DQUOT_DECLARE_ERROR(NotLocal, ComputationError);
DQUOT_DECLARE_ERROR(NoPeriodicityClass, ComputationError);
DQUOT_DECLARE_ERROR(NotIsolated, ComputationError);
DQUOT_DECLARE_ERROR(NoStabilization, ComputationError);
DQUOT_DECLARE_ERROR(ZeroPotential, InputError);
DQUOT_DECLARE_ERROR(ConstantTerm, InputError);
DQUOT_DECLARE_ERROR(InvalidFactorization, InputError);
DQUOT_DECLARE_ERROR(ImproperVertexSet, InputError);

#undef DQUOT_DECLARE_ERROR

}  // namespace dquot
