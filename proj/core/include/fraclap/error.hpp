#pragma once

#include <stdexcept>
#include <string>

namespace fraclap {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// The far-field tail of the singular integral diverges for the given order.
class NonIntegrableTail : public Error {
 public:
  using Error::Error;
};

/// A non-smooth point of the integrand lies inside the near-field ball.
class NonSmoothEvaluationPoint : public Error {
 public:
  using Error::Error;
};

class EvaluationAtOrigin : public Error {
 public:
  using Error::Error;
};

class CalibrationFailed : public Error {
 public:
  using Error::Error;
};

class SingularSystem : public Error {
 public:
  using Error::Error;
};

class ReferenceUnavailable : public Error {
 public:
  using Error::Error;
};

class GridTooCoarse : public Error {
 public:
  using Error::Error;
};

}  // namespace fraclap
