#pragma once

#include <stdexcept>
#include <string>

namespace funceq {

// Root of every error raised by the library. Callers that only need to
// distinguish "bad input" from "numerical failure" can catch the two
// intermediate classes below.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InputError : public Error {
public:
    using Error::Error;
};

class NumericalError : public Error {
public:
    using Error::Error;
};

class DomainError : public InputError {
public:
    using InputError::InputError;
};

class ShapeError : public InputError {
public:
    using InputError::InputError;
};

class PreconditionError : public InputError {
public:
    using InputError::InputError;
};

class ConstructionError : public InputError {
public:
    using InputError::InputError;
};

class SingularityError : public InputError {
public:
    using InputError::InputError;
};

/// A coefficient function produced a value outside [0,1] beyond tolerance.
class RangeError : public InputError {
public:
    using InputError::InputError;
};

class InvalidProbabilityError : public InputError {
public:
    using InputError::InputError;
};

/// Raised while evaluating a coefficient or expression; carries the abscissa.
class EvaluationError : public NumericalError {
public:
    EvaluationError(const std::string& what, double x)
        : NumericalError(what), x_(x) {}
    double x() const noexcept { return x_; }

private:
    double x_;
};

class DegenerateFitError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class OptimizationError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

class ReliabilityError : public NumericalError {
public:
    using NumericalError::NumericalError;
};

}  // namespace funceq
