#pragma once

#include <stdexcept>
#include <string>

namespace reslab {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on an argument (bad sizes, nonpositive step, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// A coefficient became NaN or infinite during a step.
class NonFiniteValue : public Error {
public:
    using Error::Error;
};

/// Fixed-point iteration hit its iteration cap.
class NoConvergence : public Error {
public:
    NoConvergence(int iterations, double residual)
        : Error("fixed-point iteration did not converge after " + std::to_string(iterations) +
                " iterations (residual " + std::to_string(residual) + ")"),
          iterations_(iterations), residual_(residual) {}

    int iterations() const noexcept { return iterations_; }
    double residual() const noexcept { return residual_; }

private:
    int iterations_;
    double residual_;
};

/// Request outside the implemented catalog (order r > 2, unknown polynomial shape, ...).
class Unsupported : public Error {
public:
    using Error::Error;
};

/// X^s_tau norms require zero-mean sequences.
class NonZeroMeanMode : public Error {
public:
    using Error::Error;
};

/// Regression input with nonpositive or non-finite entries.
class Degenerate : public Error {
public:
    using Error::Error;
};

}  // namespace reslab
