#pragma once

#include <stdexcept>
#include <string>

namespace eoms {

/// Base class for every failure raised by the simulation pipeline.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Rejected user input: malformed configuration, unknown key, out-of-range value.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The iterative eigensolver exhausted its iteration budget.
class EigenFailure : public Error {
public:
    using Error::Error;
};

/// A pivot fell below the rank-deficiency threshold during an LU solve.
class SingularSystem : public Error {
public:
    using Error::Error;
};

/// The mean-field amplitude formula is evaluated at or beyond the parametric threshold.
class ParametricSingularity : public Error {
public:
    using Error::Error;
};

/// Self-consistent detuning iteration did not settle.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Covariance requested for a drift matrix with a non-negative spectral abscissa.
class Unstable : public Error {
public:
    using Error::Error;
};

/// A residual contangle is negative beyond round-off.
class MonogamyViolation : public Error {
public:
    using Error::Error;
};

class UnknownPreset : public Error {
public:
    using Error::Error;
};

}  // namespace eoms
