#pragma once

#include <stdexcept>
#include <string>

namespace bohr {

/// A parameter lies outside the domain an operation accepts
/// (nonpositive beta, |alpha| >= 1, r outside (0,1), ...).
class DomainError : public std::invalid_argument {
public:
    explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// A coefficient sequence is too short for the requested order, or a tail
/// budget cannot be met within the term cap.
class TruncationError : public std::runtime_error {
public:
    explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

/// Input violates a structural precondition (e.g. nonzero leading
/// coefficients where an m-fold zero at the origin is required).
class PreconditionError : public std::invalid_argument {
public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// An iterative procedure (quadrature, bracketing, bisection) did not
/// produce a certified answer.
class ConvergenceError : public std::runtime_error {
public:
    explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bohr
