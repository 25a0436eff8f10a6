#ifndef PARCALC_ERRORS_HPP_
#define PARCALC_ERRORS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

namespace parcalc {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Input data failed structural validation (bad spec files, malformed
/// structures). The CLI maps these to exit code 2.
class ValidationError : public Error {
public:
    using Error::Error;
};

/// An operation was invoked outside its preconditions. The CLI maps these to
/// exit code 3.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// The "depends on" relation is not a strict partial order. Carries one
/// offending cycle, first element repeated at the end.
class CycleError : public ValidationError {
public:
    CycleError(const std::string& message, std::vector<std::string> cycle)
        : ValidationError(message), cycle_(std::move(cycle)) {}

    const std::vector<std::string>& cycle() const noexcept { return cycle_; }

private:
    std::vector<std::string> cycle_;
};

class UnknownElement : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class DuplicateElement : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Subproblem sizes do not add up to at least the parent size.
class SizeSumError : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A subproblem is at least as large as the problem it decomposes.
class SubproblemTooLarge : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// Refinement target and replacement decomposition do not match.
class TargetMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NotPowerOfTwo : public ValidationError {
public:
    using ValidationError::ValidationError;
};

/// A chunk count or column divisor does not divide evenly.
class IndivisibleError : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class UnboundSubproblem : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class UnknownOperator : public ValidationError {
public:
    using ValidationError::ValidationError;
};

class NotPerfectlyDecomposed : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class GranularityMismatch : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class NonUniformBeta : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

class RowOutOfRange : public PreconditionError {
public:
    using PreconditionError::PreconditionError;
};

/// Raised when a metrics report fails one of its internal cross-checks.
/// This always signals an implementation bug, never bad input.
class InternalIdentityViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace parcalc

#endif  // PARCALC_ERRORS_HPP_
