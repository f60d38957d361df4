#pragma once

#include <stdexcept>
#include <string>

namespace chebfact {

// Exact division was requested but the divisor does not divide the dividend
// over the coefficient ring. Signals a logic error upstream, never rounds.
struct NotDivisible : std::domain_error {
    explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

// An operation that is undefined for the zero polynomial received one.
struct ZeroPolynomial : std::invalid_argument {
    explicit ZeroPolynomial(const std::string& what) : std::invalid_argument(what) {}
};

// A recurrence coefficient has a vanishing denominator for the requested
// parameters. Unreachable for the supported families; guards misuse.
struct DenominatorZero : std::domain_error {
    explicit DenominatorZero(const std::string& what) : std::domain_error(what) {}
};

// An internal algebraic self-check failed (e.g. a cyclotomic polynomial that
// should be palindromic is not). Indicates a bug, not bad input.
struct InternalInconsistency : std::logic_error {
    explicit InternalInconsistency(const std::string& what) : std::logic_error(what) {}
};

// A caller violated a documented precondition.
struct PreconditionViolation : std::invalid_argument {
    explicit PreconditionViolation(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace chebfact
