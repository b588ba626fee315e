#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qdist {

/// Arbitrary-precision rational; the coefficient field for everything in the library.
using Scalar = mpq_class;
using Integer = mpz_class;

/// Bad input shape or arguments (non-square matrix, zero polynomial, ...).
class DomainError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A mathematically degenerate configuration. `reason()` is a stable
/// machine-readable token, `what()` a human message.
class Degeneracy : public std::runtime_error {
public:
    Degeneracy(std::string reason, const std::string& message)
        : std::runtime_error(message), reason_(std::move(reason)) {}

    const std::string& reason() const noexcept { return reason_; }

private:
    std::string reason_;
};

/// Singular matrix in a linear solve.
class SingularMatrix : public Degeneracy {
public:
    explicit SingularMatrix(const std::string& message)
        : Degeneracy("singular-matrix", message) {}
};

/// Parses "p", "p/q", "-p/q" or a plain decimal such as "0.125" exactly.
Scalar parse_scalar(std::string_view text);

/// "p/q" (or "p" when the denominator is one).
std::string to_string(const Scalar& value);

/// Decimal rendering with `digits` significant digits.
std::string to_decimal(const Scalar& value, int digits = 20);

double to_double(const Scalar& value);

/// Rational approximation of sqrt(value) with absolute error below 2^-bits.
/// Throws DomainError for negative input.
Scalar sqrt_approx(const Scalar& value, int bits);

/// Simplest rational (smallest denominator) in the closed interval [lo, hi].
Scalar simplest_between(const Scalar& lo, const Scalar& hi);

/// 2^e as a rational; e may be negative.
Scalar pow2(long e);

Scalar pow(const Scalar& base, unsigned long e);

inline int sign(const Scalar& v) { return sgn(v); }

inline Scalar abs_value(const Scalar& v) { return abs(v); }

}  // namespace qdist
