#pragma once

#include "qdist/poly.hpp"

#include <vector>

namespace qdist {

/// Interval [lo, hi] holding exactly one distinct real root. lo == hi means
/// the root is the rational lo itself.
struct IsolatingInterval {
    Scalar lo;
    Scalar hi;
    unsigned multiplicity = 1;

    bool exact() const { return lo == hi; }
    Scalar midpoint() const { return (lo + hi) / 2; }
    Scalar width() const { return hi - lo; }
};

/// Sturm chain p, p', -rem(...), ... with each member rescaled by a positive
/// rational to a primitive integer polynomial.
std::vector<UniPoly> sturm_sequence(const UniPoly& p);

/// Number of real roots of p in (a, b], for a < b and p square-free.
std::size_t sturm_count(const std::vector<UniPoly>& chain, const Scalar& a, const Scalar& b);

/// Number of distinct real roots of p.
std::size_t count_real_roots(const UniPoly& p);

/// Strict upper bound on the absolute value of every complex root.
Scalar cauchy_bound(const UniPoly& p);

/// One interval per distinct real root, sorted ascending, with multiplicities
/// from the square-free decomposition. Rational roots whose simplest form lies
/// in the isolating interval are returned exactly.
std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p);

/// Narrows `iv` until its width is at most 2^-bits (or the root is found
/// exactly). Successive calls with growing bits return nested intervals.
IsolatingInterval refine_interval(const IsolatingInterval& iv, const UniPoly& p, int bits);

/// Rational within 2^-bits of the root isolated by `iv`.
Scalar refine(const IsolatingInterval& iv, const UniPoly& p, int bits);

struct PositiveZero {
    Scalar value;  ///< approximation, exact when interval.exact()
    bool is_simple = true;
    unsigned multiplicity = 1;
    IsolatingInterval interval;
};

/// All positive real roots, ascending, refined to `bits`.
std::vector<PositiveZero> positive_zeros(const UniPoly& p, int bits);

/// Smallest positive real root; throws Degeneracy("no-positive-root") if none.
PositiveZero min_positive_zero(const UniPoly& p, int bits = 128);

enum class RootSigns { AllPositive, AllNegative, MixedOrZero, None };

const char* to_string(RootSigns s);

RootSigns real_root_signs(const UniPoly& p);

struct RootSignCounts {
    std::size_t positive = 0;  ///< distinct positive roots
    std::size_t negative = 0;  ///< distinct negative roots
    std::size_t zero = 0;      ///< multiplicity of the root 0
};

RootSignCounts count_root_signs(const UniPoly& p);

}  // namespace qdist
