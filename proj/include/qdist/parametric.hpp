#pragma once

#include "qdist/metrics.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdist {

/// X^T A(t) X + 2 B(t)^T X + c(t) = 0 for t in [lo, hi]; a missing bound
/// means the interval is unbounded on that side.
struct QuadricFamily {
    std::vector<std::vector<UniPoly>> A;
    std::vector<UniPoly> B;
    UniPoly c;
    std::optional<Scalar> lo, hi;

    QuadricFamily() = default;
    /// Throws DomainError on shape mismatch, asymmetric A(t) or lo > hi.
    QuadricFamily(std::vector<std::vector<UniPoly>> a, std::vector<UniPoly> b, UniPoly c,
                  std::optional<Scalar> lo = std::nullopt, std::optional<Scalar> hi = std::nullopt);

    std::size_t dim() const { return B.size(); }
    bool contains(const Scalar& t) const { return (!lo || t >= *lo) && (!hi || t <= *hi); }
    MatrixQ A_at(const Scalar& t) const;
    VectorQ B_at(const Scalar& t) const;
    /// [[A(t), B(t)], [B(t)^T, c(t)]]
    MatrixQ bordered_at(const Scalar& t) const;
    /// Left-hand side at (x, t).
    Scalar value(const VectorQ& x, const Scalar& t) const;
    /// Left-hand side at x as a polynomial in t.
    UniPoly value_poly(const VectorQ& x) const;
    /// The member at t rewritten in coordinates centred at x0, normalized.
    /// Throws Degeneracy("point-on-surface") when x0 lies on it.
    Quadric member_about(const Scalar& t, const VectorQ& x0) const;
    /// Largest t-degree among the entries.
    long param_degree() const;
};

struct FamilyPolys {
    /// F(z, t) with t as main variable and z as parameter.
    ParamPoly F;
    /// D_t(F(z, t)), primitive; zero when F does not depend on t.
    UniPoly interior;
    std::optional<UniPoly> at_lo, at_hi;
    /// F independent of t (or linear in t): no interior stationary values.
    bool degenerate = false;
};

/// F(z, t) by interpolation in t of the point-to-member distance polynomials,
/// then its t-discriminant and the endpoint specializations.
FamilyPolys family_distance_poly(const QuadricFamily& fam, const VectorQ& x0);

struct FamilyCandidate {
    Scalar z;
    std::string branch;  ///< "interior", "lower", "upper" or "constant"
    std::optional<Scalar> t;
    bool accepted = false;
    std::string note;
    /// normalized |F(z, t)| and |dF/dt(z, t)| for interior candidates
    Scalar residual_F, residual_Ft;
};

struct FamilyReport {
    FamilyPolys polys;
    bool has_value = false;
    /// x0 lies on some member
    bool touching = false;
    Scalar z_star;
    Scalar d;
    std::optional<Scalar> t_star;
    std::string branch;
    /// point-to-member report at t_star in the original coordinates
    DistanceReport member;
    std::vector<FamilyCandidate> candidates;
    std::vector<std::string> warnings;
    int bits = 128;
};

/// A parameter value in the interval at which x0 lies on the member, if any.
std::optional<Scalar> family_touching(const QuadricFamily& fam, const VectorQ& x0, int bits = 128);

/// Minimum over the interior stationary values and the endpoint values of
/// the distance from x0 to the family members.
FamilyReport family_solve(const QuadricFamily& fam, const VectorQ& x0, int bits = 128);

}  // namespace qdist
