#pragma once

#include "qdist/discrim.hpp"
#include "qdist/matrix.hpp"
#include "qdist/poly.hpp"
#include "qdist/realroots.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qdist {

/// X^T A X + 2 B^T X - 1 = 0
struct Quadric {
    MatrixQ A;
    VectorQ B;

    Quadric() = default;
    /// Throws DomainError unless A is square, symmetric and matches B.
    Quadric(MatrixQ a, VectorQ b);

    std::size_t dim() const { return B.dim(); }
    /// Left-hand side at x.
    Scalar value(const VectorQ& x) const;
    /// [[A, B], [B^T, -1]]
    MatrixQ bordered() const;
};

/// Scales X^T A X + 2 B^T X + c = 0 by -1/c. Throws DomainError for c = 0.
Quadric normalize(const MatrixQ& A, const VectorQ& B, const Scalar& c);

/// C^T Y = H with C of full column rank.
struct LinearVariety {
    MatrixQ C;
    VectorQ H;
    MatrixQ G;  ///< C^T C

    LinearVariety() = default;
    /// H defaults to zero. Throws DomainError if C is rank deficient.
    explicit LinearVariety(MatrixQ c, std::optional<VectorQ> h = std::nullopt);

    std::size_t dim() const { return C.rows(); }
    std::size_t codim() const { return C.cols(); }
    /// C^T y - H
    VectorQ residual(const VectorQ& y) const;
};

struct IntersectionResult {
    bool intersects = false;
    /// bordered determinant (variety test); zero otherwise
    Scalar certificate;
    /// quadric pair tests: the polynomial whose real zero signs decided
    UniPoly phi;
    /// set when the decision falls outside the stated criterion, e.g. phi
    /// without real zeros
    bool flagged = false;
    std::string note;
};

struct PointPair {
    VectorQ x;  ///< on the first surface
    VectorQ y;  ///< on the second surface (or the variety, or the point itself)
};

struct NearestPoints {
    std::vector<PointPair> pairs;
    /// recovered Lagrange data: mu*, or lambda*, or (lambda1, lambda2), plus
    /// the variety multipliers when present
    std::vector<Scalar> multipliers;
};

// ---------------------------------------------------------------------
// Ellipsoid and linear variety

IntersectionResult variety_intersects(const Quadric& e, const LinearVariety& v);
/// Phi(mu, z): the bordered determinant with the last k rows multiplied by mu.
ParamPoly variety_pencil(const Quadric& e, const LinearVariety& v);
UniPoly variety_distance_poly(const Quadric& e, const LinearVariety& v);
/// Points for the critical value z_hat (a rational approximation).
NearestPoints variety_nearest_points(const Quadric& e, const LinearVariety& v, const Scalar& z_hat);

// ---------------------------------------------------------------------
// Point and ellipsoid

/// det([[A, B], [B^T, -1]] + mu [[-I, X0], [X0^T, z - X0^T X0]])
ParamPoly point_pencil(const Quadric& e, const VectorQ& x0);
/// Throws Degeneracy("point-on-surface") when x0 lies on the quadric.
UniPoly point_distance_poly(const Quadric& e, const VectorQ& x0);
/// D_z of the unnormalized point-pencil discriminant. No content is removed,
/// so the sign is comparable between points (the astroid sweep); x0 may lie
/// on the quadric.
Scalar point_discriminant_surface(const Quadric& e, const VectorQ& x0);
/// When the multiplier is an eigenvalue of A (a multiple zero of F), the two
/// symmetric critical points are returned, or Degeneracy("complex-points").
NearestPoints point_nearest_points(const Quadric& e, const VectorQ& x0, const Scalar& z_hat, int bits = 128);

// ---------------------------------------------------------------------
// Two quadrics centred at the origin

bool centered_intersects(const Quadric& q1, const Quadric& q2);
/// G(lambda, z) = det(lambda A1 + (z - lambda) A2 - lambda (z - lambda) A1 A2)
ParamPoly centered_pencil(const Quadric& q1, const Quadric& q2);
/// Primitive D_lambda(G), the factor z^(n(n-1)) included.
UniPoly centered_distance_poly(const Quadric& q1, const Quadric& q2);

// ---------------------------------------------------------------------
// Two general quadrics

/// Phi(z) = D_lambda(det([[A2, B2], [B2^T, -1 - z]] - lambda [[A1, B1], [B1^T, -1]])).
IntersectionResult general_intersects(const Quadric& q1, const Quadric& q2);
/// The (mu1, mu2) polynomial whose bivariate discriminant gives F(z).
BiPoly general_pencil(const Quadric& q1, const Quadric& q2, const Scalar& z);
UniPoly general_distance_poly(const Quadric& q1, const Quadric& q2);

enum class PairMode { Centered, General };

/// Centered: both sign choices of the normalized pair. General: one pair.
NearestPoints nearest_points_quadrics(const Quadric& q1, const Quadric& q2, const Scalar& z_hat, PairMode mode,
                                      int bits = 128);

// ---------------------------------------------------------------------
// Orchestration

struct DistanceReport {
    /// primitive distance polynomial (extraneous z powers included)
    UniPoly F;
    /// multiplicity of the root z = 0 in F, split off before root selection
    std::size_t z_power = 0;
    bool intersecting = false;
    /// intersection test data
    IntersectionResult intersection;
    std::vector<PositiveZero> positive_zeros;
    bool has_value = false;
    Scalar z_star;
    Scalar d;
    bool simple = true;
    /// next simple zero when the minimal one is multiple and unrecoverable
    std::optional<Scalar> candidate_z;
    NearestPoints points;
    /// maximum absolute residuals: first surface, second surface, distance
    std::vector<Scalar> residuals;
    std::vector<std::string> warnings;
    int bits = 128;
};

DistanceReport solve_point(const Quadric& e, const VectorQ& x0, int bits = 128);
DistanceReport solve_variety(const Quadric& e, const LinearVariety& v, int bits = 128);
DistanceReport solve_centered(const Quadric& q1, const Quadric& q2, int bits = 128);
DistanceReport solve_general(const Quadric& q1, const Quadric& q2, int bits = 128);

}  // namespace qdist
