#pragma once

#include "qdist/matrix.hpp"
#include "qdist/poly.hpp"

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace qdist {

/// (power of x1, power of x2)
using Monomial = std::pair<unsigned, unsigned>;

/// Bezout-type matrix of remainders modulo the derivative (univariate) or
/// modulo the gradient ideal (bivariate), with the cofactors of its last row.
struct BezoutData {
    MatrixQ matrix;
    /// cofactor of entry (last row, j) for each column j
    std::vector<Scalar> last_row_cofactors;
    /// bivariate only: basis monomials, positions 0, 1, 2 hold 1, x1, x2
    std::vector<Monomial> monomial_basis;
    /// univariate source polynomial (empty in the bivariate case)
    UniPoly poly;
    /// bivariate source polynomial (empty in the univariate case)
    BiPoly bipoly;
    /// bivariate only: false when the fixed basis was dependent modulo the
    /// gradient ideal and a normal set was computed instead
    bool standard_basis = true;
    /// bivariate only: x1 and x2 expressed in the monomial basis
    std::vector<Scalar> x1_form, x2_form;

    std::size_t order() const { return matrix.rows(); }
    Scalar determinant() const;
};

/// Row l holds the coefficients of x^l g(x) mod g'(x), l = 0 .. N-2.
BezoutData bezout_matrix(const UniPoly& g);

/// N^N b0^(N-1) det B for g = b0 x^N + ...; equals Res(g, g') / b0.
Scalar discriminant_uni(const UniPoly& g);

/// The unique multiple root B[N-1,2] / B[N-1,1]. With `require_singular`
/// unset the determinant test is skipped, which is how the formula is applied
/// at a rational approximation of an algebraic parameter value.
Scalar multiple_zero_uni(const BezoutData& d, bool require_singular = true);

struct LinearRepresentation {
    UniPoly u;
    UniPoly v;
    Scalar det;  ///< det B, the value of v g + u g'
};

/// Polynomials with v g + u g' = det B (deg u <= N-1, deg v <= N-2).
LinearRepresentation linear_representation(const UniPoly& g);

/// The fixed basis {x1^j1 x2^j2 : j1 < N-1, j2 <= 2(N-j1-2)} with
/// 1, x1, x2 moved to the front; remaining monomials by (j1, j2).
std::vector<Monomial> gradient_quotient_basis(unsigned N);

/// Coefficients of m * g in the quotient basis modulo (dg/dx1, dg/dx2),
/// obtained from one dense linear solve. The basis is that of
/// bezout_matrix_biv(g); m must belong to it. Throws
/// Degeneracy("gradient-reduction") when no valid basis exists.
std::vector<Scalar> reduce_mod_gradient(const BiPoly& g, Monomial m);

/// Full bivariate Bezout matrix, one row per basis monomial. The fixed basis
/// above is tried first; when it is dependent modulo the gradient ideal, a
/// normal set is computed by graded elimination instead (fewer than (N-1)^2
/// monomials when some stationary points escape to infinity). `strict`
/// disables the fallback.
BezoutData bezout_matrix_biv(const BiPoly& g, bool strict = false);

/// det of the bivariate Bezout matrix: the product of g over its stationary points.
Scalar discriminant_biv(const BiPoly& g);

/// (lambda1, lambda2) = (B[N,2] / B[N,1], B[N,3] / B[N,1]), read through
/// x1_form and x2_form when the basis is not the fixed one.
std::pair<Scalar, Scalar> multiple_zero_biv(const BezoutData& d, bool require_singular = true);

/// det of the fixed-basis Bezout matrix computed modulo word-size primes and
/// recovered by rational reconstruction; much faster than the exact
/// elimination for N >= 4. Throws Degeneracy("gradient-reduction") when the
/// fixed basis is dependent.
Scalar discriminant_biv_modular(const BiPoly& g);

/// multiple_zero_biv through the same multimodular path, without the
/// singularity test (suited to a rational approximation of a parameter).
std::pair<Scalar, Scalar> multiple_zero_biv_modular(const BiPoly& g);

// ---------------------------------------------------------------------
// Discriminants whose input depends polynomially on a parameter.

/// D_main(p) as a polynomial in the parameter, by evaluation at rational
/// nodes and interpolation with the bound (2N-2) * deg_param, verified at
/// three extra nodes.
UniPoly discriminant_in_main(const ParamPoly& p);

struct RationalDiscriminant {
    UniPoly numerator;    ///< primitive integer polynomial
    UniPoly denominator;  ///< monic; 1 when the discriminant is polynomial
    std::size_t nodes_used = 0;
    /// generic multiplicity of the eigenvalue 0 of the Bezout matrix that was
    /// factored out (stationary points on g = 0 for every parameter value)
    std::size_t deflation = 0;
    /// computed in the chart of projective_chart
    bool projective = false;
};

inline const Scalar kChartA{3, 7};
inline const Scalar kChartB{-5, 11};

/// w^N g(u / w, v / w) with w = 1 - a u - b v for fixed a, b: moves the line
/// at infinity so stationary points escaping there become finite.
BiPoly projective_chart(const BiPoly& g);
/// (u, v) in that chart back to (x1, x2).
std::pair<Scalar, Scalar> from_projective_chart(const Scalar& u, const Scalar& v);

/// Multiple zero of g by exact elimination when the plain Bezout matrix is
/// unusable: stationary points that persist for every parameter value are
/// deflated through the characteristic polynomial, and stationary points at
/// infinity are handled in the projective chart. g comes from an
/// approximate parameter, so B is shifted by its eigenvalue nearest 0.
std::pair<Scalar, Scalar> multiple_zero_biv_deflated(const BiPoly& g, int bits = 128);

/// Bivariate discriminant of g_at(z) reconstructed as a rational function of
/// z whose numerator and denominator degrees sum to at most `degree_bound`.
/// Four surplus nodes verify the answer per prime; on failure the bound
/// doubles once. When the fixed basis fails at the nodes the computation is
/// repeated in a projective chart.
RationalDiscriminant discriminant_biv_in_param(const std::function<BiPoly(const Scalar&)>& g_at,
                                               std::size_t degree_bound, const std::string& var = "z");

}  // namespace qdist
