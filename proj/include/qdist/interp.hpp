#pragma once

#include "qdist/matrix.hpp"
#include "qdist/poly.hpp"

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <utility>

namespace qdist {

/// The k-th node of the default sequence 0, 1, -1, 2, -2, ...
Scalar small_node(std::size_t k);

/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
UniPoly interpolate(std::span<const Scalar> nodes, std::span<const Scalar> values, const std::string& var = "x");

struct RationalFunction {
    UniPoly numerator;
    UniPoly denominator;  ///< monic
};

/// Cauchy interpolation by the extended Euclidean algorithm: returns P/Q
/// through all points, choosing the remainder step with the largest quotient
/// degree. Requires that jump to be at least `margin`, which is the number of
/// data points beyond deg P + deg Q + 1 that the answer is consistent with.
std::optional<RationalFunction> reconstruct_rational(std::span<const Scalar> nodes, std::span<const Scalar> values,
                                                     std::size_t margin, const std::string& var = "x");

/// Grid interpolation: values[i][j] at (xs[i], ys[j]).
BiPoly interpolate_grid(std::span<const Scalar> xs, std::span<const Scalar> ys,
                        const std::vector<std::vector<Scalar>>& values);

using MatrixPencil1 = std::function<MatrixQ(const Scalar&)>;
using MatrixPencil2 = std::function<MatrixQ(const Scalar&, const Scalar&)>;

/// det(entries(x)) as a polynomial, given an upper bound on its degree.
UniPoly determinant_poly(const MatrixPencil1& entries, std::size_t degree_bound, const std::string& var = "x");

/// det(entries(x1, x2)) as a bivariate polynomial, given per-variable degree bounds.
BiPoly determinant_bipoly(const MatrixPencil2& entries, std::size_t bound_x1, std::size_t bound_x2);

/// det(entries(main, param)) as a polynomial in `main` with coefficients in
/// `param`, given per-variable degree bounds.
ParamPoly determinant_param(const MatrixPencil2& entries, std::size_t bound_main, std::size_t bound_param,
                            const std::string& main_var, const std::string& param_var);

}  // namespace qdist
