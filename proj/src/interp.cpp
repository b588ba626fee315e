#include "qdist/interp.hpp"

namespace qdist {

Scalar small_node(std::size_t k) {
    if (k == 0) return Scalar(0);
    const long m = static_cast<long>((k + 1) / 2);
    return Scalar((k % 2) ? m : -m);
}

UniPoly interpolate(std::span<const Scalar> nodes, std::span<const Scalar> values, const std::string& var) {
    if (nodes.size() != values.size()) throw DomainError("interpolation: node/value count mismatch");
    const std::size_t n = nodes.size();
    // Newton divided differences.
    std::vector<Scalar> dd(values.begin(), values.end());
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            const Scalar den = nodes[i] - nodes[i - j];
            if (den == 0) throw DomainError("interpolation: repeated node");
            dd[i] = (dd[i] - dd[i - 1]) / den;
            if (i == j) break;
        }
    UniPoly p({}, var);
    for (std::size_t k = n; k-- > 0;) {
        p = p * UniPoly({-nodes[k], Scalar(1)}, var);
        p += UniPoly::constant(dd[k], var);
    }
    return p;
}

std::optional<RationalFunction> reconstruct_rational(std::span<const Scalar> nodes, std::span<const Scalar> values,
                                                     std::size_t margin, const std::string& var) {
    const UniPoly interp = interpolate(nodes, values, var);
    UniPoly m = UniPoly::from_roots(nodes, var);
    const long K = static_cast<long>(nodes.size());

    UniPoly r0 = m, r1 = interp;
    UniPoly t0({}, var), t1 = UniPoly::constant(1, var);
    long best_jump = -1;
    UniPoly best_r, best_t;
    // Step 1 (r1 = interp, t1 = 1) has jump K - deg interp.
    if (!r1.is_zero()) {
        best_jump = K - r1.degree();
        best_r = r1;
        best_t = t1;
    } else {
        return RationalFunction{UniPoly({}, var), UniPoly::constant(1, var)};
    }
    while (!r1.is_zero()) {
        auto [q, r] = divrem(r0, r1);
        UniPoly t = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
        if (r1.is_zero()) break;
        const long jump = r0.degree() - r1.degree();
        if (jump > best_jump) {
            best_jump = jump;
            best_r = r1;
            best_t = t1;
        }
    }
    if (best_jump < static_cast<long>(margin)) return std::nullopt;
    for (const auto& x : nodes)
        if (best_t.eval(x) == 0) return std::nullopt;
    const Scalar lc = best_t.lead();
    return RationalFunction{(1 / lc) * best_r, (1 / lc) * best_t};
}

BiPoly interpolate_grid(std::span<const Scalar> xs, std::span<const Scalar> ys,
                        const std::vector<std::vector<Scalar>>& values) {
    std::vector<UniPoly> in_y;
    in_y.reserve(xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) in_y.push_back(interpolate(ys, values[i], "x2"));
    std::vector<std::vector<Scalar>> grid(xs.size(), std::vector<Scalar>(ys.size()));
    for (std::size_t j = 0; j < ys.size(); ++j) {
        std::vector<Scalar> col;
        for (std::size_t i = 0; i < xs.size(); ++i) col.push_back(in_y[i][j]);
        const UniPoly px = interpolate(xs, col, "x1");
        for (std::size_t i = 0; i < xs.size(); ++i) grid[i][j] = px[i];
    }
    return BiPoly(std::move(grid));
}

UniPoly determinant_poly(const MatrixPencil1& entries, std::size_t degree_bound, const std::string& var) {
    std::vector<Scalar> nodes, values;
    for (std::size_t k = 0; k <= degree_bound; ++k) {
        nodes.push_back(small_node(k));
        values.push_back(determinant(entries(nodes.back())));
    }
    return interpolate(nodes, values, var);
}

BiPoly determinant_bipoly(const MatrixPencil2& entries, std::size_t bound_x1, std::size_t bound_x2) {
    std::vector<Scalar> xs, ys;
    for (std::size_t k = 0; k <= bound_x1; ++k) xs.push_back(small_node(k));
    for (std::size_t k = 0; k <= bound_x2; ++k) ys.push_back(small_node(k));
    std::vector<std::vector<Scalar>> values(xs.size(), std::vector<Scalar>(ys.size()));
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = 0; j < ys.size(); ++j) values[i][j] = determinant(entries(xs[i], ys[j]));
    return interpolate_grid(xs, ys, values);
}

ParamPoly determinant_param(const MatrixPencil2& entries, std::size_t bound_main, std::size_t bound_param,
                            const std::string& main_var, const std::string& param_var) {
    return determinant_bipoly(entries, bound_main, bound_param).to_param(main_var, param_var);
}

}  // namespace qdist
