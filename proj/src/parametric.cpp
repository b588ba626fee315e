#include "qdist/parametric.hpp"

#include "qdist/interp.hpp"

#include <algorithm>

namespace qdist {

namespace {

long max_degree(const std::vector<UniPoly>& ps) {
    long d = 0;
    for (const auto& p : ps) d = std::max(d, p.degree());
    return d;
}

// sum |c_kj| |z|^k |t|^j, the scale against which F(z, t) is measured.
Scalar abs_eval(const ParamPoly& F, const Scalar& z, const Scalar& t) {
    Scalar acc = 0, tp = 1;
    const Scalar az = abs(z), at = abs(t);
    for (long j = 0; j <= F.degree(); ++j) {
        Scalar zp = 1, s = 0;
        for (const auto& c : F[static_cast<std::size_t>(j)].coefficients()) {
            s += abs(c) * zp;
            zp *= az;
        }
        acc += s * tp;
        tp *= at;
    }
    return acc;
}

Scalar relative(const Scalar& value, const Scalar& scale) { return scale == 0 ? Scalar(abs(value)) : Scalar(abs(value) / scale); }

// Point-to-member report in the original coordinates.
DistanceReport member_report(const QuadricFamily& fam, const Scalar& t, const VectorQ& x0, int bits) {
    const Quadric q = fam.member_about(t, x0);
    DistanceReport r = solve_point(q, VectorQ(fam.dim()), bits);
    for (auto& p : r.points.pairs) {
        p.x = p.x + x0;
        p.y = x0;
    }
    return r;
}

}  // namespace

QuadricFamily::QuadricFamily(std::vector<std::vector<UniPoly>> a, std::vector<UniPoly> b, UniPoly c_,
                             std::optional<Scalar> lo_, std::optional<Scalar> hi_)
    : A(std::move(a)), B(std::move(b)), c(std::move(c_)), lo(std::move(lo_)), hi(std::move(hi_)) {
    const std::size_t n = B.size();
    if (n == 0 || A.size() != n) throw DomainError("family: A(t) and B(t) sizes differ");
    for (std::size_t i = 0; i < n; ++i) {
        if (A[i].size() != n) throw DomainError("family: A(t) is not square");
        for (std::size_t j = 0; j < i; ++j)
            if (A[i][j] != A[j][i]) throw DomainError("family: A(t) is not symmetric");
    }
    if (lo && hi && *lo > *hi) throw DomainError("family: empty parameter interval");
    auto rename = [](UniPoly& p) { p = p.with_var("t"); };
    for (auto& row : A)
        for (auto& p : row) rename(p);
    for (auto& p : B) rename(p);
    rename(c);
}

MatrixQ QuadricFamily::A_at(const Scalar& t) const {
    const std::size_t n = dim();
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = A[i][j].eval(t);
    return m;
}

VectorQ QuadricFamily::B_at(const Scalar& t) const {
    VectorQ v(dim());
    for (std::size_t i = 0; i < dim(); ++i) v[i] = B[i].eval(t);
    return v;
}

MatrixQ QuadricFamily::bordered_at(const Scalar& t) const {
    const std::size_t n = dim();
    MatrixQ m(n + 1, n + 1);
    m.set_block(0, 0, A_at(t));
    const VectorQ b = B_at(t);
    for (std::size_t i = 0; i < n; ++i) m(i, n) = m(n, i) = b[i];
    m(n, n) = c.eval(t);
    return m;
}

Scalar QuadricFamily::value(const VectorQ& x, const Scalar& t) const {
    return dot(x, A_at(t) * x) + 2 * dot(B_at(t), x) + c.eval(t);
}

UniPoly QuadricFamily::value_poly(const VectorQ& x) const {
    UniPoly v = c;
    for (std::size_t i = 0; i < dim(); ++i) {
        v += (2 * x[i]) * B[i];
        for (std::size_t j = 0; j < dim(); ++j) v += (x[i] * x[j]) * A[i][j];
    }
    return v;
}

Quadric QuadricFamily::member_about(const Scalar& t, const VectorQ& x0) const {
    const MatrixQ a = A_at(t);
    const Scalar v = value(x0, t);
    if (v == 0) throw Degeneracy("point-on-surface", "the point lies on a member of the family");
    return normalize(a, a * x0 + B_at(t), v);
}

long QuadricFamily::param_degree() const {
    long d = std::max(max_degree(B), c.degree());
    for (const auto& row : A) d = std::max(d, max_degree(row));
    return d;
}

FamilyPolys family_distance_poly(const QuadricFamily& fam, const VectorQ& x0) {
    const std::size_t n = fam.dim();
    if (x0.dim() != n) throw DomainError("dimension mismatch between family and point");
    long dA = 0;
    for (const auto& row : fam.A) dA = std::max(dA, max_degree(row));
    const long dB = std::max(max_degree(fam.B), 0L), dc = std::max(fam.c.degree(), 0L);
    const long row_degree = static_cast<long>(n) * std::max(dA, dB) + std::max(dB, dc);
    const std::size_t bound = static_cast<std::size_t>(2 * static_cast<long>(n) * row_degree);

    const Scalar xx = dot(x0, x0);
    auto F_at = [&](const Scalar& t) {
        const MatrixQ bord = fam.bordered_at(t);
        const ParamPoly phi = determinant_param(
            [&](const Scalar& mu, const Scalar& z) {
                MatrixQ m = bord;
                for (std::size_t i = 0; i < n; ++i) {
                    m(i, i) -= mu;
                    m(i, n) += mu * x0[i];
                    m(n, i) += mu * x0[i];
                }
                m(n, n) += mu * (z - xx);
                return m;
            },
            n + 1, 1, "mu", "z");
        return discriminant_in_main(phi);
    };

    std::vector<Scalar> nodes;
    std::vector<UniPoly> values;
    for (std::size_t k = 0; k < bound + 1 + 3; ++k) {
        nodes.push_back(small_node(k));
        values.push_back(F_at(nodes.back()));
    }
    long zdeg = 0;
    for (const auto& v : values) zdeg = std::max(zdeg, v.degree());
    // grid[k] = coefficient of z^k as a polynomial in t
    std::vector<UniPoly> grid;
    const std::span<const Scalar> ns(nodes);
    for (long k = 0; k <= zdeg; ++k) {
        std::vector<Scalar> col;
        for (const auto& v : values) col.push_back(v[static_cast<std::size_t>(k)]);
        grid.push_back(interpolate(ns.first(bound + 1), std::span<const Scalar>(col).first(bound + 1), "t"));
        for (std::size_t i = bound + 1; i < nodes.size(); ++i)
            if (grid.back().eval(nodes[i]) != col[i])
                throw Degeneracy("interpolation-verification", "F(z, t) interpolation failed verification");
    }
    // factors of F depending on t alone carry no distance values
    UniPoly content;
    for (const auto& g : grid) content = gcd(content, g);
    if (content.degree() > 0)
        for (auto& g : grid) g = exact_quotient(g, content);
    long tdeg = 0;
    for (const auto& g : grid) tdeg = std::max(tdeg, g.degree());
    std::vector<UniPoly> coeffs;
    for (long j = 0; j <= tdeg; ++j) {
        std::vector<Scalar> zc;
        for (const auto& g : grid) zc.push_back(g[static_cast<std::size_t>(j)]);
        coeffs.emplace_back(std::move(zc), "z");
    }

    FamilyPolys out;
    out.F = ParamPoly(std::move(coeffs), "t", "z");
    if (out.F.degree() < 2) {
        out.degenerate = true;
        out.interior = UniPoly({}, "z");
    } else {
        out.interior = content_primitive(discriminant_in_main(out.F)).second;
    }
    if (fam.lo) out.at_lo = content_primitive(out.F.eval_main(*fam.lo)).second;
    if (fam.hi) out.at_hi = content_primitive(out.F.eval_main(*fam.hi)).second;
    return out;
}

std::optional<Scalar> family_touching(const QuadricFamily& fam, const VectorQ& x0, int bits) {
    const UniPoly v = fam.value_poly(x0);
    if (v.is_zero()) return fam.lo ? *fam.lo : fam.hi ? *fam.hi : Scalar(0);
    if (v.degree() == 0) return std::nullopt;
    for (const auto& iv : isolate_real_roots(v)) {
        if (fam.lo && iv.hi < *fam.lo) continue;
        if (fam.hi && iv.lo > *fam.hi) continue;
        const Scalar t = iv.exact() ? iv.lo : refine(iv, v, bits);
        if (fam.contains(t)) return t;
    }
    return std::nullopt;
}

FamilyReport family_solve(const QuadricFamily& fam, const VectorQ& x0, int bits) {
    const std::size_t n = fam.dim();
    if (x0.dim() != n) throw DomainError("dimension mismatch between family and point");
    FamilyReport r;
    r.bits = bits;

    std::vector<Scalar> samples;
    if (fam.lo) samples.push_back(*fam.lo);
    if (fam.hi) samples.push_back(*fam.hi);
    if (fam.lo && fam.hi) samples.push_back((*fam.lo + *fam.hi) / 2);
    for (std::size_t k = 0; k < 7; ++k)
        if (fam.contains(small_node(k))) samples.push_back(small_node(k));
    for (const auto& t : samples)
        if (!is_sign_definite(definiteness(fam.A_at(t))))
            throw Degeneracy("not-sign-definite", "family member at t = " + to_string(t) + " is not an ellipsoid");

    const auto touch = family_touching(fam, x0, bits);
    if (touch) {
        r.touching = true;
        r.has_value = true;
        r.z_star = 0;
        r.d = 0;
        r.t_star = touch;
        r.branch = "touching";
        r.member.bits = bits;
        r.member.intersecting = true;
        r.member.has_value = true;
        r.member.points.pairs.push_back({x0, x0});
        return r;
    }

    r.polys = family_distance_poly(fam, x0);
    const Scalar tol = pow2(-(bits / 2));

    std::optional<std::size_t> best;
    auto consider = [&](FamilyCandidate c) {
        r.candidates.push_back(std::move(c));
        const auto& added = r.candidates.back();
        if (added.accepted && (!best || added.z < r.candidates[*best].z)) best = r.candidates.size() - 1;
    };
    auto endpoint = [&](const Scalar& t, const std::string& branch) {
        FamilyCandidate c;
        c.branch = branch;
        c.t = t;
        try {
            const DistanceReport m = member_report(fam, t, x0, bits);
            c.z = m.candidate_z ? *m.candidate_z : m.z_star;
            c.accepted = m.has_value;
        } catch (const Degeneracy& e) {
            c.note = e.reason();
        }
        consider(std::move(c));
    };
    if (r.polys.degenerate) {
        r.warnings.push_back("F(z, t) has t-degree below 2: no interior stationary values");
        if (r.polys.F.degree() == 0) {
            endpoint(fam.lo ? *fam.lo : fam.hi ? *fam.hi : Scalar(0), "constant");
            r.candidates.back().t.reset();
        }
    }
    if (fam.lo) endpoint(*fam.lo, "lower");
    if (fam.hi) endpoint(*fam.hi, "upper");

    if (!r.polys.degenerate) {
        const UniPoly core = r.polys.interior.strip_trailing_zeros();
        std::vector<Scalar> zs;
        if (core.degree() >= 1)
            for (const auto& f : squarefree_decomposition(core)) {
                if (f.degree() < 1) continue;
                for (const auto& z : positive_zeros(f, bits)) zs.push_back(z.value);
            }
        std::sort(zs.begin(), zs.end());
        for (const auto& z : zs) {
            if (best && z > r.candidates[*best].z) break;
            FamilyCandidate c;
            c.branch = "interior";
            c.z = z;
            try {
                const UniPoly ft = r.polys.F.eval_param(z);
                const Scalar t = multiple_zero_uni(bezout_matrix(ft), false);
                c.t = t;
                c.residual_F = relative(r.polys.F.eval(t, z), abs_eval(r.polys.F, z, t));
                const ParamPoly dF = r.polys.F.derivative_main();
                c.residual_Ft = relative(dF.eval(t, z), abs_eval(dF, z, t));
                if (!fam.contains(t)) {
                    c.note = "stationary parameter outside the interval";
                } else {
                    const DistanceReport m = member_report(fam, t, x0, bits);
                    if (m.has_value && abs(m.z_star - z) <= tol * std::max(Scalar(1), z)) {
                        c.accepted = true;
                    } else {
                        c.note = "not the distance of the member at the stationary parameter";
                    }
                }
            } catch (const Degeneracy& e) {
                c.note = e.reason();
            }
            const bool accepted = c.accepted;
            consider(std::move(c));
            if (accepted) break;
        }
    }
    if (!best) throw Degeneracy("no-positive-root", "no branch of the family yields a positive distance");

    const FamilyCandidate& w = r.candidates[*best];
    r.has_value = true;
    r.z_star = w.z;
    r.d = sqrt_approx(w.z, bits);
    r.t_star = w.t;
    r.branch = w.branch;
    r.member = member_report(fam, w.t ? *w.t : (fam.lo ? *fam.lo : fam.hi ? *fam.hi : Scalar(0)), x0, bits);
    if (w.branch == "interior" && w.residual_Ft > pow2(-(bits / 4)))
        r.warnings.push_back("stationarity residual above tolerance");
    return r;
}

}  // namespace qdist
