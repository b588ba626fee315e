#include "qdist/metrics.hpp"

#include "qdist/interp.hpp"

#include <algorithm>
#include <functional>

namespace qdist {

namespace {

void require_sign_definite(const MatrixQ& A, const char* what) {
    if (!is_sign_definite(definiteness(A)))
        throw Degeneracy("not-sign-definite", std::string(what) + " matrix is not sign-definite");
}

UniPoly primitive_or_throw(const UniPoly& F) {
    if (F.is_zero())
        throw Degeneracy("degenerate-discriminant", "distance polynomial vanishes identically");
    return content_primitive(F).second.with_var("z");
}

Scalar max_abs(const VectorQ& v) {
    Scalar m = 0;
    for (const auto& x : v.entries()) m = std::max(m, Scalar(abs(x)));
    return m;
}

Scalar squared_norm(const VectorQ& v) { return dot(v, v); }

VectorQ column_with_largest_norm(const MatrixQ& m, bool rows) {
    const std::size_t n = m.rows();
    VectorQ best;
    Scalar best_norm = 0;
    for (std::size_t k = 0; k < n; ++k) {
        VectorQ v = rows ? m.row(k) : m.col(k);
        const Scalar s = squared_norm(v);
        if (s > best_norm) {
            best_norm = s;
            best = std::move(v);
        }
    }
    if (best_norm == 0) throw Degeneracy("zero-adjugate", "adjugate vanishes: kernel has dimension above one");
    return best;
}

// Some nonzero vector of ker m (first free column of the echelon form).
VectorQ kernel_vector(MatrixQ m) {
    const auto pivots = row_reduce(m);
    std::size_t free = 0;
    while (free < pivots.size() && pivots[free] == free) ++free;
    if (free == m.cols()) throw Degeneracy("zero-kernel", "matrix is regular");
    VectorQ v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    return v;
}

}  // namespace

Quadric::Quadric(MatrixQ a, VectorQ b) : A(std::move(a)), B(std::move(b)) {
    if (!A.is_square() || A.rows() != B.dim() || B.dim() == 0)
        throw DomainError("quadric: A must be n x n and B of length n");
    if (!A.is_symmetric()) throw DomainError("quadric: A must be symmetric");
}

Scalar Quadric::value(const VectorQ& x) const { return dot(x, A * x) + 2 * dot(B, x) - 1; }

MatrixQ Quadric::bordered() const {
    const std::size_t n = dim();
    MatrixQ m(n + 1, n + 1);
    m.set_block(0, 0, A);
    for (std::size_t i = 0; i < n; ++i) m(i, n) = m(n, i) = B[i];
    m(n, n) = -1;
    return m;
}

Quadric normalize(const MatrixQ& A, const VectorQ& B, const Scalar& c) {
    if (c == 0) throw DomainError("quadric constant is zero: cannot normalize to -1");
    const Scalar s = -1 / c;
    return Quadric(s * A, s * B);
}

LinearVariety::LinearVariety(MatrixQ c, std::optional<VectorQ> h) : C(std::move(c)) {
    H = h ? *h : VectorQ(C.cols());
    if (H.dim() != C.cols()) throw DomainError("linear variety: H must have one entry per column of C");
    if (C.cols() == 0 || C.cols() > C.rows() || rank(C) != C.cols())
        throw DomainError("linear variety: C must have full column rank");
    G = C.transpose() * C;
}

VectorQ LinearVariety::residual(const VectorQ& y) const { return C.transpose() * y - H; }

// ---------------------------------------------------------------------

IntersectionResult variety_intersects(const Quadric& e, const LinearVariety& v) {
    const std::size_t n = e.dim(), k = v.codim();
    if (v.dim() != n) throw DomainError("dimension mismatch between quadric and variety");
    const Definiteness def = definiteness(e.A);
    if (!is_sign_definite(def)) throw Degeneracy("not-sign-definite", "ellipsoid matrix is not sign-definite");
    MatrixQ m(n + 1 + k, n + 1 + k);
    m.set_block(0, 0, e.bordered());
    m.set_block(0, n + 1, v.C);
    m.set_block(n + 1, 0, v.C.transpose());
    for (std::size_t j = 0; j < k; ++j) m(n, n + 1 + j) = m(n + 1 + j, n) = -v.H[j];
    IntersectionResult r;
    r.certificate = determinant(m);
    const bool odd = def == Definiteness::PositiveDefinite ? (k - 1) % 2 : n % 2;
    r.intersects = (odd ? -r.certificate : r.certificate) >= 0;
    return r;
}

ParamPoly variety_pencil(const Quadric& e, const LinearVariety& v) {
    const std::size_t n = e.dim(), k = v.codim();
    if (v.dim() != n) throw DomainError("dimension mismatch between quadric and variety");
    const MatrixQ Ct = v.C.transpose();
    if (v.G == MatrixQ::identity(k)) {
        // Schur complement of the identity block
        const MatrixQ CCt = v.C * Ct;
        const VectorQ CH = v.C * v.H;
        const Scalar HH = dot(v.H, v.H);
        return determinant_param(
            [&](const Scalar& mu, const Scalar& z) {
                MatrixQ m = e.bordered();
                m.set_block(0, 0, e.A - mu * CCt);
                for (std::size_t i = 0; i < n; ++i) m(i, n) = m(n, i) = e.B[i] + mu * CH[i];
                m(n, n) = -1 + mu * z - mu * HH;
                return m;
            },
            k + 1, 1, "mu", "z");
    }
    return determinant_param(
        [&](const Scalar& mu, const Scalar& z) {
            MatrixQ m(n + 1 + k, n + 1 + k);
            m.set_block(0, 0, e.bordered());
            m(n, n) = -1 + mu * z;
            m.set_block(0, n + 1, v.C);
            m.set_block(n + 1, 0, mu * Ct);
            m.set_block(n + 1, n + 1, v.G);
            for (std::size_t j = 0; j < k; ++j) {
                m(n, n + 1 + j) = -v.H[j];
                m(n + 1 + j, n) = -mu * v.H[j];
            }
            return m;
        },
        k + 1, 1, "mu", "z");
}

UniPoly variety_distance_poly(const Quadric& e, const LinearVariety& v) {
    return primitive_or_throw(discriminant_in_main(variety_pencil(e, v)));
}

NearestPoints variety_nearest_points(const Quadric& e, const LinearVariety& v, const Scalar& z_hat) {
    const UniPoly phi = variety_pencil(e, v).eval_param(z_hat);
    if (phi.degree() < 2) throw Degeneracy("degenerate-pencil", "pencil in mu has degree below two");
    const Scalar mu = multiple_zero_uni(bezout_matrix(phi), false);
    if (mu == 0) throw Degeneracy("degenerate-multiplier", "multiple zero mu* = 0");
    const MatrixQ Ainv = inverse(e.A);
    const MatrixQ Ct = v.C.transpose();
    const MatrixQ M = mu * (Ct * Ainv * v.C) - v.G;
    if (determinant(M) == 0) throw SingularMatrix("matrix M is singular at mu*");
    const VectorQ AinvB = Ainv * e.B;
    const VectorQ lam = solve_linear(M, Scalar(-2) * (Ct * AinvB + v.H));
    const VectorQ Clam = v.C * lam;
    const VectorQ X = -AinvB - (mu / 2) * (Ainv * Clam);
    const VectorQ Y = X + Scalar(1, 2) * Clam;
    NearestPoints out;
    out.pairs.push_back({X, Y});
    out.multipliers.push_back(mu);
    for (const auto& l : lam.entries()) out.multipliers.push_back(l);
    return out;
}

// ---------------------------------------------------------------------

ParamPoly point_pencil(const Quadric& e, const VectorQ& x0) {
    const std::size_t n = e.dim();
    if (x0.dim() != n) throw DomainError("dimension mismatch between quadric and point");
    const Scalar xx = dot(x0, x0);
    return determinant_param(
        [&](const Scalar& mu, const Scalar& z) {
            MatrixQ m = e.bordered();
            for (std::size_t i = 0; i < n; ++i) {
                m(i, i) -= mu;
                m(i, n) += mu * x0[i];
                m(n, i) += mu * x0[i];
            }
            m(n, n) += mu * (z - xx);
            return m;
        },
        n + 1, 1, "mu", "z");
}

UniPoly point_distance_poly(const Quadric& e, const VectorQ& x0) {
    if (e.value(x0) == 0) throw Degeneracy("point-on-surface", "the point lies on the quadric");
    return primitive_or_throw(discriminant_in_main(point_pencil(e, x0)));
}

Scalar point_discriminant_surface(const Quadric& e, const VectorQ& x0) {
    const UniPoly F = discriminant_in_main(point_pencil(e, x0));
    if (F.degree() < 2) return 0;
    return discriminant_uni(F);
}

NearestPoints point_nearest_points(const Quadric& e, const VectorQ& x0, const Scalar& z_hat, int bits) {
    const UniPoly phi = point_pencil(e, x0).eval_param(z_hat);
    const Scalar mu = multiple_zero_uni(bezout_matrix(phi), false);
    const std::size_t n = e.dim();
    const MatrixQ K = e.A - mu * MatrixQ::identity(n);
    const VectorQ rhs = -(e.B + mu * x0);
    NearestPoints out;
    out.multipliers.push_back(mu);
    if (determinant(K) != 0) {
        out.pairs.push_back({solve_linear(K, rhs), x0});
        return out;
    }
    // mu* is an eigenvalue: the critical points form a line Xp + t w cut by the quadric.
    MatrixQ aug(n, n + 1);
    aug.set_block(0, 0, K);
    for (std::size_t i = 0; i < n; ++i) aug(i, n) = rhs[i];
    const auto piv = row_reduce(aug);
    if (!piv.empty() && piv.back() == n) throw SingularMatrix("critical-point system is inconsistent");
    if (piv.size() + 1 != n) throw Degeneracy("non-unique-multiple-zero", "critical points form a family");
    std::vector<bool> is_piv(n, false);
    for (auto c : piv) is_piv[c] = true;
    const std::size_t free = static_cast<std::size_t>(std::find(is_piv.begin(), is_piv.end(), false) - is_piv.begin());
    VectorQ Xp(n), w(n);
    w[free] = 1;
    for (std::size_t r = 0; r < piv.size(); ++r) {
        Xp[piv[r]] = aug(r, n);
        w[piv[r]] = -aug(r, free);
    }
    const Scalar a = dot(w, e.A * w);
    const Scalar b = 2 * (dot(Xp, e.A * w) + dot(e.B, w));
    const Scalar c = e.value(Xp);
    const Scalar disc = b * b - 4 * a * c;
    if (a == 0 || disc < 0) throw Degeneracy("complex-points", "critical points on the quadric are not real");
    const Scalar root = sqrt_approx(disc, bits + 32);
    for (const Scalar& t : {Scalar((-b + root) / (2 * a)), Scalar((-b - root) / (2 * a))})
        out.pairs.push_back({Xp + t * w, x0});
    return out;
}

// ---------------------------------------------------------------------

bool centered_intersects(const Quadric& q1, const Quadric& q2) {
    if (!q1.B.is_zero() || !q2.B.is_zero()) throw DomainError("centered test needs B1 = B2 = 0");
    if (q1.dim() != q2.dim()) throw DomainError("dimension mismatch between quadrics");
    if (definiteness(q1.A) != Definiteness::PositiveDefinite)
        throw Degeneracy("not-sign-definite", "first centered quadric must be positive definite");
    return !is_sign_definite(definiteness(q1.A - q2.A));
}

ParamPoly centered_pencil(const Quadric& q1, const Quadric& q2) {
    const std::size_t n = q1.dim();
    if (q2.dim() != n) throw DomainError("dimension mismatch between quadrics");
    const MatrixQ A12 = q1.A * q2.A;
    return determinant_param(
        [&](const Scalar& l, const Scalar& z) { return l * q1.A + (z - l) * q2.A - (l * (z - l)) * A12; }, 2 * n,
        n, "lambda", "z");
}

namespace {

// Discriminant of the square-free part of G(lambda, z) in lambda, as a
// polynomial in z, for pencils that are perfect powers in lambda.
UniPoly squarefree_discriminant(const ParamPoly& G) {
    std::vector<Scalar> nodes, values;
    long degree = -1;
    for (std::size_t k = 1; k < 4096; ++k) {
        const Scalar z = small_node(k);
        const UniPoly s = gcd_squarefree(G.eval_param(z)).squarefree_part.monic();
        if (s.degree() < degree) continue;
        if (s.degree() > degree) {
            nodes.clear();
            values.clear();
            degree = s.degree();
        }
        if (degree < 2) continue;
        nodes.push_back(z);
        values.push_back(discriminant_uni(s));
        if (nodes.size() >= 8 && (nodes.size() & (nodes.size() - 1)) == 0)
            if (auto rf = reconstruct_rational(nodes, values, 4, "z")) return rf->numerator;
    }
    throw Degeneracy("degenerate-discriminant", "distance polynomial vanishes identically");
}

}  // namespace

UniPoly centered_distance_poly(const Quadric& q1, const Quadric& q2) {
    const ParamPoly G = centered_pencil(q1, q2);
    const UniPoly D = discriminant_in_main(G);
    return primitive_or_throw(D.is_zero() ? squarefree_discriminant(G) : D);
}

// ---------------------------------------------------------------------

namespace {

UniPoly intersection_poly(const Quadric& q1, const Quadric& q2) {
    const std::size_t n = q1.dim();
    const MatrixQ P1 = q1.bordered(), P2 = q2.bordered();
    const ParamPoly pencil = determinant_param(
        [&](const Scalar& l, const Scalar& z) {
            MatrixQ m = P2 - l * P1;
            m(n, n) -= z;
            return m;
        },
        n + 1, 1, "lambda", "z");
    const UniPoly phi = discriminant_in_main(pencil);
    if (phi.is_zero()) throw Degeneracy("degenerate-discriminant", "intersection polynomial vanishes identically");
    return content_primitive(phi).second.with_var("z");
}

}  // namespace

IntersectionResult general_intersects(const Quadric& q1, const Quadric& q2) {
    const std::size_t n = q1.dim();
    if (q2.dim() != n) throw DomainError("dimension mismatch between quadrics");
    require_sign_definite(q1.A, "first quadric");
    IntersectionResult r;
    if (q1.A == q2.A && q1.B == q2.B) {
        r.intersects = true;
        r.note = "identical surfaces";
        return r;
    }
    r.phi = intersection_poly(q1, q2);
    const RootSigns s = real_root_signs(r.phi);
    r.intersects = s == RootSigns::MixedOrZero;
    if (s == RootSigns::None) {
        r.flagged = true;
        r.note = "intersection polynomial has no real zeros; treated as non-intersecting";
    }
    // A repeated real zero may be the common value of a complex-conjugate
    // pair of critical points (symmetric pairs). A generic perturbation of
    // q2 turns such zeros non-real and keeps realized ones real.
    const Scalar delta = pow2(-16);
    if (r.intersects && r.phi[0] != 0 && gcd_squarefree(r.phi).gcd_with_derivative.degree() > 0 &&
        sturm_count(sturm_sequence(r.phi), -delta, delta) == 0) {
        const Scalar eps = pow2(-40);
        MatrixQ a = q2.A;
        VectorQ b = q2.B;
        for (std::size_t i = 0; i < n; ++i) {
            b[i] += eps * Scalar(static_cast<long>(i) + 1, 2 * static_cast<long>(i) + 3);
            for (std::size_t j = 0; j < n; ++j)
                a(i, j) += eps * Scalar(static_cast<long>(i + j) + 2, static_cast<long>(i * j) + 5);
        }
        const RootSigns sp = real_root_signs(intersection_poly(q1, Quadric(a, b)));
        if (sp != RootSigns::MixedOrZero) {
            r.intersects = false;
            r.flagged = true;
            r.note = "repeated zeros of the intersection polynomial are not realized; decided on a perturbed pair";
        }
    }
    return r;
}

BiPoly general_pencil(const Quadric& q1, const Quadric& q2, const Scalar& z) {
    const std::size_t n = q1.dim();
    if (q2.dim() != n) throw DomainError("dimension mismatch between quadrics");
    const MatrixQ P1 = q1.bordered(), P2 = q2.bordered();
    MatrixQ K(n + 1, n + 1);
    K.set_block(0, 0, q2.A * q1.A);
    const VectorQ A2B1 = q2.A * q1.B, A1B2 = q1.A * q2.B;
    for (std::size_t i = 0; i < n; ++i) {
        K(i, n) = A2B1[i];
        K(n, i) = A1B2[i];
    }
    K(n, n) = dot(q2.B, q1.B);
    return determinant_bipoly(
        [&](const Scalar& m1, const Scalar& m2) {
            MatrixQ m = m1 * P1 + m2 * P2 - K;
            m(n, n) += m1 * m2 * z;
            return m;
        },
        n + 1, n + 1);
}

UniPoly general_distance_poly(const Quadric& q1, const Quadric& q2) {
    const std::size_t n = q1.dim();
    const std::size_t bound = 2 * n * (n + 1) + 2 * n * n;
    const RationalDiscriminant rd =
        discriminant_biv_in_param([&](const Scalar& z) { return general_pencil(q1, q2, z); }, bound, "z");
    return primitive_or_throw(rd.numerator);
}

namespace {

std::vector<Scalar> quadric_residuals(const Quadric& q1, const Quadric& q2, const PointPair& p, const Scalar& z) {
    return {abs(q1.value(p.x)), abs(q2.value(p.y)), abs(squared_norm(p.x - p.y) - z)};
}

}  // namespace

NearestPoints nearest_points_quadrics(const Quadric& q1, const Quadric& q2, const Scalar& z_hat, PairMode mode,
                                      int bits) {
    const std::size_t n = q1.dim();
    if (q2.dim() != n) throw DomainError("dimension mismatch between quadrics");
    NearestPoints out;
    if (mode == PairMode::Centered) {
        UniPoly G = centered_pencil(q1, q2).eval_param(z_hat);
        if (G.degree() > 2 && bezout_matrix(G).determinant() == 0) {
            const UniPoly s = gcd_squarefree(G).squarefree_part;
            G = s.degree() == 1 ? s * s : s;
        }
        const Scalar l = multiple_zero_uni(bezout_matrix(G), false);
        const MatrixQ M = l * q1.A + (z_hat - l) * q2.A - (l * (z_hat - l)) * (q2.A * q1.A);
        const MatrixQ adj = adjugate(M);
        VectorQ X, Y;
        if (adj == MatrixQ(n, n)) {
            // a continuum of nearest pairs; take one
            X = kernel_vector(M);
            Y = (MatrixQ::identity(n) - l * q1.A) * X;
        } else {
            X = column_with_largest_norm(adj, false);
            Y = column_with_largest_norm(adj, true);
        }
        const Scalar nx = dot(X, q1.A * X), ny = dot(Y, q2.A * Y);
        if (nx <= 0 || ny <= 0) throw Degeneracy("complex-points", "normalization radicand is not positive");
        const VectorQ Xs = (1 / sqrt_approx(nx, bits + 32)) * X;
        const VectorQ Ys = (1 / sqrt_approx(ny, bits + 32)) * Y;
        const Scalar same = abs(squared_norm(Xs - Ys) - z_hat);
        const Scalar flip = abs(squared_norm(Xs + Ys) - z_hat);
        const VectorQ Yp = same <= flip ? Ys : -Ys;
        out.pairs.push_back({Xs, Yp});
        out.pairs.push_back({-Xs, -Yp});
        out.multipliers.push_back(l);
        return out;
    }
    const BiPoly g = general_pencil(q1, q2, z_hat);
    auto points_at = [&](const std::pair<Scalar, Scalar>& mz) {
        const auto [mu1, mu2] = mz;
        if (mu1 == 0 || mu2 == 0) throw Degeneracy("degenerate-multiplier", "multiple zero has a vanishing coordinate");
        const MatrixQ A1inv = inverse(q1.A), A2inv = inverse(q2.A);
        const MatrixQ M = MatrixQ::identity(n) - mu2 * A1inv - mu1 * A2inv;
        const VectorQ c1 = A1inv * q1.B, c2 = A2inv * q2.B;
        const VectorQ MQ = solve_linear(M, c2 - c1);
        NearestPoints np;
        np.pairs.push_back({-c1 + mu2 * (A1inv * MQ), -c2 - mu1 * (A2inv * MQ)});
        np.multipliers = {1 / mu2, 1 / mu1};
        return np;
    };
    const Scalar tol = pow2(-(bits / 2));
    try {
        NearestPoints np = points_at(multiple_zero_biv_modular(g));
        const auto res = quadric_residuals(q1, q2, np.pairs.front(), z_hat);
        if (std::all_of(res.begin(), res.end(), [&](const Scalar& x) { return x < tol; })) return np;
    } catch (const Degeneracy&) {
    }
    auto checked = [&](const Scalar& z) {
        NearestPoints np = points_at(multiple_zero_biv_deflated(general_pencil(q1, q2, z), bits));
        const auto res = quadric_residuals(q1, q2, np.pairs.front(), z_hat);
        if (!std::all_of(res.begin(), res.end(), [&](const Scalar& x) { return x < tol; }))
            throw Degeneracy("point-recovery", "deflated elimination did not reach the tolerance");
        return np;
    };
    try {
        return checked(z_hat);
    } catch (const Degeneracy&) {
        // an exact z* leaves no small eigenvalue to shift by
        return checked(z_hat + pow2(-2 * bits));
    }
}

// ---------------------------------------------------------------------

namespace {

using Recover = std::function<NearestPoints(const Scalar&)>;
using Residuals = std::function<std::vector<Scalar>(const PointPair&, const Scalar&)>;

void finish(DistanceReport& r, const UniPoly& F, const Recover& recover, const Residuals& residuals) {
    r.F = F;
    r.z_power = F.trailing_zeros();
    const UniPoly core = F.strip_trailing_zeros();
    if (core.degree() < 1) throw Degeneracy("no-positive-root", "distance polynomial has no positive zero");
    r.positive_zeros = positive_zeros(core, r.bits);
    if (r.positive_zeros.empty()) throw Degeneracy("no-positive-root", "distance polynomial has no positive zero");
    const PositiveZero& first = r.positive_zeros.front();
    r.has_value = true;
    r.z_star = first.value;
    r.simple = first.is_simple;
    r.d = sqrt_approx(r.z_star, r.bits);

    const Scalar tol = pow2(-(r.bits / 2));
    bool ok = false;
    std::string failure;
    try {
        NearestPoints pts = recover(r.z_star);
        std::vector<Scalar> worst;
        for (const auto& p : pts.pairs) {
            const auto res = residuals(p, r.z_star);
            if (worst.empty()) worst.assign(res.size(), 0);
            for (std::size_t i = 0; i < res.size(); ++i) worst[i] = std::max(worst[i], res[i]);
        }
        ok = !pts.pairs.empty() && std::all_of(worst.begin(), worst.end(), [&](const Scalar& x) { return x < tol; });
        if (!ok) failure = "residuals of recovered points exceed tolerance";
        r.residuals = worst;
        if (ok) r.points = std::move(pts);
    } catch (const Degeneracy& e) {
        failure = e.reason() + ": " + e.what();
    }
    if (!ok) r.warnings.push_back("point recovery failed (" + failure + ")");
    if (!r.simple) {
        r.warnings.push_back(ok ? "minimal positive zero is multiple; recovered points are real, so it is attained"
                                : "minimal positive zero is multiple and no real points were recovered");
        if (!ok) {
            for (const auto& z : r.positive_zeros)
                if (z.is_simple && z.value > r.z_star) {
                    r.candidate_z = z.value;
                    break;
                }
        }
    }
}


DistanceReport intersecting_report(int bits, IntersectionResult ir) {
    DistanceReport r;
    r.bits = bits;
    r.intersecting = true;
    r.has_value = true;
    r.z_star = 0;
    r.d = 0;
    r.intersection = std::move(ir);
    return r;
}

}  // namespace

DistanceReport solve_point(const Quadric& e, const VectorQ& x0, int bits) {
    require_sign_definite(e.A, "ellipsoid");
    if (e.value(x0) == 0) {
        IntersectionResult ir;
        ir.intersects = true;
        ir.note = "point lies on the quadric";
        auto r = intersecting_report(bits, ir);
        r.points.pairs.push_back({x0, x0});
        return r;
    }
    DistanceReport r;
    r.bits = bits;
    finish(r, point_distance_poly(e, x0), [&](const Scalar& z) { return point_nearest_points(e, x0, z, bits); },
           [&](const PointPair& p, const Scalar& z) {
               return std::vector<Scalar>{abs(e.value(p.x)), abs(squared_norm(p.x - p.y) - z)};
           });
    return r;
}

DistanceReport solve_variety(const Quadric& e, const LinearVariety& v, int bits) {
    IntersectionResult ir = variety_intersects(e, v);
    if (ir.intersects) return intersecting_report(bits, ir);
    DistanceReport r;
    r.bits = bits;
    r.intersection = ir;
    finish(r, variety_distance_poly(e, v), [&](const Scalar& z) { return variety_nearest_points(e, v, z); },
           [&](const PointPair& p, const Scalar& z) {
               return std::vector<Scalar>{abs(e.value(p.x)), max_abs(v.residual(p.y)),
                                          abs(squared_norm(p.x - p.y) - z)};
           });
    return r;
}

DistanceReport solve_centered(const Quadric& q1, const Quadric& q2, int bits) {
    IntersectionResult ir;
    ir.intersects = centered_intersects(q1, q2);
    if (ir.intersects) return intersecting_report(bits, ir);
    DistanceReport r;
    r.bits = bits;
    r.intersection = ir;
    finish(r, centered_distance_poly(q1, q2),
           [&](const Scalar& z) { return nearest_points_quadrics(q1, q2, z, PairMode::Centered, bits); },
           [&](const PointPair& p, const Scalar& z) { return quadric_residuals(q1, q2, p, z); });
    return r;
}

DistanceReport solve_general(const Quadric& q1, const Quadric& q2, int bits) {
    if (!is_sign_definite(definiteness(q1.A))) {
        if (!is_sign_definite(definiteness(q2.A)))
            throw Degeneracy("not-sign-definite", "neither quadric matrix is sign-definite");
        DistanceReport r = solve_general(q2, q1, bits);
        for (auto& p : r.points.pairs) std::swap(p.x, p.y);
        if (r.points.multipliers.size() == 2) std::swap(r.points.multipliers[0], r.points.multipliers[1]);
        if (r.residuals.size() == 3) std::swap(r.residuals[0], r.residuals[1]);
        r.warnings.push_back("surfaces were exchanged so that the first matrix is sign-definite");
        return r;
    }
    IntersectionResult ir = general_intersects(q1, q2);
    if (ir.intersects) return intersecting_report(bits, ir);
    DistanceReport r;
    r.bits = bits;
    r.intersection = ir;
    if (ir.flagged) r.warnings.push_back(ir.note);
    finish(r, general_distance_poly(q1, q2),
           [&](const Scalar& z) { return nearest_points_quadrics(q1, q2, z, PairMode::General, bits); },
           [&](const PointPair& p, const Scalar& z) { return quadric_residuals(q1, q2, p, z); });
    return r;
}

}  // namespace qdist
