#include "qdist/discrim.hpp"

#include "qdist/interp.hpp"
#include "qdist/modular.hpp"
#include "qdist/realroots.hpp"

#include <algorithm>
#include <map>
#include <tuple>

namespace qdist {

namespace {

std::vector<Scalar> last_row_cofactors(const MatrixQ& m) {
    const std::size_t n = m.rows();
    std::vector<Scalar> cof(n);
    if (n == 1) {
        cof[0] = 1;
        return cof;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const Scalar c = determinant(m.minor_matrix(n - 1, j));
        cof[j] = ((n - 1 + j) % 2) ? Scalar(-c) : c;
    }
    return cof;
}

unsigned degree_of(Monomial m) { return m.first + m.second; }

// Coefficients of basis-monomial reductions of target * g modulo the gradient
// ideal; one row per target.
std::vector<std::vector<Scalar>> reduce_many(const BiPoly& g, const std::vector<Monomial>& basis,
                                             const std::vector<Monomial>& targets) {
    const long N = g.total_degree();
    if (N < 2) throw DomainError("bivariate reduction needs total degree >= 2");
    const BiPoly g1 = g.d_x1();
    const BiPoly g2 = g.d_x2();

    unsigned top = 0;
    for (const auto& t : targets) top = std::max(top, degree_of(t));
    const unsigned D = top + static_cast<unsigned>(N);
    const unsigned qdeg = D - static_cast<unsigned>(N - 1);

    // Equation index for every monomial of total degree <= D.
    std::map<Monomial, std::size_t> eq;
    for (unsigned d = 0; d <= D; ++d)
        for (unsigned i = 0; i <= d; ++i) eq.emplace(Monomial{i, d - i}, eq.size());
    std::vector<Monomial> qmons;
    for (unsigned d = 0; d <= qdeg; ++d)
        for (unsigned i = 0; i <= d; ++i) qmons.push_back({i, d - i});

    const std::size_t nq = qmons.size();
    const std::size_t nb = basis.size();
    const std::size_t nt = targets.size();
    MatrixQ sys(eq.size(), 2 * nq + nb + nt);

    auto add_product = [&](std::size_t col, Monomial m, const BiPoly& p, const Scalar& sgn) {
        for (long i = 0; i <= p.degree_x1(); ++i)
            for (long j = 0; j <= p.degree_x2(); ++j) {
                const Scalar c = p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (c == 0) continue;
                const Monomial prod{m.first + static_cast<unsigned>(i), m.second + static_cast<unsigned>(j)};
                sys(eq.at(prod), col) += sgn * c;
            }
    };
    for (std::size_t k = 0; k < nq; ++k) {
        add_product(k, qmons[k], g1, 1);
        add_product(nq + k, qmons[k], g2, 1);
    }
    for (std::size_t k = 0; k < nb; ++k) sys(eq.at(basis[k]), 2 * nq + k) = 1;
    for (std::size_t k = 0; k < nt; ++k) add_product(2 * nq + nb + k, targets[k], g, 1);

    const auto pivots = row_reduce(sys);
    std::vector<std::size_t> basis_row(nb, SIZE_MAX);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t c = pivots[r];
        if (c >= 2 * nq + nb)
            throw Degeneracy("gradient-reduction", "reduction modulo the gradient ideal does not exist");
        if (c >= 2 * nq) basis_row[c - 2 * nq] = r;
    }
    if (std::any_of(basis_row.begin(), basis_row.end(), [](std::size_t r) { return r == SIZE_MAX; }))
        throw Degeneracy("gradient-reduction", "quotient basis is dependent modulo the gradient ideal");

    std::vector<std::vector<Scalar>> rows(nt, std::vector<Scalar>(nb));
    for (std::size_t t = 0; t < nt; ++t)
        for (std::size_t k = 0; k < nb; ++k) rows[t][k] = sys(basis_row[k], 2 * nq + nb + t);
    return rows;
}

BezoutData standard_bezout(const BiPoly& g, long N) {
    BezoutData d;
    d.monomial_basis = gradient_quotient_basis(static_cast<unsigned>(N));
    d.bipoly = g;
    const auto rows = reduce_many(g, d.monomial_basis, d.monomial_basis);
    const std::size_t n = rows.size();
    d.matrix = MatrixQ(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) d.matrix(i, j) = rows[i][j];
    d.x1_form.assign(n, 0);
    d.x2_form.assign(n, 0);
    if (n >= 3) {
        d.x1_form[1] = 1;
        d.x2_form[2] = 1;
    }
    return d;
}

// Normal set of the gradient ideal by graded elimination of the degree-D
// Macaulay matrix; monomials of high degree are eliminated first so the
// surviving set is a low-degree staircase with 1, x1, x2 kept when possible.
BezoutData normal_set_bezout(const BiPoly& g, long N) {
    const BiPoly g1 = g.d_x1();
    const BiPoly g2 = g.d_x2();
    const long d1 = g1.total_degree(), d2 = g2.total_degree();
    if (d1 < 1 || d2 < 1)
        throw Degeneracy("gradient-reduction", "gradient ideal is not zero-dimensional");
    const unsigned top = static_cast<unsigned>(d1 + d2 - 2);
    const unsigned D = top + static_cast<unsigned>(N);

    std::vector<Monomial> cols;
    for (unsigned d = D + 1; d-- > 0;)
        for (unsigned i = d + 1; i-- > 0;) cols.push_back({i, d - i});
    std::map<Monomial, std::size_t> index;
    for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;

    std::vector<std::vector<Scalar>> gens;
    auto add_multiples = [&](const BiPoly& p, long dp) {
        for (unsigned d = 0; d + dp <= D; ++d)
            for (unsigned i = 0; i <= d; ++i) {
                std::vector<Scalar> row(cols.size());
                for (long a = 0; a <= p.degree_x1(); ++a)
                    for (long b = 0; b <= p.degree_x2(); ++b) {
                        const Scalar c = p.coeff(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                        if (c != 0) row[index.at({i + static_cast<unsigned>(a), d - i + static_cast<unsigned>(b)})] = c;
                    }
                gens.push_back(std::move(row));
            }
    };
    add_multiples(g1, d1);
    add_multiples(g2, d2);
    MatrixQ mac(gens.size(), cols.size());
    for (std::size_t r = 0; r < gens.size(); ++r)
        for (std::size_t c = 0; c < cols.size(); ++c) mac(r, c) = gens[r][c];
    const auto pivots = row_reduce(mac);
    std::vector<bool> is_pivot(cols.size(), false);
    for (auto p : pivots) is_pivot[p] = true;

    std::vector<Monomial> normal;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (is_pivot[c]) continue;
        if (degree_of(cols[c]) > top)
            throw Degeneracy("gradient-reduction", "gradient ideal has stationary points at infinity");
        normal.push_back(cols[c]);
    }
    if (normal.empty()) throw Degeneracy("gradient-reduction", "g has no stationary points");
    std::sort(normal.begin(), normal.end(), [](Monomial a, Monomial b) {
        auto key = [](Monomial m) {
            const int front = m == Monomial{0, 0} ? 0 : m == Monomial{1, 0} ? 1 : m == Monomial{0, 1} ? 2 : 3;
            return std::make_tuple(front, m.first, m.second);
        };
        return key(a) < key(b);
    });

    auto normal_form = [&](const BiPoly& f) {
        std::vector<Scalar> v(cols.size());
        for (long a = 0; a <= f.degree_x1(); ++a)
            for (long b = 0; b <= f.degree_x2(); ++b) {
                const Scalar c = f.coeff(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                if (c != 0) v[index.at({static_cast<unsigned>(a), static_cast<unsigned>(b)})] = c;
            }
        for (std::size_t r = 0; r < pivots.size(); ++r) {
            const Scalar c = v[pivots[r]];
            if (c == 0) continue;
            for (std::size_t k = pivots[r]; k < cols.size(); ++k)
                if (mac(r, k) != 0) v[k] -= c * mac(r, k);
        }
        std::vector<Scalar> out;
        for (const auto& m : normal) out.push_back(v[index.at(m)]);
        return out;
    };

    BezoutData d;
    d.standard_basis = false;
    d.monomial_basis = normal;
    d.bipoly = g;
    const std::size_t n = normal.size();
    d.matrix = MatrixQ(n, n);
    for (std::size_t l = 0; l < n; ++l) {
        const auto row = normal_form(BiPoly::monomial(normal[l].first, normal[l].second) * g);
        for (std::size_t j = 0; j < n; ++j) d.matrix(l, j) = row[j];
    }
    d.x1_form = normal_form(BiPoly::monomial(1, 0));
    d.x2_form = normal_form(BiPoly::monomial(0, 1));
    return d;
}

// Sparse layout of the reduction system of standard_bezout, shared by all primes.
struct ReductionLayout {
    std::size_t rows = 0, cols = 0, nq = 0, nb = 0;
    std::vector<std::tuple<std::size_t, std::size_t, Scalar>> entries;
};

ReductionLayout reduction_layout(const BiPoly& g, const std::vector<Monomial>& basis) {
    const long N = g.total_degree();
    const BiPoly g1 = g.d_x1(), g2 = g.d_x2();
    unsigned top = 0;
    for (const auto& t : basis) top = std::max(top, degree_of(t));
    const unsigned D = top + static_cast<unsigned>(N);
    const unsigned qdeg = D - static_cast<unsigned>(N - 1);
    auto index = [](Monomial m) {
        const std::size_t d = m.first + m.second;
        return d * (d + 1) / 2 + m.first;
    };
    std::vector<Monomial> qmons;
    for (unsigned d = 0; d <= qdeg; ++d)
        for (unsigned i = 0; i <= d; ++i) qmons.push_back({i, d - i});

    ReductionLayout L;
    L.rows = index({D + 1, 0});
    L.nq = qmons.size();
    L.nb = basis.size();
    L.cols = 2 * L.nq + 2 * L.nb;
    auto add_product = [&](std::size_t col, Monomial m, const BiPoly& p) {
        for (long i = 0; i <= p.degree_x1(); ++i)
            for (long j = 0; j <= p.degree_x2(); ++j) {
                Scalar c = p.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
                if (c == 0) continue;
                const Monomial prod{m.first + static_cast<unsigned>(i), m.second + static_cast<unsigned>(j)};
                L.entries.emplace_back(index(prod), col, std::move(c));
            }
    };
    for (std::size_t k = 0; k < L.nq; ++k) {
        add_product(k, qmons[k], g1);
        add_product(L.nq + k, qmons[k], g2);
    }
    for (std::size_t k = 0; k < L.nb; ++k) L.entries.emplace_back(index(basis[k]), 2 * L.nq + k, Scalar(1));
    for (std::size_t k = 0; k < L.nb; ++k) add_product(2 * L.nq + L.nb + k, basis[k], g);
    return L;
}

// Bezout matrix modulo p; nullopt when p is unlucky or the basis is dependent.
std::optional<modular::MatrixP> bezout_image(const ReductionLayout& L, modular::u64 p) {
    modular::MatrixP sys(L.rows, L.cols, p);
    for (const auto& [r, c, v] : L.entries) {
        const auto x = modular::image(v, p);
        if (!x) return std::nullopt;
        sys(r, c) = modular::add(sys(r, c), *x, p);
    }
    const auto pivots = sys.row_reduce();
    std::vector<std::size_t> basis_row(L.nb, SIZE_MAX);
    for (std::size_t r = 0; r < pivots.size(); ++r) {
        const std::size_t c = pivots[r];
        if (c >= 2 * L.nq + L.nb) return std::nullopt;
        if (c >= 2 * L.nq) basis_row[c - 2 * L.nq] = r;
    }
    modular::MatrixP B(L.nb, L.nb, p);
    for (std::size_t k = 0; k < L.nb; ++k) {
        if (basis_row[k] == SIZE_MAX) return std::nullopt;
        for (std::size_t t = 0; t < L.nb; ++t) B(t, k) = sys(basis_row[k], 2 * L.nq + L.nb + t);
    }
    return B;
}

}  // namespace

Scalar BezoutData::determinant() const { return qdist::determinant(matrix); }

BezoutData bezout_matrix(const UniPoly& g) {
    const long N = g.degree();
    if (N < 2) throw DomainError("Bezout matrix needs degree >= 2");
    const UniPoly gp = g.derivative();
    const std::size_t n = static_cast<std::size_t>(N - 1);
    BezoutData d;
    d.matrix = MatrixQ(n, n);
    d.poly = g;
    UniPoly r = divrem(g, gp).remainder;
    const UniPoly x = UniPoly::monomial(1, 1, g.var());
    for (std::size_t l = 0; l < n; ++l) {
        if (l > 0) r = divrem(x * r, gp).remainder;
        for (std::size_t j = 0; j < n; ++j) d.matrix(l, j) = r[j];
    }
    d.last_row_cofactors = last_row_cofactors(d.matrix);
    return d;
}

Scalar discriminant_uni(const UniPoly& g) {
    const long N = g.degree();
    if (N < 2) throw DomainError("discriminant needs degree >= 2");
    const BezoutData d = bezout_matrix(g);
    return pow(Scalar(N), static_cast<unsigned long>(N)) * pow(g.lead(), static_cast<unsigned long>(N - 1)) *
           d.determinant();
}

Scalar multiple_zero_uni(const BezoutData& d, bool require_singular) {
    if (require_singular && d.determinant() != 0)
        throw Degeneracy("no-multiple-zero", "det B != 0: the polynomial has no multiple zero");
    if (d.order() == 1) {
        // Quadratic: the double root is the root of g'.
        const UniPoly& g = d.poly;
        return -g[1] / (2 * g[2]);
    }
    const auto& c = d.last_row_cofactors;
    if (c[0] == 0)
        throw Degeneracy("non-unique-multiple-zero", "leading cofactor vanishes: multiple zero is not unique");
    return c[1] / c[0];
}

LinearRepresentation linear_representation(const UniPoly& g) {
    const long N = g.degree();
    if (N < 2) throw DomainError("linear representation needs degree >= 2");
    const BezoutData d = bezout_matrix(g);
    const std::size_t n = d.order();
    const std::string& var = g.var();

    // v: first column replaced by 1, x, ..., x^(N-2)
    const UniPoly v = determinant_poly(
        [&](const Scalar& x) {
            MatrixQ m = d.matrix;
            Scalar p = 1;
            for (std::size_t l = 0; l < n; ++l, p *= x) m(l, 0) = p;
            return m;
        },
        n - 1, var);

    // B-hat: first column replaced by [0, b_{0,N-2}, b_{0,N-2} x + b_{1,N-2}, ...]
    const UniPoly dethat = determinant_poly(
        [&](const Scalar& x) {
            MatrixQ m = d.matrix;
            Scalar acc = 0;
            for (std::size_t l = 0; l < n; ++l) {
                m(l, 0) = acc;
                acc = acc * x + d.matrix(l, n - 1);
            }
            return m;
        },
        n > 1 ? n - 2 : 0, var);

    const Scalar Nq(N);
    const Scalar b0 = g.lead();
    const Scalar b1 = g[static_cast<std::size_t>(N - 1)];
    const UniPoly shift({b1 / (Nq * b0), Scalar(1)}, var);
    UniPoly u = Scalar(-1) / Nq * (shift * v) - (1 / (Nq * b0)) * dethat;
    return {u.with_var(var), v.with_var(var), d.determinant()};
}

std::vector<Monomial> gradient_quotient_basis(unsigned N) {
    if (N < 2) throw DomainError("quotient basis needs N >= 2");
    std::vector<Monomial> rest;
    for (unsigned j1 = 0; j1 + 1 < N; ++j1)
        for (unsigned j2 = 0; j2 <= 2 * (N - j1 - 2); ++j2) rest.push_back({j1, j2});
    std::vector<Monomial> out;
    for (Monomial front : {Monomial{0, 0}, Monomial{1, 0}, Monomial{0, 1}}) {
        auto it = std::find(rest.begin(), rest.end(), front);
        if (it != rest.end()) {
            out.push_back(front);
            rest.erase(it);
        }
    }
    out.insert(out.end(), rest.begin(), rest.end());
    return out;
}

std::vector<Scalar> reduce_mod_gradient(const BiPoly& g, Monomial m) {
    const BezoutData d = bezout_matrix_biv(g);
    const auto it = std::find(d.monomial_basis.begin(), d.monomial_basis.end(), m);
    if (it == d.monomial_basis.end()) throw DomainError("monomial is not in the quotient basis");
    const VectorQ row = d.matrix.row(static_cast<std::size_t>(it - d.monomial_basis.begin()));
    return {row.entries().begin(), row.entries().end()};
}

BezoutData bezout_matrix_biv(const BiPoly& g, bool strict) {
    const long N = g.total_degree();
    if (N < 2) throw DomainError("bivariate Bezout matrix needs total degree >= 2");
    BezoutData d;
    try {
        d = standard_bezout(g, N);
    } catch (const Degeneracy&) {
        if (strict) throw;
        d = normal_set_bezout(g, N);
    }
    d.last_row_cofactors = last_row_cofactors(d.matrix);
    return d;
}

Scalar discriminant_biv(const BiPoly& g) { return bezout_matrix_biv(g).determinant(); }

std::pair<Scalar, Scalar> multiple_zero_biv(const BezoutData& d, bool require_singular) {
    if (require_singular && d.determinant() != 0)
        throw Degeneracy("no-multiple-zero", "det B != 0: the polynomial has no multiple zero");
    if (d.order() < 3 && d.standard_basis) {
        // Quadratic g: the unique stationary point solves a 2x2 linear system.
        const BiPoly& g = d.bipoly;
        const BiPoly g1 = g.d_x1(), g2 = g.d_x2();
        const MatrixQ m{{g1.coeff(1, 0), g1.coeff(0, 1)}, {g2.coeff(1, 0), g2.coeff(0, 1)}};
        const VectorQ rhs{-g1.coeff(0, 0), -g2.coeff(0, 0)};
        const VectorQ x = solve_linear(m, rhs);
        return {x[0], x[1]};
    }
    // The cofactor column is proportional to the basis evaluated at the multiple zero.
    const auto& c = d.last_row_cofactors;
    if (c[0] == 0 || d.monomial_basis.front() != Monomial{0, 0})
        throw Degeneracy("non-unique-multiple-zero", "leading cofactor vanishes: multiple zero is not unique");
    Scalar l1 = 0, l2 = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        l1 += d.x1_form[j] * c[j];
        l2 += d.x2_form[j] * c[j];
    }
    return {l1 / c[0], l2 / c[0]};
}

Scalar discriminant_biv_modular(const BiPoly& g) {
    const long N = g.total_degree();
    if (N < 2) throw DomainError("bivariate Bezout matrix needs total degree >= 2");
    const auto L = reduction_layout(g, gradient_quotient_basis(static_cast<unsigned>(N)));
    const auto v = modular::reconstruct(
        [&](modular::u64 p) -> std::optional<std::vector<modular::u64>> {
            const auto B = bezout_image(L, p);
            if (!B) return std::nullopt;
            return std::vector<modular::u64>{B->determinant()};
        },
        "gradient-reduction");
    return v[0];
}

std::pair<Scalar, Scalar> multiple_zero_biv_modular(const BiPoly& g) {
    const long N = g.total_degree();
    if (N < 3) return multiple_zero_biv(bezout_matrix_biv(g, true), false);
    const auto L = reduction_layout(g, gradient_quotient_basis(static_cast<unsigned>(N)));
    const auto v = modular::reconstruct(
        [&](modular::u64 p) -> std::optional<std::vector<modular::u64>> {
            const auto B = bezout_image(L, p);
            if (!B) return std::nullopt;
            const std::size_t n = B->rows();
            modular::u64 c[3];
            for (std::size_t j = 0; j < 3; ++j) {
                const modular::u64 m = B->minor_matrix(n - 1, j).determinant();
                c[j] = (n - 1 + j) % 2 ? modular::sub(0, m, p) : m;
            }
            if (c[0] == 0) return std::nullopt;
            const modular::u64 s = modular::inv(c[0], p);
            return std::vector<modular::u64>{modular::mul(c[1], s, p), modular::mul(c[2], s, p)};
        },
        "non-unique-multiple-zero");
    return {v[0], v[1]};
}

UniPoly discriminant_in_main(const ParamPoly& p) {
    const long N = p.degree();
    if (N < 2) throw DomainError("discriminant needs main-variable degree >= 2");
    const long dpar = std::max<long>(p.param_degree(), 0);
    const std::size_t bound = static_cast<std::size_t>((2 * N - 2) * dpar);
    const std::size_t want = bound + 1 + 3;

    std::vector<Scalar> nodes, values;
    for (std::size_t k = 0; nodes.size() < want; ++k) {
        if (k > 4 * want + 64) throw Degeneracy("interpolation-nodes", "too many degenerate interpolation nodes");
        const Scalar t = small_node(k);
        if (p.lead().eval(t) == 0) continue;
        nodes.push_back(t);
        values.push_back(discriminant_uni(p.eval_param(t)));
    }
    const std::span<const Scalar> ns(nodes), vs(values);
    const UniPoly D = interpolate(ns.first(bound + 1), vs.first(bound + 1), p.param_var());
    for (std::size_t k = bound + 1; k < want; ++k)
        if (D.eval(nodes[k]) != values[k])
            throw Degeneracy("interpolation-verification", "discriminant interpolation failed verification");
    return D;
}

namespace {

// Bivariate discriminant in the parameter through the fixed basis. Each node
// contributes the coefficient of s^m in det(s I - B), where m is the generic
// multiplicity of the eigenvalue 0: stationary points lying on g = 0 for
// every parameter value are factored out that way (m = 0 is the determinant).
RationalDiscriminant biv_in_param(const std::function<BiPoly(const Scalar&)>& g_at, std::size_t degree_bound,
                                  const std::string& var) {
    constexpr std::size_t margin = 4;
    std::vector<Scalar> nodes;
    std::vector<ReductionLayout> layouts;
    long expected_degree = -1;
    std::size_t k = 0;
    auto collect = [&](std::size_t want) {
        while (nodes.size() < want) {
            if (k > 4 * want + 64) throw Degeneracy("interpolation-nodes", "too many degenerate interpolation nodes");
            // Start at 1: z = 0 is the natural degenerate point of distance problems.
            const Scalar z = small_node(++k);
            const BiPoly g = g_at(z);
            const long deg = g.total_degree();
            if (expected_degree < 0) {
                if (deg < 2) throw DomainError("bivariate discriminant needs total degree >= 2");
                expected_degree = deg;
            }
            if (deg != expected_degree) continue;
            nodes.push_back(z);
            layouts.push_back(reduction_layout(g, gradient_quotient_basis(static_cast<unsigned>(deg))));
        }
    };
    std::size_t shift = 0;
    auto value = [&](const modular::MatrixP& B) { return shift == 0 ? B.determinant() : B.charpoly()[shift]; };
    // Images of the rational function modulo p: numerator coefficients, then
    // the non-leading denominator coefficients. Nodes whose basis is
    // dependent modulo p are dropped for that prime only.
    auto fit = [&](modular::u64 p, std::size_t need) -> std::optional<modular::RationalFunctionP> {
        std::vector<modular::u64> xs, ys;
        for (std::size_t i = 0; i < nodes.size(); ++i) {
            const auto x = modular::image(nodes[i], p);
            if (!x) continue;
            const auto B = bezout_image(layouts[i], p);
            if (!B) continue;
            xs.push_back(*x);
            ys.push_back(value(*B));
        }
        if (xs.size() < need) return std::nullopt;
        return modular::cauchy_interpolate(xs, ys, margin, p);
    };
    for (int attempt = 0; attempt < 2; ++attempt) {
        const std::size_t bound = degree_bound << attempt;
        const std::size_t need = bound + 1 + margin;
        collect(need + 2);
        if (attempt == 0) {
            std::size_t valid = 0;
            shift = SIZE_MAX;
            for (const auto& L : layouts) {
                const auto B = bezout_image(L, modular::prime(0));
                if (!B) continue;
                ++valid;
                const auto cp = B->charpoly();
                std::size_t tz = 0;
                while (tz + 1 < cp.size() && cp[tz] == 0) ++tz;
                shift = std::min(shift, tz);
            }
            if (valid < need)
                throw Degeneracy("gradient-reduction", "fixed quotient basis is dependent at the interpolation nodes");
        }
        // Degrees from the first primes; an unlucky prime can only lower them.
        std::size_t dn = 0, dd = 0;
        bool found = false;
        for (std::size_t i = 0; i < 3; ++i) {
            const auto f = fit(modular::prime(i), need);
            if (!f) continue;
            if (!found || f->numerator.size() + f->denominator.size() > dn + dd) {
                dn = f->numerator.size();
                dd = f->denominator.size();
                found = true;
            }
        }
        if (!found) continue;
        const auto coeffs = modular::reconstruct(
            [&](modular::u64 p) -> std::optional<std::vector<modular::u64>> {
                auto f = fit(p, need);
                if (!f || f->numerator.size() != dn || f->denominator.size() != dd) return std::nullopt;
                std::vector<modular::u64> out = f->numerator;
                out.insert(out.end(), f->denominator.begin(), f->denominator.end() - 1);
                return out;
            },
            "interpolation-verification");
        std::vector<Scalar> num(coeffs.begin(), coeffs.begin() + static_cast<long>(dn));
        std::vector<Scalar> den(coeffs.begin() + static_cast<long>(dn), coeffs.end());
        den.push_back(1);
        auto [c, prim] = content_primitive(UniPoly(std::move(num), var));
        RationalDiscriminant out{prim, UniPoly(std::move(den), var), nodes.size()};
        out.deflation = shift;
        return out;
    }
    throw Degeneracy("interpolation-verification", "bivariate discriminant reconstruction failed verification");
}

}  // namespace

std::pair<Scalar, Scalar> multiple_zero_biv_deflated(const BiPoly& g, int bits) {
    bool projective = false;
    BezoutData d;
    try {
        d = bezout_matrix_biv(g, true);
    } catch (const Degeneracy& e) {
        if (e.reason() != "gradient-reduction") throw;
        d = bezout_matrix_biv(projective_chart(g), true);
        projective = true;
    }
    const UniPoly chi = characteristic_polynomial(d.matrix);
    if (const std::size_t m = chi.trailing_zeros(); m > 0 && d.order() > 2) {
        // The persistent eigenvalue 0 hides the small one carried by the
        // multiple zero; shift B by that eigenvalue instead.
        const UniPoly rest = chi.strip_trailing_zeros();
        const auto roots = isolate_real_roots(rest);
        if (roots.empty()) throw Degeneracy("complex-points", "no real eigenvalue near zero");
        std::size_t best = 0;
        Scalar best_abs;
        for (std::size_t i = 0; i < roots.size(); ++i) {
            const Scalar a = abs(refine(roots[i], rest, bits));
            if (i == 0 || a < best_abs) {
                best = i;
                best_abs = a;
            }
        }
        const Scalar eps = refine(roots[best], rest, 4 * bits);
        d.matrix = d.matrix - eps * MatrixQ::identity(d.order());
        d.last_row_cofactors = last_row_cofactors(d.matrix);
    }
    const auto [u, v] = multiple_zero_biv(d, false);
    return projective ? from_projective_chart(u, v) : std::pair{u, v};
}

BiPoly projective_chart(const BiPoly& g) {
    const long N = g.total_degree();
    const Scalar a = kChartA, b = kChartB;
    const BiPoly w(std::vector<std::vector<Scalar>>{{1, -b}, {-a, 0}});
    std::vector<BiPoly> wp{BiPoly::constant(1)};
    for (long k = 1; k <= N; ++k) wp.push_back(wp.back() * w);
    BiPoly out;
    for (long i = 0; i <= g.degree_x1(); ++i)
        for (long j = 0; j <= g.degree_x2(); ++j) {
            const Scalar c = g.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (c != 0) out = out + c * (BiPoly::monomial(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) * wp[static_cast<std::size_t>(N - i - j)]);
        }
    return out;
}

std::pair<Scalar, Scalar> from_projective_chart(const Scalar& u, const Scalar& v) {
    const Scalar w = 1 - kChartA * u - kChartB * v;
    if (w == 0) throw Degeneracy("point-at-infinity", "stationary point lies at infinity");
    return {u / w, v / w};
}

RationalDiscriminant discriminant_biv_in_param(const std::function<BiPoly(const Scalar&)>& g_at,
                                               std::size_t degree_bound, const std::string& var) {
    try {
        return biv_in_param(g_at, degree_bound, var);
    } catch (const Degeneracy& e) {
        if (e.reason() != "gradient-reduction") throw;
    }
    // stationary points at infinity: move the line at infinity
    auto r = biv_in_param([&](const Scalar& z) { return projective_chart(g_at(z)); }, 2 * degree_bound, var);
    r.projective = true;
    return r;
}

}  // namespace qdist
