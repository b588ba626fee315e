#include "doctest.h"
#include "qdist/discrim.hpp"
#include "qdist/interp.hpp"
#include "qdist/realroots.hpp"

using namespace qdist;

namespace {

// g = x^5 + 6x^4 + 2x^3 + a x^2 - x + 3
UniPoly quintic(const Scalar& a) { return UniPoly({3, -1, a, 2, 6, 1}); }

UniPoly quintic_det_expected() {
    UniPoly q({5759315, -409817, -87771, 5481, 324}, "a");
    return Scalar(1, 3125) * (UniPoly({7, 1}, "a") * q);
}

}  // namespace

TEST_CASE("quadratic Bezout matrix") {
    auto d = bezout_matrix(UniPoly({2, 3, 1}));
    CHECK(d.order() == 1);
    CHECK(d.matrix(0, 0) == Scalar(-1, 4));
    CHECK(discriminant_uni(UniPoly({2, 3, 1})) == -1);
    CHECK(multiple_zero_uni(bezout_matrix(UniPoly({1, -2, 1}))) == 1);
}

TEST_CASE("double root gives singular matrix") {
    CHECK(bezout_matrix(UniPoly({1, -2, 1})).determinant() == 0);
    const Scalar r[] = {1, 1, -5};
    CHECK(discriminant_uni(UniPoly::from_roots(r)) == 0);
    CHECK_THROWS_AS(bezout_matrix(UniPoly({1, 1})), DomainError);
}

TEST_CASE("multiple zero of a cubic") {
    const Scalar r[] = {2, 2, -1};
    CHECK(multiple_zero_uni(bezout_matrix(UniPoly::from_roots(r))) == 2);
    CHECK_THROWS_AS(multiple_zero_uni(bezout_matrix(UniPoly({1, 0, 0, 1}))), Degeneracy);
}

TEST_CASE("quintic remainder row") {
    // first row: g mod g' at a = 5 compared with the symbolic remainder
    const Scalar a = 5;
    auto d = bezout_matrix(quintic(a));
    CHECK(d.matrix(0, 0) == Scalar(81, 25));
    CHECK(d.matrix(0, 1) == -12 * a / 25 - Scalar(4, 5));
    CHECK(d.matrix(0, 2) == 3 * a / 5 - Scalar(36, 25));
    CHECK(d.matrix(0, 3) == Scalar(-124, 25));
}

TEST_CASE("quintic determinant as a polynomial in the parameter") {
    std::vector<Scalar> nodes, values;
    for (int k = 0; k < 8; ++k) {
        nodes.push_back(small_node(k));
        values.push_back(bezout_matrix(quintic(nodes.back())).determinant());
    }
    CHECK(interpolate(nodes, values, "a") == quintic_det_expected());

    // discriminant in main variable agrees up to the constant N^N b0^(N-1)
    std::vector<UniPoly> coeffs{UniPoly({3}, "a"), UniPoly({-1}, "a"), UniPoly({0, 1}, "a"),
                                UniPoly({2}, "a"), UniPoly({6}, "a"), UniPoly({1}, "a")};
    const UniPoly D = discriminant_in_main(ParamPoly(coeffs, "x", "a"));
    CHECK(D == Scalar(3125) * quintic_det_expected());
}

TEST_CASE("quintic multiple zeros") {
    CHECK(multiple_zero_uni(bezout_matrix(quintic(-7))) == -1);
    const UniPoly q({5759315, -409817, -87771, 5481, 324}, "a");
    const auto roots = isolate_real_roots(q);
    REQUIRE(roots.size() == 2);
    std::vector<double> zeros;
    for (const auto& iv : roots) {
        const Scalar a = refine(iv, q, 160);
        zeros.push_back(to_double(multiple_zero_uni(bezout_matrix(quintic(a)), false)));
    }
    CHECK(zeros[0] == doctest::Approx(-3.80947138).epsilon(1e-8));
    CHECK(zeros[1] == doctest::Approx(0.74648466).epsilon(1e-8));
}

TEST_CASE("linear representation") {
    auto lr = linear_representation(UniPoly({2, 3, 1}));
    CHECK(lr.v == UniPoly({1}));
    CHECK(lr.u == UniPoly({Scalar(-3, 4), Scalar(-1, 2)}));
    CHECK(lr.det == Scalar(-1, 4));

    const UniPoly g({Scalar(3, 2), -7, 0, Scalar(2, 3), 5, -1, 1});
    auto r = linear_representation(g);
    CHECK(r.v * g + r.u * g.derivative() == UniPoly::constant(r.det));
    CHECK(r.u.degree() <= 5);
    CHECK(r.v.degree() <= 4);

    auto z = linear_representation(UniPoly({1, -2, 1}));
    CHECK(z.det == 0);
    CHECK((z.v * UniPoly({1, -2, 1}) + z.u * UniPoly({-2, 2})).is_zero());
}

TEST_CASE("quotient basis") {
    auto b2 = gradient_quotient_basis(2);
    CHECK(b2 == std::vector<Monomial>{{0, 0}});
    auto b3 = gradient_quotient_basis(3);
    REQUIRE(b3.size() == 4);
    CHECK(b3[0] == Monomial{0, 0});
    CHECK(b3[1] == Monomial{1, 0});
    CHECK(b3[2] == Monomial{0, 1});
    CHECK(b3[3] == Monomial{0, 2});
    CHECK(gradient_quotient_basis(5).size() == 16);
}

TEST_CASE("bivariate reduction and discriminant") {
    const BiPoly circle = BiPoly::monomial(2, 0) + BiPoly::monomial(0, 2) - BiPoly::constant(1);
    CHECK(reduce_mod_gradient(circle, {0, 0}) == std::vector<Scalar>{-1});
    CHECK(discriminant_biv(circle) == -1);
    const BiPoly hyper = BiPoly::monomial(1, 1) - BiPoly::constant(1);
    CHECK(reduce_mod_gradient(hyper, {0, 0}) == std::vector<Scalar>{-1});
    CHECK(discriminant_biv(BiPoly::monomial(2, 0) + BiPoly::monomial(0, 2)) == 0);

    // quadratic: value at the stationary point
    const BiPoly q = Scalar(3) * BiPoly::monomial(2, 0) + BiPoly::monomial(1, 1) +
                     Scalar(2) * BiPoly::monomial(0, 2) + Scalar(5) * BiPoly::monomial(1, 0) -
                     BiPoly::monomial(0, 1) + BiPoly::constant(Scalar(1, 2));
    const MatrixQ h{{6, 1}, {1, 4}};
    const VectorQ s = solve_linear(h, VectorQ{-5, 1});
    CHECK(discriminant_biv(q) == q.eval(s[0], s[1]));
}

TEST_CASE("nodal cubic multiple zero") {
    // x2^2 - x1^2 (x1 + 1)
    const BiPoly g = BiPoly::monomial(0, 2) - BiPoly::monomial(2, 0) - BiPoly::monomial(3, 0);
    auto d = bezout_matrix_biv(g);
    CHECK(d.order() == 2);
    CHECK_FALSE(d.standard_basis);
    CHECK(d.determinant() == 0);
    auto [l1, l2] = multiple_zero_biv(d);
    CHECK(l1 == 0);
    CHECK(l2 == 0);
    auto [m1, m2] = multiple_zero_biv(bezout_matrix_biv(g.translate(-1, -2)));
    CHECK(m1 == 1);
    CHECK(m2 == 2);
}

TEST_CASE("cubic reduction re-expands") {
    // x1^3 + x2^3 - 3 x1 x2 + 1: the residual m*g - sum b_j M_j lies in the gradient ideal,
    // so it vanishes at every stationary point; check at the rational ones (0,0) and (1,1).
    const BiPoly g = BiPoly::monomial(3, 0) + BiPoly::monomial(0, 3) - Scalar(3) * BiPoly::monomial(1, 1) +
                     BiPoly::constant(1);
    const auto basis = bezout_matrix_biv(g).monomial_basis;
    CHECK(basis.size() == 4);
    for (const auto& m : basis) {
        const auto row = reduce_mod_gradient(g, m);
        BiPoly rem = BiPoly::monomial(m.first, m.second) * g;
        for (std::size_t j = 0; j < basis.size(); ++j)
            rem = rem - row[j] * BiPoly::monomial(basis[j].first, basis[j].second);
        CHECK(rem.eval(0, 0) == 0);
        CHECK(rem.eval(1, 1) == 0);
    }
}
