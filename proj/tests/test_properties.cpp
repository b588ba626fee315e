#include "brute_force.hpp"
#include "doctest.h"
#include "qdist/discrim.hpp"
#include "qdist/metrics.hpp"
#include "qdist/parametric.hpp"

#include <cmath>
#include <random>

using namespace qdist;

namespace {

Scalar frac(long num, long den) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

std::mt19937& rng() {
    static std::mt19937 g(20240611);
    return g;
}

int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

UniPoly random_poly(int degree) {
    std::vector<Scalar> c;
    for (int i = 0; i < degree; ++i) c.push_back(frac(uniform(-9, 9), uniform(1, 3)));
    int lead = 0;
    while (lead == 0) lead = uniform(-5, 5);
    c.push_back(lead);
    return UniPoly(std::move(c));
}

// (x - c)^T M (x - c) = r with M positive definite and small entries.
Quadric random_ellipsoid(std::size_t n, const VectorQ& centre) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = uniform(-2, 2);
    MatrixQ a = m.transpose() * m;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += uniform(1, 3);
    const Scalar r = frac(uniform(1, 4), uniform(1, 2));
    const Scalar c0 = dot(centre, a * centre) - r;
    if (c0 == 0) return random_ellipsoid(n, centre + VectorQ(std::vector<Scalar>(n, Scalar(1, 7))));
    return normalize(a, -1 * (a * centre), c0);
}

VectorQ random_point(std::size_t n, int range) {
    std::vector<Scalar> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(frac(uniform(-range, range), uniform(1, 2)));
    return VectorQ(std::move(v));
}

double dbl(const Scalar& s) { return to_double(s); }

std::string show(const Quadric& q) {
    std::string out = "A=";
    for (std::size_t i = 0; i < q.dim(); ++i)
        for (std::size_t j = 0; j < q.dim(); ++j) out += to_string(q.A(i, j)) + " ";
    out += " B=";
    for (std::size_t i = 0; i < q.dim(); ++i) out += to_string(q.B[i]) + " ";
    return out;
}

void check_report(const DistanceReport& r, bool crossing, double d_ref) {
    if (crossing) {
        CHECK(r.intersecting);
        return;
    }
    if (r.intersecting) {
        // tangent surfaces
        CHECK(d_ref < 1e-6);
        return;
    }
    CHECK(r.F.degree() > 0);
    CHECK(r.F.degree() % 2 == 0);
    REQUIRE(r.has_value);
    // an unrealized multiple minimum comes with the next simple zero as candidate
    const Scalar z = !r.simple && r.points.pairs.empty() && r.candidate_z ? *r.candidate_z : r.z_star;
    CHECK(std::sqrt(dbl(z)) == doctest::Approx(d_ref).epsilon(1e-6));
}

}  // namespace

TEST_CASE("Bezout discriminant equals resultant over the leading coefficient") {
    for (int k = 0; k < 150; ++k) {
        const UniPoly g = random_poly(2 + k % 6);
        CHECK(discriminant_uni(g) * g.lead() == resultant(g, g.derivative()));
    }
}

TEST_CASE("linear representation identity") {
    for (int k = 0; k < 120; ++k) {
        const UniPoly g = random_poly(2 + k % 5);
        const auto lr = linear_representation(g);
        CHECK(lr.v * g + lr.u * g.derivative() == UniPoly::constant(lr.det));
        CHECK(lr.det == bezout_matrix(g).determinant());
        CHECK(lr.u.degree() <= g.degree() - 1);
        CHECK(lr.v.degree() <= g.degree() - 2);
    }
}

TEST_CASE("point to ellipsoid against the oracle") {
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + k % 2;
        const Quadric e = random_ellipsoid(n, random_point(n, 2));
        VectorQ x0 = random_point(n, 6);
        if (e.value(x0) == 0) x0[0] += Scalar(1, 3);
        CAPTURE(k);
        check_report(solve_point(e, x0), false, brute::point_distance(e, x0));
    }
}

TEST_CASE("ellipsoid to linear variety against the oracle") {
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + k % 2, codim = n == 2 ? 1 : 1 + (k / 2) % 2;
        const Quadric e = random_ellipsoid(n, random_point(n, 2));
        MatrixQ c(n, codim);
        while (true) {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < codim; ++j) c(i, j) = uniform(-3, 3);
            if (rank(c) == codim) break;
        }
        const LinearVariety v(c, random_point(codim, 8));
        const double ref = brute::variety_distance(e, v);
        CAPTURE(k);
        const DistanceReport r = solve_variety(e, v);
        if (r.intersecting) {
            CHECK(ref < 1e-6);
        } else {
            CHECK(r.F.degree() > 0);
            CHECK(r.F.degree() % 2 == 0);
            REQUIRE(r.has_value);
            CHECK(dbl(r.d) == doctest::Approx(ref).epsilon(1e-6));
        }
    }
}

TEST_CASE("variety distance polynomial has degree 2k") {
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = 2 + k % 3, codim = 1 + k % (n - 1);
        MatrixQ m(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(uniform(-9, 9), uniform(1, 5));
        MatrixQ a = m.transpose() * m;
        for (std::size_t i = 0; i < n; ++i) a(i, i) += frac(uniform(1, 9), uniform(1, 4));
        const Quadric e = normalize(a, random_point(n, 5), -frac(uniform(1, 9), uniform(1, 3)));
        MatrixQ c(n, codim);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < codim; ++j) c(i, j) = frac(uniform(-9, 9), uniform(1, 4));
        } while (rank(c) != codim);
        CAPTURE(k);
        CHECK(variety_distance_poly(e, LinearVariety(c, random_point(codim, 8))).degree() ==
              static_cast<long>(2 * codim));
    }
}

TEST_CASE("two centred quadrics against the oracle") {
    for (int k = 0, done = 0; done < 100; ++k) {
        const std::size_t n = 2 + k % 2;
        const VectorQ o(n);
        const Quadric q1 = random_ellipsoid(n, o), q2 = random_ellipsoid(n, o);
        if (q1.A == q2.A) continue;
        ++done;
        const auto ref = brute::pair_distance(q1, q2);
        CAPTURE(k);
        CAPTURE(show(q1));
        CAPTURE(show(q2));
        check_report(solve_centered(q1, q2), ref.crossing, ref.d);
    }
}

TEST_CASE("two general quadrics in the plane against the oracle") {
    for (int k = 0; k < 100; ++k) {
        const Quadric q1 = random_ellipsoid(2, random_point(2, 2));
        const Quadric q2 = random_ellipsoid(2, random_point(2, 6));
        const auto ref = brute::pair_distance(q1, q2);
        CAPTURE(k);
        CAPTURE(show(q1));
        CAPTURE(show(q2));
        check_report(solve_general(q1, q2), ref.crossing, ref.d);
    }
}

TEST_CASE("two general quadrics in space against the oracle") {
    for (int k = 0; k < QDIST_SPACE_PAIRS; ++k) {
        const Quadric q1 = random_ellipsoid(3, random_point(3, 1));
        const Quadric q2 = random_ellipsoid(3, random_point(3, 5));
        const auto ref = brute::pair_distance(q1, q2);
        CAPTURE(k);
        CAPTURE(show(q1));
        CAPTURE(show(q2));
        check_report(solve_general(q1, q2), ref.crossing, ref.d);
    }
}

TEST_CASE("moving ellipses against the oracle") {
    for (int k = 0; k < 100; ++k) {
        // centre (a t + b, c t + e), fixed axes, t in [lo, lo + w]
        const Scalar a = uniform(-3, 3), b = uniform(-3, 3), c = uniform(-3, 3), e = uniform(-3, 3);
        const Scalar p = uniform(1, 4), q = uniform(1, 4);
        const UniPoly cx({b, a}, "t"), cy({e, c}, "t");
        const UniPoly zero({}, "t");
        std::vector<std::vector<UniPoly>> A{{UniPoly::constant(p, "t"), zero}, {zero, UniPoly::constant(q, "t")}};
        std::vector<UniPoly> B{-p * cx, -q * cy};
        const UniPoly cc = p * cx * cx + q * cy * cy - UniPoly::constant(uniform(1, 6), "t");
        const Scalar lo = uniform(-2, 1), hi = lo + uniform(1, 3);
        const QuadricFamily fam(A, B, cc, lo, hi);
        VectorQ x0 = random_point(2, 7);
        CAPTURE(k);
        CAPTURE(to_string(x0[0]) + "," + to_string(x0[1]) + " p=" + to_string(p) + " q=" + to_string(q) +
                " cx=" + cx.to_string() + " cy=" + cy.to_string() + " c=" + cc.to_string() + " t in [" +
                to_string(lo) + "," + to_string(hi) + "]");
        const FamilyReport r = family_solve(fam, x0, 128);
        const double ref = brute::family_distance(fam, x0, dbl(lo), dbl(hi));
        if (r.touching) {
            CHECK(ref < 1e-5);
        } else {
            REQUIRE(r.has_value);
            CHECK(dbl(r.d) == doctest::Approx(ref).epsilon(1e-5));
        }
    }
}
