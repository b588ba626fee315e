#include "doctest.h"
#include "qdist/discrim.hpp"
#include "qdist/metrics.hpp"

#include <cmath>

using namespace qdist;

namespace {

Scalar frac(long p, long q) {
    Scalar r(p, q);
    r.canonicalize();
    return r;
}

Quadric circle(const Scalar& x, const Scalar& y, const Scalar& r2) {
    return normalize(MatrixQ::identity(2), VectorQ{-x, -y}, x * x + y * y - r2);
}

bool near(const Scalar& a, const Scalar& b) { return abs(a - b) < Scalar(1, 1000000000); }

}  // namespace

TEST_CASE("normalization") {
    const Quadric q = normalize(MatrixQ{{1, 0}, {0, 4}}, VectorQ{0, 0}, -4);
    CHECK(q.A == MatrixQ{{frac(1, 4), 0}, {0, 1}});
    CHECK(q.value(VectorQ{2, 0}) == 0);
    CHECK_THROWS_AS(normalize(MatrixQ::identity(2), VectorQ{-1, 0}, 0), DomainError);
}

TEST_CASE("point to ellipse") {
    const Quadric e = normalize(MatrixQ{{1, 0}, {0, 4}}, VectorQ{0, 0}, -4);
    CHECK(point_distance_poly(e, VectorQ{1, 1}) == UniPoly({13, -792, 610, -144, 9}, "z"));
    const DistanceReport r = solve_point(e, VectorQ{3, 0});
    CHECK(r.z_star == 1);
    CHECK(r.simple);
    REQUIRE(r.points.pairs.size() == 1);
    CHECK(r.points.pairs[0].x == VectorQ{2, 0});
    // the double zero 2/3 is attained by real points
    const DistanceReport c = solve_point(e, VectorQ{1, 0});
    CHECK(c.z_star == frac(2, 3));
    CHECK_FALSE(c.simple);
    CHECK_FALSE(c.points.pairs.empty());
}

TEST_CASE("ellipse to a line") {
    const Quadric e = normalize(MatrixQ{{1, 0}, {0, 4}}, VectorQ{0, 0}, -4);
    // y = 3
    const DistanceReport r = solve_variety(e, LinearVariety(MatrixQ{{0}, {1}}, VectorQ{3}));
    CHECK(r.z_star == 4);
    CHECK(r.F.degree() == 2);
    CHECK(solve_variety(e, LinearVariety(MatrixQ{{0}, {1}}, VectorQ{frac(1, 2)})).intersecting);
}

TEST_CASE("centred ellipses") {
    const Quadric q1 = normalize(MatrixQ{{10, -6}, {-6, 8}}, VectorQ{0, 0}, -1);
    const Quadric q2 = normalize(MatrixQ{{1, frac(1, 2)}, {frac(1, 2), 1}}, VectorQ{0, 0}, -1);
    CHECK_FALSE(centered_intersects(q1, q2));
    CHECK(centered_intersects(q1, normalize(MatrixQ{{20, 0}, {0, 1}}, VectorQ{0, 0}, -1)));
    const DistanceReport r = solve_centered(q1, q2);
    CHECK(r.z_power == 2);
    CHECK(r.points.pairs.size() == 2);
}

TEST_CASE("concentric circles") {
    // G(lambda, z) is a perfect square in lambda
    const DistanceReport r = solve_centered(circle(0, 0, 1), circle(0, 0, 9));
    CHECK(r.F == UniPoly({64, -20, 1}, "z"));
    CHECK(r.d == 2);
    REQUIRE(r.points.pairs.size() == 2);
    const VectorQ gap = r.points.pairs[0].x - r.points.pairs[0].y;
    CHECK(dot(gap, gap) == 4);
}

TEST_CASE("general pairs with degenerate stationary structure") {
    SUBCASE("equal circles: stationary points at infinity") {
        const DistanceReport r = solve_general(circle(0, 0, 1), circle(4, 0, 1));
        CHECK(r.d == 2);
        REQUIRE(r.points.pairs.size() == 1);
        CHECK(near(r.points.pairs[0].x[0], 1));
        CHECK(near(r.points.pairs[0].y[0], 3));
    }
    SUBCASE("ellipse and circle: a persistent stationary point") {
        const Quadric e = normalize(MatrixQ{{1, 0}, {0, 4}}, VectorQ{0, 0}, -4);
        const DistanceReport r = solve_general(e, circle(4, 1, 1));
        CHECK(near(r.d, parse_scalar("1.19159018399901210743")));
        CHECK(r.warnings.empty());
        CHECK(r.points.pairs.size() == 1);
    }
}

TEST_CASE("general pair intersection") {
    CHECK(general_intersects(circle(0, 0, 1), circle(1, frac(1, 2), 1)).intersects);
    CHECK_FALSE(general_intersects(circle(0, 0, 1), circle(5, 0, 1)).intersects);
    const auto same = general_intersects(circle(0, 0, 1), circle(0, 0, 1));
    CHECK(same.intersects);
    CHECK(same.note == "identical surfaces");
}

TEST_CASE("mirror-symmetric pair with unrealized repeated zeros") {
    // x^2 + 4/3 (y+1)^2 = 1/3 and x^2 + 2 (y-3)^2 = 3/4
    const Quadric q1(MatrixQ{{-1, 0}, {0, frac(-4, 3)}}, VectorQ{0, frac(-4, 3)});
    const Quadric q2(MatrixQ{{frac(-4, 69), 0}, {0, frac(-8, 69)}}, VectorQ{0, frac(8, 23)});
    const auto ir = general_intersects(q1, q2);
    CHECK_FALSE(ir.intersects);
    CHECK(ir.flagged);
    const auto r = solve_general(q1, q2, 64);
    REQUIRE(r.has_value);
    CHECK(to_double(r.d) == doctest::Approx(4 - std::sqrt(0.25) - std::sqrt(0.375)).epsilon(1e-12));
}
