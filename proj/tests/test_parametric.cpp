#include "doctest.h"
#include "qdist/parametric.hpp"

using namespace qdist;

namespace {

UniPoly tp(std::vector<Scalar> c) { return UniPoly(std::move(c), "t"); }

// unit circles centred at (t, 0)
QuadricFamily sliding_circle(std::optional<Scalar> lo, std::optional<Scalar> hi) {
    return QuadricFamily({{tp({1}), tp({})}, {tp({}), tp({1})}}, {tp({0, -1}), tp({})}, tp({-1, 0, 1}), lo, hi);
}

}  // namespace

TEST_CASE("family validation") {
    CHECK_THROWS_AS(QuadricFamily({{tp({1})}}, {tp({}), tp({})}, tp({-1})), DomainError);
    CHECK_THROWS_AS(sliding_circle(Scalar(2), Scalar(1)), DomainError);
    const auto f = sliding_circle(Scalar(0), Scalar(1));
    CHECK(f.contains(Scalar(1, 2)));
    CHECK_FALSE(f.contains(Scalar(2)));
    CHECK(f.value(VectorQ{1, 0}, 1) == -1);
    CHECK(f.value_poly(VectorQ{3, 0}) == tp({8, -6, 1}));
    CHECK(f.param_degree() == 2);
}

TEST_CASE("moving circle attains its distance at the endpoint") {
    const FamilyReport r = family_solve(sliding_circle(Scalar(0), Scalar(1)), VectorQ{3, 0});
    REQUIRE(r.has_value);
    CHECK(r.d == 1);
    REQUIRE(r.t_star);
    CHECK(*r.t_star == 1);
    CHECK(r.branch == "upper");
}

TEST_CASE("interior stationary parameter") {
    // point above the track: nearest member is the one right below it
    const FamilyReport r = family_solve(sliding_circle(Scalar(-5), Scalar(5)), VectorQ{Scalar(1, 2), 3});
    REQUIRE(r.has_value);
    CHECK(r.d == 2);
    REQUIRE(r.t_star);
    CHECK(*r.t_star == Scalar(1, 2));
    CHECK(r.branch == "interior");
}

TEST_CASE("constant family is degenerate in t") {
    const QuadricFamily f({{tp({1}), tp({})}, {tp({}), tp({1})}}, {tp({}), tp({})}, tp({-1}), Scalar(0), Scalar(1));
    const FamilyReport r = family_solve(f, VectorQ{3, 0});
    CHECK(r.polys.degenerate);
    REQUIRE(r.has_value);
    CHECK(r.d == 2);
}

TEST_CASE("touching members") {
    const auto f = sliding_circle(Scalar(0), Scalar(4));
    const auto t = family_touching(f, VectorQ{3, 0});
    REQUIRE(t);
    CHECK(f.value(VectorQ{3, 0}, *t) == 0);
    const FamilyReport r = family_solve(f, VectorQ{3, 0});
    CHECK(r.touching);
    CHECK(r.d == 0);
    CHECK_FALSE(family_touching(sliding_circle(Scalar(0), Scalar(1)), VectorQ{3, 0}));
}
