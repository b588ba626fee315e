#include "doctest.h"
#include "qdist/matrix.hpp"

#include <random>

using namespace qdist;

namespace {

Scalar frac(long num, long den) {
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

MatrixQ random_matrix(std::mt19937& rng, std::size_t n, int range = 9) {
    std::uniform_int_distribution<int> d(-range, range);
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = frac(d(rng), 1 + std::abs(d(rng)) % 4);
    return m;
}

Scalar leibniz(const MatrixQ& m) {
    if (m.rows() == 1) return m(0, 0);
    Scalar s = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Scalar term = m(0, j) * leibniz(m.minor_matrix(0, j));
        s += j % 2 ? Scalar(-term) : term;
    }
    return s;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
    CHECK(determinant(MatrixQ{{2, 1}, {1, 3}}) == 5);
    CHECK(determinant(MatrixQ{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(MatrixQ{{0, 1}, {1, 0}}) == -1);
    CHECK(determinant(MatrixQ::identity(4)) == 1);
}

TEST_CASE("Bareiss agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int k = 0; k < 40; ++k) {
        const MatrixQ m = random_matrix(rng, 2 + k % 4);
        CHECK(determinant(m) == leibniz(m));
    }
}

TEST_CASE("adjugate identity, singular matrices included") {
    std::mt19937 rng(11);
    for (int k = 0; k < 120; ++k) {
        const std::size_t n = 1 + k % 5;
        MatrixQ m = random_matrix(rng, n);
        if (k % 3 == 0 && n > 1)
            for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = 2 * m(0, j);
        const MatrixQ adj = adjugate(m);
        const MatrixQ want = determinant(m) * MatrixQ::identity(n);
        CHECK(m * adj == want);
        CHECK(adj * m == want);
    }
}

TEST_CASE("inverse and linear solve") {
    const MatrixQ m{{4, 1}, {2, 3}};
    CHECK(m * inverse(m) == MatrixQ::identity(2));
    const VectorQ x = solve_linear(m, VectorQ{1, 2});
    CHECK(m * x == VectorQ{1, 2});
    CHECK_THROWS_AS(inverse(MatrixQ{{1, 2}, {2, 4}}), SingularMatrix);
    CHECK_THROWS_AS(determinant(MatrixQ(2, 3)), DomainError);
}

TEST_CASE("rank and row reduction") {
    MatrixQ m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
    CHECK(rank(m) == 2);
    const auto piv = row_reduce(m);
    REQUIRE(piv.size() == 2);
    CHECK(piv[0] == 0);
    CHECK(piv[1] == 1);
    CHECK(m(0, 0) == 1);
    CHECK(m(1, 1) == 1);
    CHECK(m.row(2).is_zero());
}

TEST_CASE("definiteness classification") {
    CHECK(definiteness(MatrixQ{{2, 1}, {1, 2}}) == Definiteness::PositiveDefinite);
    CHECK(definiteness(MatrixQ{{-2, 0}, {0, -1}}) == Definiteness::NegativeDefinite);
    CHECK(definiteness(MatrixQ{{1, 0}, {0, -1}}) == Definiteness::Indefinite);
    CHECK(definiteness(MatrixQ{{1, 0}, {0, 0}}) == Definiteness::SemidefiniteDegenerate);
    // leading minor vanishes but the matrix is indefinite
    CHECK(definiteness(MatrixQ{{0, 1}, {1, 0}}) == Definiteness::Indefinite);
    CHECK_THROWS_AS(MatrixQ::symmetric({{1, 2}, {3, 1}}), DomainError);
}

TEST_CASE("Schur complement determinant") {
    std::mt19937 rng(5);
    // 100 cases with a regular leading block
    for (int k = 0, done = 0; done < 100; ++k) {
        const std::size_t p = 1 + k % 3, q = 1 + (k / 3) % 3;
        MatrixQ m = random_matrix(rng, p + q);
        const MatrixQ a = m.block(0, 0, p, p);
        if (determinant(a) == 0) continue;
        ++done;
        const MatrixQ b = m.block(0, p, p, q), c = m.block(p, 0, q, p), d = m.block(p, p, q, q);
        CHECK(determinant(m) == determinant(a) * determinant(d - c * inverse(a) * b));
    }
}
