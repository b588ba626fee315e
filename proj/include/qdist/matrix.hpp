#pragma once

#include "qdist/scalar.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace qdist {

/// Dense rational column vector.
class VectorQ {
public:
    VectorQ() = default;
    explicit VectorQ(std::size_t dim) : v_(dim) {}
    VectorQ(std::initializer_list<Scalar> values) : v_(values) {}
    explicit VectorQ(std::vector<Scalar> values) : v_(std::move(values)) {}

    std::size_t dim() const { return v_.size(); }
    Scalar& operator[](std::size_t i) { return v_[i]; }
    const Scalar& operator[](std::size_t i) const { return v_[i]; }
    std::span<const Scalar> entries() const { return v_; }
    bool is_zero() const;

    friend bool operator==(const VectorQ&, const VectorQ&) = default;

private:
    std::vector<Scalar> v_;
};

VectorQ operator+(const VectorQ& a, const VectorQ& b);
VectorQ operator-(const VectorQ& a, const VectorQ& b);
VectorQ operator-(const VectorQ& a);
VectorQ operator*(const Scalar& s, const VectorQ& a);
Scalar dot(const VectorQ& a, const VectorQ& b);

/// Dense rational matrix, row-major.
class MatrixQ {
public:
    MatrixQ() = default;
    MatrixQ(std::size_t rows, std::size_t cols);
    MatrixQ(std::initializer_list<std::initializer_list<Scalar>> rows);

    static MatrixQ identity(std::size_t n);
    static MatrixQ diagonal(std::span<const Scalar> d);
    static MatrixQ diagonal(std::initializer_list<Scalar> d);
    /// Throws DomainError unless the rows form an exactly symmetric matrix.
    static MatrixQ symmetric(std::initializer_list<std::initializer_list<Scalar>> rows);
    static MatrixQ from_columns(std::span<const VectorQ> cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }
    bool is_symmetric() const;
    bool is_zero() const;

    Scalar& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Scalar& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    VectorQ row(std::size_t i) const;
    VectorQ col(std::size_t j) const;
    MatrixQ transpose() const;
    /// Matrix with row i and column j removed.
    MatrixQ minor_matrix(std::size_t i, std::size_t j) const;
    /// Copy of the block [r0, r0+nr) x [c0, c0+nc).
    MatrixQ block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    void set_block(std::size_t r0, std::size_t c0, const MatrixQ& b);

    friend bool operator==(const MatrixQ&, const MatrixQ&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> a_;
};

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator-(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const MatrixQ& a, const MatrixQ& b);
MatrixQ operator*(const Scalar& s, const MatrixQ& a);
VectorQ operator*(const MatrixQ& a, const VectorQ& x);

/// Exact determinant by fraction-free (Bareiss) elimination on the
/// row-wise integer-cleared matrix.
Scalar determinant(const MatrixQ& m);

/// adj(m) with m * adj(m) = det(m) * I, valid for singular m.
MatrixQ adjugate(const MatrixQ& m);

/// Inverse; throws SingularMatrix.
MatrixQ inverse(const MatrixQ& m);

/// Exact solution of m x = rhs; throws SingularMatrix when det(m) = 0.
VectorQ solve_linear(const MatrixQ& m, const VectorQ& rhs);

std::size_t rank(const MatrixQ& m);

enum class Definiteness { PositiveDefinite, NegativeDefinite, Indefinite, SemidefiniteDegenerate };

const char* to_string(Definiteness d);

/// Exact classification of a symmetric matrix. Leading principal minors decide
/// when none vanishes; otherwise eigenvalue signs are counted with Sturm
/// sequences on the characteristic polynomial.
Definiteness definiteness(const MatrixQ& m);

inline bool is_sign_definite(Definiteness d) {
    return d == Definiteness::PositiveDefinite || d == Definiteness::NegativeDefinite;
}

/// Reduced row echelon form of `m` in place; returns the pivot column of each
/// pivot row. Columns are scanned left to right.
std::vector<std::size_t> row_reduce(MatrixQ& m);

}  // namespace qdist
