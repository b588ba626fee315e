#pragma once

#include "qdist/scalar.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

// Word-size prime field arithmetic and multimodular reconstruction of
// rational values.
namespace qdist::modular {

using u64 = std::uint64_t;

/// The k-th prime below 2^62, descending.
u64 prime(std::size_t k);

inline u64 add(u64 a, u64 b, u64 p) { return a >= p - b ? a - (p - b) : a + b; }
inline u64 sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + (p - b); }
inline u64 mul(u64 a, u64 b, u64 p) {
    return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p);
}
u64 inv(u64 a, u64 p);

/// Image of a rational modulo p; nullopt when p divides the denominator.
std::optional<u64> image(const Scalar& x, u64 p);

/// Dense row-major matrix over Z/p.
class MatrixP {
public:
    MatrixP(std::size_t rows, std::size_t cols, u64 p) : r_(rows), c_(cols), p_(p), a_(rows * cols, 0) {}

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    u64 modulus() const { return p_; }
    u64& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    u64 operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    /// In-place reduced row echelon form; returns the pivot columns.
    std::vector<std::size_t> row_reduce();
    u64 determinant() const;
    /// det(x I - M), constant term first, monic of degree rows().
    std::vector<u64> charpoly() const;
    /// Matrix with row i and column j removed.
    MatrixP minor_matrix(std::size_t i, std::size_t j) const;

private:
    std::size_t r_, c_;
    u64 p_;
    std::vector<u64> a_;
};

/// Polynomials over Z/p as coefficient vectors, constant term first, no
/// trailing zeros.
using PolyP = std::vector<u64>;

/// Lagrange interpolation through (x[i], y[i]); the x[i] must be distinct.
PolyP interpolate(const std::vector<u64>& x, const std::vector<u64>& y, u64 p);

struct RationalFunctionP {
    PolyP numerator;
    PolyP denominator;  ///< monic
};

/// Cauchy interpolation by the extended Euclidean algorithm, keeping the step
/// with the largest degree jump; that jump must be at least `margin`.
std::optional<RationalFunctionP> cauchy_interpolate(const std::vector<u64>& x, const std::vector<u64>& y,
                                                    std::size_t margin, u64 p);

/// n/d with |n|, d <= sqrt(m/2) and n/d = a mod m, if it exists.
std::optional<Scalar> rational_reconstruct(const Integer& a, const Integer& m);

/// Images of a fixed list of rationals modulo p; nullopt marks an unlucky prime.
using ImageFn = std::function<std::optional<std::vector<u64>>(u64 p)>;

/// Chinese remaindering over successive primes until the rational
/// reconstruction of every value is unchanged by two further primes.
/// Throws Degeneracy(reason) when the first `max_unlucky` primes all fail,
/// which is how a degeneracy over Q shows up.
std::vector<Scalar> reconstruct(const ImageFn& images, const std::string& reason, std::size_t max_unlucky = 4);

}  // namespace qdist::modular
