#pragma once

#include "qdist/matrix.hpp"
#include "qdist/scalar.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qdist {

/// Dense univariate polynomial over Q, coefficients by ascending power.
/// Always kept trimmed: the leading stored coefficient is nonzero, and the
/// zero polynomial has no coefficients and degree -1.
class UniPoly {
public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Scalar> ascending, std::string var = "x");
    explicit UniPoly(std::vector<Scalar> ascending, std::string var = "x");

    static UniPoly constant(const Scalar& c, std::string var = "x");
    /// c * var^k
    static UniPoly monomial(std::size_t k, const Scalar& c = 1, std::string var = "x");
    /// The product of (var - r) over the given roots.
    static UniPoly from_roots(std::span<const Scalar> roots, std::string var = "x");

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    /// Coefficient of var^k (zero beyond the degree).
    Scalar operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(0); }
    const Scalar& lead() const;
    std::span<const Scalar> coefficients() const { return c_; }
    const std::string& var() const { return var_; }
    UniPoly with_var(std::string v) const;

    Scalar eval(const Scalar& x) const;
    /// Sign of p(x) computed exactly.
    int sign_at(const Scalar& x) const;
    UniPoly derivative() const;
    /// p(-x)
    UniPoly reflect() const;
    /// p(x + s)
    UniPoly shift(const Scalar& s) const;
    UniPoly monic() const;
    /// Index of the lowest nonzero coefficient (multiplicity of the root 0).
    std::size_t trailing_zeros() const;
    /// p / x^trailing_zeros()
    UniPoly strip_trailing_zeros() const;

    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    UniPoly& operator*=(const Scalar& s);

    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string() const;

private:
    void trim();
    std::vector<Scalar> c_;
    std::string var_ = "x";
};

UniPoly operator+(UniPoly a, const UniPoly& b);
UniPoly operator-(UniPoly a, const UniPoly& b);
UniPoly operator-(const UniPoly& a);
UniPoly operator*(const UniPoly& a, const UniPoly& b);
UniPoly operator*(const Scalar& s, UniPoly a);
UniPoly pow(const UniPoly& p, unsigned e);

struct DivRem {
    UniPoly quotient;
    UniPoly remainder;
};

/// num = quotient * den + remainder with deg remainder < deg den.
DivRem divrem(const UniPoly& num, const UniPoly& den);
UniPoly exact_quotient(const UniPoly& num, const UniPoly& den);

/// lead(den)^(deg num - deg den + 1) * num mod den, computed without division.
UniPoly pseudo_remainder(const UniPoly& num, const UniPoly& den);

/// Monic gcd (zero only if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct SquarefreeSplit {
    UniPoly gcd_with_derivative;  ///< gcd(p, p'), monic
    UniPoly squarefree_part;      ///< p / gcd(p, p')
};
SquarefreeSplit gcd_squarefree(const UniPoly& p);

/// Yun decomposition p = c * prod f_i^i; entry i-1 holds f_i (monic, possibly 1).
std::vector<UniPoly> squarefree_decomposition(const UniPoly& p);

/// Res(p, q) = lead(p)^deg(q) * prod over roots r of p of q(r),
/// computed by the subresultant polynomial remainder sequence.
Scalar resultant(const UniPoly& p, const UniPoly& q);

/// Splits p = content * primitive with primitive having coprime integer
/// coefficients and a positive leading coefficient.
std::pair<Scalar, UniPoly> content_primitive(const UniPoly& p);

/// True if a = c * b for some nonzero rational c.
bool equal_up_to_content(const UniPoly& a, const UniPoly& b);

/// det(x I - m), monic of degree n.
UniPoly characteristic_polynomial(const MatrixQ& m);

/// Polynomial in a main variable whose coefficients are polynomials in a
/// parameter: sum_i coeff(i)(param) * main^i.
class ParamPoly {
public:
    ParamPoly() = default;
    ParamPoly(std::vector<UniPoly> coeffs, std::string main_var = "x", std::string param_var = "t");

    static ParamPoly from_uni(const UniPoly& p, std::string param_var = "t");

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    /// Maximum degree in the parameter over all coefficients.
    long param_degree() const;
    bool is_zero() const { return c_.empty(); }
    const UniPoly& operator[](std::size_t i) const { return c_[i]; }
    UniPoly coeff(std::size_t i) const;
    const UniPoly& lead() const;
    std::span<const UniPoly> coefficients() const { return c_; }
    const std::string& main_var() const { return main_; }
    const std::string& param_var() const { return param_; }

    /// Substitutes the parameter, leaving a polynomial in the main variable.
    UniPoly eval_param(const Scalar& t) const;
    /// Substitutes the main variable, leaving a polynomial in the parameter.
    UniPoly eval_main(const Scalar& x) const;
    Scalar eval(const Scalar& x, const Scalar& t) const;

    ParamPoly derivative_main() const;
    ParamPoly derivative_param() const;
    /// The same polynomial with the roles of main variable and parameter exchanged.
    ParamPoly swap_variables() const;

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.c_ == b.c_; }
    std::string to_string() const;

private:
    void trim();
    std::vector<UniPoly> c_;
    std::string main_ = "x";
    std::string param_ = "t";
};

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b);
ParamPoly operator-(const ParamPoly& a, const ParamPoly& b);
ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

struct ParamDivRem {
    ParamPoly quotient;
    ParamPoly remainder;
};

/// Division in the main variable. The divisor's leading coefficient must be a
/// nonzero constant, otherwise the quotient leaves Q[t][x] and Degeneracy is
/// thrown (use param_pseudo_remainder instead).
ParamDivRem divrem(const ParamPoly& num, const ParamPoly& den);

/// lead(den)^(deg num - deg den + 1) * num mod den in Q[t][x].
ParamPoly param_pseudo_remainder(const ParamPoly& num, const ParamPoly& den);

/// Dense bivariate polynomial sum c(i,j) x1^i x2^j.
class BiPoly {
public:
    BiPoly() = default;
    /// rows index the power of x1, columns the power of x2
    explicit BiPoly(std::vector<std::vector<Scalar>> grid);

    static BiPoly constant(const Scalar& c);
    static BiPoly monomial(std::size_t i, std::size_t j, const Scalar& c = 1);
    static BiPoly from_param(const ParamPoly& p);  ///< main variable -> x1, parameter -> x2

    bool is_zero() const { return c_.empty(); }
    long degree_x1() const { return static_cast<long>(c_.size()) - 1; }
    long degree_x2() const;
    long total_degree() const;
    Scalar coeff(std::size_t i, std::size_t j) const;

    Scalar eval(const Scalar& x1, const Scalar& x2) const;
    UniPoly eval_x1(const Scalar& x1) const;  ///< polynomial in x2
    UniPoly eval_x2(const Scalar& x2) const;  ///< polynomial in x1
    BiPoly d_x1() const;
    BiPoly d_x2() const;
    /// x1 -> x1 + s1, x2 -> x2 + s2
    BiPoly translate(const Scalar& s1, const Scalar& s2) const;
    ParamPoly to_param(std::string main_var = "x1", std::string param_var = "x2") const;

    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.c_ == b.c_; }
    std::string to_string() const;

private:
    void trim();
    std::vector<std::vector<Scalar>> c_;
};

BiPoly operator+(const BiPoly& a, const BiPoly& b);
BiPoly operator-(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const BiPoly& a, const BiPoly& b);
BiPoly operator*(const Scalar& s, const BiPoly& a);

}  // namespace qdist
