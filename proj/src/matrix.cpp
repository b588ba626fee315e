#include "qdist/matrix.hpp"

#include "qdist/poly.hpp"
#include "qdist/realroots.hpp"

#include <algorithm>

namespace qdist {

bool VectorQ::is_zero() const {
    return std::all_of(v_.begin(), v_.end(), [](const Scalar& s) { return s == 0; });
}

VectorQ operator+(const VectorQ& a, const VectorQ& b) {
    if (a.dim() != b.dim()) throw DomainError("vector dimension mismatch");
    VectorQ r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] + b[i];
    return r;
}

VectorQ operator-(const VectorQ& a, const VectorQ& b) {
    if (a.dim() != b.dim()) throw DomainError("vector dimension mismatch");
    VectorQ r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = a[i] - b[i];
    return r;
}

VectorQ operator-(const VectorQ& a) {
    VectorQ r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = -a[i];
    return r;
}

VectorQ operator*(const Scalar& s, const VectorQ& a) {
    VectorQ r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = s * a[i];
    return r;
}

Scalar dot(const VectorQ& a, const VectorQ& b) {
    if (a.dim() != b.dim()) throw DomainError("vector dimension mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
    return s;
}

MatrixQ::MatrixQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

MatrixQ::MatrixQ(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    a_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        a_.insert(a_.end(), r.begin(), r.end());
    }
}

MatrixQ MatrixQ::identity(std::size_t n) {
    MatrixQ m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

MatrixQ MatrixQ::diagonal(std::span<const Scalar> d) {
    MatrixQ m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

MatrixQ MatrixQ::diagonal(std::initializer_list<Scalar> d) {
    return diagonal(std::span<const Scalar>(d.begin(), d.size()));
}

MatrixQ MatrixQ::symmetric(std::initializer_list<std::initializer_list<Scalar>> rows) {
    MatrixQ m(rows);
    if (!m.is_symmetric()) throw DomainError("matrix literal is not symmetric");
    return m;
}

MatrixQ MatrixQ::from_columns(std::span<const VectorQ> cols) {
    if (cols.empty()) throw DomainError("no columns");
    MatrixQ m(cols[0].dim(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].dim() != m.rows()) throw DomainError("column dimension mismatch");
        for (std::size_t i = 0; i < m.rows(); ++i) m(i, j) = cols[j][i];
    }
    return m;
}

bool MatrixQ::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = i + 1; j < cols_; ++j)
            if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
}

bool MatrixQ::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const Scalar& s) { return s == 0; });
}

VectorQ MatrixQ::row(std::size_t i) const {
    VectorQ r(cols_);
    for (std::size_t j = 0; j < cols_; ++j) r[j] = (*this)(i, j);
    return r;
}

VectorQ MatrixQ::col(std::size_t j) const {
    VectorQ c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
}

MatrixQ MatrixQ::transpose() const {
    MatrixQ t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

MatrixQ MatrixQ::minor_matrix(std::size_t ri, std::size_t cj) const {
    MatrixQ m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, r = 0; i < rows_; ++i) {
        if (i == ri) continue;
        for (std::size_t j = 0, c = 0; j < cols_; ++j) {
            if (j == cj) continue;
            m(r, c++) = (*this)(i, j);
        }
        ++r;
    }
    return m;
}

MatrixQ MatrixQ::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    MatrixQ b(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
    return b;
}

void MatrixQ::set_block(std::size_t r0, std::size_t c0, const MatrixQ& b) {
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

MatrixQ operator+(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
    MatrixQ r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
    return r;
}

MatrixQ operator-(const MatrixQ& a, const MatrixQ& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DomainError("matrix shape mismatch");
    MatrixQ r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

MatrixQ operator*(const MatrixQ& a, const MatrixQ& b) {
    if (a.cols() != b.rows()) throw DomainError("matrix product shape mismatch");
    MatrixQ r(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

MatrixQ operator*(const Scalar& s, const MatrixQ& a) {
    MatrixQ r(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = s * a(i, j);
    return r;
}

VectorQ operator*(const MatrixQ& a, const VectorQ& x) {
    if (a.cols() != x.dim()) throw DomainError("matrix-vector shape mismatch");
    VectorQ r(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Scalar s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a(i, j) * x[j];
        r[i] = s;
    }
    return r;
}

Scalar determinant(const MatrixQ& m) {
    if (!m.is_square()) throw DomainError("determinant of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Scalar(1);

    // Clear denominators row by row; det(m) = det(intm) / prod(scale).
    std::vector<Integer> a(n * n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j).get_num() * (l / m(i, j).get_den());
        scale *= l;
    }

    int swaps = 0;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k * n + k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p * n + k] == 0) ++p;
            if (p == n) return Scalar(0);
            for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[p * n + j]);
            ++swaps;
        }
        const Integer& piv = a[k * n + k];
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer& e = a[i * n + j];
                e = e * piv - a[i * n + k] * a[k * n + j];
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            a[i * n + k] = 0;
        }
        prev = piv;
    }
    Scalar det(a[n * n - 1], scale);
    det.canonicalize();
    return (swaps % 2) ? Scalar(-det) : det;
}

MatrixQ adjugate(const MatrixQ& m) {
    if (!m.is_square()) throw DomainError("adjugate of non-square matrix");
    const std::size_t n = m.rows();
    if (n == 1) return MatrixQ{{Scalar(1)}};
    if (n > 4) {
        const Scalar d = determinant(m);
        if (d != 0) return d * inverse(m);
    }
    MatrixQ adj(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Scalar c = determinant(m.minor_matrix(i, j));
            adj(j, i) = ((i + j) % 2) ? Scalar(-c) : c;
        }
    return adj;
}

std::vector<std::size_t> row_reduce(MatrixQ& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Scalar inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c) == 0) continue;
            const Scalar f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j)
                if (m(r, j) != 0) m(i, j) -= f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

MatrixQ inverse(const MatrixQ& m) {
    if (!m.is_square()) throw DomainError("inverse of non-square matrix");
    const std::size_t n = m.rows();
    MatrixQ aug(n, 2 * n);
    aug.set_block(0, 0, m);
    aug.set_block(0, n, MatrixQ::identity(n));
    const auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("matrix is singular");
    return aug.block(0, n, n, n);
}

VectorQ solve_linear(const MatrixQ& m, const VectorQ& rhs) {
    if (!m.is_square()) throw DomainError("solve_linear needs a square matrix");
    if (rhs.dim() != m.rows()) throw DomainError("right-hand side dimension mismatch");
    const std::size_t n = m.rows();
    MatrixQ aug(n, n + 1);
    aug.set_block(0, 0, m);
    for (std::size_t i = 0; i < n; ++i) aug(i, n) = rhs[i];
    const auto piv = row_reduce(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw SingularMatrix("linear system is singular");
    return aug.col(n);
}

std::size_t rank(const MatrixQ& m) {
    MatrixQ c = m;
    return row_reduce(c).size();
}

const char* to_string(Definiteness d) {
    switch (d) {
        case Definiteness::PositiveDefinite: return "positive-definite";
        case Definiteness::NegativeDefinite: return "negative-definite";
        case Definiteness::Indefinite: return "indefinite";
        case Definiteness::SemidefiniteDegenerate: return "semidefinite-degenerate";
    }
    return "?";
}

Definiteness definiteness(const MatrixQ& m) {
    if (!m.is_symmetric()) throw DomainError("definiteness of non-symmetric matrix");
    const std::size_t n = m.rows();

    // Sylvester: all leading minors nonzero decides the inertia completely.
    std::vector<int> minor_signs;
    bool regular = true;
    for (std::size_t k = 1; k <= n; ++k) {
        const int s = sign(determinant(m.block(0, 0, k, k)));
        if (s == 0) {
            regular = false;
            break;
        }
        minor_signs.push_back(s);
    }
    if (regular) {
        if (std::all_of(minor_signs.begin(), minor_signs.end(), [](int s) { return s > 0; }))
            return Definiteness::PositiveDefinite;
        bool alternating = true;
        for (std::size_t k = 0; k < n; ++k)
            if (minor_signs[k] != ((k % 2 == 0) ? -1 : 1)) alternating = false;
        return alternating ? Definiteness::NegativeDefinite : Definiteness::Indefinite;
    }

    const UniPoly chi = characteristic_polynomial(m);
    const RootSignCounts counts = count_root_signs(chi);
    if (counts.positive > 0 && counts.negative > 0) return Definiteness::Indefinite;
    if (counts.zero == 0) {
        return counts.positive > 0 ? Definiteness::PositiveDefinite : Definiteness::NegativeDefinite;
    }
    return Definiteness::SemidefiniteDegenerate;
}

}  // namespace qdist
