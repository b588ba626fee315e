#include "qdist/modular.hpp"

#include <mutex>

namespace qdist::modular {

u64 prime(std::size_t k) {
    static std::vector<u64> cache;
    static std::mutex guard;
    std::lock_guard<std::mutex> lock(guard);
    while (cache.size() <= k) {
        Integer c = cache.empty() ? Integer(u64{1} << 62) : Integer(static_cast<unsigned long>(cache.back()));
        do {
            c -= 1;
        } while (mpz_probab_prime_p(c.get_mpz_t(), 30) == 0);
        cache.push_back(static_cast<u64>(c.get_ui()));
    }
    return cache[k];
}

u64 inv(u64 a, u64 p) {
    if (a == 0) throw DomainError("inverse of zero modulo p");
    __int128 t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const __int128 q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (t < 0) t += p;
    return static_cast<u64>(t);
}

std::optional<u64> image(const Scalar& x, u64 p) {
    const u64 d = mpz_fdiv_ui(x.get_den_mpz_t(), p);
    if (d == 0) return std::nullopt;
    const u64 n = mpz_fdiv_ui(x.get_num_mpz_t(), p);
    return mul(n, inv(d, p), p);
}

std::vector<std::size_t> MatrixP::row_reduce() {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < c_ && r < r_; ++c) {
        std::size_t k = r;
        while (k < r_ && (*this)(k, c) == 0) ++k;
        if (k == r_) continue;
        if (k != r)
            for (std::size_t j = 0; j < c_; ++j) std::swap((*this)(k, j), (*this)(r, j));
        u64* pr = &a_[r * c_];
        const u64 s = inv(pr[c], p_);
        for (std::size_t j = c; j < c_; ++j) pr[j] = mul(pr[j], s, p_);
        for (std::size_t i = 0; i < r_; ++i) {
            u64* pi = &a_[i * c_];
            if (i == r || pi[c] == 0) continue;
            const u64 f = pi[c];
            for (std::size_t j = c; j < c_; ++j)
                if (pr[j] != 0) pi[j] = sub(pi[j], mul(f, pr[j], p_), p_);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

u64 MatrixP::determinant() const {
    if (r_ != c_) throw DomainError("determinant of non-square matrix");
    MatrixP m = *this;
    u64 det = 1;
    for (std::size_t c = 0; c < c_; ++c) {
        std::size_t k = c;
        while (k < r_ && m(k, c) == 0) ++k;
        if (k == r_) return 0;
        if (k != c) {
            for (std::size_t j = 0; j < c_; ++j) std::swap(m(k, j), m(c, j));
            det = sub(0, det, p_);
        }
        det = mul(det, m(c, c), p_);
        const u64 s = inv(m(c, c), p_);
        for (std::size_t i = c + 1; i < r_; ++i) {
            if (m(i, c) == 0) continue;
            const u64 f = mul(m(i, c), s, p_);
            for (std::size_t j = c; j < c_; ++j) m(i, j) = sub(m(i, j), mul(f, m(c, j), p_), p_);
        }
    }
    return det;
}

PolyP MatrixP::charpoly() const {
    if (r_ != c_) throw DomainError("characteristic polynomial of non-square matrix");
    const std::size_t n = r_;
    MatrixP h = *this;
    // similarity reduction to upper Hessenberg form
    for (std::size_t m = 1; m + 1 < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const u64 s = inv(h(m, m - 1), p_);
        for (std::size_t k = m + 1; k < n; ++k) {
            const u64 u = mul(h(k, m - 1), s, p_);
            if (u == 0) continue;
            for (std::size_t j = 0; j < n; ++j) h(k, j) = sub(h(k, j), mul(u, h(m, j), p_), p_);
            for (std::size_t j = 0; j < n; ++j) h(j, m) = add(h(j, m), mul(u, h(j, k), p_), p_);
        }
    }
    // p_{k+1} = (x - h_kk) p_k - sum_i (prod_{j=i+1..k} h_{j,j-1}) h_ik p_i
    std::vector<PolyP> ps{PolyP{1}};
    for (std::size_t k = 0; k < n; ++k) {
        PolyP next(k + 2, 0);
        for (std::size_t d = 0; d <= k; ++d) {
            next[d + 1] = add(next[d + 1], ps[k][d], p_);
            next[d] = sub(next[d], mul(h(k, k), ps[k][d], p_), p_);
        }
        u64 prod = 1;
        for (std::size_t i = k; i-- > 0;) {
            prod = mul(prod, h(i + 1, i), p_);
            if (prod == 0) break;
            const u64 f = mul(prod, h(i, k), p_);
            for (std::size_t d = 0; d < ps[i].size(); ++d) next[d] = sub(next[d], mul(f, ps[i][d], p_), p_);
        }
        ps.push_back(std::move(next));
    }
    return ps.back();
}

MatrixP MatrixP::minor_matrix(std::size_t i, std::size_t j) const {
    MatrixP m(r_ - 1, c_ - 1, p_);
    for (std::size_t a = 0, ra = 0; a < r_; ++a) {
        if (a == i) continue;
        for (std::size_t b = 0, cb = 0; b < c_; ++b) {
            if (b == j) continue;
            m(ra, cb++) = (*this)(a, b);
        }
        ++ra;
    }
    return m;
}

namespace {

void trim(PolyP& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long deg(const PolyP& a) { return static_cast<long>(a.size()) - 1; }

PolyP mul_poly(const PolyP& a, const PolyP& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    PolyP c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = add(c[i + j], mul(a[i], b[j], p), p);
    trim(c);
    return c;
}

PolyP sub_poly(PolyP a, const PolyP& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub(a[i], b[i], p);
    trim(a);
    return a;
}

// a = q b + r
std::pair<PolyP, PolyP> divrem(PolyP a, const PolyP& b, u64 p) {
    if (b.empty()) throw DomainError("division by the zero polynomial");
    if (a.size() < b.size()) return {{}, a};
    PolyP q(a.size() - b.size() + 1, 0);
    const u64 s = inv(b.back(), p);
    for (std::size_t k = q.size(); k-- > 0;) {
        const u64 c = mul(a[k + b.size() - 1], s, p);
        q[k] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) a[k + j] = sub(a[k + j], mul(c, b[j], p), p);
    }
    a.resize(b.size() - 1);
    trim(a);
    trim(q);
    return {q, a};
}

u64 eval(const PolyP& a, u64 x, u64 p) {
    u64 acc = 0;
    for (std::size_t k = a.size(); k-- > 0;) acc = add(mul(acc, x, p), a[k], p);
    return acc;
}

}  // namespace

PolyP interpolate(const std::vector<u64>& x, const std::vector<u64>& y, u64 p) {
    const std::size_t n = x.size();
    std::vector<u64> dd = y;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i)
            dd[i] = mul(sub(dd[i], dd[i - 1], p), inv(sub(x[i], x[i - j], p), p), p);
    PolyP out;
    for (std::size_t k = n; k-- > 0;) {
        // out = out * (t - x[k]) + dd[k]
        PolyP next(out.size() + 1, 0);
        for (std::size_t i = 0; i < out.size(); ++i) {
            next[i + 1] = add(next[i + 1], out[i], p);
            next[i] = sub(next[i], mul(out[i], x[k], p), p);
        }
        next[0] = add(next[0], dd[k], p);
        out = std::move(next);
    }
    trim(out);
    return out;
}

std::optional<RationalFunctionP> cauchy_interpolate(const std::vector<u64>& x, const std::vector<u64>& y,
                                                    std::size_t margin, u64 p) {
    PolyP m{1};
    for (u64 xi : x) m = mul_poly(m, PolyP{sub(0, xi, p), 1}, p);
    PolyP r0 = m, r1 = interpolate(x, y, p);
    if (r1.empty()) return RationalFunctionP{{}, {1}};
    PolyP t0, t1{1};
    const long K = static_cast<long>(x.size());
    long best_jump = K - deg(r1);
    PolyP best_r = r1, best_t = t1;
    while (!r1.empty()) {
        auto [q, r] = divrem(r0, r1, p);
        PolyP t = sub_poly(t0, mul_poly(q, t1, p), p);
        r0 = std::move(r1);
        r1 = std::move(r);
        t0 = std::move(t1);
        t1 = std::move(t);
        if (r1.empty()) break;
        const long jump = deg(r0) - deg(r1);
        if (jump > best_jump) {
            best_jump = jump;
            best_r = r1;
            best_t = t1;
        }
    }
    if (best_jump < static_cast<long>(margin)) return std::nullopt;
    for (u64 xi : x)
        if (eval(best_t, xi, p) == 0) return std::nullopt;
    const u64 s = inv(best_t.back(), p);
    for (auto& c : best_r) c = mul(c, s, p);
    for (auto& c : best_t) c = mul(c, s, p);
    return RationalFunctionP{best_r, best_t};
}

std::optional<Scalar> rational_reconstruct(const Integer& a, const Integer& m) {
    Integer bound = m / 2;
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Integer r0 = m, r1 = a % m, t0 = 0, t1 = 1;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        const Integer q = r0 / r1;
        Integer tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Integer g;
    mpz_gcd(g.get_mpz_t(), r1.get_mpz_t(), t1.get_mpz_t());
    if (g != 1) return std::nullopt;
    Scalar out(r1, t1);
    out.canonicalize();
    return out;
}

std::vector<Scalar> reconstruct(const ImageFn& images, const std::string& reason, std::size_t max_unlucky) {
    std::vector<Integer> residue;
    Integer modulus = 1;
    std::optional<std::vector<Scalar>> last;
    std::size_t stable = 0, unlucky = 0;
    for (std::size_t k = 0;; ++k) {
        const u64 p = prime(k);
        const auto img = images(p);
        if (!img) {
            if (++unlucky >= max_unlucky && modulus == 1)
                throw Degeneracy(reason, "degenerate modulo every tried prime");
            if (unlucky > 64) throw Degeneracy(reason, "too many unlucky primes");
            continue;
        }
        if (residue.empty()) residue.assign(img->size(), 0);
        const Integer P = static_cast<unsigned long>(p);
        const u64 minv = inv(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        for (std::size_t i = 0; i < residue.size(); ++i) {
            const u64 old = mpz_fdiv_ui(residue[i].get_mpz_t(), p);
            const u64 h = mul(sub((*img)[i], old, p), minv, p);
            residue[i] += modulus * Integer(static_cast<unsigned long>(h));
        }
        modulus *= P;

        std::vector<Scalar> values;
        for (const auto& r : residue) {
            auto v = rational_reconstruct(r, modulus);
            if (!v) break;
            values.push_back(*v);
        }
        if (values.size() == residue.size() && last && *last == values) {
            if (++stable >= 2) return values;
        } else {
            stable = 0;
        }
        if (values.size() == residue.size())
            last = std::move(values);
        else
            last.reset();
    }
}

}  // namespace qdist::modular
