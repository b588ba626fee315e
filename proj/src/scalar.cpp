#include "qdist/scalar.hpp"

#include <cctype>
#include <cmath>

namespace qdist {

namespace {

Integer floor_of(const Scalar& v) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return q;
}

Scalar simplest_positive(const Scalar& lo, const Scalar& hi) {
    const Integer fl = floor_of(lo);
    if (Scalar(fl) == lo) return lo;
    if (Scalar(fl + 1) <= hi) return Scalar(fl + 1);
    // lo and hi share the integer part; recurse on the reciprocal fractional parts.
    const Scalar inner = simplest_positive(1 / (hi - fl), 1 / (lo - fl));
    return Scalar(fl) + 1 / inner;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw DomainError("empty rational literal");
    try {
        const auto dot = s.find('.');
        if (dot != std::string::npos) {
            if (s.find('/') != std::string::npos) throw DomainError("mixed decimal and fraction: " + s);
            bool neg = false;
            std::string body = s;
            if (body[0] == '-' || body[0] == '+') {
                neg = body[0] == '-';
                body = body.substr(1);
            }
            const std::string whole = body.substr(0, dot - (s.size() - body.size()));
            const std::string frac = body.substr(whole.size() + 1);
            for (char c : whole + frac) {
                if (!std::isdigit(static_cast<unsigned char>(c))) throw DomainError("bad decimal literal: " + s);
            }
            Integer num(whole.empty() ? "0" : whole);
            Integer den = 1;
            for (char c : frac) {
                num = num * 10 + (c - '0');
                den *= 10;
            }
            Scalar r(num, den);
            r.canonicalize();
            return neg ? Scalar(-r) : r;
        }
        Scalar r(s, 10);
        if (r.get_den() == 0) throw DomainError("zero denominator: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw DomainError("bad rational literal: " + s);
    }
}

std::string to_string(const Scalar& value) {
    return value.get_str(10);
}

std::string to_decimal(const Scalar& value, int digits) {
    if (value == 0) return "0";
    const mp_bitcnt_t prec = static_cast<mp_bitcnt_t>(digits * 3.33 + 64);
    mpf_class f(value, prec);
    mp_exp_t exp10 = 0;
    char* raw = mpf_get_str(nullptr, &exp10, 10, static_cast<size_t>(digits), f.get_mpf_t());
    std::string mant(raw);
    void (*freefunc)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, std::char_traits<char>::length(raw) + 1);

    bool neg = false;
    if (!mant.empty() && mant[0] == '-') {
        neg = true;
        mant = mant.substr(1);
    }
    std::string out;
    if (exp10 > 0 && exp10 <= 40) {
        if (static_cast<mp_exp_t>(mant.size()) <= exp10) {
            out = mant + std::string(static_cast<size_t>(exp10) - mant.size(), '0');
        } else {
            out = mant.substr(0, static_cast<size_t>(exp10)) + "." + mant.substr(static_cast<size_t>(exp10));
        }
    } else if (exp10 <= 0 && exp10 > -20) {
        out = "0." + std::string(static_cast<size_t>(-exp10), '0') + mant;
    } else {
        out = mant.substr(0, 1) + (mant.size() > 1 ? "." + mant.substr(1) : "") + "e" + std::to_string(exp10 - 1);
    }
    return neg ? "-" + out : out;
}

double to_double(const Scalar& value) { return value.get_d(); }

Scalar sqrt_approx(const Scalar& value, int bits) {
    if (value < 0) throw DomainError("sqrt of negative rational");
    if (value == 0) return Scalar(0);
    const unsigned long k = static_cast<unsigned long>(bits) + 2;
    // floor(value * 4^k), then integer sqrt, then divide by 2^k.
    Integer scaled = value.get_num();
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
    mpz_fdiv_q(scaled.get_mpz_t(), scaled.get_mpz_t(), value.get_den_mpz_t());
    Integer root;
    mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
    Scalar out(root);
    mpq_div_2exp(out.get_mpq_t(), out.get_mpq_t(), k);
    return out;
}

Scalar simplest_between(const Scalar& lo, const Scalar& hi) {
    if (lo > hi) return simplest_between(hi, lo);
    if (lo <= 0 && hi >= 0) return Scalar(0);
    if (hi < 0) return -simplest_positive(-hi, -lo);
    return simplest_positive(lo, hi);
}

Scalar pow2(long e) {
    Scalar r(1);
    if (e >= 0) {
        mpq_mul_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    } else {
        mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    }
    return r;
}

Scalar pow(const Scalar& base, unsigned long e) {
    Scalar r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), e);
    r.canonicalize();
    return r;
}

}  // namespace qdist
