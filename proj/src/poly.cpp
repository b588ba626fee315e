#include "qdist/poly.hpp"

#include "qdist/interp.hpp"

#include <algorithm>
#include <sstream>

namespace qdist {

namespace {

std::string format_terms(std::span<const Scalar> c, const std::string& var) {
    if (c.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c.size(); k-- > 0;) {
        const Scalar& a = c[k];
        if (a == 0) continue;
        Scalar mag = abs(a);
        if (first) {
            if (a < 0) os << "-";
        } else {
            os << (a < 0 ? " - " : " + ");
        }
        first = false;
        const bool unit = (mag == 1);
        if (k == 0 || !unit) os << qdist::to_string(mag);
        if (k > 0) {
            if (!unit) os << "*";
            os << var;
            if (k > 1) os << "^" << k;
        }
    }
    return os.str();
}

}  // namespace

// ----------------------------------------------------------------- UniPoly

UniPoly::UniPoly(std::initializer_list<Scalar> ascending, std::string var)
    : c_(ascending), var_(std::move(var)) {
    trim();
}

UniPoly::UniPoly(std::vector<Scalar> ascending, std::string var) : c_(std::move(ascending)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::constant(const Scalar& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::monomial(std::size_t k, const Scalar& c, std::string var) {
    std::vector<Scalar> v(k + 1);
    v[k] = c;
    return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::from_roots(std::span<const Scalar> roots, std::string var) {
    UniPoly p = constant(1, var);
    for (const auto& r : roots) p = p * UniPoly({-r, Scalar(1)}, var);
    return p;
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Scalar& UniPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly UniPoly::with_var(std::string v) const {
    UniPoly p = *this;
    p.var_ = std::move(v);
    return p;
}

namespace {

// q^N L p(x) for x = p/q, with L the lcm of the coefficient denominators;
// integer Horner avoids a gcd per step.
Integer scaled_value(std::span<const Scalar> c, const Scalar& x, Integer& scale) {
    Integer L = 1;
    for (const auto& a : c)
        if (a.get_den() != 1) mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), a.get_den_mpz_t());
    const Integer& p = x.get_num();
    const Integer& q = x.get_den();
    auto integral = [&](const Scalar& a) -> Integer { return a.get_num() * (L / a.get_den()); };
    Integer acc = integral(c.back()), qp = 1;
    for (std::size_t k = c.size() - 1; k-- > 0;) {
        qp *= q;
        acc = acc * p + integral(c[k]) * qp;
    }
    scale = L * qp;
    return acc;
}

}  // namespace

Scalar UniPoly::eval(const Scalar& x) const {
    if (c_.empty()) return 0;
    Integer scale;
    Scalar v(scaled_value(c_, x, scale), scale);
    v.canonicalize();
    return v;
}

int UniPoly::sign_at(const Scalar& x) const {
    if (c_.empty()) return 0;
    Integer scale;
    return sgn(scaled_value(c_, x, scale));
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return UniPoly({}, var_);
    std::vector<Scalar> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return UniPoly(std::move(d), var_);
}

UniPoly UniPoly::reflect() const {
    UniPoly r = *this;
    for (std::size_t k = 1; k < r.c_.size(); k += 2) r.c_[k] = -r.c_[k];
    return r;
}

UniPoly UniPoly::shift(const Scalar& s) const {
    // Horner in polynomial arithmetic: p(x + s)
    UniPoly acc({}, var_);
    const UniPoly lin({s, Scalar(1)}, var_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * lin + UniPoly({c_[k]}, var_);
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return (1 / lead()) * (*this);
}

std::size_t UniPoly::trailing_zeros() const {
    std::size_t k = 0;
    while (k < c_.size() && c_[k] == 0) ++k;
    return k;
}

UniPoly UniPoly::strip_trailing_zeros() const {
    const std::size_t k = trailing_zeros();
    return UniPoly(std::vector<Scalar>(c_.begin() + static_cast<long>(k), c_.end()), var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Scalar& s) {
    for (auto& c : c_) c *= s;
    trim();
    return *this;
}

std::string UniPoly::to_string() const { return format_terms(c_, var_); }

UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
UniPoly operator-(const UniPoly& a) { return Scalar(-1) * a; }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var());
    const auto ac = a.coefficients();
    const auto bc = b.coefficients();
    std::vector<Scalar> r(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (ac[i] == 0) continue;
        for (std::size_t j = 0; j < bc.size(); ++j) r[i + j] += ac[i] * bc[j];
    }
    return UniPoly(std::move(r), a.var());
}

UniPoly operator*(const Scalar& s, UniPoly a) { return a *= s; }

UniPoly pow(const UniPoly& p, unsigned e) {
    UniPoly r = UniPoly::constant(1, p.var());
    for (unsigned i = 0; i < e; ++i) r = r * p;
    return r;
}

DivRem divrem(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    std::vector<Scalar> rem(num.coefficients().begin(), num.coefficients().end());
    const long dd = den.degree();
    const long dn = num.degree();
    if (dn < dd) return {UniPoly({}, num.var()), num};
    std::vector<Scalar> q(static_cast<std::size_t>(dn - dd + 1));
    const Scalar inv = 1 / den.lead();
    const auto dc = den.coefficients();
    for (long k = dn; k >= dd; --k) {
        const Scalar f = rem[static_cast<std::size_t>(k)] * inv;
        q[static_cast<std::size_t>(k - dd)] = f;
        if (f == 0) continue;
        for (long j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k - dd + j)] -= f * dc[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {UniPoly(std::move(q), num.var()), UniPoly(std::move(rem), num.var())};
}

UniPoly exact_quotient(const UniPoly& num, const UniPoly& den) {
    auto [q, r] = divrem(num, den);
    if (!r.is_zero()) throw DomainError("polynomial division is not exact");
    return q;
}

UniPoly pseudo_remainder(const UniPoly& num, const UniPoly& den) {
    if (den.is_zero()) throw DomainError("pseudo-division by the zero polynomial");
    if (num.degree() < den.degree()) return num;
    const long e = num.degree() - den.degree() + 1;
    UniPoly scaled = pow(den.lead(), static_cast<unsigned long>(e)) * num;
    return divrem(scaled, den).remainder;
}

std::pair<Scalar, UniPoly> content_primitive(const UniPoly& p) {
    if (p.is_zero()) return {Scalar(0), p};
    Integer g = 0;
    Integer l = 1;
    for (const auto& c : p.coefficients()) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    }
    Scalar content(g, l);
    content.canonicalize();
    if (p.lead() < 0) content = -content;
    return {content, (1 / content) * p};
}

bool equal_up_to_content(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return content_primitive(a).second == content_primitive(b).second.with_var(a.var());
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    UniPoly x = content_primitive(a).second;
    UniPoly y = content_primitive(b).second;
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        UniPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? r : content_primitive(r).second;
    }
    return x.monic().with_var(a.var());
}

SquarefreeSplit gcd_squarefree(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("square-free part of the zero polynomial");
    UniPoly g = gcd(p, p.derivative());
    if (g.is_zero()) g = UniPoly::constant(1, p.var());
    return {g, exact_quotient(p, g)};
}

std::vector<UniPoly> squarefree_decomposition(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
    std::vector<UniPoly> out;
    if (p.degree() == 0) return out;
    const UniPoly b = p.monic();
    const UniPoly db = b.derivative();
    const UniPoly a0 = gcd(b, db);
    UniPoly c = exact_quotient(b, a0);
    UniPoly d = exact_quotient(db, a0) - c.derivative();
    while (c.degree() > 0) {
        const UniPoly ai = gcd(c, d);
        out.push_back(ai);
        c = exact_quotient(c, ai);
        d = exact_quotient(d, ai) - c.derivative();
    }
    return out;
}

Scalar resultant(const UniPoly& p, const UniPoly& q) {
    if (p.is_zero() || q.is_zero()) throw DomainError("resultant with the zero polynomial");
    if (p.degree() == 0) return pow(p.lead(), static_cast<unsigned long>(q.degree()));
    if (q.degree() == 0) return pow(q.lead(), static_cast<unsigned long>(p.degree()));

    // Subresultant PRS on primitive integer parts.
    auto [ca, a] = content_primitive(p);
    auto [cb, b] = content_primitive(q);
    Scalar t = pow(ca, static_cast<unsigned long>(q.degree())) * pow(cb, static_cast<unsigned long>(p.degree()));
    Scalar s = 1;
    if (a.degree() < b.degree()) {
        std::swap(a, b);
        if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
    }
    Scalar g = 1, h = 1;
    while (true) {
        const long delta = a.degree() - b.degree();
        if ((a.degree() % 2) && (b.degree() % 2)) s = -s;
        UniPoly r = pseudo_remainder(a, b);
        a = b;
        b = (1 / (g * pow(h, static_cast<unsigned long>(delta)))) * r;
        g = a.lead();
        // h <- h^(1-delta) * g^delta
        h = pow(g, static_cast<unsigned long>(delta)) / pow(h, static_cast<unsigned long>(delta)) * h;
        if (b.is_zero()) return Scalar(0);
        if (b.degree() == 0) break;
    }
    const unsigned long da = static_cast<unsigned long>(a.degree());
    // h <- h^(1 - deg a) * lead(b)^deg a
    h = pow(b.lead(), da) / pow(h, da) * h;
    return s * t * h;
}

UniPoly characteristic_polynomial(const MatrixQ& m) {
    if (!m.is_square()) throw DomainError("characteristic polynomial of non-square matrix");
    const std::size_t n = m.rows();
    std::vector<Scalar> nodes, values;
    for (std::size_t i = 0; i <= n; ++i) {
        const Scalar x(static_cast<long>(i));
        nodes.push_back(x);
        values.push_back(determinant(x * MatrixQ::identity(n) - m));
    }
    return interpolate(nodes, values, "x");
}

// ----------------------------------------------------------------- ParamPoly

ParamPoly::ParamPoly(std::vector<UniPoly> coeffs, std::string main_var, std::string param_var)
    : c_(std::move(coeffs)), main_(std::move(main_var)), param_(std::move(param_var)) {
    for (auto& c : c_) c = c.with_var(param_);
    trim();
}

ParamPoly ParamPoly::from_uni(const UniPoly& p, std::string param_var) {
    std::vector<UniPoly> c;
    for (const auto& a : p.coefficients()) c.push_back(UniPoly::constant(a, param_var));
    return ParamPoly(std::move(c), p.var(), std::move(param_var));
}

void ParamPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

long ParamPoly::param_degree() const {
    long d = -1;
    for (const auto& c : c_) d = std::max(d, c.degree());
    return d;
}

UniPoly ParamPoly::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : UniPoly({}, param_); }

const UniPoly& ParamPoly::lead() const {
    if (c_.empty()) throw DomainError("leading coefficient of the zero polynomial");
    return c_.back();
}

UniPoly ParamPoly::eval_param(const Scalar& t) const {
    std::vector<Scalar> v;
    v.reserve(c_.size());
    for (const auto& c : c_) v.push_back(c.eval(t));
    return UniPoly(std::move(v), main_);
}

UniPoly ParamPoly::eval_main(const Scalar& x) const {
    UniPoly acc({}, param_);
    for (std::size_t k = c_.size(); k-- > 0;) acc = x * acc + c_[k];
    return acc;
}

Scalar ParamPoly::eval(const Scalar& x, const Scalar& t) const { return eval_param(t).eval(x); }

ParamPoly ParamPoly::derivative_main() const {
    std::vector<UniPoly> d;
    for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(Scalar(static_cast<unsigned long>(k)) * c_[k]);
    return ParamPoly(std::move(d), main_, param_);
}

ParamPoly ParamPoly::derivative_param() const {
    std::vector<UniPoly> d;
    for (const auto& c : c_) d.push_back(c.derivative());
    return ParamPoly(std::move(d), main_, param_);
}

ParamPoly ParamPoly::swap_variables() const {
    const long dp = param_degree();
    std::vector<std::vector<Scalar>> cols(static_cast<std::size_t>(dp + 1), std::vector<Scalar>(c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].coefficients().size(); ++j) cols[j][i] = c_[i][j];
    std::vector<UniPoly> out;
    for (auto& col : cols) out.emplace_back(std::move(col), main_);
    return ParamPoly(std::move(out), param_, main_);
}

std::string ParamPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        if (c_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << c_[k].to_string() << ")";
        if (k > 0) os << "*" << main_ << (k > 1 ? "^" + std::to_string(k) : "");
    }
    return os.str();
}

ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    std::vector<UniPoly> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ParamPoly(std::move(c), a.main_var(), a.param_var());
}

ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    std::vector<UniPoly> c(std::max(a.coefficients().size(), b.coefficients().size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ParamPoly(std::move(c), a.main_var(), a.param_var());
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_zero() || b.is_zero()) return ParamPoly({}, a.main_var(), a.param_var());
    std::vector<UniPoly> c(a.coefficients().size() + b.coefficients().size() - 1, UniPoly({}, a.param_var()));
    for (std::size_t i = 0; i < a.coefficients().size(); ++i)
        for (std::size_t j = 0; j < b.coefficients().size(); ++j) c[i + j] += a[i] * b[j];
    return ParamPoly(std::move(c), a.main_var(), a.param_var());
}

ParamDivRem divrem(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DomainError("division by the zero polynomial");
    if (den.lead().degree() != 0)
        throw Degeneracy("nonconstant-leading-coefficient",
                         "divisor leading coefficient depends on the parameter; use pseudo-division");
    const Scalar inv = 1 / den.lead().lead();
    std::vector<UniPoly> rem(num.coefficients().begin(), num.coefficients().end());
    const long dd = den.degree();
    const long dn = num.degree();
    if (dn < dd) return {ParamPoly({}, num.main_var(), num.param_var()), num};
    std::vector<UniPoly> q(static_cast<std::size_t>(dn - dd + 1));
    for (long k = dn; k >= dd; --k) {
        const UniPoly f = inv * rem[static_cast<std::size_t>(k)];
        q[static_cast<std::size_t>(k - dd)] = f;
        if (f.is_zero()) continue;
        for (long j = 0; j <= dd; ++j)
            rem[static_cast<std::size_t>(k - dd + j)] -= f * den[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(dd));
    return {ParamPoly(std::move(q), num.main_var(), num.param_var()),
            ParamPoly(std::move(rem), num.main_var(), num.param_var())};
}

ParamPoly param_pseudo_remainder(const ParamPoly& num, const ParamPoly& den) {
    if (den.is_zero()) throw DomainError("pseudo-division by the zero polynomial");
    std::vector<UniPoly> rem(num.coefficients().begin(), num.coefficients().end());
    const long dd = den.degree();
    const UniPoly& lc = den.lead();
    for (long k = num.degree(); k >= dd; --k) {
        const UniPoly top = rem[static_cast<std::size_t>(k)];
        for (auto& r : rem) r = lc * r;
        if (!top.is_zero())
            for (long j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(k - dd + j)] -= top * den[static_cast<std::size_t>(j)];
        rem.resize(static_cast<std::size_t>(k));
    }
    return ParamPoly(std::move(rem), num.main_var(), num.param_var());
}

// ----------------------------------------------------------------- BiPoly

BiPoly::BiPoly(std::vector<std::vector<Scalar>> grid) : c_(std::move(grid)) { trim(); }

void BiPoly::trim() {
    for (auto& row : c_)
        while (!row.empty() && row.back() == 0) row.pop_back();
    while (!c_.empty() && c_.back().empty()) c_.pop_back();
}

BiPoly BiPoly::constant(const Scalar& c) { return BiPoly({{c}}); }

BiPoly BiPoly::monomial(std::size_t i, std::size_t j, const Scalar& c) {
    std::vector<std::vector<Scalar>> g(i + 1);
    g[i].resize(j + 1);
    g[i][j] = c;
    return BiPoly(std::move(g));
}

BiPoly BiPoly::from_param(const ParamPoly& p) {
    std::vector<std::vector<Scalar>> g;
    for (const auto& c : p.coefficients()) g.emplace_back(c.coefficients().begin(), c.coefficients().end());
    return BiPoly(std::move(g));
}

long BiPoly::degree_x2() const {
    long d = -1;
    for (const auto& row : c_) d = std::max(d, static_cast<long>(row.size()) - 1);
    return d;
}

long BiPoly::total_degree() const {
    long d = -1;
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) d = std::max(d, static_cast<long>(i + j));
    return d;
}

Scalar BiPoly::coeff(std::size_t i, std::size_t j) const {
    if (i >= c_.size() || j >= c_[i].size()) return Scalar(0);
    return c_[i][j];
}

Scalar BiPoly::eval(const Scalar& x1, const Scalar& x2) const { return eval_x2(x2).eval(x1); }

UniPoly BiPoly::eval_x1(const Scalar& x1) const {
    std::vector<Scalar> acc(static_cast<std::size_t>(degree_x2() + 1));
    Scalar p = 1;
    for (const auto& row : c_) {
        for (std::size_t j = 0; j < row.size(); ++j) acc[j] += p * row[j];
        p *= x1;
    }
    return UniPoly(std::move(acc), "x2");
}

UniPoly BiPoly::eval_x2(const Scalar& x2) const {
    std::vector<Scalar> acc(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) acc[i] = UniPoly(c_[i], "x2").eval(x2);
    return UniPoly(std::move(acc), "x1");
}

BiPoly BiPoly::d_x1() const {
    std::vector<std::vector<Scalar>> g;
    for (std::size_t i = 1; i < c_.size(); ++i) {
        auto row = c_[i];
        for (auto& c : row) c *= static_cast<unsigned long>(i);
        g.push_back(std::move(row));
    }
    return BiPoly(std::move(g));
}

BiPoly BiPoly::d_x2() const {
    std::vector<std::vector<Scalar>> g(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 1; j < c_[i].size(); ++j) {
            if (g[i].size() < j) g[i].resize(j);
            g[i][j - 1] = c_[i][j] * static_cast<unsigned long>(j);
        }
    return BiPoly(std::move(g));
}

BiPoly BiPoly::translate(const Scalar& s1, const Scalar& s2) const {
    BiPoly out;
    const BiPoly l1({{s1}, {Scalar(1)}});
    const BiPoly l2({{s2, Scalar(1)}});
    std::vector<BiPoly> p1{BiPoly::constant(1)}, p2{BiPoly::constant(1)};
    for (std::size_t i = 1; i < c_.size(); ++i) p1.push_back(p1.back() * l1);
    for (long j = 1; j <= degree_x2(); ++j) p2.push_back(p2.back() * l2);
    for (std::size_t i = 0; i < c_.size(); ++i)
        for (std::size_t j = 0; j < c_[i].size(); ++j)
            if (c_[i][j] != 0) out = out + c_[i][j] * (p1[i] * p2[j]);
    return out;
}

ParamPoly BiPoly::to_param(std::string main_var, std::string param_var) const {
    std::vector<UniPoly> c;
    for (const auto& row : c_) c.emplace_back(row, param_var);
    return ParamPoly(std::move(c), std::move(main_var), std::move(param_var));
}

std::string BiPoly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;)
        for (std::size_t j = c_[i].size(); j-- > 0;) {
            const Scalar& a = c_[i][j];
            if (a == 0) continue;
            os << (first ? (a < 0 ? "-" : "") : (a < 0 ? " - " : " + "));
            first = false;
            os << qdist::to_string(abs(a));
            if (i) os << "*x1" << (i > 1 ? "^" + std::to_string(i) : "");
            if (j) os << "*x2" << (j > 1 ? "^" + std::to_string(j) : "");
        }
    return os.str();
}

BiPoly operator+(const BiPoly& a, const BiPoly& b) {
    std::vector<std::vector<Scalar>> g(static_cast<std::size_t>(std::max(a.degree_x1(), b.degree_x1()) + 1));
    const std::size_t w = static_cast<std::size_t>(std::max(a.degree_x2(), b.degree_x2()) + 1);
    for (std::size_t i = 0; i < g.size(); ++i) {
        g[i].resize(w);
        for (std::size_t j = 0; j < w; ++j) g[i][j] = a.coeff(i, j) + b.coeff(i, j);
    }
    return BiPoly(std::move(g));
}

BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + Scalar(-1) * b; }

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() || b.is_zero()) return BiPoly();
    const std::size_t r = static_cast<std::size_t>(a.degree_x1() + b.degree_x1() + 1);
    const std::size_t w = static_cast<std::size_t>(a.degree_x2() + b.degree_x2() + 1);
    std::vector<std::vector<Scalar>> g(r, std::vector<Scalar>(w));
    for (long i = 0; i <= a.degree_x1(); ++i)
        for (long j = 0; j <= a.degree_x2(); ++j) {
            const Scalar ca = a.coeff(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            if (ca == 0) continue;
            for (long k = 0; k <= b.degree_x1(); ++k)
                for (long l = 0; l <= b.degree_x2(); ++l) {
                    const Scalar cb = b.coeff(static_cast<std::size_t>(k), static_cast<std::size_t>(l));
                    if (cb != 0) g[static_cast<std::size_t>(i + k)][static_cast<std::size_t>(j + l)] += ca * cb;
                }
        }
    return BiPoly(std::move(g));
}

BiPoly operator*(const Scalar& s, const BiPoly& a) {
    std::vector<std::vector<Scalar>> g(static_cast<std::size_t>(a.degree_x1() + 1));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (long j = 0; j <= a.degree_x2(); ++j) g[i].push_back(s * a.coeff(i, static_cast<std::size_t>(j)));
    return BiPoly(std::move(g));
}

}  // namespace qdist
