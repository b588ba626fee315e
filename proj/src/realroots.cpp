#include "qdist/realroots.hpp"

#include <algorithm>

namespace qdist {

namespace {

int variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

int variations_at(const std::vector<UniPoly>& chain, const Scalar& x) {
    std::vector<int> s;
    s.reserve(chain.size());
    for (const auto& p : chain) s.push_back(p.sign_at(x));
    return variations(s);
}

int variations_at_infinity(const std::vector<UniPoly>& chain, bool positive) {
    std::vector<int> s;
    for (const auto& p : chain) {
        int ls = sign(p.lead());
        if (!positive && (p.degree() % 2)) ls = -ls;
        s.push_back(ls);
    }
    return variations(s);
}

// Halves a non-exact interval around a root of the square-free f.
void bisect_once(IsolatingInterval& iv, const UniPoly& f) {
    const Scalar mid = iv.midpoint();
    const int sm = f.sign_at(mid);
    if (sm == 0) {
        iv.lo = iv.hi = mid;
        return;
    }
    if (sm == f.sign_at(iv.lo)) {
        iv.lo = mid;
    } else {
        iv.hi = mid;
    }
}

bool try_exact(IsolatingInterval& iv, const UniPoly& f) {
    if (iv.exact()) return true;
    const Scalar s = simplest_between(iv.lo, iv.hi);
    if (f.eval(s) == 0) {
        iv.lo = iv.hi = s;
        return true;
    }
    return false;
}

void isolate_in(const UniPoly& f, const std::vector<UniPoly>& chain, const Scalar& a, const Scalar& b, int va,
                int vb, std::vector<IsolatingInterval>& out) {
    const int count = va - vb;
    if (count <= 0) return;
    if (count == 1) {
        out.push_back({a, b, 1});
        return;
    }
    Scalar mid = (a + b) / 2;
    if (f.sign_at(mid) == 0) {
        // Exact root at the midpoint: cut out a small root-free neighbourhood.
        Scalar delta = (b - a) / 4;
        while (true) {
            const Scalar l = mid - delta, r = mid + delta;
            if (f.sign_at(l) != 0 && f.sign_at(r) != 0 &&
                variations_at(chain, l) - variations_at(chain, r) == 1)
                break;
            delta /= 2;
        }
        const Scalar l = mid - delta, r = mid + delta;
        out.push_back({mid, mid, 1});
        isolate_in(f, chain, a, l, va, variations_at(chain, l), out);
        isolate_in(f, chain, r, b, variations_at(chain, r), vb, out);
        return;
    }
    const int vm = variations_at(chain, mid);
    isolate_in(f, chain, a, mid, va, vm, out);
    isolate_in(f, chain, mid, b, vm, vb, out);
}

struct TaggedInterval {
    IsolatingInterval iv;
    std::size_t factor;
};

std::vector<IsolatingInterval> isolate_squarefree(const UniPoly& f) {
    std::vector<IsolatingInterval> out;
    if (f.degree() <= 0) return out;
    if (f.degree() == 1) {
        const Scalar r = -f[0] / f[1];
        out.push_back({r, r, 1});
        return out;
    }
    const auto chain = sturm_sequence(f);
    const Scalar B = cauchy_bound(f);
    isolate_in(f, chain, -B, B, variations_at(chain, -B), variations_at(chain, B), out);
    for (auto& iv : out) try_exact(iv, f);
    return out;
}

}  // namespace

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("Sturm sequence of the zero polynomial");
    std::vector<UniPoly> chain;
    auto positive_primitive = [](const UniPoly& q) {
        auto [c, prim] = content_primitive(q);
        return c > 0 ? prim : -prim;
    };
    chain.push_back(positive_primitive(p));
    if (p.degree() == 0) return chain;
    chain.push_back(positive_primitive(p.derivative()));
    while (true) {
        UniPoly r = divrem(chain[chain.size() - 2], chain.back()).remainder;
        if (r.is_zero()) break;
        chain.push_back(positive_primitive(-r));
    }
    return chain;
}

std::size_t sturm_count(const std::vector<UniPoly>& chain, const Scalar& a, const Scalar& b) {
    const int d = variations_at(chain, a) - variations_at(chain, b);
    return d > 0 ? static_cast<std::size_t>(d) : 0;
}

std::size_t count_real_roots(const UniPoly& p) {
    const auto sf = gcd_squarefree(p).squarefree_part;
    const auto chain = sturm_sequence(sf);
    return static_cast<std::size_t>(variations_at_infinity(chain, false) - variations_at_infinity(chain, true));
}

Scalar cauchy_bound(const UniPoly& p) {
    if (p.degree() <= 0) return Scalar(1);
    Scalar m = 0;
    const Scalar lc = abs(p.lead());
    for (long k = 0; k < p.degree(); ++k) m = std::max(m, Scalar(abs(p[static_cast<std::size_t>(k)]) / lc));
    return m + 1;
}

std::vector<IsolatingInterval> isolate_real_roots(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
    const auto factors = squarefree_decomposition(p);
    std::vector<TaggedInterval> all;
    for (std::size_t i = 0; i < factors.size(); ++i)
        for (auto iv : isolate_squarefree(factors[i])) {
            iv.multiplicity = static_cast<unsigned>(i + 1);
            all.push_back({iv, i});
        }
    // Roots of different factors are distinct; shrink until the intervals are disjoint.
    bool overlap = true;
    while (overlap) {
        overlap = false;
        std::sort(all.begin(), all.end(), [](const TaggedInterval& a, const TaggedInterval& b) {
            return a.iv.lo < b.iv.lo || (a.iv.lo == b.iv.lo && a.iv.hi < b.iv.hi);
        });
        for (std::size_t k = 0; k + 1 < all.size(); ++k) {
            if (all[k].iv.hi >= all[k + 1].iv.lo) {
                overlap = true;
                if (!all[k].iv.exact()) bisect_once(all[k].iv, factors[all[k].factor]);
                if (!all[k + 1].iv.exact()) bisect_once(all[k + 1].iv, factors[all[k + 1].factor]);
            }
        }
    }
    std::vector<IsolatingInterval> out;
    for (const auto& t : all) out.push_back(t.iv);
    return out;
}

IsolatingInterval refine_interval(const IsolatingInterval& iv, const UniPoly& p, int bits) {
    IsolatingInterval r = iv;
    if (r.exact()) return r;
    const UniPoly sf = gcd_squarefree(p).squarefree_part;
    if (sf.sign_at(r.lo) == 0 || sf.sign_at(r.hi) == 0 || sf.sign_at(r.lo) == sf.sign_at(r.hi))
        throw DomainError("interval does not bracket a simple sign change");
    const Scalar target = pow2(-bits);
    int step = 0;
    while (!r.exact() && r.width() > target) {
        bisect_once(r, sf);
        if (++step % 4 == 0 && try_exact(r, sf)) break;
    }
    if (!r.exact()) try_exact(r, sf);
    return r;
}

Scalar refine(const IsolatingInterval& iv, const UniPoly& p, int bits) {
    const auto r = refine_interval(iv, p, bits + 1);
    return r.midpoint();
}

std::vector<PositiveZero> positive_zeros(const UniPoly& p, int bits) {
    const UniPoly sf = gcd_squarefree(p).squarefree_part;
    std::vector<PositiveZero> out;
    for (auto iv : isolate_real_roots(p)) {
        if (!iv.exact() && iv.lo < 0 && iv.hi > 0) {
            // Decide the side of zero; zero itself is isolated separately when it is a root.
            while (!iv.exact() && iv.lo < 0 && iv.hi > 0) bisect_once(iv, sf);
        }
        if (iv.exact() ? iv.lo <= 0 : iv.hi <= 0) continue;
        const auto r = refine_interval(iv, p, bits + 1);
        out.push_back({r.midpoint(), iv.multiplicity == 1, iv.multiplicity, r});
    }
    return out;
}

PositiveZero min_positive_zero(const UniPoly& p, int bits) {
    auto zs = positive_zeros(p, bits);
    if (zs.empty()) throw Degeneracy("no-positive-root", "polynomial has no positive real root");
    return zs.front();
}

const char* to_string(RootSigns s) {
    switch (s) {
        case RootSigns::AllPositive: return "all-positive";
        case RootSigns::AllNegative: return "all-negative";
        case RootSigns::MixedOrZero: return "mixed-or-zero";
        case RootSigns::None: return "none";
    }
    return "?";
}

RootSignCounts count_root_signs(const UniPoly& p) {
    if (p.is_zero()) throw DomainError("root signs of the zero polynomial");
    RootSignCounts c;
    c.zero = p.trailing_zeros();
    const UniPoly q = gcd_squarefree(p.strip_trailing_zeros()).squarefree_part;
    if (q.degree() <= 0) return c;
    const auto chain = sturm_sequence(q);
    const int v0 = variations_at(chain, Scalar(0));
    c.positive = static_cast<std::size_t>(v0 - variations_at_infinity(chain, true));
    c.negative = static_cast<std::size_t>(variations_at_infinity(chain, false) - v0);
    return c;
}

RootSigns real_root_signs(const UniPoly& p) {
    const auto c = count_root_signs(p);
    if (c.zero > 0 || (c.positive > 0 && c.negative > 0)) return RootSigns::MixedOrZero;
    if (c.positive > 0) return RootSigns::AllPositive;
    if (c.negative > 0) return RootSigns::AllNegative;
    return RootSigns::None;
}

}  // namespace qdist
