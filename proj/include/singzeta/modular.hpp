#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "singzeta/polynomial.hpp"

namespace singzeta {

// Dense univariate arithmetic over F_p, used by the randomized screening mode.
class Zp {
public:
    explicit Zp(uint64_t p) : p_(p) {}
    uint64_t p() const { return p_; }

    uint64_t add(uint64_t a, uint64_t b) const {
        uint64_t s = a + b;
        return s >= p_ ? s - p_ : s;
    }
    uint64_t sub(uint64_t a, uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
    uint64_t mul(uint64_t a, uint64_t b) const {
        return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    uint64_t pow(uint64_t a, uint64_t e) const {
        uint64_t r = 1;
        while (e) {
            if (e & 1) r = mul(r, a);
            a = mul(a, a);
            e >>= 1;
        }
        return r;
    }
    uint64_t inv(uint64_t a) const {
        if (a == 0) throw std::domain_error("inverse of zero mod p");
        return pow(a, p_ - 2);
    }
    uint64_t from_rational(const Rational& q) const {
        Int num = boost::multiprecision::numerator(q);
        Int den = boost::multiprecision::denominator(q);
        Int pm(p_);
        Int nr = num % pm;
        if (nr < 0) nr += pm;
        Int dr = den % pm;
        uint64_t n = static_cast<uint64_t>(nr);
        uint64_t d = static_cast<uint64_t>(dr);
        if (d == 0) throw std::domain_error("denominator vanishes mod p");
        return mul(n, inv(d));
    }

private:
    uint64_t p_;
};

// Coefficient vector c[0] + c[1] x + ... with trailing zeros trimmed.
using ZpPoly = std::vector<uint64_t>;

namespace zp {

inline void trim(ZpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}
inline int deg(const ZpPoly& f) { return static_cast<int>(f.size()) - 1; }

inline ZpPoly derivative(const Zp& F, const ZpPoly& f) {
    ZpPoly d;
    for (size_t i = 1; i < f.size(); ++i) d.push_back(F.mul(f[i], i % F.p()));
    trim(d);
    return d;
}

inline ZpPoly rem(const Zp& F, ZpPoly f, const ZpPoly& g) {
    if (g.empty()) throw std::domain_error("division by zero poly");
    uint64_t linv = F.inv(g.back());
    while (deg(f) >= deg(g)) {
        uint64_t c = F.mul(f.back(), linv);
        size_t shift = f.size() - g.size();
        for (size_t i = 0; i < g.size(); ++i)
            f[i + shift] = F.sub(f[i + shift], F.mul(c, g[i]));
        trim(f);
        if (f.empty()) break;
    }
    return f;
}

inline ZpPoly gcd(const Zp& F, ZpPoly f, ZpPoly g) {
    trim(f);
    trim(g);
    while (!g.empty()) {
        ZpPoly r = rem(F, f, g);
        f = std::move(g);
        g = std::move(r);
    }
    if (!f.empty()) {
        uint64_t linv = F.inv(f.back());
        for (auto& c : f) c = F.mul(c, linv);
    }
    return f;
}

inline uint64_t eval(const Zp& F, const ZpPoly& f, uint64_t x) {
    uint64_t r = 0;
    for (size_t i = f.size(); i-- > 0;) r = F.add(F.mul(r, x), f[i]);
    return r;
}

inline uint64_t resultant(const Zp& F, ZpPoly f, ZpPoly g) {
    trim(f);
    trim(g);
    if (f.empty() || g.empty()) return 0;
    uint64_t res = 1;
    while (true) {
        if (deg(g) == 0) return F.mul(res, F.pow(g[0], static_cast<uint64_t>(deg(f))));
        ZpPoly r = rem(F, f, g);
        if (r.empty()) return 0;
        int df = deg(f), dg = deg(g), dr = deg(r);
        uint64_t factor = F.pow(g.back(), static_cast<uint64_t>(df - dr));
        if ((static_cast<long long>(df) * dg) % 2 == 1) factor = F.sub(0, factor);
        res = F.mul(res, factor);
        f = std::move(g);
        g = std::move(r);
    }
}

inline ZpPoly interpolate(const Zp& F, const std::vector<uint64_t>& xs,
                          const std::vector<uint64_t>& ys) {
    size_t n = xs.size();
    ZpPoly result;  // running interpolant, Newton form accumulated into monomials
    ZpPoly prod = {1};
    std::vector<uint64_t> divided = ys;
    // Newton divided differences over F_p.
    for (size_t k = 1; k < n; ++k)
        for (size_t i = n - 1; i >= k; --i) {
            uint64_t num = F.sub(divided[i], divided[i - 1]);
            uint64_t den = F.sub(xs[i], xs[i - k]);
            divided[i] = F.mul(num, F.inv(den));
            if (i == k) break;
        }
    for (size_t k = 0; k < n; ++k) {
        if (result.size() < prod.size()) result.resize(prod.size(), 0);
        for (size_t i = 0; i < prod.size(); ++i)
            result[i] = F.add(result[i], F.mul(divided[k], prod[i]));
        // prod *= (x - xs[k])
        ZpPoly next(prod.size() + 1, 0);
        for (size_t i = 0; i < prod.size(); ++i) {
            next[i + 1] = F.add(next[i + 1], prod[i]);
            next[i] = F.sub(next[i], F.mul(prod[i], xs[k]));
        }
        prod = std::move(next);
    }
    trim(result);
    return result;
}

}  // namespace zp

// View of a bivariate polynomial as F_p[u][v]: specialize u and return the
// dense coefficient vector in v.
inline ZpPoly specialize_u(const Zp& F, const Polynomial& p, uint64_t u0) {
    if (p.nvars() != 2) throw std::invalid_argument("specialize_u: bivariate input required");
    ZpPoly out(static_cast<size_t>(p.degree_in(1) + 1), 0);
    for (const auto& [m, c] : p.terms()) {
        uint64_t val = F.mul(F.from_rational(c), F.pow(u0, static_cast<uint64_t>(m[0])));
        out[static_cast<size_t>(m[1])] = F.add(out[static_cast<size_t>(m[1])], val);
    }
    zp::trim(out);
    return out;
}

}  // namespace singzeta
