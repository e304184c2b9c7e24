#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "singzeta/polynomial.hpp"

namespace singzeta {

// Exact multivariate division: returns p/d when d divides p, nullopt otherwise.
inline std::optional<Polynomial> divide_exact(const Polynomial& p, const Polynomial& d) {
    if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
    Polynomial r = p, q(p.nvars());
    while (!r.is_zero()) {
        const auto& [mr, cr] = r.leading();
        const auto& [md, cd] = d.leading();
        if (!divides(md, mr)) return std::nullopt;
        Monomial mq = mr - md;
        Rational cq = cr / cd;
        q.add_term(mq, cq);
        r -= Polynomial::term(mq, cq) * d;
    }
    return q;
}

namespace detail {

// View of p as a univariate polynomial in variable x with polynomial coefficients.
inline std::map<int, Polynomial> coeffs_wrt(const Polynomial& p, int x) {
    std::map<int, Polynomial> out;
    for (const auto& [m, c] : p.terms()) {
        Monomial q = m;
        int k = q.e[static_cast<size_t>(x)];
        q.e[static_cast<size_t>(x)] = 0;
        auto it = out.find(k);
        if (it == out.end()) it = out.emplace(k, Polynomial(p.nvars())).first;
        it->second.add_term(q, c);
    }
    return out;
}

inline Polynomial from_coeffs(const std::map<int, Polynomial>& cs, int x, int nvars) {
    Polynomial r(nvars);
    for (const auto& [k, c] : cs) {
        Polynomial xk = Polynomial::variable(nvars, x, k);
        if (k == 0) xk = Polynomial::constant(nvars, 1);
        r += c * xk;
    }
    return r;
}

}  // namespace detail

Polynomial poly_gcd(const Polynomial& a, const Polynomial& b);

namespace detail {

// Make integer-primitive with positive leading (grlex) coefficient.
inline Polynomial normalize_primitive(const Polynomial& p) {
    if (p.is_zero()) return p;
    Int num_gcd = 0, den_lcm = 1;
    for (const auto& [m, c] : p.terms()) {
        num_gcd = gcd(num_gcd, Int(boost::multiprecision::numerator(c)));
        den_lcm = lcm(den_lcm, Int(boost::multiprecision::denominator(c)));
    }
    Rational scale = Rational(den_lcm) / Rational(num_gcd);
    if (p.leading().second < 0) scale = -scale;
    return scale * p;
}

inline Polynomial content_wrt(const Polynomial& p, int x) {
    Polynomial c(p.nvars());
    for (const auto& [k, coeff] : coeffs_wrt(p, x)) c = poly_gcd(c, coeff);
    return c;
}

inline Polynomial primitive_wrt(const Polynomial& p, int x) {
    if (p.is_zero()) return p;
    Polynomial c = content_wrt(p, x);
    auto q = divide_exact(p, c);
    if (!q) throw std::logic_error("content does not divide polynomial");
    return normalize_primitive(*q);
}

// Pseudo-remainder of a by b with respect to x (both nonzero, deg_x b >= 1).
inline Polynomial pseudo_rem(const Polynomial& a, const Polynomial& b, int x) {
    auto bc = coeffs_wrt(b, x);
    int db = bc.rbegin()->first;
    Polynomial lb = bc.rbegin()->second;
    Polynomial r = a;
    while (true) {
        if (r.is_zero()) return r;
        auto rc = coeffs_wrt(r, x);
        int dr = rc.rbegin()->first;
        if (dr < db) return r;
        Polynomial lr = rc.rbegin()->second;
        Polynomial shift = Polynomial::variable(r.nvars(), x, dr - db);
        if (dr == db) shift = Polynomial::constant(r.nvars(), 1);
        r = lb * r - lr * shift * b;
    }
}

}  // namespace detail

// GCD over Q, computed by primitive-part PRS on a chosen main variable.
// Result is integer-primitive with positive leading coefficient; the gcd of
// two nonzero constants is 1.
inline Polynomial poly_gcd(const Polynomial& a, const Polynomial& b) {
    using namespace detail;
    if (a.is_zero()) return normalize_primitive(b);
    if (b.is_zero()) return normalize_primitive(a);
    if (a.is_constant() || b.is_constant()) return Polynomial::constant(a.nvars(), 1);
    int x = -1;
    for (int i = a.nvars() - 1; i >= 0; --i)
        if (a.degree_in(i) > 0) {
            x = i;
            break;
        }
    if (b.degree_in(x) == 0) return poly_gcd(content_wrt(a, x), b);
    Polynomial ca = content_wrt(a, x), cb = content_wrt(b, x);
    Polynomial cg = poly_gcd(ca, cb);
    Polynomial pa = primitive_wrt(a, x), pb = primitive_wrt(b, x);
    if (pa.degree_in(x) < pb.degree_in(x)) std::swap(pa, pb);
    while (!pb.is_zero()) {
        Polynomial r = pseudo_rem(pa, pb, x);
        pa = pb;
        pb = r.is_zero() ? r : primitive_wrt(r, x);
        if (!pb.is_zero() && pb.degree_in(x) == 0) {
            // Remainder free of x: gcd of primitive parts has degree 0 in x.
            pa = Polynomial::constant(a.nvars(), 1);
            break;
        }
    }
    return normalize_primitive(cg * primitive_wrt(pa, x));
}

// True iff p has no repeated irreducible factor (over C; equivalently over Q
// in characteristic zero).
inline bool is_squarefree(const Polynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("squarefree test of zero polynomial");
    if (p.is_constant()) return true;
    Polynomial g(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) {
        if (p.degree_in(i) == 0) continue;
        g = poly_gcd(g.is_zero() ? p : g, derivative(p, i));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

// p / gcd(p, all partials): the reduced polynomial with the same zero set.
inline Polynomial squarefree_part(const Polynomial& p) {
    if (p.is_zero() || p.is_constant()) return p;
    Polynomial g(p.nvars());
    for (int i = 0; i < p.nvars(); ++i) {
        if (p.degree_in(i) == 0) continue;
        g = poly_gcd(g.is_zero() ? p : g, derivative(p, i));
    }
    if (g.is_zero() || g.is_constant()) return p;
    auto q = divide_exact(p, g);
    if (!q) throw std::logic_error("squarefree part division failed");
    return *q;
}

}  // namespace singzeta
