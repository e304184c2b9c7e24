#pragma once

#include <deque>
#include <utility>
#include <vector>

#include "singzeta/polynomial.hpp"

namespace singzeta {

namespace detail {

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (size_t i = 0; i < r.e.size(); ++i) r.e[i] = std::max(a.e[i], b.e[i]);
    return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
    for (size_t i = 0; i < a.e.size(); ++i)
        if (a.e[i] > 0 && b.e[i] > 0) return false;
    return true;
}

// Full normal form of p modulo the basis (grlex).
inline Polynomial reduce(Polynomial p, const std::vector<Polynomial>& basis) {
    Polynomial rem(p.nvars());
    while (!p.is_zero()) {
        bool reduced = false;
        const auto& [mp, cp] = p.leading();
        for (const auto& b : basis) {
            const auto& [mb, cb] = b.leading();
            if (divides(mb, mp)) {
                p -= Polynomial::term(mp - mb, cp / cb) * b;
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(mp, cp);
            Polynomial lead = Polynomial::term(mp, cp);
            p -= lead;
        }
    }
    return rem;
}

}  // namespace detail

// Buchberger's algorithm (grlex, Q coefficients). Intended for tiny
// zero-dimensional consistency questions in at most 3 variables.
inline std::vector<Polynomial> groebner_basis(std::vector<Polynomial> gens) {
    std::vector<Polynomial> basis;
    for (auto& g : gens)
        if (!g.is_zero()) basis.push_back((Rational(1) / g.leading().second) * g);
    for (const auto& b : basis)
        if (b.is_constant()) return {Polynomial::constant(b.nvars(), 1)};
    std::deque<std::pair<size_t, size_t>> pairs;
    for (size_t i = 0; i < basis.size(); ++i)
        for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);
    while (!pairs.empty()) {
        auto [i, j] = pairs.front();
        pairs.pop_front();
        const auto& [mi, ci] = basis[i].leading();
        const auto& [mj, cj] = basis[j].leading();
        if (detail::coprime(mi, mj)) continue;
        Monomial l = detail::mono_lcm(mi, mj);
        Polynomial s = Polynomial::term(l - mi, Rational(1) / ci) * basis[i] -
                       Polynomial::term(l - mj, Rational(1) / cj) * basis[j];
        Polynomial r = detail::reduce(std::move(s), basis);
        if (r.is_zero()) continue;
        r = (Rational(1) / r.leading().second) * r;
        if (r.is_constant()) return {Polynomial::constant(r.nvars(), 1)};
        size_t k = basis.size();
        basis.push_back(std::move(r));
        for (size_t t = 0; t < k; ++t) pairs.emplace_back(t, k);
    }
    return basis;
}

// True iff the system has no common zero over C (the ideal is the unit ideal).
inline bool system_inconsistent(const std::vector<Polynomial>& gens) {
    auto gb = groebner_basis(gens);
    for (const auto& g : gb)
        if (g.is_constant() && !g.is_zero()) return true;
    return false;
}

}  // namespace singzeta
