#pragma once

#include <stdexcept>
#include <vector>

#include "singzeta/gcd.hpp"
#include "singzeta/polynomial.hpp"

namespace singzeta {

// Resultant of f and g with respect to variable `x`, as a polynomial in the
// remaining variables (same arity, degree 0 in x). Sylvester determinant
// evaluated by fraction-free (Bareiss) elimination; every division is exact.
inline Polynomial resultant(const Polynomial& f, const Polynomial& g, int x) {
    if (f.is_zero() || g.is_zero()) return Polynomial(f.nvars());
    auto fc = detail::coeffs_wrt(f, x);
    auto gc = detail::coeffs_wrt(g, x);
    int df = fc.rbegin()->first, dg = gc.rbegin()->first;
    int n = f.nvars();
    auto coeff = [n](const std::map<int, Polynomial>& cs, int k) {
        auto it = cs.find(k);
        return it == cs.end() ? Polynomial(n) : it->second;
    };
    if (df == 0 && dg == 0) return Polynomial::constant(n, 1);
    if (df == 0) {
        // Res(c, g) = c^dg
        Polynomial r = Polynomial::constant(n, 1);
        for (int i = 0; i < dg; ++i) r = r * coeff(fc, 0);
        return r;
    }
    if (dg == 0) {
        Polynomial r = Polynomial::constant(n, 1);
        for (int i = 0; i < df; ++i) r = r * coeff(gc, 0);
        return r;
    }
    int size = df + dg;
    std::vector<std::vector<Polynomial>> M(static_cast<size_t>(size),
                                           std::vector<Polynomial>(static_cast<size_t>(size), Polynomial(n)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) M[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = coeff(fc, df - k);
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            M[static_cast<size_t>(dg + r)][static_cast<size_t>(r + k)] = coeff(gc, dg - k);

    int sign = 1;
    Polynomial prev = Polynomial::constant(n, 1);
    for (int p = 0; p < size - 1; ++p) {
        size_t sp = static_cast<size_t>(p);
        if (M[sp][sp].is_zero()) {
            int swap_row = -1;
            for (int i = p + 1; i < size; ++i)
                if (!M[static_cast<size_t>(i)][sp].is_zero()) {
                    swap_row = i;
                    break;
                }
            if (swap_row < 0) return Polynomial(n);  // singular: resultant is 0
            std::swap(M[sp], M[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = p + 1; i < size; ++i) {
            size_t si = static_cast<size_t>(i);
            for (int j = p + 1; j < size; ++j) {
                size_t sj = static_cast<size_t>(j);
                Polynomial num = M[sp][sp] * M[si][sj] - M[si][sp] * M[sp][sj];
                auto q = divide_exact(num, prev);
                if (!q) throw std::logic_error("Bareiss division not exact");
                M[si][sj] = std::move(*q);
            }
            M[si][sp] = Polynomial(n);
        }
        prev = M[sp][sp];
    }
    Polynomial det = M[static_cast<size_t>(size - 1)][static_cast<size_t>(size - 1)];
    return sign < 0 ? -det : det;
}

}  // namespace singzeta
