#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "singzeta/rational.hpp"

namespace singzeta {

using IVec = std::vector<long long>;

inline long long ivec_gcd(const IVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

inline IVec primitive(IVec v) {
    long long g = ivec_gcd(v);
    if (g > 1)
        for (auto& x : v) x /= g;
    return v;
}

inline long long dot(const IVec& a, const IVec& b) {
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline IVec sub(const IVec& a, const IVec& b) {
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IVec cross(const IVec& a, const IVec& b) {
    return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline Int det3(const IVec& a, const IVec& b, const IVec& c) {
    return Int(a[0]) * (Int(b[1]) * c[2] - Int(b[2]) * c[1]) -
           Int(a[1]) * (Int(b[0]) * c[2] - Int(b[2]) * c[0]) +
           Int(a[2]) * (Int(b[0]) * c[1] - Int(b[1]) * c[0]);
}

// Rank over Q of a list of integer vectors (row vectors), by fraction-free
// elimination. Dimensions are at most 3 here.
inline int ivec_rank(std::vector<IVec> rows) {
    if (rows.empty()) return 0;
    size_t n = rows[0].size();
    int rank = 0;
    size_t col = 0;
    for (size_t r = 0; r < rows.size() && col < n; ++col) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][col] == 0) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        for (size_t i = r + 1; i < rows.size(); ++i) {
            if (rows[i][col] == 0) continue;
            long long a = rows[r][col], b = rows[i][col];
            long long g = std::gcd(a < 0 ? -a : a, b < 0 ? -b : b);
            long long ma = b / g, mb = a / g;
            for (size_t j = 0; j < n; ++j) rows[i][j] = mb * rows[i][j] - ma * rows[r][j];
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Basis of the saturation of the lattice spanned by `gens` inside Z^n.
// Returns k = rank vectors. Works by bringing the matrix of generators to a
// row-style Hermite form via integer row operations, then saturating each
// pivot row (the span over Q intersected with Z^n; for n <= 3 and rank <= 2
// the primitive-kernel construction below suffices).
inline std::vector<IVec> saturated_basis(const std::vector<IVec>& gens) {
    if (gens.empty()) return {};
    size_t n = gens[0].size();
    int rank = ivec_rank(gens);
    if (rank == 0) return {};
    if (rank == 1) {
        for (const auto& g : gens)
            if (ivec_gcd(g) != 0) return {primitive(g)};
        return {};
    }
    if (rank == static_cast<int>(n)) {
        std::vector<IVec> basis;
        for (size_t i = 0; i < n; ++i) {
            IVec e(n, 0);
            e[i] = 1;
            basis.push_back(e);
        }
        return basis;
    }
    // rank 2 in Z^3: the saturation is the kernel of the primitive normal.
    IVec a;
    for (size_t i = 0; i < gens.size() && a.empty(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j) {
            IVec c = cross(gens[i], gens[j]);
            if (ivec_gcd(c) != 0) {
                a = primitive(c);
                break;
            }
        }
    if (a.empty()) throw std::logic_error("saturated_basis: inconsistent rank");
    // Kernel basis of a single primitive row a in Z^3 via column reduction:
    // find unimodular U with a.U = (g,0,0); kernel = last two columns of U.
    std::array<std::array<long long, 3>, 3> U = {{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    IVec w = a;
    // Reduce entries 1 and 2 against entry 0 with extended-gcd column ops.
    for (int j = 1; j < 3; ++j) {
        while (w[static_cast<size_t>(j)] != 0) {
            if (w[0] == 0) {
                std::swap(w[0], w[static_cast<size_t>(j)]);
                for (int r = 0; r < 3; ++r)
                    std::swap(U[static_cast<size_t>(r)][0], U[static_cast<size_t>(r)][static_cast<size_t>(j)]);
                continue;
            }
            long long q = w[static_cast<size_t>(j)] / w[0];
            w[static_cast<size_t>(j)] -= q * w[0];
            for (int r = 0; r < 3; ++r)
                U[static_cast<size_t>(r)][static_cast<size_t>(j)] -= q * U[static_cast<size_t>(r)][0];
            std::swap(w[0], w[static_cast<size_t>(j)]);
            for (int r = 0; r < 3; ++r)
                std::swap(U[static_cast<size_t>(r)][0], U[static_cast<size_t>(r)][static_cast<size_t>(j)]);
        }
    }
    std::vector<IVec> basis;
    for (int j = 1; j < 3; ++j) {
        IVec col(3);
        for (int r = 0; r < 3; ++r) col[static_cast<size_t>(r)] = U[static_cast<size_t>(r)][static_cast<size_t>(j)];
        basis.push_back(col);
    }
    return basis;
}

// Coordinates of v in the given saturated basis; v must lie in the span.
inline IVec lattice_coords(const IVec& v, const std::vector<IVec>& basis) {
    size_t k = basis.size();
    if (k == 0) {
        if (ivec_gcd(v) != 0) throw std::invalid_argument("vector outside lattice span");
        return {};
    }
    size_t n = v.size();
    // Solve basis^T x = v by rational Gaussian elimination.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(k + 1));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < k; ++j) A[i][j] = basis[j][i];
        A[i][k] = v[i];
    }
    size_t row = 0;
    std::vector<int> pivot_col(k, -1);
    for (size_t c = 0; c < k && row < n; ++c) {
        size_t p = row;
        while (p < n && A[p][c] == 0) ++p;
        if (p == n) continue;
        std::swap(A[row], A[p]);
        for (size_t i = 0; i < n; ++i) {
            if (i == row || A[i][c] == 0) continue;
            Rational f = A[i][c] / A[row][c];
            for (size_t j = c; j <= k; ++j) A[i][j] -= f * A[row][j];
        }
        pivot_col[c] = static_cast<int>(row);
        ++row;
    }
    IVec x(k, 0);
    for (size_t c = 0; c < k; ++c) {
        if (pivot_col[c] < 0) throw std::invalid_argument("degenerate basis");
        size_t r = static_cast<size_t>(pivot_col[c]);
        Rational val = A[r][k] / A[r][c];
        if (boost::multiprecision::denominator(val) != 1)
            throw std::invalid_argument("vector outside saturated lattice");
        x[c] = static_cast<long long>(boost::multiprecision::numerator(val));
    }
    // Consistency: rows without pivots must have zero rhs.
    for (size_t i = row; i < n; ++i)
        if (A[i][k] != 0) throw std::invalid_argument("vector outside lattice span");
    return x;
}

}  // namespace singzeta
