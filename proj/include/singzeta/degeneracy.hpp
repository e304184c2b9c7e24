#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "singzeta/gcd.hpp"
#include "singzeta/groebner.hpp"
#include "singzeta/modular.hpp"
#include "singzeta/newton.hpp"
#include "singzeta/resultant.hpp"

namespace singzeta {

struct FaceFunction {
    Face face;
    Polynomial poly;
};

// Sum of the terms of g whose exponents lie on the face.
inline FaceFunction face_function(const Polynomial& g, const Face& face) {
    Polynomial p(g.nvars());
    size_t matched = 0;
    for (const auto& [m, c] : g.terms()) {
        IVec v = detail::to_ivec(m);
        if (dot(face.normal.a, v) == face.normal.level) {
            bool on_face = false;
            for (const auto& sp : face.support_points)
                if (sp == m) on_face = true;
            if (!on_face) throw std::invalid_argument("face is not a face of the boundary of g");
            p.add_term(m, c);
            ++matched;
        }
    }
    if (matched != face.support_points.size())
        throw std::invalid_argument("face is not a face of the boundary of g");
    return FaceFunction{face, p};
}

// Rewrite a face function, up to a monomial factor, as a polynomial in
// dim(face) variables via a basis of the face's direction lattice. Torus
// non-degeneracy is preserved. Returns the reduced polynomial (with zero
// minimum exponent in each variable) and the base vertex as monomial factor.
inline std::pair<Polynomial, Monomial> toric_reduce(const FaceFunction& ff) {
    const Face& face = ff.face;
    int k = face.dim;
    Monomial v0 = face.vertices.at(0);
    if (k == 0) {
        return {Polynomial::constant(1, ff.poly.coeff(v0)), v0};
    }
    std::vector<IVec> dirs;
    IVec p0 = detail::to_ivec(v0);
    for (size_t i = 1; i < face.vertices.size(); ++i)
        dirs.push_back(sub(detail::to_ivec(face.vertices[i]), p0));
    auto basis = saturated_basis(dirs);
    std::vector<std::pair<IVec, Rational>> terms;
    std::vector<long long> mins(static_cast<size_t>(k), 0);
    bool first = true;
    for (const auto& [m, c] : ff.poly.terms()) {
        IVec coords = lattice_coords(sub(detail::to_ivec(m), p0), basis);
        for (size_t i = 0; i < coords.size(); ++i)
            mins[i] = first ? coords[i] : std::min(mins[i], coords[i]);
        first = false;
        terms.emplace_back(coords, c);
    }
    Polynomial reduced(k);
    for (auto& [coords, c] : terms) {
        std::vector<int> e;
        for (size_t i = 0; i < coords.size(); ++i) e.push_back(static_cast<int>(coords[i] - mins[i]));
        reduced.add_term(Monomial(e), c);
    }
    return {reduced, v0};
}

enum class Verdict { NonDegenerate, Degenerate, ProbablyNonDegenerate, ProbablyDegenerate };

inline bool is_nondegenerate(Verdict v) {
    return v == Verdict::NonDegenerate || v == Verdict::ProbablyNonDegenerate;
}

enum class TestMode { Exact, Randomized };

struct DegeneracyOptions {
    TestMode mode = TestMode::Exact;
    int prime_bits = 61;
    int trials = 1;
    uint64_t seed = 0;

    uint64_t prime() const {
        if (prime_bits >= 61) return (uint64_t{1} << 61) - 1;  // Mersenne
        return (uint64_t{1} << 31) - 1;
    }
};

namespace detail {

// Exact screen: any common torus zero of the three polynomials projects to a
// nonzero root of every pairwise v-resultant, so a monomial gcd certifies
// emptiness. Returns nullopt when inconclusive.
inline std::optional<bool> resultant_prescreen(const Polynomial& G, const Polynomial& Gu,
                                               const Polynomial& Gv) {
    Polynomial A = resultant(G, Gu, 1), B = resultant(G, Gv, 1), C = resultant(Gu, Gv, 1);
    if (A.is_zero() || B.is_zero() || C.is_zero()) return std::nullopt;
    Polynomial r = poly_gcd(poly_gcd(A, B), C);
    if (r.is_monomial() || r.is_constant()) return true;  // no nonzero candidate root
    return std::nullopt;
}

inline bool torus_system_solvable(const Polynomial& G, const Polynomial& Gu,
                                  const Polynomial& Gv) {
    auto lift = [](const Polynomial& p) {
        Polynomial q(3);
        for (const auto& [m, c] : p.terms()) q.add_term(Monomial({m[0], m[1], 0}), c);
        return q;
    };
    Polynomial sat(3);
    sat.add_term(Monomial({1, 1, 1}), 1);
    sat.add_term(Monomial({0, 0, 0}), -1);
    return !system_inconsistent({lift(G), lift(Gu), lift(Gv), sat});
}

inline Verdict face2_exact(const Polynomial& G) {
    Polynomial Gu = derivative(G, 0), Gv = derivative(G, 1);
    Polynomial common = poly_gcd(poly_gcd(G, Gu), Gv);
    if (!common.is_constant()) return Verdict::Degenerate;  // shared non-monomial component
    auto screened = resultant_prescreen(G, Gu, Gv);
    if (screened && *screened) return Verdict::NonDegenerate;
    return torus_system_solvable(G, Gu, Gv) ? Verdict::Degenerate : Verdict::NonDegenerate;
}

inline ZpPoly strip_zero_root(ZpPoly f) {
    size_t k = 0;
    while (k < f.size() && f[k] == 0) ++k;
    return ZpPoly(f.begin() + static_cast<long>(k), f.end());
}

inline Verdict face2_randomized(const Polynomial& G, const DegeneracyOptions& opt) {
    Zp F(opt.prime());
    Polynomial Gu = derivative(G, 0), Gv = derivative(G, 1);
    std::mt19937_64 rng(opt.seed ^ 0x9e3779b97f4a7c15ULL);
    std::uniform_int_distribution<uint64_t> dist(1, F.p() - 1);
    auto res_interp = [&](const Polynomial& f, const Polynomial& g) -> std::optional<ZpPoly> {
        int dfv = std::max(f.degree_in(1), 0), dgv = std::max(g.degree_in(1), 0);
        int dfu = std::max(f.degree_in(0), 0), dgu = std::max(g.degree_in(0), 0);
        int bound = dfv * dgu + dgv * dfu + 1;
        std::vector<uint64_t> xs, ys;
        int guard = 0;
        while (static_cast<int>(xs.size()) < bound) {
            if (++guard > 16 * bound) return std::nullopt;
            uint64_t u0 = dist(rng);
            ZpPoly fv = specialize_u(F, f, u0), gv = specialize_u(F, g, u0);
            if (zp::deg(fv) != dfv || zp::deg(gv) != dgv) continue;  // leading coeff vanished
            xs.push_back(u0);
            ys.push_back(zp::resultant(F, fv, gv));
        }
        return zp::interpolate(F, xs, ys);
    };
    auto A = res_interp(G, Gu), B = res_interp(G, Gv), C = res_interp(Gu, Gv);
    if (!A || !B || !C) return Verdict::ProbablyDegenerate;
    if (A->empty() || B->empty() || C->empty()) return Verdict::ProbablyDegenerate;
    ZpPoly r = zp::gcd(F, zp::gcd(F, *A, *B), *C);
    r = strip_zero_root(r);
    return zp::deg(r) <= 0 ? Verdict::ProbablyNonDegenerate : Verdict::ProbablyDegenerate;
}

inline Verdict edge_exact(const Polynomial& q) {
    return is_squarefree(q) ? Verdict::NonDegenerate : Verdict::Degenerate;
}

inline Verdict edge_randomized(const Polynomial& q, const DegeneracyOptions& opt) {
    Zp F(opt.prime());
    ZpPoly f(static_cast<size_t>(q.degree_in(0) + 1), 0);
    for (const auto& [m, c] : q.terms())
        f[static_cast<size_t>(m[0])] = F.add(f[static_cast<size_t>(m[0])], F.from_rational(c));
    zp::trim(f);
    if (f.empty() || zp::deg(f) != q.degree_in(0)) return Verdict::ProbablyDegenerate;
    ZpPoly g = zp::gcd(F, f, zp::derivative(F, f));
    return zp::deg(strip_zero_root(g)) <= 0 ? Verdict::ProbablyNonDegenerate
                                            : Verdict::ProbablyDegenerate;
}

}  // namespace detail

// Newton non-degeneracy of g on one compact face of its boundary.
inline Verdict is_nondegenerate_on_face(const Polynomial& g, const Face& face,
                                        const DegeneracyOptions& opt = {}) {
    if (face.dim == 0) return Verdict::NonDegenerate;  // a monomial has no torus critical point
    auto [reduced, factor] = toric_reduce(face_function(g, face));
    if (face.dim == 1) {
        return opt.mode == TestMode::Exact ? detail::edge_exact(reduced)
                                           : detail::edge_randomized(reduced, opt);
    }
    if (face.dim == 2) {
        return opt.mode == TestMode::Exact ? detail::face2_exact(reduced)
                                           : detail::face2_randomized(reduced, opt);
    }
    throw std::invalid_argument("face dimension out of range");
}

enum class Classification { NewtonNonDegenerate, WeaklyAlmostNonDegenerate, DegenerateElsewhere };

struct DegeneracyReport {
    std::vector<std::pair<Face, Verdict>> verdicts;
    Classification classification = Classification::NewtonNonDegenerate;
    bool in_w_gamma = false;  // non-degenerate on every face other than the distinguished facet
    bool has_distinguished = false;
};

// Per-face report; when a distinguished facet is supplied, W(Gamma)-style
// membership means non-degeneracy on every other face.
inline DegeneracyReport classify(const Polynomial& g, const Face* distinguished = nullptr,
                                 const DegeneracyOptions& opt = {}) {
    NewtonBoundary b = newton_boundary(g);
    const Face* marked = nullptr;
    if (distinguished) {
        for (const auto& f : b.faces)
            if (f.dim == b.nvars - 1 && f.normal.a == distinguished->normal.a &&
                f.normal.level == distinguished->normal.level)
                marked = &f;
        if (!marked) throw std::invalid_argument("distinguished facet is not a facet of the boundary");
    }
    DegeneracyReport report;
    report.has_distinguished = marked != nullptr;
    bool all_nd = true, all_other_nd = true;
    for (const auto& f : b.faces) {
        Verdict v = is_nondegenerate_on_face(g, f, opt);
        report.verdicts.emplace_back(f, v);
        bool nd = is_nondegenerate(v);
        all_nd = all_nd && nd;
        if (!(marked && &f == marked)) all_other_nd = all_other_nd && nd;
    }
    if (all_nd)
        report.classification = Classification::NewtonNonDegenerate;
    else if (marked && all_other_nd)
        report.classification = Classification::WeaklyAlmostNonDegenerate;
    else
        report.classification = Classification::DegenerateElsewhere;
    report.in_w_gamma = all_other_nd && marked;
    return report;
}

}  // namespace singzeta
