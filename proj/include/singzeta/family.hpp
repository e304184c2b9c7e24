#pragma once

#include <optional>
#include <random>
#include <string>
#include <vector>

#include "singzeta/degeneracy.hpp"
#include "singzeta/newton.hpp"
#include "singzeta/zeta.hpp"

namespace singzeta {

struct SingularPointCertificate {
    std::vector<Rational> point;  // projective, normalized with first coordinate 1
    Int local_milnor = 0;
    int branches = 0;
    Polynomial local_normal_form;  // 2 variables (v2, v3)
    std::string type_tag;
};

struct FamilyMember {
    Polynomial f;      // homogeneous of degree d in z1,z2,z3
    Polynomial h;      // homogeneous of degree d+3 in z2,z3 (stored with 3 variables)
    Polynomial extra;  // optional terms strictly above the boundary
    Polynomial g;      // z1^2 f + h + extra
    int d = 0;
    std::vector<SingularPointCertificate> certificates;
    std::vector<Polynomial> f_factors;  // optional factorization of f, empty when unknown
    Int mu_tot = 0;
};

namespace detail {

inline bool is_homogeneous(const Polynomial& p, int deg) {
    for (const auto& [m, c] : p.terms())
        if (m.degree() != deg) return false;
    return true;
}

inline Polynomial drop_z1(const Polynomial& h) {
    Polynomial out(2);
    for (const auto& [m, c] : h.terms()) {
        if (m[0] != 0) throw std::invalid_argument("h must not involve z1");
        out.add_term(Monomial({m[1], m[2]}), c);
    }
    return out;
}

// Branch count of a reduced Newton non-degenerate curve germ: lattice lengths
// of the compact 1-faces plus one branch per dividing coordinate axis.
inline int branch_count(const Polynomial& nf, const NewtonBoundary& b) {
    Int total = 0;
    for (const auto* e : b.faces_of_dim(1)) total += normalized_volume(*e);
    for (int i = 0; i < 2; ++i) {
        int mn = -1;
        for (const auto& [m, c] : nf.terms()) mn = mn < 0 ? m[i] : std::min(mn, m[i]);
        if (mn >= 2) throw std::invalid_argument("local normal form is not reduced");
        total += mn;
    }
    if (total == 0) total = 1;  // single off-axis vertex cannot occur for a reduced germ
    return static_cast<int>(total);
}

inline void verify_certificate(const Polynomial& f, const SingularPointCertificate& cert) {
    if (cert.point.size() != 3 || cert.point[0] != 1)
        throw std::invalid_argument("certificate point must be [1 : p2 : p3]");
    if (evaluate(f, cert.point) != 0)
        throw std::invalid_argument("certificate point does not lie on the curve");
    for (int i = 0; i < 3; ++i)
        if (evaluate(derivative(f, i), cert.point) != 0)
            throw std::invalid_argument("certificate point is not a singular point");
    const Polynomial& nf = cert.local_normal_form;
    if (nf.nvars() != 2 || nf.is_zero() || nf.coeff(Monomial({0, 0})) != 0)
        throw std::invalid_argument("local normal form must be a 2-variable germ");
    NewtonBoundary b = newton_boundary(nf);
    if (classify(nf).classification != Classification::NewtonNonDegenerate)
        throw std::invalid_argument("local normal form is Newton degenerate");
    Int mu = b.convenient ? newton_number(b) : milnor_from_zeta(varchenko_zeta(nf), 2);
    if (mu != cert.local_milnor)
        throw std::invalid_argument("local Milnor number does not match the normal form");
    if (branch_count(nf, b) != cert.branches)
        throw std::invalid_argument("branch count does not match the normal form");
}

// Strictly above the boundary: inside the polyhedron and off every compact facet.
inline void verify_above_boundary(const Polynomial& extra, const NewtonBoundary& b) {
    for (const auto& [m, c] : extra.terms()) {
        IVec v = to_ivec(m);
        for (const auto& fn : b.facet_normals) {
            long long pairing = dot(fn.a, v);
            if (pairing < fn.level)
                throw std::invalid_argument("extra term below the Newton boundary");
            if (fn.strictly_positive() && pairing == fn.level)
                throw std::invalid_argument("extra term on the Newton boundary");
        }
    }
}

}  // namespace detail

inline FamilyMember build_member(const Polynomial& f, const Polynomial& h,
                                 const Polynomial& extra = Polynomial(3),
                                 std::vector<SingularPointCertificate> certificates = {},
                                 std::vector<Polynomial> f_factors = {}) {
    if (f.nvars() != 3 || h.nvars() != 3 || extra.nvars() != 3)
        throw std::invalid_argument("family member polynomials must have 3 variables");
    int d = f.total_degree();
    if (d < 2) throw std::invalid_argument("deg f must be at least 2");
    if (!detail::is_homogeneous(f, d)) throw std::invalid_argument("f must be homogeneous");
    if (!detail::is_homogeneous(h, d + 3) || h.is_zero())
        throw std::invalid_argument("h must be homogeneous of degree d+3");
    Polynomial h2 = detail::drop_z1(h);  // also rejects z1 in h
    if (h2.coeff(Monomial({d + 3, 0})) == 0 || h2.coeff(Monomial({0, d + 3})) == 0)
        throw std::invalid_argument("h must be convenient in z2, z3");
    for (int i = 0; i < 3; ++i) {
        std::vector<int> e(3, 0);
        e[static_cast<size_t>(i)] = d;
        if (f.coeff(Monomial(e)) == 0)
            throw std::invalid_argument("f must be convenient (contain z1^d, z2^d, z3^d)");
    }
    if (!is_squarefree(f)) throw std::invalid_argument("f must be square-free");
    if (!f_factors.empty()) {
        Polynomial prod = Polynomial::constant(3, 1);
        for (const auto& q : f_factors) prod = prod * q;
        if (prod != f) throw std::invalid_argument("f_factors do not multiply to f");
    }
    FamilyMember m;
    m.f = f;
    m.h = h;
    m.extra = extra;
    m.d = d;
    Polynomial z1sq = Polynomial::variable(3, 0, 2);
    m.g = z1sq * f + h + extra;
    if (!extra.is_zero()) {
        Polynomial npp = z1sq * f + h;
        detail::verify_above_boundary(extra, newton_boundary(npp));
    }
    for (const auto& cert : certificates) {
        detail::verify_certificate(f, cert);
        m.mu_tot += cert.local_milnor;
    }
    m.certificates = std::move(certificates);
    m.f_factors = std::move(f_factors);
    return m;
}

struct AssumptionReport {
    bool ff = false;                      // boundary germ z1^2 f(0,z2,z3) + h non-degenerate
    bool sing_disjoint = false;           // Sing(C) disjoint from {h = 0}
    std::vector<size_t> failing_points;   // certificate indices lying on {h = 0}
    bool in_w_gamma = false;
    Classification g_class = Classification::DegenerateElsewhere;

    bool all_pass() const { return ff && sing_disjoint && in_w_gamma; }
};

// The distinguished facet carried by the family: the facet of Gamma(g)
// supported by (1,1,1), whose face function is z1^2 f.
inline Face distinguished_facet(const FamilyMember& m) {
    NewtonBoundary b = newton_boundary(m.g);
    for (const auto& f : b.faces)
        if (f.dim == 2 && f.normal.a == IVec{1, 1, 1}) return f;
    throw std::logic_error("family member boundary has no facet with normal (1,1,1)");
}

inline AssumptionReport check_assumptions(const FamilyMember& m,
                                          const DegeneracyOptions& opt = {}) {
    AssumptionReport r;
    Polynomial f0 = substitute(m.f, {Polynomial::constant(3, 0), Polynomial::variable(3, 1),
                                     Polynomial::variable(3, 2)});
    Polynomial ff_poly = Polynomial::variable(3, 0, 2) * f0 + m.h;
    r.ff = classify(ff_poly, nullptr, opt).classification == Classification::NewtonNonDegenerate;
    r.sing_disjoint = true;
    Polynomial h2 = detail::drop_z1(m.h);
    for (size_t i = 0; i < m.certificates.size(); ++i) {
        const auto& p = m.certificates[i].point;
        if (evaluate(h2, {p[1], p[2]}) == 0) {
            r.sing_disjoint = false;
            r.failing_points.push_back(i);
        }
    }
    Face delta0 = distinguished_facet(m);
    auto rep = classify(m.g, &delta0, opt);
    r.g_class = rep.classification;
    r.in_w_gamma = rep.in_w_gamma;
    return r;
}

// Milnor number of the restriction of g to the plane z3 = a z1 + b z2,
// retrying with fresh random coefficients when the section is not generic.
inline Int mu2_generic_section(const FamilyMember& m, Rational a, Rational b,
                               uint64_t seed = 0, int retries = 16) {
    std::mt19937_64 rng(seed ^ 0x5bf03635d3a1e2c9ULL);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
    for (int attempt = 0; attempt <= retries; ++attempt) {
        if (attempt > 0) {
            a = Rational(num(rng), den(rng));
            b = Rational(num(rng), den(rng));
        }
        Polynomial z1 = Polynomial::variable(2, 0), z2 = Polynomial::variable(2, 1);
        Polynomial section = substitute(m.g, {z1, z2, a * z1 + b * z2});
        if (section.is_zero()) continue;
        NewtonBoundary sb = newton_boundary(section);
        if (!sb.convenient) continue;
        std::set<std::vector<int>> verts;
        for (const auto& face : sb.faces)
            for (const auto& v : face.vertices) verts.insert(v.e);
        std::set<std::vector<int>> expected = {
            {m.d + 2, 0}, {2, m.d}, {0, m.d + 3}};
        if (verts != expected) continue;
        if (classify(section).classification != Classification::NewtonNonDegenerate) continue;
        return newton_number(sb);
    }
    throw std::runtime_error("no generic plane section found within retry budget");
}

// Closed-form zeta factor carried by the Newton boundary of the family.
inline ZetaFunction base_zeta(int d) {
    if (d < 2) throw std::invalid_argument("base_zeta: d must be at least 2");
    ZetaFunction z;
    z *= ZetaFunction::factor(d + 2, Int(-d) * d + 2 * d - 1);
    z *= ZetaFunction::factor(d + 3, d + 1);
    z *= ZetaFunction::factor(2 * d + 6, -2 * d - 1);
    return z;
}

// Local model of the pullback of g at a certified singular point, in
// coordinates (v1, v2, v3): v1^{d+2} (nf(v2,v3) + v1 * c) with c = h(rho)
// when nonzero, otherwise c replaced by the 2-jet of h at rho.
inline Polynomial local_pullback_model(const FamilyMember& m,
                                       const SingularPointCertificate& cert) {
    Polynomial h2 = detail::drop_z1(m.h);
    Polynomial v2 = Polynomial::variable(2, 0), v3 = Polynomial::variable(2, 1);
    Polynomial shifted = substitute(
        h2, {Polynomial::constant(2, cert.point[1]) + v2,
             Polynomial::constant(2, cert.point[2]) + v3});
    Rational c = shifted.coeff(Monomial({0, 0}));
    Polynomial tail(2);
    if (c != 0) {
        tail = Polynomial::constant(2, c);
    } else {
        for (const auto& [mm, cc] : shifted.terms())
            if (mm.degree() >= 1 && mm.degree() <= 2) tail.add_term(mm, cc);
        if (tail.is_zero())
            throw std::runtime_error("h vanishes to order > 2 at the singular point");
    }
    auto lift = [](const Polynomial& p, int extra_v1) {
        Polynomial out(3);
        for (const auto& [mm, cc] : p.terms()) out.add_term(Monomial({extra_v1, mm[0], mm[1]}), cc);
        return out;
    };
    Polynomial inner = lift(cert.local_normal_form, 0) + lift(tail, 1);
    return Polynomial::term(Monomial({m.d + 2, 0, 0}), 1) * inner;
}

// Zeta-function of the member assembled from the boundary factor, the
// mu-total correction, and the local models at the singular points.
inline ZetaFunction assemble_zeta(const FamilyMember& m) {
    ZetaFunction z = base_zeta(m.d);
    z *= ZetaFunction::factor(m.d + 2, 1).power(m.mu_tot);
    for (const auto& cert : m.certificates) {
        Polynomial model = local_pullback_model(m, cert);
        if (classify(model).classification != Classification::NewtonNonDegenerate)
            throw std::runtime_error(
                "local pullback model is Newton degenerate; zeta not computable by this method");
        z *= varchenko_zeta(model);
    }
    return z;
}

// Recover mu_tot from an assembled zeta: the local factors only contribute at
// levels above d+2, so the (1-t^{d+2}) exponent pins it down.
inline Int infer_mu_tot(const ZetaFunction& z, int d) {
    Int base_exp = Int(-d) * d + 2 * d - 1;
    Int mu_tot = z.exponent_of(d + 2) - base_exp;
    if (mu_tot < 0) throw std::invalid_argument("zeta inconsistent with the family shape");
    ZetaFunction residual = z * base_zeta(d).inverse() *
                            ZetaFunction::factor(d + 2, 1).power(mu_tot).inverse();
    for (const auto& [lev, nu] : residual.factors())
        if (lev <= d + 2) throw std::invalid_argument("zeta inconsistent with the family shape");
    return mu_tot;
}

struct PairVerdict {
    ZetaFunction zeta0, zeta1;
    Int mu0 = 0, mu1 = 0;
    Int mu2_0 = 0, mu2_1 = 0;
    bool zeta_equal = false;
    bool mu_equal = false;
    bool mu2_equal = false;
    bool condition1 = false;
};

inline PairVerdict compare_pair(const FamilyMember& m0, const FamilyMember& m1,
                                uint64_t seed = 0) {
    PairVerdict v;
    v.zeta0 = assemble_zeta(m0);
    v.zeta1 = assemble_zeta(m1);
    v.mu0 = milnor_from_zeta(v.zeta0, 3);
    v.mu1 = milnor_from_zeta(v.zeta1, 3);
    v.mu2_0 = mu2_generic_section(m0, 1, 2, seed);
    v.mu2_1 = mu2_generic_section(m1, 1, 2, seed);
    v.zeta_equal = v.zeta0 == v.zeta1;
    v.mu_equal = v.mu0 == v.mu1;
    v.mu2_equal = v.mu2_0 == v.mu2_1;
    v.condition1 = v.zeta_equal;
    return v;
}

}  // namespace singzeta
