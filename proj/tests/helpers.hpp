#pragma once

#include <random>

#include "singzeta/family.hpp"
#include "singzeta/parser.hpp"

namespace testutil {

using namespace singzeta;

inline Polynomial var3(int i) { return Polynomial::variable(3, i); }

inline Polynomial line(Rational a, Rational b, Rational c) {
    return a * var3(0) + b * var3(1) + c * var3(2);
}

struct Example5 {
    Polynomial l1 = line(1, 1, -2);
    Polynomial l2 = line(1, 3, -4);
    Polynomial f0 = l1 * l2;
    Polynomial h0 = parse3("z2^5+z3^5");
    Polynomial h1 = parse3("z2^5-z3^5");

    SingularPointCertificate node_cert() const {
        SingularPointCertificate c;
        c.point = {1, 1, 1};
        c.local_milnor = 1;
        c.branches = 2;
        c.local_normal_form = parse2("v2^2+v3^2");
        c.type_tag = "A1";
        return c;
    }

    FamilyMember g0() const {
        return build_member(f0, h0, Polynomial(3), {node_cert()}, {l1, l2});
    }
    FamilyMember g1() const {
        return build_member(f0, h1, Polynomial(3), {node_cert()}, {l1, l2});
    }
};

// Member with smooth Fermat curve, so the zeta-function is the pure boundary
// factor.
inline FamilyMember fermat_member(int d) {
    Polynomial f(3), h(3);
    f.add_term(Monomial({d, 0, 0}), 1);
    f.add_term(Monomial({0, d, 0}), 1);
    f.add_term(Monomial({0, 0, d}), 1);
    h.add_term(Monomial({0, d + 3, 0}), 1);
    h.add_term(Monomial({0, 0, d + 3}), 1);
    return build_member(f, h);
}

// Random convenient germ: the three axis powers plus up to `extra` random
// support points with small random coefficients.
inline Polynomial random_convenient_germ(std::mt19937_64& rng, int max_exp = 9, int extra = 5) {
    std::uniform_int_distribution<int> axis(2, max_exp), e(0, max_exp), coeff(-4, 4);
    Polynomial p(3);
    p.add_term(Monomial({axis(rng), 0, 0}), 1);
    p.add_term(Monomial({0, axis(rng), 0}), 1);
    p.add_term(Monomial({0, 0, axis(rng)}), 1);
    std::uniform_int_distribution<int> count(0, extra);
    int k = count(rng);
    for (int i = 0; i < k; ++i) {
        Monomial m({e(rng), e(rng), e(rng)});
        if (m.degree() == 0) continue;
        int c = coeff(rng);
        if (c != 0) p.add_term(m, c);
    }
    return p;
}

}  // namespace testutil
