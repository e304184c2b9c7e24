#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "singzeta/degeneracy.hpp"
#include "singzeta/zeta.hpp"

using namespace singzeta;

TEST_CASE("zeta factor algebra") {
    ZetaFunction z = ZetaFunction::factor(5, 2) * ZetaFunction::factor(10, -5);
    CHECK(z.str() == "(1-t^5)^2 (1-t^10)^-5");
    CHECK(z.degree() == -40);
    CHECK(z.exponent_of(5) == 2);
    CHECK(z.exponent_of(4) == 0);
    CHECK((z * z.inverse()).is_one());
    CHECK(z.power(2).exponent_of(10) == -10);
    CHECK_THROWS_AS(ZetaFunction::factor(0, 1), std::invalid_argument);
}

TEST_CASE("A1 surface germ zeta") {
    ZetaFunction z = varchenko_zeta(parse3("z1^2+z2^2+z3^2"));
    CHECK(z.str() == "(1-t^2)^-1");
    CHECK(milnor_from_zeta(z, 3) == 1);
}

TEST_CASE("plane curve conventions") {
    Polynomial node(2), cusp(2);
    node.add_term(Monomial({2, 0}), 1);
    node.add_term(Monomial({0, 2}), 1);
    cusp.add_term(Monomial({2, 0}), 1);
    cusp.add_term(Monomial({0, 3}), 1);
    CHECK(milnor_from_zeta(varchenko_zeta(node), 2) == 1);
    CHECK(milnor_from_zeta(varchenko_zeta(cusp), 2) == 2);
}

TEST_CASE("Brieskorn zeta degrees match Milnor numbers") {
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c) {
                Polynomial p(3);
                p.add_term(Monomial({a, 0, 0}), 1);
                p.add_term(Monomial({0, b, 0}), 1);
                p.add_term(Monomial({0, 0, c}), 1);
                Int mu = Int(a - 1) * (b - 1) * (c - 1);
                CHECK(milnor_from_zeta(varchenko_zeta(p), 3) == mu);
            }
}

TEST_CASE("boundary factor closed form matches the engine") {
    for (int d = 2; d <= 5; ++d) {
        FamilyMember m = testutil::fermat_member(d);
        CHECK(classify(m.g).classification == Classification::NewtonNonDegenerate);
        ZetaFunction z = varchenko_zeta(m.g);
        CHECK(z == base_zeta(d));
        CHECK(z.exponent_of(d + 2) == Int(-d) * d + 2 * d - 1);
        CHECK(z.exponent_of(d + 3) == d + 1);
        CHECK(z.exponent_of(2 * d + 6) == -2 * d - 1);
    }
}

TEST_CASE("local model zeta factors") {
    CHECK(varchenko_zeta(parse3("v1^5+v1^4*v2*v3")).str() == "(1-t^5)^-1");
    CHECK(varchenko_zeta(parse3("v1^4*v2*v3+v1^5*v2+v1^5*v3")).str() == "(1-t^6)^-1");
}

TEST_CASE("non-convenient germs skip vanishing restrictions") {
    // no z2 or z3 axis points; restrictions to those axes vanish and are skipped
    ZetaFunction z = varchenko_zeta(parse3("v1^4*(v2^2+v3^2)+2*v1^5"));
    CHECK(z.str() == "(1-t^5)^-1");
}

TEST_CASE("Kouchnirenko-Varchenko cross validation on random germs") {
    std::mt19937_64 rng(10007);
    int done = 0, tried = 0;
    while (done < 200 && tried < 4000) {
        ++tried;
        Polynomial p = testutil::random_convenient_germ(rng, 9, 5);
        if (p.term_count() > 8) continue;
        if (classify(p).classification != Classification::NewtonNonDegenerate) continue;
        CHECK(milnor_from_zeta(varchenko_zeta(p), 3) == newton_number(newton_boundary(p)));
        ++done;
    }
    CHECK(done == 200);
}

TEST_CASE("zeta is invariant under coordinate permutation") {
    std::mt19937_64 rng(10011);
    for (int it = 0; it < 20; ++it) {
        Polynomial p = testutil::random_convenient_germ(rng, 6, 4);
        Polynomial q(3);
        for (const auto& [m, c] : p.terms()) q.add_term(Monomial({m[1], m[2], m[0]}), c);
        CHECK(varchenko_zeta(p) == varchenko_zeta(q));
    }
}
