#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "singzeta/resolution.hpp"

using namespace singzeta;

namespace {

FamilyMember alt_node_member() {
    Polynomial la = testutil::line(1, 1, -3), lb = testutil::line(1, -1, 1);
    SingularPointCertificate c;
    c.point = {1, 2, 1};
    c.local_milnor = 1;
    c.branches = 2;
    c.local_normal_form = parse2("v2^2+v3^2");
    c.type_tag = "A1";
    return build_member(la * lb, parse3("z2^5+z3^5"), Polynomial(3), {c}, {la, lb});
}

// z = prod_k u_k^{M[k][i]} evaluated at a rational torus point.
std::vector<Rational> apply_monomial_map(const Fan& fan, const std::array<std::string, 3>& cone,
                                         const std::vector<Rational>& u) {
    std::vector<Rational> z(3, 1);
    for (int k = 0; k < 3; ++k) {
        const IVec& row = fan.generator(cone[static_cast<size_t>(k)]);
        for (int i = 0; i < 3; ++i)
            for (long long t = 0; t < row[static_cast<size_t>(i)]; ++t)
                z[static_cast<size_t>(i)] *= u[static_cast<size_t>(k)];
    }
    return z;
}

Rational rational_pow(const Rational& x, long long e) {
    Rational r = 1;
    for (long long i = 0; i < (e < 0 ? -e : e); ++i) r *= x;
    return e < 0 ? Rational(1) / r : r;
}

}  // namespace

TEST_CASE("sigma star fan") {
    Fan fan = sigma_star();
    CHECK(fan.maximal_cones.size() == 7);
    CHECK(fan.generator("P") == IVec{1, 1, 1});
    CHECK(fan.generator("Q") == IVec{3, 2, 2});
    CHECK(fan.generator("R") == IVec{2, 1, 1});
    for (const auto& c : fan.maximal_cones) {
        Int det = det3(fan.generator(c[0]), fan.generator(c[1]), fan.generator(c[2]));
        CHECK((det == 1 || det == -1));
    }
}

TEST_CASE("chart pullback of the d=2 germ in Cone(P,e2,e3)") {
    testutil::Example5 ex;
    FamilyMember m = ex.g0();
    Fan fan = sigma_star();
    auto cp = chart_pullback(m.g, fan, {"P", "e2", "e3"});
    CHECK(cp.orders == std::vector<long long>{4, 0, 0});
    Polynomial u1 = testutil::var3(0), u2 = testutil::var3(1), u3 = testutil::var3(2);
    Polynomial expect =
        substitute(ex.f0, {Polynomial::constant(3, 1), u2, u3}) +
        u1 * substitute(ex.h0, {Polynomial::constant(3, 0), u2, u3});
    CHECK(cp.strict_transform == expect);
    CHECK_THROWS_AS(chart_pullback(m.g, fan, {"P", "Q", "R"}), std::invalid_argument);
}

TEST_CASE("monomial orders along generators follow the toric order law") {
    Fan fan = sigma_star();
    for (const auto& [name, v] : fan.generators)
        for (int i = 0; i < 3; ++i) {
            Polynomial zi = Polynomial::variable(3, i);
            CHECK(divisor_order(zi, fan, name) == v[static_cast<size_t>(i)]);
        }
    // spot value: z2 in Cone(Q,P,e2)
    auto cp = chart_pullback(Polynomial::variable(3, 1), fan, {"Q", "P", "e2"});
    CHECK(cp.orders == std::vector<long long>{2, 1, 1});
}

TEST_CASE("strict transforms agree on chart overlaps") {
    testutil::Example5 ex;
    FamilyMember m = ex.g0();
    Fan fan = sigma_star();
    std::array<std::string, 3> ca = {"Q", "P", "e2"}, cb = {"P", "e2", "e3"};
    auto cpa = chart_pullback(m.g, fan, ca);
    auto cpb = chart_pullback(m.g, fan, cb);
    // compare u^orders * strict at torus points mapping to the same z
    std::mt19937_64 rng(11801);
    std::uniform_int_distribution<int> pick(1, 5);
    for (int it = 0; it < 5; ++it) {
        std::vector<Rational> ua = {Rational(pick(rng), pick(rng)), Rational(pick(rng)),
                                    Rational(pick(rng))};
        std::vector<Rational> z = apply_monomial_map(fan, ca, ua);
        // invert the unimodular map of chart cb: u_k = prod z_i^{inv}
        // rows of B are P, e2, e3; B^T inverse entries computed by hand:
        //   z1 = u1, z2 = u1 u2, z3 = u1 u3  =>  u1 = z1, u2 = z2/z1, u3 = z3/z1
        std::vector<Rational> ub = {z[0], z[1] / z[0], z[2] / z[0]};
        Rational lhs = evaluate(cpa.strict_transform, ua);
        for (int k = 0; k < 3; ++k) lhs *= rational_pow(ua[static_cast<size_t>(k)], cpa.orders[static_cast<size_t>(k)]);
        Rational rhs = evaluate(cpb.strict_transform, ub);
        for (int k = 0; k < 3; ++k) rhs *= rational_pow(ub[static_cast<size_t>(k)], cpb.orders[static_cast<size_t>(k)]);
        CHECK(lhs == rhs);
        CHECK(lhs == evaluate(m.g, z));
    }
}

TEST_CASE("divisor ledger of the example member") {
    testutil::Example5 ex;
    auto ledger = divisor_ledger(ex.g0());
    REQUIRE(ledger.size() == 3);
    CHECK(ledger[0].name == "E(P)");
    CHECK(ledger[0].components == 2);
    CHECK(ledger[0].euler == 4);  // 3d - d^2 + mu_tot + (nu - 1) = 6 - 4 + 1 + 1
    CHECK(ledger[0].multiplicity == 1);
    CHECK(ledger[1].name == "E(Q)");
    CHECK(ledger[1].genus == 0);
    CHECK(ledger[1].multiplicity == 2);
    CHECK(ledger[2].name == "E(R)");
    CHECK(ledger[2].components == 5);  // one rational sphere per root of h(u,1)
    CHECK(ledger[2].multiplicity == 1);
}

TEST_CASE("two-node chain from the Laufer relation") {
    DualGraph g;
    DivisorNode e1, e2, leaf;
    e1.name = "E1";
    e1.multiplicity = 1;
    e2.name = "E2";
    e2.multiplicity = 2;
    leaf.name = "S";
    leaf.multiplicity = 1;
    leaf.exceptional = false;
    g.add_node(e1);
    g.add_node(e2);
    g.add_node(leaf);
    g.add_edge(0, 1, 1);
    g.add_edge(2, 1, 1);
    auto rep = self_intersections_and_laufer(g);
    CHECK(rep.all_zero);
    CHECK(g.nodes[0].self_intersection == -2);
    CHECK(g.nodes[1].self_intersection == -1);
}

TEST_CASE("assembled graph satisfies Laufer and matches hand values") {
    testutil::Example5 ex;
    DualGraph g = build_dual_graph(ex.g0());
    auto rep = self_intersections_and_laufer(g);
    CHECK(rep.all_zero);
    CHECK(g.nodes[g.find("E(P)#1")].self_intersection == -5);
    CHECK(g.nodes[g.find("E(P)#2")].self_intersection == -5);
    CHECK(g.nodes[g.find("E(Q)")].self_intersection == -4);
    CHECK(g.nodes[g.find("E(R)#1")].self_intersection == -2);
    CHECK(g.nodes[g.find("E(A1.1)#1")].self_intersection == -1);
    CHECK(g.nodes[g.find("E(A1.1)#1")].multiplicity == 2);
}

TEST_CASE("smooth-curve graph self-intersections for general d") {
    for (int d = 2; d <= 4; ++d) {
        FamilyMember m = testutil::fermat_member(d);
        DualGraph g = build_dual_graph(m);
        auto rep = self_intersections_and_laufer(g);
        CHECK(rep.all_zero);
        CHECK(g.nodes[g.find("E(P)")].self_intersection == -3 * d);
        CHECK(g.nodes[g.find("E(Q)")].self_intersection == -(d + 2));
        CHECK(g.nodes[g.find("E(R)#1")].self_intersection == -2);
    }
}

TEST_CASE("members with equivalent singularities give isomorphic graphs") {
    testutil::Example5 ex;
    DualGraph a = build_dual_graph(ex.g0());
    DualGraph b = build_dual_graph(alt_node_member());
    self_intersections_and_laufer(a);
    self_intersections_and_laufer(b);
    CHECK(graphs_isomorphic(a, b));
    CHECK(graphs_isomorphic(b, a));
    CHECK(graphs_isomorphic(a, a));

    DualGraph c = build_dual_graph(testutil::fermat_member(2));
    self_intersections_and_laufer(c);
    CHECK_FALSE(graphs_isomorphic(a, c));

    // perturb one self-intersection
    DualGraph d = a;
    d.nodes[d.find("E(Q)")].self_intersection -= 1;
    CHECK_FALSE(graphs_isomorphic(a, d));
}

TEST_CASE("uncatalogued type is rejected") {
    testutil::Example5 ex;
    auto cert = ex.node_cert();
    cert.type_tag = "E8";
    cert.local_normal_form = parse2("v2^2+v3^2");
    FamilyMember m = build_member(ex.f0, ex.h0, Polynomial(3), {cert}, {ex.l1, ex.l2});
    CHECK_THROWS_AS(build_dual_graph(m), std::invalid_argument);
}
