#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "singzeta/json_io.hpp"

using namespace singzeta;

TEST_CASE("parser accepts the full family formula") {
    Polynomial g = parse3("z1^2*(z1+z2-2*z3)*(z1+3*z2-4*z3)+z2^5+z3^5");
    testutil::Example5 ex;
    CHECK(g == parse3("z1^2") * ex.f0 + ex.h0);
    CHECK(g.term_count() <= 13);
}

TEST_CASE("parser aliases and juxtaposition") {
    CHECK(parse3("x^2+y^2+z^2") == parse3("z1^2+z2^2+z3^2"));
    CHECK(parse3("z1^2(z1+z2)") == parse3("z1^2*(z1+z2)"));
    CHECK(parse3("2z1") == parse3("2*z1"));
    CHECK(parse3("1/2*z1") == Rational(1, 2) * Polynomial::variable(3, 0));
    CHECK(parse3("-z1+z2") == parse3("z2-z1"));
    CHECK(parse3("(z1+z2)^2") == parse3("z1^2+2*z1*z2+z2^2"));
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(parse3("z1^-1"), ParseError);
    CHECK_THROWS_AS(parse3("w^2"), ParseError);
    CHECK_THROWS_AS(parse3("z1+("), ParseError);
    CHECK_THROWS_AS(parse3("z1 )"), ParseError);
    try {
        parse3("z1+\nq2");
        FAIL("expected parse error");
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(e.column == 1);
    }
}

TEST_CASE("print then parse round trip") {
    std::mt19937_64 rng(13001);
    std::uniform_int_distribution<int> e(0, 5), c(-6, 6);
    for (int it = 0; it < 50; ++it) {
        Polynomial p(3);
        for (int t = 0; t < 4; ++t) p.add_term(Monomial({e(rng), e(rng), e(rng)}), c(rng));
        if (p.is_zero()) continue;
        CHECK(parse3(p.str()) == p);
    }
    testutil::Example5 ex;
    for (const auto& p : {ex.f0, ex.h0, ex.h1, parse3("z1^2") * ex.f0 + ex.h0})
        CHECK(parse3(p.str()) == p);
}

TEST_CASE("zeta json round trip") {
    ZetaFunction z = ZetaFunction::factor(5, 2) * ZetaFunction::factor(10, -5);
    json j = zeta_to_json(z);
    CHECK(j.dump() == "[[5,2],[10,-5]]");
    CHECK(zeta_from_json(j) == z);
}

TEST_CASE("member json loading matches the programmatic build") {
    json j = {
        {"d", 2},
        {"f", "(z1+z2-2*z3)*(z1+3*z2-4*z3)"},
        {"f_factors", {"z1+z2-2*z3", "z1+3*z2-4*z3"}},
        {"h", "z2^5+z3^5"},
        {"certificates",
         {{{"point", {"1", "1", "1"}},
           {"local_milnor", 1},
           {"branches", 2},
           {"local_normal_form", "v2^2+v3^2"},
           {"type_tag", "A1"}}}},
    };
    FamilyMember m = member_from_json(j);
    testutil::Example5 ex;
    CHECK(m.g == ex.g0().g);
    CHECK(m.mu_tot == 1);
    CHECK(assemble_zeta(m).str() == "(1-t^5)^2 (1-t^10)^-5");

    json bad = j;
    bad["d"] = 3;
    CHECK_THROWS_AS(member_from_json(bad), std::invalid_argument);
}

TEST_CASE("rational fields accept p/q strings") {
    CHECK(detail::rational_from_json(json("3/4")) == Rational(3, 4));
    CHECK(detail::rational_from_json(json(-7)) == Rational(-7));
    CHECK_THROWS_AS(detail::rational_from_json(json("1/0")), std::invalid_argument);
}

TEST_CASE("catalog json round trip") {
    json j = {{"types",
               {{{"type_tag", "A1"},
                 {"nodes", {{{"suffix", "1"}, {"genus", 0}, {"multiplicity", 2}}}},
                 {"edges_to_p", 2}}}}};
    auto cat = catalog_from_json(j);
    REQUIRE(cat.size() == 1);
    CHECK(cat[0].type_tag == "A1");
    CHECK(cat[0].nodes[0].multiplicity == 2);
    CHECK(cat[0].edges_to_p == 2);
}

TEST_CASE("graph serialization") {
    testutil::Example5 ex;
    DualGraph g = build_dual_graph(ex.g0());
    self_intersections_and_laufer(g);
    json j = graph_to_json(g);
    CHECK(j["nodes"].size() == g.nodes.size());
    CHECK(j["edges"].size() == g.edges.size());
    std::string dot = graph_to_dot(g);
    CHECK(dot.find("graph dual_resolution") != std::string::npos);
    CHECK(dot.find("E(Q)") != std::string::npos);
    CHECK(dot.find("--") != std::string::npos);
}

TEST_CASE("boundary and report serialization is deterministic") {
    Polynomial p = parse3("z1^2+z2^3+z3^7");
    std::string a = boundary_to_json(newton_boundary(p)).dump();
    std::string b = boundary_to_json(newton_boundary(p)).dump();
    CHECK(a == b);
    DegeneracyOptions opt;
    opt.mode = TestMode::Randomized;
    opt.seed = 5;
    std::string ra = degeneracy_report_to_json(classify(p, nullptr, opt)).dump();
    std::string rb = degeneracy_report_to_json(classify(p, nullptr, opt)).dump();
    CHECK(ra == rb);
}
