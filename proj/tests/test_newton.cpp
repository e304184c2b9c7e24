#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "singzeta/newton.hpp"

using namespace singzeta;

namespace {

Polynomial brieskorn(int a, int b, int c) {
    Polynomial p(3);
    p.add_term(Monomial({a, 0, 0}), 1);
    p.add_term(Monomial({0, b, 0}), 1);
    p.add_term(Monomial({0, 0, c}), 1);
    return p;
}

const Face* face_with_normal(const NewtonBoundary& bd, const IVec& a) {
    for (const auto& f : bd.faces)
        if (f.dim == bd.nvars - 1 && f.normal.a == a) return &f;
    return nullptr;
}

}  // namespace

TEST_CASE("boundary of the d=2 family germ") {
    testutil::Example5 ex;
    Polynomial g = parse3("z1^2") * ex.f0 + ex.h0;
    NewtonBoundary bd = newton_boundary(g);
    CHECK(bd.convenient);

    const Face* d0 = face_with_normal(bd, {1, 1, 1});
    REQUIRE(d0 != nullptr);
    CHECK(d0->normal.level == 4);
    std::set<std::vector<int>> verts;
    for (const auto& v : d0->vertices) verts.insert(v.e);
    CHECK(verts == std::set<std::vector<int>>{{4, 0, 0}, {2, 2, 0}, {2, 0, 2}});
    CHECK(normalized_volume(*d0) == 4);  // d^2

    const Face* d1 = face_with_normal(bd, {3, 2, 2});
    REQUIRE(d1 != nullptr);
    CHECK(d1->normal.level == 10);
    std::set<std::vector<int>> verts1;
    for (const auto& v : d1->vertices) verts1.insert(v.e);
    CHECK(verts1 ==
          std::set<std::vector<int>>{{2, 2, 0}, {2, 0, 2}, {0, 5, 0}, {0, 0, 5}});
    CHECK(normalized_volume(*d1) == 7);  // 2d+3
    CHECK(interior_lattice_points(*d1) == 0);

    // shared edge between the two facets has lattice length d = 2
    for (const auto& f : bd.faces)
        if (f.dim == 1 && NewtonBoundary::contains(*d0, f) && NewtonBoundary::contains(*d1, f))
            CHECK(normalized_volume(f) == 2);
}

TEST_CASE("newton number of Brieskorn germs") {
    for (int a = 2; a <= 5; ++a)
        for (int b = 2; b <= 5; ++b)
            for (int c = 2; c <= 5; ++c) {
                Int expect = Int(a - 1) * (b - 1) * (c - 1);
                CHECK(newton_number(newton_boundary(brieskorn(a, b, c))) == expect);
            }
}

TEST_CASE("newton number requires convenience") {
    Polynomial p = parse3("z1^2*z2+z2^3+z3^3");
    NewtonBoundary bd = newton_boundary(p);
    CHECK_FALSE(bd.convenient);
    CHECK_THROWS_AS(newton_number(bd), std::invalid_argument);
}

TEST_CASE("normalized volumes in low dimensions") {
    CHECK(normalized_volume(std::vector<Monomial>{Monomial({3, 0, 0})}) == 1);
    CHECK(normalized_volume(std::vector<Monomial>{Monomial({2, 0, 0}), Monomial({0, 4, 0})}) == 2);
    // unit triangle in a coordinate plane
    CHECK(normalized_volume(std::vector<Monomial>{Monomial({1, 0, 0}), Monomial({0, 1, 0}),
                                                  Monomial({0, 0, 1})}) == 1);
    // doubled triangle
    CHECK(normalized_volume(std::vector<Monomial>{Monomial({2, 0, 0}), Monomial({0, 2, 0}),
                                                  Monomial({0, 0, 2})}) == 4);
}

TEST_CASE("newton number is invariant under coordinate permutation") {
    std::mt19937_64 rng(8101);
    for (int it = 0; it < 25; ++it) {
        Polynomial p = testutil::random_convenient_germ(rng, 6, 4);
        Polynomial q(3);
        for (const auto& [m, c] : p.terms()) q.add_term(Monomial({m[2], m[0], m[1]}), c);
        CHECK(newton_number(newton_boundary(p)) == newton_number(newton_boundary(q)));
    }
}

TEST_CASE("under-boundary volume matches direct count in 1 and 2 variables") {
    // x^3 + y^2: area under the boundary is 3*2/2 = 3, times 2! = 6
    Polynomial p(2);
    p.add_term(Monomial({3, 0}), 1);
    p.add_term(Monomial({0, 2}), 1);
    CHECK(newton_number(newton_boundary(p)) == 2);  // cusp: mu = 2
    Polynomial q(2);
    q.add_term(Monomial({2, 0}), 1);
    q.add_term(Monomial({0, 2}), 1);
    CHECK(newton_number(newton_boundary(q)) == 1);  // node: mu = 1
}

TEST_CASE("faces are closed under incidence") {
    testutil::Example5 ex;
    Polynomial g = parse3("z1^2") * ex.f0 + ex.h0;
    NewtonBoundary bd = newton_boundary(g);
    for (const auto& f : bd.faces) {
        if (f.dim == 0) continue;
        // every vertex of a face is itself a 0-face of the complex
        for (const auto& v : f.vertices) {
            bool found = false;
            for (const auto* z : bd.faces_of_dim(0))
                if (z->vertices[0] == v) found = true;
            CHECK(found);
        }
    }
}
