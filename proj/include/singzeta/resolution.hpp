#pragma once

#include <array>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "singzeta/family.hpp"
#include "singzeta/lattice.hpp"
#include "singzeta/newton.hpp"

namespace singzeta {

struct Fan {
    std::vector<std::pair<std::string, IVec>> generators;
    std::vector<std::array<std::string, 3>> maximal_cones;

    const IVec& generator(const std::string& name) const {
        for (const auto& [n, v] : generators)
            if (n == name) return v;
        throw std::invalid_argument("unknown fan generator: " + name);
    }
    bool has_cone(const std::array<std::string, 3>& cone) const {
        for (const auto& c : maximal_cones) {
            std::set<std::string> a(c.begin(), c.end()), b(cone.begin(), cone.end());
            if (a == b) return true;
        }
        return false;
    }
};

// The fixed regular subdivision of the dual Newton diagram of the family.
inline Fan sigma_star() {
    Fan fan;
    fan.generators = {
        {"e1", {1, 0, 0}}, {"e2", {0, 1, 0}}, {"e3", {0, 0, 1}},
        {"P", {1, 1, 1}},  {"Q", {3, 2, 2}},  {"R", {2, 1, 1}},
    };
    fan.maximal_cones = {
        {"e1", "R", "e2"}, {"e1", "R", "e3"}, {"R", "Q", "e2"}, {"R", "Q", "e3"},
        {"Q", "P", "e2"},  {"Q", "P", "e3"},  {"P", "e2", "e3"},
    };
    return fan;
}

struct ChartPullback {
    std::array<std::string, 3> cone;
    std::vector<long long> orders;  // vanishing order along each cone generator
    Polynomial strict_transform;    // in chart coordinates u1, u2, u3
};

inline ChartPullback chart_pullback(const Polynomial& g, const Fan& fan,
                                    const std::array<std::string, 3>& cone) {
    if (g.nvars() != 3) throw std::invalid_argument("chart_pullback: 3-variable input required");
    if (!fan.has_cone(cone)) throw std::invalid_argument("cone does not belong to the fan");
    std::vector<std::vector<int>> M;
    for (const auto& name : cone) {
        const IVec& v = fan.generator(name);
        M.push_back({static_cast<int>(v[0]), static_cast<int>(v[1]), static_cast<int>(v[2])});
    }
    auto [factor, quo] = substitute_monomial_map(g, M);
    ChartPullback cp;
    cp.cone = cone;
    for (int k = 0; k < 3; ++k) cp.orders.push_back(factor[k]);
    cp.strict_transform = quo;
    return cp;
}

// Vanishing order of a monomial function along the divisor of a generator.
inline long long divisor_order(const Polynomial& g, const Fan& fan, const std::string& name) {
    const IVec& v = fan.generator(name);
    bool first = true;
    long long order = 0;
    for (const auto& [m, c] : g.terms()) {
        long long p = dot(v, detail::to_ivec(m));
        order = first ? p : std::min(order, p);
        first = false;
    }
    if (first) throw std::invalid_argument("divisor order of zero polynomial");
    return order;
}

struct DivisorNode {
    std::string name;
    int components = 1;
    Int euler = 0;
    Int genus = 0;
    bool genus_known = true;
    Int multiplicity = 1;  // order of the chosen coordinate function (default z2)
    Int self_intersection = 0;
    bool self_known = false;
    bool exceptional = true;
};

struct GraphEdge {
    size_t a = 0, b = 0;
    int count = 1;
};

struct DualGraph {
    std::vector<DivisorNode> nodes;
    std::vector<GraphEdge> edges;

    size_t add_node(DivisorNode n) {
        nodes.push_back(std::move(n));
        return nodes.size() - 1;
    }
    void add_edge(size_t a, size_t b, int count = 1) {
        if (a >= nodes.size() || b >= nodes.size() || a == b || count <= 0)
            throw std::invalid_argument("bad graph edge");
        edges.push_back(GraphEdge{a, b, count});
    }
    size_t find(const std::string& name) const {
        for (size_t i = 0; i < nodes.size(); ++i)
            if (nodes[i].name == name) return i;
        throw std::invalid_argument("no graph node named " + name);
    }
};

// Local resolution data for a catalogued curve singularity type: the divisors
// inserted by the second toric stage over one singular point.
struct CatalogPatch {
    std::string type_tag;
    struct PatchNode {
        std::string suffix;
        Int genus = 0;
        Int multiplicity = 1;  // of the chosen coordinate function
    };
    std::vector<PatchNode> nodes;
    std::vector<std::array<int, 3>> internal_edges;  // (node idx, node idx, count)
    int edges_to_p = 0;                              // total intersections with E(P)
};

// Built-in catalog. The A1 entry comes from resolving v1^{d+2}(v2 v3 + c v1):
// one exceptional sphere, meeting the two local branches of the curve divisor
// once each, with the coordinate function z2 of order 2 along it.
inline std::vector<CatalogPatch> default_catalog() {
    CatalogPatch a1;
    a1.type_tag = "A1";
    a1.nodes.push_back({"1", 0, 2});
    a1.edges_to_p = 2;
    return {a1};
}

namespace detail {

inline const CatalogPatch& catalog_lookup(const std::vector<CatalogPatch>& catalog,
                                          const std::string& tag) {
    for (const auto& p : catalog)
        if (p.type_tag == tag) return p;
    throw std::invalid_argument("uncatalogued singularity type: " + tag);
}

inline Face delta1_face(const FamilyMember& m) {
    NewtonBoundary b = newton_boundary(m.g);
    for (const auto& f : b.faces)
        if (f.dim == 2 && f.normal.a == IVec{3, 2, 2}) return f;
    throw std::logic_error("family member boundary has no facet with normal (3,2,2)");
}

}  // namespace detail

// First-stage divisor data. E(R) splits into one rational sphere per root of
// h(u,1); for square-free h that is d+3 components (verified against explicit
// chart computations at d=2).
inline std::vector<DivisorNode> divisor_ledger(const FamilyMember& m) {
    Fan fan = sigma_star();
    Polynomial z2 = Polynomial::variable(3, 1);
    Polynomial h2 = detail::drop_z1(m.h);
    if (!is_squarefree(h2)) throw std::invalid_argument("divisor_ledger requires h square-free");
    std::vector<DivisorNode> out;

    DivisorNode P;
    P.name = "E(P)";
    P.components = m.f_factors.empty() ? 1 : static_cast<int>(m.f_factors.size());
    Int branch_excess = 0;
    for (const auto& cert : m.certificates) branch_excess += cert.branches - 1;
    P.euler = Int(3) * m.d - Int(m.d) * m.d + m.mu_tot + branch_excess;
    if (P.components == 1) {
        P.genus = (2 - P.euler) / 2;
    } else {
        P.genus_known = false;
    }
    P.multiplicity = divisor_order(z2, fan, "P");
    out.push_back(P);

    DivisorNode Q;
    Q.name = "E(Q)";
    Q.components = 1;
    Q.genus = interior_lattice_points(detail::delta1_face(m));
    Q.euler = 2 - 2 * Q.genus;
    Q.multiplicity = divisor_order(z2, fan, "Q");
    out.push_back(Q);

    DivisorNode R;
    R.name = "E(R)";
    R.components = m.d + 3;
    R.genus = 0;
    R.euler = Int(2) * R.components;
    R.multiplicity = divisor_order(z2, fan, "R");
    out.push_back(R);
    return out;
}

// Assemble the decorated dual graph of the resolution: first-stage divisors
// split into connected components, catalogued second-stage patches, and the
// strict-transform leaves of the divisor of z2.
inline DualGraph build_dual_graph(const FamilyMember& m,
                                  const std::vector<CatalogPatch>& catalog = default_catalog()) {
    auto ledger = divisor_ledger(m);
    const DivisorNode& P = ledger[0];
    const DivisorNode& Q = ledger[1];
    const DivisorNode& R = ledger[2];
    DualGraph g;

    std::vector<size_t> p_nodes;
    std::vector<int> p_degrees;
    if (m.f_factors.empty()) {
        DivisorNode n = P;
        g.add_node(n);
        p_nodes.push_back(0);
        p_degrees.push_back(m.d);
    } else {
        for (size_t j = 0; j < m.f_factors.size(); ++j) {
            DivisorNode n;
            n.name = "E(P)#" + std::to_string(j + 1);
            n.components = 1;
            n.genus_known = false;  // per-component genus not tracked for reducible f
            n.multiplicity = P.multiplicity;
            p_nodes.push_back(g.add_node(n));
            p_degrees.push_back(m.f_factors[j].total_degree());
        }
    }
    DivisorNode qn = Q;
    size_t q = g.add_node(qn);
    std::vector<size_t> r_nodes;
    for (int k = 0; k < R.components; ++k) {
        DivisorNode n;
        n.name = "E(R)#" + std::to_string(k + 1);
        n.components = 1;
        n.genus = 0;
        n.euler = 2;
        n.multiplicity = R.multiplicity;
        r_nodes.push_back(g.add_node(n));
    }

    for (size_t j = 0; j < p_nodes.size(); ++j) g.add_edge(p_nodes[j], q, p_degrees[j]);
    for (size_t k : r_nodes) g.add_edge(q, k, 1);

    // Strict transform of {z2 = 0}: d transversal points on the curve side
    // and one on E(Q).
    int leaf_id = 0;
    auto add_leaf = [&](size_t target) {
        DivisorNode n;
        n.name = "St(z2)#" + std::to_string(++leaf_id);
        n.multiplicity = 1;
        n.exceptional = false;
        g.add_edge(g.add_node(n), target, 1);
    };
    for (size_t j = 0; j < p_nodes.size(); ++j)
        for (int t = 0; t < p_degrees[j]; ++t) add_leaf(p_nodes[j]);
    add_leaf(q);

    for (size_t ci = 0; ci < m.certificates.size(); ++ci) {
        const auto& cert = m.certificates[ci];
        const CatalogPatch& patch = detail::catalog_lookup(catalog, cert.type_tag);
        std::vector<size_t> patch_ids;
        for (const auto& pn : patch.nodes) {
            DivisorNode n;
            n.name = "E(" + cert.type_tag + "." + std::to_string(ci + 1) + ")#" + pn.suffix;
            n.genus = pn.genus;
            n.euler = 2 - 2 * pn.genus;
            n.multiplicity = pn.multiplicity;
            patch_ids.push_back(g.add_node(n));
        }
        for (const auto& [a, b, c] : patch.internal_edges)
            g.add_edge(patch_ids[static_cast<size_t>(a)], patch_ids[static_cast<size_t>(b)], c);
        // Attach the patch boundary to E(P): one intersection per local branch,
        // split over the components of the curve passing through the point.
        size_t entry = patch_ids.front();
        if (p_nodes.size() == 1) {
            g.add_edge(entry, p_nodes[0], patch.edges_to_p);
        } else {
            std::vector<size_t> through;
            for (size_t j = 0; j < m.f_factors.size(); ++j)
                if (evaluate(m.f_factors[j], cert.point) == 0) through.push_back(p_nodes[j]);
            if (through.empty() || patch.edges_to_p % static_cast<int>(through.size()) != 0)
                throw std::invalid_argument("cannot distribute branch intersections over components");
            int per = patch.edges_to_p / static_cast<int>(through.size());
            for (size_t t : through) g.add_edge(entry, t, per);
        }
    }
    return g;
}

struct LauferReport {
    bool all_zero = true;
    std::vector<Int> residuals;  // one entry per exceptional node
};

// Fill self-intersections of the exceptional nodes from the zero-intersection
// relation of the divisor of the chosen function, then re-check it.
inline LauferReport self_intersections_and_laufer(DualGraph& g) {
    std::vector<Int> weighted(g.nodes.size(), 0);
    for (const auto& e : g.edges) {
        weighted[e.a] += g.nodes[e.b].multiplicity * e.count;
        weighted[e.b] += g.nodes[e.a].multiplicity * e.count;
    }
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (!g.nodes[i].exceptional) continue;
        Int m = g.nodes[i].multiplicity;
        if (m <= 0) throw std::invalid_argument("exceptional node without multiplicity");
        if (weighted[i] % m != 0)
            throw std::invalid_argument("non-integral self-intersection at " + g.nodes[i].name);
        g.nodes[i].self_intersection = -(weighted[i] / m);
        g.nodes[i].self_known = true;
    }
    LauferReport rep;
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        if (!g.nodes[i].exceptional) continue;
        Int total = g.nodes[i].multiplicity * g.nodes[i].self_intersection + weighted[i];
        rep.residuals.push_back(total);
        if (total != 0) rep.all_zero = false;
    }
    return rep;
}

namespace detail {

struct NodeKey {
    Int genus;
    bool genus_known;
    Int self;
    bool self_known;
    Int mult;
    bool use_mult;
    bool exceptional;
    int components;
    std::vector<std::pair<Int, int>> sorted_degrees;  // placeholder, filled by caller

    bool operator==(const NodeKey& o) const {
        return genus == o.genus && genus_known == o.genus_known && self == o.self &&
               self_known == o.self_known && (!use_mult || mult == o.mult) &&
               exceptional == o.exceptional && components == o.components;
    }
};

inline bool extend_isomorphism(const DualGraph& a, const DualGraph& b,
                               const std::vector<std::vector<int>>& adjA,
                               const std::vector<std::vector<int>>& adjB,
                               const std::vector<NodeKey>& keyA, const std::vector<NodeKey>& keyB,
                               std::vector<int>& map, std::vector<bool>& used, size_t i) {
    size_t n = a.nodes.size();
    if (i == n) return true;
    for (size_t j = 0; j < n; ++j) {
        if (used[j] || !(keyA[i] == keyB[j])) continue;
        bool ok = true;
        for (size_t k = 0; k < i && ok; ++k)
            if (adjA[i][k] != adjB[j][static_cast<size_t>(map[k])]) ok = false;
        if (!ok) continue;
        map[i] = static_cast<int>(j);
        used[j] = true;
        if (extend_isomorphism(a, b, adjA, adjB, keyA, keyB, map, used, i + 1)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace detail

inline bool graphs_isomorphic(const DualGraph& a, const DualGraph& b,
                              bool compare_multiplicity = true) {
    size_t n = a.nodes.size();
    if (n != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
    auto adjacency = [](const DualGraph& g) {
        std::vector<std::vector<int>> adj(g.nodes.size(), std::vector<int>(g.nodes.size(), 0));
        for (const auto& e : g.edges) {
            adj[e.a][e.b] += e.count;
            adj[e.b][e.a] += e.count;
        }
        return adj;
    };
    auto keys = [&](const DualGraph& g) {
        std::vector<detail::NodeKey> ks;
        for (const auto& nd : g.nodes)
            ks.push_back({nd.genus, nd.genus_known, nd.self_intersection, nd.self_known,
                          nd.multiplicity, compare_multiplicity, nd.exceptional, nd.components, {}});
        return ks;
    };
    auto adjA = adjacency(a), adjB = adjacency(b);
    auto keyA = keys(a), keyB = keys(b);
    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    return detail::extend_isomorphism(a, b, adjA, adjB, keyA, keyB, map, used, 0);
}

}  // namespace singzeta
