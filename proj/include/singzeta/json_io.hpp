#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "singzeta/degeneracy.hpp"
#include "singzeta/family.hpp"
#include "singzeta/parser.hpp"
#include "singzeta/resolution.hpp"
#include "singzeta/zeta.hpp"

namespace singzeta {

using json = nlohmann::ordered_json;

namespace detail {

inline long long to_ll(const Int& v) { return v.convert_to<long long>(); }

inline Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        std::string s = j.get<std::string>();
        auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(Int(s));
        Int num(s.substr(0, slash)), den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator in rational");
        return Rational(num, den);
    }
    throw std::invalid_argument("rational must be an integer or a \"p/q\" string");
}

inline std::string rational_to_string(const Rational& r) {
    std::ostringstream out;
    out << r;
    return out.str();
}

}  // namespace detail

inline json zeta_to_json(const ZetaFunction& z) {
    json arr = json::array();
    for (const auto& [d, nu] : z.factors()) arr.push_back({d, detail::to_ll(nu)});
    return arr;
}

inline ZetaFunction zeta_from_json(const json& j) {
    ZetaFunction::FactorMap fm;
    for (const auto& pair : j) fm[pair.at(0).get<long long>()] = Int(pair.at(1).get<long long>());
    return ZetaFunction(std::move(fm));
}

inline json boundary_to_json(const NewtonBoundary& b) {
    json out;
    out["nvars"] = b.nvars;
    out["convenient"] = b.convenient;
    json faces = json::array();
    for (const auto& f : b.faces) {
        json jf;
        jf["dim"] = f.dim;
        jf["vertices"] = json::array();
        for (const auto& v : f.vertices) jf["vertices"].push_back(v.e);
        jf["support_points"] = json::array();
        for (const auto& v : f.support_points) jf["support_points"].push_back(v.e);
        jf["normal"] = f.normal.a;
        jf["level"] = f.normal.level;
        jf["normalized_volume"] = detail::to_ll(normalized_volume(f));
        faces.push_back(std::move(jf));
    }
    out["faces"] = std::move(faces);
    return out;
}

inline const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::NonDegenerate: return "non-degenerate";
        case Verdict::Degenerate: return "degenerate";
        case Verdict::ProbablyNonDegenerate: return "probably-non-degenerate";
        case Verdict::ProbablyDegenerate: return "probably-degenerate";
    }
    return "?";
}

inline const char* classification_name(Classification c) {
    switch (c) {
        case Classification::NewtonNonDegenerate: return "newton-non-degenerate";
        case Classification::WeaklyAlmostNonDegenerate: return "weakly-almost-non-degenerate";
        case Classification::DegenerateElsewhere: return "degenerate";
    }
    return "?";
}

inline json degeneracy_report_to_json(const DegeneracyReport& r) {
    json out;
    out["classification"] = classification_name(r.classification);
    json faces = json::array();
    for (const auto& [f, v] : r.verdicts) {
        json jf;
        jf["dim"] = f.dim;
        jf["normal"] = f.normal.a;
        jf["level"] = f.normal.level;
        jf["verdict"] = verdict_name(v);
        faces.push_back(std::move(jf));
    }
    out["faces"] = std::move(faces);
    return out;
}

inline json assumption_report_to_json(const AssumptionReport& r) {
    json out;
    out["ff_nondegenerate"] = r.ff;
    out["sing_disjoint_from_h"] = r.sing_disjoint;
    out["failing_certificates"] = r.failing_points;
    out["in_w_gamma"] = r.in_w_gamma;
    out["classification"] = classification_name(r.g_class);
    out["all_pass"] = r.all_pass();
    return out;
}

inline FamilyMember member_from_json(const json& j) {
    Polynomial f = parse3(j.at("f").get<std::string>());
    Polynomial h = parse3(j.at("h").get<std::string>());
    Polynomial extra(3);
    if (j.contains("extra_terms") && !j.at("extra_terms").is_null()) {
        if (j.at("extra_terms").is_array()) {
            for (const auto& t : j.at("extra_terms")) extra += parse3(t.get<std::string>());
        } else {
            extra = parse3(j.at("extra_terms").get<std::string>());
        }
    }
    std::vector<Polynomial> factors;
    if (j.contains("f_factors"))
        for (const auto& t : j.at("f_factors")) factors.push_back(parse3(t.get<std::string>()));
    std::vector<SingularPointCertificate> certs;
    if (j.contains("certificates")) {
        for (const auto& jc : j.at("certificates")) {
            SingularPointCertificate c;
            for (const auto& coord : jc.at("point"))
                c.point.push_back(detail::rational_from_json(coord));
            c.local_milnor = Int(jc.at("local_milnor").get<long long>());
            c.branches = jc.at("branches").get<int>();
            c.local_normal_form = parse2(jc.at("local_normal_form").get<std::string>());
            c.type_tag = jc.at("type_tag").get<std::string>();
            certs.push_back(std::move(c));
        }
    }
    FamilyMember m = build_member(f, h, extra, std::move(certs), std::move(factors));
    if (j.contains("d") && j.at("d").get<int>() != m.d)
        throw std::invalid_argument("declared d does not match deg f");
    return m;
}

inline FamilyMember member_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open member file: " + path);
    json j;
    in >> j;
    return member_from_json(j);
}

inline std::vector<CatalogPatch> catalog_from_json(const json& j) {
    std::vector<CatalogPatch> out;
    for (const auto& jp : j.at("types")) {
        CatalogPatch p;
        p.type_tag = jp.at("type_tag").get<std::string>();
        for (const auto& jn : jp.at("nodes")) {
            CatalogPatch::PatchNode n;
            n.suffix = jn.at("suffix").get<std::string>();
            n.genus = Int(jn.at("genus").get<long long>());
            n.multiplicity = Int(jn.at("multiplicity").get<long long>());
            p.nodes.push_back(std::move(n));
        }
        if (jp.contains("internal_edges"))
            for (const auto& je : jp.at("internal_edges"))
                p.internal_edges.push_back(
                    {je.at(0).get<int>(), je.at(1).get<int>(), je.at(2).get<int>()});
        p.edges_to_p = jp.at("edges_to_p").get<int>();
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<CatalogPatch> catalog_from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open catalog file: " + path);
    json j;
    in >> j;
    return catalog_from_json(j);
}

inline json graph_to_json(const DualGraph& g) {
    json out;
    json nodes = json::array();
    for (const auto& n : g.nodes) {
        json jn;
        jn["name"] = n.name;
        jn["components"] = n.components;
        jn["euler"] = detail::to_ll(n.euler);
        if (n.genus_known) jn["genus"] = detail::to_ll(n.genus);
        jn["multiplicity"] = detail::to_ll(n.multiplicity);
        if (n.self_known) jn["self_intersection"] = detail::to_ll(n.self_intersection);
        jn["exceptional"] = n.exceptional;
        nodes.push_back(std::move(jn));
    }
    out["nodes"] = std::move(nodes);
    json edges = json::array();
    for (const auto& e : g.edges) edges.push_back({e.a, e.b, e.count});
    out["edges"] = std::move(edges);
    return out;
}

inline std::string graph_to_dot(const DualGraph& g) {
    std::ostringstream out;
    out << "graph dual_resolution {\n";
    for (size_t i = 0; i < g.nodes.size(); ++i) {
        const auto& n = g.nodes[i];
        out << "  n" << i << " [label=\"" << n.name;
        if (n.genus_known) out << "\\ng=" << n.genus;
        if (n.self_known) out << "\\nself=" << n.self_intersection;
        out << "\\nm=" << n.multiplicity << "\"";
        if (!n.exceptional) out << ", shape=box";
        out << "];\n";
    }
    for (const auto& e : g.edges) {
        out << "  n" << e.a << " -- n" << e.b;
        if (e.count != 1) out << " [label=\"" << e.count << "\"]";
        out << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace singzeta
