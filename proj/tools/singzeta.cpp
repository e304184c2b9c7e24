#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "singzeta/json_io.hpp"

using namespace singzeta;

namespace {

struct GlobalOptions {
    uint64_t seed = 0;
    std::string mode = "exact";
    int prime_bits = 61;
    int retries = 16;

    DegeneracyOptions degeneracy() const {
        DegeneracyOptions o;
        o.mode = mode == "randomized" ? TestMode::Randomized : TestMode::Exact;
        o.prime_bits = prime_bits;
        o.seed = seed;
        return o;
    }
};

void add_global_flags(CLI::App* cmd, GlobalOptions& g) {
    cmd->add_option("--seed", g.seed, "random seed (default from SINGZETA_SEED if set)")
        ->envname("SINGZETA_SEED");
    cmd->add_option("--mode", g.mode, "degeneracy test mode")
        ->check(CLI::IsMember({"exact", "randomized"}))
        ->capture_default_str();
    cmd->add_option("--prime-bits", g.prime_bits, "modulus size for randomized mode")
        ->capture_default_str();
    cmd->add_option("--retries", g.retries, "genericity retry budget")->capture_default_str();
}

int cmd_analyze(const std::string& expr, bool as_json, const GlobalOptions& g) {
    Polynomial p = parse3(expr);
    NewtonBoundary b = newton_boundary(p);
    DegeneracyReport rep = classify(p, nullptr, g.degeneracy());
    if (as_json) {
        json out;
        out["polynomial"] = p.str();
        out["boundary"] = boundary_to_json(b);
        out["degeneracy"] = degeneracy_report_to_json(rep);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "polynomial: " << p.str() << "\n";
        std::cout << "convenient: " << (b.convenient ? "yes" : "no") << "\n";
        std::cout << "compact faces: " << b.faces.size() << "\n";
        for (const auto& f : b.faces) {
            std::cout << "  dim " << f.dim << "  normal (";
            for (size_t i = 0; i < f.normal.a.size(); ++i)
                std::cout << (i ? "," : "") << f.normal.a[i];
            std::cout << ")  level " << f.normal.level << "  nvol " << normalized_volume(f)
                      << "\n";
        }
        std::cout << "classification: " << classification_name(rep.classification) << "\n";
    }
    return 0;
}

int cmd_zeta(const std::string& expr, bool as_json) {
    Polynomial p = parse3(expr);
    ZetaFunction z = varchenko_zeta(p);
    if (as_json)
        std::cout << zeta_to_json(z).dump() << "\n";
    else
        std::cout << z.str() << "\n";
    return 0;
}

int cmd_milnor(const std::string& expr, bool as_json) {
    Polynomial p = parse3(expr);
    NewtonBoundary b = newton_boundary(p);
    ZetaFunction z = varchenko_zeta(p);
    Int mu = milnor_from_zeta(z, 3);
    if (as_json) {
        json out;
        out["mu_from_zeta"] = detail::to_ll(mu);
        if (b.convenient) out["newton_number"] = detail::to_ll(newton_number(b));
        std::cout << out.dump() << "\n";
    } else {
        std::cout << "mu (from zeta) = " << mu << "\n";
        if (b.convenient)
            std::cout << "newton number  = " << newton_number(b) << "\n";
        else
            std::cout << "newton number  = (not convenient)\n";
    }
    return 0;
}

int cmd_family_check(const std::string& file, bool as_json, const GlobalOptions& g) {
    FamilyMember m = member_from_file(file);
    AssumptionReport r = check_assumptions(m, g.degeneracy());
    if (as_json) {
        std::cout << assumption_report_to_json(r).dump(2) << "\n";
    } else {
        std::cout << "d = " << m.d << ", mu_tot = " << m.mu_tot << "\n";
        std::cout << "boundary germ non-degeneracy: " << (r.ff ? "pass" : "FAIL") << "\n";
        std::cout << "Sing(C) off {h=0}:            " << (r.sing_disjoint ? "pass" : "FAIL");
        for (size_t i : r.failing_points) std::cout << "  [certificate " << i << "]";
        std::cout << "\n";
        std::cout << "W(Gamma) membership:           " << (r.in_w_gamma ? "pass" : "FAIL")
                  << "\n";
    }
    return r.all_pass() ? 0 : 1;
}

int cmd_family_zeta(const std::string& file, bool as_json, const GlobalOptions& g) {
    FamilyMember m = member_from_file(file);
    ZetaFunction z = assemble_zeta(m);
    Int mu = milnor_from_zeta(z, 3);
    Int mu2 = mu2_generic_section(m, 1, 2, g.seed, g.retries);
    if (as_json) {
        json out;
        out["zeta"] = zeta_to_json(z);
        out["zeta_pretty"] = z.str();
        out["mu"] = detail::to_ll(mu);
        out["mu2"] = detail::to_ll(mu2);
        out["mu_tot"] = detail::to_ll(infer_mu_tot(z, m.d));
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "zeta = " << z.str() << "\n";
        std::cout << "mu = " << mu << ", mu2 = " << mu2 << ", mu_tot = " << infer_mu_tot(z, m.d)
                  << "\n";
    }
    return 0;
}

int cmd_family_compare(const std::string& f0, const std::string& f1, bool expect_equal,
                       bool as_json, const GlobalOptions& g) {
    FamilyMember m0 = member_from_file(f0), m1 = member_from_file(f1);
    PairVerdict v = compare_pair(m0, m1, g.seed);
    if (as_json) {
        json out;
        out["zeta0"] = v.zeta0.str();
        out["zeta1"] = v.zeta1.str();
        out["mu0"] = detail::to_ll(v.mu0);
        out["mu1"] = detail::to_ll(v.mu1);
        out["mu2_0"] = detail::to_ll(v.mu2_0);
        out["mu2_1"] = detail::to_ll(v.mu2_1);
        out["zeta_equal"] = v.zeta_equal;
        out["mu_equal"] = v.mu_equal;
        out["mu2_equal"] = v.mu2_equal;
        out["condition1"] = v.condition1;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "zeta0 = " << v.zeta0.str() << "  (mu = " << v.mu0 << ")\n";
        std::cout << "zeta1 = " << v.zeta1.str() << "  (mu = " << v.mu1 << ")\n";
        std::cout << "mu2: " << v.mu2_0 << " vs " << v.mu2_1 << "\n";
        std::cout << "condition (1): " << (v.condition1 ? "PASS" : "FAIL") << "\n";
    }
    if (expect_equal && !v.condition1) return 1;
    return 0;
}

int cmd_resgraph_build(const std::string& file, const std::string& catalog_file, bool as_dot,
                       bool as_json) {
    FamilyMember m = member_from_file(file);
    auto catalog = catalog_file.empty() ? default_catalog() : catalog_from_file(catalog_file);
    DualGraph g = build_dual_graph(m, catalog);
    LauferReport rep = self_intersections_and_laufer(g);
    if (as_dot) {
        std::cout << graph_to_dot(g);
    } else if (as_json) {
        json out;
        out["graph"] = graph_to_json(g);
        out["laufer_zero"] = rep.all_zero;
        std::cout << out.dump(2) << "\n";
    } else {
        for (const auto& n : g.nodes) {
            std::cout << n.name << ": m=" << n.multiplicity;
            if (n.genus_known) std::cout << " g=" << n.genus;
            if (n.self_known) std::cout << " self=" << n.self_intersection;
            if (!n.exceptional) std::cout << " (strict transform)";
            std::cout << "\n";
        }
        for (const auto& e : g.edges)
            std::cout << g.nodes[e.a].name << " -- " << g.nodes[e.b].name << " x" << e.count
                      << "\n";
        std::cout << "laufer check: " << (rep.all_zero ? "zero" : "NONZERO") << "\n";
    }
    return rep.all_zero ? 0 : 1;
}

int cmd_resgraph_compare(const std::string& f0, const std::string& f1,
                         const std::string& catalog_file, bool expect_equal) {
    auto catalog = catalog_file.empty() ? default_catalog() : catalog_from_file(catalog_file);
    DualGraph g0 = build_dual_graph(member_from_file(f0), catalog);
    DualGraph g1 = build_dual_graph(member_from_file(f1), catalog);
    self_intersections_and_laufer(g0);
    self_intersections_and_laufer(g1);
    bool iso = graphs_isomorphic(g0, g1);
    std::cout << "graphs " << (iso ? "isomorphic" : "not isomorphic") << "\n";
    if (expect_equal && !iso) return 1;
    return 0;
}

int cmd_sigma_star(bool check) {
    Fan fan = sigma_star();
    if (check) {
        bool ok = true;
        for (const auto& c : fan.maximal_cones) {
            Int det = det3(fan.generator(c[0]), fan.generator(c[1]), fan.generator(c[2]));
            if (det != 1 && det != -1) ok = false;
        }
        std::cout << fan.maximal_cones.size() << " cones, "
                  << (ok ? "all unimodular" : "NON-UNIMODULAR CONE FOUND") << "\n";
        return ok ? 0 : 1;
    }
    for (const auto& [name, v] : fan.generators) {
        std::cout << name << " = (";
        for (size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
        std::cout << ")\n";
    }
    for (const auto& c : fan.maximal_cones)
        std::cout << "Cone(" << c[0] << "," << c[1] << "," << c[2] << ")\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Newton-polyhedral invariants of hypersurface singularity germs"};
    app.require_subcommand(1);
    GlobalOptions g;

    std::string expr, file0, file1, catalog_file;
    bool as_json = false, as_dot = false, expect_equal = false, check_fan = false;

    auto* analyze = app.add_subcommand("analyze", "Newton boundary and degeneracy report");
    analyze->add_option("expr", expr, "polynomial expression")->required();
    analyze->add_flag("--json", as_json, "JSON output");
    add_global_flags(analyze, g);

    auto* zeta = app.add_subcommand("zeta", "monodromy zeta-function");
    zeta->add_option("expr", expr, "polynomial expression")->required();
    zeta->add_flag("--json", as_json, "JSON output");
    add_global_flags(zeta, g);

    auto* milnor = app.add_subcommand("milnor", "Newton number and Milnor number from zeta");
    milnor->add_option("expr", expr, "polynomial expression")->required();
    milnor->add_flag("--json", as_json, "JSON output");
    add_global_flags(milnor, g);

    auto* family = app.add_subcommand("family", "z1^2 f + h family pipeline");
    family->require_subcommand(1);
    auto* fcheck = family->add_subcommand("check", "verify member assumptions");
    fcheck->add_option("member", file0, "member JSON file")->required();
    fcheck->add_flag("--json", as_json, "JSON output");
    add_global_flags(fcheck, g);
    auto* fzeta = family->add_subcommand("zeta", "assemble the member zeta-function");
    fzeta->add_option("member", file0, "member JSON file")->required();
    fzeta->add_flag("--json", as_json, "JSON output");
    add_global_flags(fzeta, g);
    auto* fcompare = family->add_subcommand("compare", "compare two members");
    fcompare->add_option("member0", file0, "member JSON file")->required();
    fcompare->add_option("member1", file1, "member JSON file")->required();
    fcompare->add_flag("--json", as_json, "JSON output");
    fcompare->add_flag("--expect-equal", expect_equal, "exit 1 if condition (1) fails");
    add_global_flags(fcompare, g);

    auto* resgraph = app.add_subcommand("resgraph", "dual resolution graphs");
    resgraph->require_subcommand(1);
    auto* rbuild = resgraph->add_subcommand("build", "build the decorated dual graph");
    rbuild->add_option("member", file0, "member JSON file")->required();
    rbuild->add_option("--catalog", catalog_file, "local-resolution catalog JSON");
    rbuild->add_flag("--dot", as_dot, "DOT output");
    rbuild->add_flag("--json", as_json, "JSON output");
    add_global_flags(rbuild, g);
    auto* rcompare = resgraph->add_subcommand("compare", "compare two dual graphs");
    rcompare->add_option("member0", file0, "member JSON file")->required();
    rcompare->add_option("member1", file1, "member JSON file")->required();
    rcompare->add_option("--catalog", catalog_file, "local-resolution catalog JSON");
    rcompare->add_flag("--expect-equal", expect_equal, "exit 1 if not isomorphic");
    add_global_flags(rcompare, g);

    auto* sigma = app.add_subcommand("sigma-star", "the fixed fan subdivision");
    sigma->add_flag("--check", check_fan, "verify cone count and unimodularity");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*analyze) return cmd_analyze(expr, as_json, g);
        if (*zeta) return cmd_zeta(expr, as_json);
        if (*milnor) return cmd_milnor(expr, as_json);
        if (*fcheck) return cmd_family_check(file0, as_json, g);
        if (*fzeta) return cmd_family_zeta(file0, as_json, g);
        if (*fcompare) return cmd_family_compare(file0, file1, expect_equal, as_json, g);
        if (*rbuild) return cmd_resgraph_build(file0, catalog_file, as_dot, as_json);
        if (*rcompare) return cmd_resgraph_compare(file0, file1, catalog_file, expect_equal);
        if (*sigma) return cmd_sigma_star(check_fan);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
