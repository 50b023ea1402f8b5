#include "bihom/cli.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>

#include "bihom/admissibility.hpp"
#include "bihom/axioms.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/corpus.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/json_report.hpp"

namespace bihom {

namespace {

/// A path to an .alg file, or failing that a corpus name.
ColourAlgebra load(const std::string& source) {
    if (std::filesystem::exists(source)) return parse_algebra(read_file(source));
    try {
        return corpus(source).algebra;
    } catch (const LookupError&) {
        throw ParseError(0, "no such file or corpus algebra: " + source);
    }
}

void write_report(const std::string& path, const nlohmann::json& doc) {
    if (path.empty()) return;
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot write " + path);
    f << doc.dump(2) << '\n';
}

void emit_algebra(const ColourAlgebra& a, const std::string& path, std::ostream& out) {
    const std::string text = serialize_algebra(a);
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ParseError(0, "cannot write " + path);
    f << text;
    out << "wrote " << path << '\n';
}

struct Options {
    std::string file;
    std::string report;
    std::string out;
    std::string axioms = "auto";
    std::string a2, b2, multiplier, omega;
    std::string subgroup;
    int n = 1, r = 0, s = 0, l = 0, k = 0;
    std::string rep = "adjoint";
    std::string gamma;
    std::string kind = "der";
    std::string convention = "between";
    bool strict = false;
    std::string name;
};

std::optional<GroupElement> parse_gamma(const Options& o, const GradingGroup& group) {
    if (o.gamma.empty()) return std::nullopt;
    try {
        return group.parse_element(o.gamma);
    } catch (const std::exception& e) {
        throw ParseError(0, std::string("--gamma: ") + e.what());
    }
}

int cmd_check(const Options& o, std::ostream& out) {
    ColourAlgebra a = load(o.file);
    if (o.axioms != "auto") a = a.with_kind(parse_kind(o.axioms));
    const AxiomReport report = check_axioms(a);
    out << report.to_string();
    write_report(o.report, make_document("check", {{"report", to_json(report)}}));
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_twist(const Options& o, std::ostream& out) {
    const ColourAlgebra a = load(o.file);
    const Matrix id = Matrix::identity(a.dim());
    const Matrix a2 = o.a2.empty() ? id : parse_map(read_file(o.a2), a.basis());
    const Matrix b2 = o.b2.empty() ? id : parse_map(read_file(o.b2), a.basis());
    const ColourAlgebra t = yau_twist(a, a2, b2);
    emit_algebra(t, o.out, out);
    write_report(o.report, make_document("twist", {{"algebra", to_json(t)}}));
    return kExitOk;
}

MultiplierTable load_multiplier(const Options& o, const ColourAlgebra& a) {
    const GradingGroup& group = a.basis().group();
    if (!o.multiplier.empty()) return parse_multiplier(read_file(o.multiplier), group);
    if (!o.omega.empty()) {
        return multiplier_from_omega(group, parse_omega(read_file(o.omega), group), a.basis().degree_set());
    }
    throw ParseError(0, "one of --multiplier or --omega is required");
}

int cmd_sigma_twist(const Options& o, std::ostream& out, bool delta) {
    const ColourAlgebra a = load(o.file);
    const MultiplierTable s = load_multiplier(o, a);
    const ColourAlgebra t = delta ? delta_twist(a, s) : sigma_twist(a, s);
    emit_algebra(t, o.out, out);
    write_report(o.report, make_document(delta ? "delta-twist" : "sigma-twist", {{"algebra", to_json(t)}}));
    return kExitOk;
}

int cmd_admissible(const Options& o, std::ostream& out) {
    const ColourAlgebra a = load(o.file);
    const AxiomReport report = check_g_associative(a, parse_subgroup(o.subgroup));
    out << report.to_string();
    write_report(o.report, make_document("admissible", {{"subgroup", o.subgroup}, {"report", to_json(report)}}));
    return report.passed() ? kExitOk : kExitCheckFailed;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
    const ColourAlgebra a = load(o.file);
    if (o.rep != "adjoint") throw ParseError(0, "--rep: only 'adjoint' is supported");
    const EpsConvention conv = o.convention == "prefix" ? EpsConvention::prefix : EpsConvention::between;
    const Representation rep = adjoint_rep(a, o.s, o.l);
    const GradingGroup& group = a.basis().group();
    std::vector<GroupElement> degrees;
    if (auto g = parse_gamma(o, group)) {
        degrees.push_back(*g);
    } else {
        std::set<GroupElement> all;
        for (int m = o.n - 1; m <= o.n + 1; ++m) {
            if (m < 0) continue;
            for (const auto& g : realized_degrees(rep, m)) all.insert(g);
        }
        degrees.assign(all.begin(), all.end());
    }
    nlohmann::json results = nlohmann::json::array();
    out << "n=" << o.n << " r=" << o.r << " rep=ad_{" << o.s << "," << o.l << "}\n";
    for (const auto& g : degrees) {
        const CohomologyResult res = cohomology_dims(rep, o.n, o.r, g, conv);
        out << "degree " << group.format(g) << ": dim C=" << res.dim_cochains << " Z=" << res.dim_cocycles
            << " B=" << res.dim_coboundaries << " H=" << res.dim_cohomology
            << (res.inclusion_holds ? "" : " (image not inside kernel)") << '\n';
        results.push_back(to_json(res, group));
    }
    write_report(o.report, make_document("cohomology", {{"s", o.s}, {"l", o.l}, {"results", results}}));
    return kExitOk;
}

int cmd_derivations(const Options& o, std::ostream& out) {
    const ColourAlgebra a = load(o.file);
    const DerivationKind kind = parse_derivation_kind(o.kind);
    const GradingGroup& group = a.basis().group();
    std::vector<GroupElement> degrees;
    if (auto g = parse_gamma(o, group)) {
        degrees.push_back(*g);
    } else {
        degrees = endomorphism_degrees(a);
    }
    nlohmann::json results = nlohmann::json::array();
    std::size_t total = 0;
    for (const auto& g : degrees) {
        const SolverResult res = solve_space(a, kind, o.k, o.l, g, o.strict);
        out << to_string(kind) << " k=" << o.k << " l=" << o.l << " degree " << group.format(g)
            << ": dim " << res.dimension() << '\n';
        total += res.dimension();
        results.push_back(to_json(res, group));
    }
    out << "total dim " << total << '\n';
    write_report(o.report, make_document("derivations", {{"total", total}, {"results", results}}));
    return kExitOk;
}

int cmd_roundtrip(const Options& o, std::ostream& out, std::ostream& err) {
    const ColourAlgebra a = load(o.file);
    const std::string text = serialize_algebra(a);
    const ColourAlgebra b = parse_algebra(text);
    const bool same = a == b && serialize_algebra(b) == text;
    out << text;
    if (!same) err << "round trip changed the algebra\n";
    write_report(o.report, make_document("roundtrip", {{"identical", same}}));
    return same ? kExitOk : kExitCheckFailed;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with BiHom-Lie colour algebras", "bihom"};
    app.require_subcommand(1);
    Options o;

    const auto file_arg = [&](CLI::App* c) {
        c->add_option("file", o.file, ".alg file or corpus name")->required();
        c->add_option("--report", o.report, "write a JSON report");
    };

    auto* check = app.add_subcommand("check", "run the axiom suite");
    file_arg(check);
    check->add_option("--axioms", o.axioms, "lie, associative, generic or auto (the file's kind)")
        ->check(CLI::IsMember({"auto", "lie", "associative", "generic"}));

    auto* twist = app.add_subcommand("twist", "Yau twist by two commuting morphisms");
    file_arg(twist);
    twist->add_option("--a2", o.a2, "map file composed into alpha");
    twist->add_option("--b2", o.b2, "map file composed into beta");
    twist->add_option("--out", o.out, "write the result here instead of stdout");

    auto* sigma = app.add_subcommand("sigma-twist", "twist the product by a symmetric multiplier");
    auto* delta = app.add_subcommand("delta-twist", "twist product and bicharacter by a cocycle");
    for (auto* c : {sigma, delta}) {
        file_arg(c);
        c->add_option("--multiplier", o.multiplier, "file of 'g h value' lines");
        c->add_option("--out", o.out, "write the result here instead of stdout");
    }
    sigma->add_option("--omega", o.omega, "file of 'g value' lines");

    auto* adm = app.add_subcommand("admissible", "G-BiHom-associativity of a colour algebra");
    file_arg(adm);
    adm->add_option("--G", o.subgroup, "subgroup G1..G6")->required();

    auto* coh = app.add_subcommand("cohomology", "dimensions of Z, B and H per degree");
    file_arg(coh);
    coh->add_option("--n", o.n, "cochain order")->required();
    coh->add_option("--r", o.r, "coboundary parameter");
    coh->add_option("--rep", o.rep, "representation (adjoint)");
    coh->add_option("--s", o.s, "alpha exponent of the adjoint action");
    coh->add_option("--l", o.l, "beta exponent of the adjoint action");
    coh->add_option("--gamma", o.gamma, "single degree, comma separated");
    coh->add_option("--eps-convention", o.convention, "between or prefix")
        ->check(CLI::IsMember({"between", "prefix"}));

    auto* der = app.add_subcommand("derivations", "solve for derivation-type maps");
    file_arg(der);
    der->add_option("--kind", o.kind, "der, qder, gder, centroid or qcentroid")
        ->check(CLI::IsMember({"der", "qder", "gder", "centroid", "qcentroid"}));
    der->add_option("--k", o.k, "alpha exponent");
    der->add_option("--l", o.l, "beta exponent");
    der->add_option("--gamma", o.gamma, "single degree, comma separated");
    der->add_flag("--strict", o.strict, "centroids: impose only commutation with alpha");

    auto* example = app.add_subcommand("example", "print a corpus algebra");
    example->add_option("name", o.name, "corpus name")->required();

    auto* rt = app.add_subcommand("roundtrip", "parse, serialize and compare");
    file_arg(rt);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        const auto subs = app.get_subcommands();
        err << (subs.empty() ? app.help() : subs.front()->help());
        return kExitUsage;
    }

    try {
        if (check->parsed()) return cmd_check(o, out);
        if (twist->parsed()) return cmd_twist(o, out);
        if (sigma->parsed()) return cmd_sigma_twist(o, out, false);
        if (delta->parsed()) return cmd_sigma_twist(o, out, true);
        if (adm->parsed()) return cmd_admissible(o, out);
        if (coh->parsed()) return cmd_cohomology(o, out);
        if (der->parsed()) return cmd_derivations(o, out);
        if (rt->parsed()) return cmd_roundtrip(o, out, err);
        if (example->parsed()) {
            out << serialize_algebra(corpus(o.name).algebra);
            return kExitOk;
        }
    } catch (const ValidationError& e) {
        err << "validation error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace bihom
