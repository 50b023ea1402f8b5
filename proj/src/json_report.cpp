#include "bihom/json_report.hpp"

namespace bihom {

namespace {

nlohmann::json matrix_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(to_string(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

nlohmann::json to_json(const AxiomReport& report) {
    nlohmann::json verdicts = nlohmann::json::array();
    for (const Verdict& v : report.verdicts) {
        nlohmann::json j = {{"name", v.name}, {"passed", v.passed}, {"informational", v.informational}};
        if (!v.note.empty()) j["note"] = v.note;
        if (v.witness) {
            nlohmann::json defect = nlohmann::json::object();
            for (const auto& [label, value] : v.witness->defect) defect[label] = to_string(value);
            j["witness"] = {{"tuple", v.witness->tuple}, {"defect", defect}};
        }
        verdicts.push_back(std::move(j));
    }
    return {{"subject", report.subject}, {"passed", report.passed()}, {"verdicts", verdicts}};
}

nlohmann::json to_json(const CohomologyResult& r, const GradingGroup& group) {
    return {{"n", r.n},
            {"r", r.r},
            {"degree", group.format(r.degree)},
            {"dim_cochains", r.dim_cochains},
            {"dim_cocycles", r.dim_cocycles},
            {"dim_coboundaries", r.dim_coboundaries},
            {"dim_cohomology", r.dim_cohomology},
            {"inclusion_holds", r.inclusion_holds}};
}

nlohmann::json to_json(const SolverResult& r, const GradingGroup& group) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& member : r.basis) {
        nlohmann::json maps = nlohmann::json::array();
        for (const HomEndo& d : member) maps.push_back({{"degree", group.format(d.degree)}, {"matrix", matrix_json(d.matrix)}});
        basis.push_back(std::move(maps));
    }
    nlohmann::json j = {{"kind", to_string(r.kind)},
                        {"k", r.k},
                        {"l", r.l},
                        {"strict", r.strict},
                        {"dimension", r.dimension()},
                        {"basis", basis}};
    j["degree"] = r.degree ? nlohmann::json(group.format(*r.degree)) : nlohmann::json("all");
    return j;
}

nlohmann::json to_json(const ColourAlgebra& a) {
    const GradedBasis& basis = a.basis();
    nlohmann::json vectors = nlohmann::json::array();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        vectors.push_back({{"name", basis.name(i)}, {"degree", basis.group().format(basis.degree(i))}});
    }
    nlohmann::json product = nlohmann::json::array();
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            if (is_zero(a.structure(i, j))) continue;
            product.push_back({{"x", basis.name(i)},
                               {"y", basis.name(j)},
                               {"value", format_vector(a.structure(i, j), basis.names())}});
        }
    }
    return {{"group", basis.group().signature()},
            {"bicharacter", a.eps().gen_values()},
            {"basis", vectors},
            {"product", product},
            {"alpha", matrix_json(a.alpha())},
            {"beta", matrix_json(a.beta())},
            {"kind", std::string(to_string(a.kind()))}};
}

nlohmann::json make_document(const std::string& command, nlohmann::json body) {
    nlohmann::json doc = {{"version", 1}, {"command", command}};
    for (auto& [key, value] : body.items()) doc[key] = value;
    return doc;
}

}  // namespace bihom
