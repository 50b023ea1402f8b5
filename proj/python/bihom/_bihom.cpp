#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bihom/admissibility.hpp"
#include "bihom/axioms.hpp"
#include "bihom/cli.hpp"
#include "bihom/cohomology.hpp"
#include "bihom/constructions.hpp"
#include "bihom/corpus.hpp"
#include "bihom/derivations.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/json_report.hpp"

namespace py = pybind11;
using namespace bihom;

namespace {

// Rationals cross the boundary as "p/q" strings; the Python side wraps them
// in fractions.Fraction.
using StringMatrix = std::vector<std::vector<std::string>>;

Matrix to_matrix(const StringMatrix& rows) {
    const std::size_t n = rows.size();
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        if (rows[r].size() != n) throw DimensionError("matrix must be square");
        for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_rational(rows[r][c]);
    }
    return m;
}

StringMatrix from_matrix(const Matrix& m) {
    StringMatrix out(m.rows(), std::vector<std::string>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = to_string(m(r, c));
    return out;
}

std::vector<std::string> from_vector(const Vector& v) {
    std::vector<std::string> out;
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

GroupElement degree_arg(const ColourAlgebra& a, const std::optional<std::string>& text) {
    return text ? a.basis().group().parse_element(*text) : a.basis().group().zero();
}

std::vector<GroupElement> degrees_arg(const ColourAlgebra& a, const std::optional<std::string>& text) {
    if (text) return {a.basis().group().parse_element(*text)};
    return a.basis().degree_set();
}

}  // namespace

PYBIND11_MODULE(_bihom, m) {
    m.doc() = "Exact-arithmetic BiHom-Lie colour algebras";

    // Translators run newest first, so the base class goes in first.
    auto& base = py::register_exception<Error>(m, "Error", PyExc_ValueError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<ValidationError>(m, "ValidationError", base.ptr());
    py::register_exception<LookupError>(m, "NotFoundError", base.ptr());

    py::class_<ColourAlgebra>(m, "Algebra")
        .def_property_readonly("dim", &ColourAlgebra::dim)
        .def_property_readonly("names", [](const ColourAlgebra& a) { return a.basis().names(); })
        .def_property_readonly("group", [](const ColourAlgebra& a) { return a.basis().group().signature(); })
        .def_property_readonly("degrees",
                               [](const ColourAlgebra& a) {
                                   std::vector<std::string> out;
                                   for (const auto& d : a.basis().degrees()) out.push_back(a.basis().group().format(d));
                                   return out;
                               })
        .def_property_readonly("kind", [](const ColourAlgebra& a) { return std::string(to_string(a.kind())); })
        .def_property_readonly("alpha", [](const ColourAlgebra& a) { return from_matrix(a.alpha()); })
        .def_property_readonly("beta", [](const ColourAlgebra& a) { return from_matrix(a.beta()); })
        .def("structure", [](const ColourAlgebra& a, std::size_t i, std::size_t j) { return from_vector(a.structure(i, j)); })
        .def("serialize", &serialize_algebra)
        .def("to_json", [](const ColourAlgebra& a) { return to_json(a).dump(); })
        .def("__eq__", [](const ColourAlgebra& a, const ColourAlgebra& b) { return a == b; });

    m.def("corpus_names", &corpus_names);
    m.def("corpus", [](const std::string& name) { return corpus(name).algebra; }, py::arg("name"));
    m.def("build_osp12", [](const std::string& l, const std::string& k) { return build_osp12(parse_rational(l), parse_rational(k)); },
          py::arg("lam"), py::arg("kappa"));
    m.def("parse_algebra", [](const std::string& text) { return parse_algebra(text); }, py::arg("text"));

    m.def("check_axioms", [](const ColourAlgebra& a) { return to_json(check_axioms(a)).dump(); }, py::arg("algebra"));
    m.def("yau_twist",
          [](const ColourAlgebra& a, const StringMatrix& a2, const StringMatrix& b2) {
              return yau_twist(a, to_matrix(a2), to_matrix(b2));
          },
          py::arg("algebra"), py::arg("a2"), py::arg("b2"));
    m.def("commutator_algebra", &commutator_algebra, py::arg("algebra"));
    m.def("g_associative",
          [](const ColourAlgebra& a, const std::string& g) { return to_json(check_g_associative(a, parse_subgroup(g))).dump(); },
          py::arg("algebra"), py::arg("subgroup"));

    m.def("cohomology",
          [](const ColourAlgebra& a, int n, int r, int s, int l, std::optional<std::string> gamma) {
              const Representation rep = adjoint_rep(a, s, l);
              nlohmann::json out = nlohmann::json::array();
              for (const auto& g : degrees_arg(a, gamma))
                  out.push_back(to_json(cohomology_dims(rep, n, r, g), a.basis().group()));
              return out.dump();
          },
          py::arg("algebra"), py::arg("n"), py::arg("r") = 0, py::arg("s") = 0, py::arg("l") = 0,
          py::arg("gamma") = py::none());

    m.def("derivations",
          [](const ColourAlgebra& a, const std::string& kind, int k, int l, std::optional<std::string> gamma,
             bool strict) {
              const DerivationKind dk = parse_derivation_kind(kind);
              const SolverResult res = gamma ? solve_space(a, dk, k, l, degree_arg(a, gamma), strict)
                                             : solve_all_degrees(a, dk, k, l, strict);
              return to_json(res, a.basis().group()).dump();
          },
          py::arg("algebra"), py::arg("kind") = "der", py::arg("k") = 0, py::arg("l") = 0,
          py::arg("gamma") = py::none(), py::arg("strict") = false);

    m.def("run_cli",
          [](const std::vector<std::string>& args) {
              std::ostringstream out, err;
              const int code = run_cli(args, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"));
}
