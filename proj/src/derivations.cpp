#include "bihom/derivations.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

#include "bihom/errors.hpp"

namespace bihom {

DerivationKind parse_derivation_kind(std::string_view text) {
    if (text == "der") return DerivationKind::der;
    if (text == "qder") return DerivationKind::qder;
    if (text == "gder") return DerivationKind::gder;
    if (text == "centroid") return DerivationKind::centroid;
    if (text == "qcentroid") return DerivationKind::qcentroid;
    throw std::invalid_argument("unknown derivation kind '" + std::string(text) + "'");
}

std::string to_string(DerivationKind kind) {
    switch (kind) {
        case DerivationKind::der: return "der";
        case DerivationKind::qder: return "qder";
        case DerivationKind::gder: return "gder";
        case DerivationKind::centroid: return "centroid";
        case DerivationKind::qcentroid: return "qcentroid";
    }
    return "?";
}

std::size_t arity(DerivationKind kind) {
    switch (kind) {
        case DerivationKind::qder: return 2;
        case DerivationKind::gder: return 3;
        default: return 1;
    }
}

std::vector<HomEndo> SolverResult::projection(std::size_t c) const {
    std::vector<HomEndo> out;
    out.reserve(basis.size());
    for (const auto& member : basis) out.push_back(member.at(c));
    return out;
}

namespace {

const char* const kMapLabels[] = {"D", "D'", "D''"};

/// Receives every scalar block of the defining system: the condition name,
/// the map it concerns, the basis indices (j = npos for one-argument
/// conditions) and the defect.
using Sink = std::function<void(const char* name, std::size_t map, std::size_t i, std::size_t j, const Element&)>;

Verdict named(std::string name) {
    Verdict v;
    v.name = std::move(name);
    return v;
}

constexpr std::size_t npos = static_cast<std::size_t>(-1);

struct System {
    const ColourAlgebra& a;
    DerivationKind kind;
    GroupElement gamma;
    bool strict;
    std::vector<Element> phi_cols;  // phi(e_i)
    std::vector<int> eps_gamma;     // eps(gamma, deg e_i)

    System(const ColourAlgebra& alg, DerivationKind k_, int k, int l, GroupElement g, bool s)
        : a(alg), kind(k_), gamma(std::move(g)), strict(s) {
        if (!a.basis().group().contains(gamma)) throw ValidationError("degree is not an element of the grading group");
        const Matrix phi = power(a.alpha(), k) * power(a.beta(), l);
        for (std::size_t i = 0; i < a.dim(); ++i) {
            phi_cols.push_back(phi.column(i));
            eps_gamma.push_back(a.eps().sign(gamma, a.basis().degree(i)));
        }
    }

    /// [D e_i, phi e_j] + eps(gamma, e_i)[phi e_i, E e_j]
    Element leibniz(const Matrix& d, const Matrix& e, std::size_t i, std::size_t j) const {
        Element out = a.multiply(d.column(i), phi_cols[j]);
        Element rhs = a.multiply(phi_cols[i], e.column(j));
        axpy(out, Rational(eps_gamma[i]), rhs);
        return out;
    }

    void commutation(const Matrix& d, std::size_t map, const Sink& sink, bool with_beta) const {
        const Matrix da = d * a.alpha() - a.alpha() * d;
        for (std::size_t j = 0; j < a.dim(); ++j) sink("commutes_alpha", map, j, npos, da.column(j));
        if (!with_beta) return;
        const Matrix db = d * a.beta() - a.beta() * d;
        for (std::size_t j = 0; j < a.dim(); ++j) sink("commutes_beta", map, j, npos, db.column(j));
    }

    void run(const std::vector<Matrix>& m, const Sink& sink) const {
        const std::size_t n = a.dim();
        switch (kind) {
            case DerivationKind::der:
            case DerivationKind::qder:
            case DerivationKind::gder: {
                const Matrix& d = m[0];
                const Matrix& dp = kind == DerivationKind::gder ? m[1] : m[0];
                const Matrix& lhs_map = m.back();
                const char* name = kind == DerivationKind::der    ? "leibniz"
                                   : kind == DerivationKind::qder ? "quasi_leibniz"
                                                                  : "generalized_leibniz";
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        Element defect = lhs_map.apply(a.structure(i, j)) - leibniz(d, dp, i, j);
                        sink(name, m.size() - 1, i, j, defect);
                    }
                }
                for (std::size_t c = 0; c < m.size(); ++c) commutation(m[c], c, sink, true);
                break;
            }
            case DerivationKind::centroid:
            case DerivationKind::qcentroid: {
                const Matrix& d = m[0];
                for (std::size_t i = 0; i < n; ++i) {
                    for (std::size_t j = 0; j < n; ++j) {
                        Element left = a.multiply(d.column(i), phi_cols[j]);
                        if (kind == DerivationKind::centroid) {
                            sink("centroid_left", 0, i, j, d.apply(a.structure(i, j)) - left);
                        }
                        Element right = a.multiply(phi_cols[i], d.column(j));
                        axpy(left, Rational(-eps_gamma[i]), right);
                        sink("centroid_cross", 0, i, j, left);
                    }
                }
                commutation(d, 0, sink, !strict);
                break;
            }
        }
    }
};

std::vector<std::pair<std::size_t, std::size_t>> positions(const ColourAlgebra& a, const GroupElement& gamma) {
    const auto& basis = a.basis();
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t r = 0; r < a.dim(); ++r) {
        for (std::size_t c = 0; c < a.dim(); ++c) {
            if (basis.degree(r) == basis.group().add(basis.degree(c), gamma)) out.emplace_back(r, c);
        }
    }
    return out;
}

Vector flatten(const std::vector<HomEndo>& maps) {
    Vector out;
    for (const auto& m : maps) out.insert(out.end(), m.matrix.entries().begin(), m.matrix.entries().end());
    return out;
}

Vector flatten(const Matrix& m) { return Vector(m.entries().begin(), m.entries().end()); }

SolverResult solve(const ColourAlgebra& a, DerivationKind kind, int k, int l, const GroupElement& gamma, bool strict) {
    const System sys(a, kind, k, l, gamma, strict);
    const auto pos = positions(a, gamma);
    const std::size_t n = a.dim();
    const std::size_t maps = arity(kind);
    const std::size_t unknowns = maps * pos.size();

    std::vector<Vector> columns;
    columns.reserve(unknowns);
    for (std::size_t u = 0; u < unknowns; ++u) {
        std::vector<Matrix> m(maps, Matrix(n, n));
        const auto [r, c] = pos[u % pos.size()];
        m[u / pos.size()](r, c) = 1;
        Vector column;
        sys.run(m, [&](const char*, std::size_t, std::size_t, std::size_t, const Element& v) {
            column.insert(column.end(), v.begin(), v.end());
        });
        columns.push_back(std::move(column));
    }

    SolverResult result;
    result.kind = kind;
    result.k = k;
    result.l = l;
    result.degree = gamma;
    result.strict = strict;
    if (unknowns == 0) return result;

    const std::size_t rows = columns.front().size();
    const Matrix system = Matrix::from_columns(rows, columns);
    for (const Vector& v : kernel_basis(system)) {
        std::vector<HomEndo> member(maps, HomEndo{Matrix(n, n), gamma});
        for (std::size_t u = 0; u < unknowns; ++u) {
            const auto [r, c] = pos[u % pos.size()];
            member[u / pos.size()].matrix(r, c) = v[u];
        }
        result.basis.push_back(std::move(member));
    }
    return result;
}

std::vector<std::string> labels_for(const ColourAlgebra& a, std::size_t map, std::size_t i, std::size_t j,
                                    std::size_t maps) {
    std::vector<std::string> tuple;
    if (maps > 1) tuple.emplace_back(kMapLabels[map]);
    tuple.push_back(a.basis().name(i));
    if (j != npos) tuple.push_back(a.basis().name(j));
    return tuple;
}

std::vector<std::string> entry_names(std::size_t n) {
    std::vector<std::string> out;
    out.reserve(n * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) out.push_back("m" + std::to_string(r) + "_" + std::to_string(c));
    }
    return out;
}

}  // namespace

SolverResult derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma) {
    return solve(a, DerivationKind::der, k, l, gamma, false);
}

SolverResult quasi_derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma) {
    return solve(a, DerivationKind::qder, k, l, gamma, false);
}

SolverResult generalized_derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma) {
    return solve(a, DerivationKind::gder, k, l, gamma, false);
}

SolverResult centroid_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma, bool strict) {
    return solve(a, DerivationKind::centroid, k, l, gamma, strict);
}

SolverResult quasi_centroid_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma, bool strict) {
    return solve(a, DerivationKind::qcentroid, k, l, gamma, strict);
}

SolverResult solve_space(const ColourAlgebra& a, DerivationKind kind, int k, int l, const GroupElement& gamma,
                         bool strict) {
    return solve(a, kind, k, l, gamma, strict);
}

std::vector<GroupElement> endomorphism_degrees(const ColourAlgebra& a) {
    const auto& basis = a.basis();
    std::set<GroupElement> seen;
    for (const auto& r : basis.degree_set()) {
        for (const auto& c : basis.degree_set()) seen.insert(basis.group().subtract(r, c));
    }
    if (seen.empty()) seen.insert(basis.group().zero());
    return {seen.begin(), seen.end()};
}

SolverResult solve_all_degrees(const ColourAlgebra& a, DerivationKind kind, int k, int l, bool strict) {
    SolverResult total;
    total.kind = kind;
    total.k = k;
    total.l = l;
    total.strict = strict;
    for (const auto& gamma : endomorphism_degrees(a)) {
        SolverResult part = solve(a, kind, k, l, gamma, strict);
        for (auto& member : part.basis) total.basis.push_back(std::move(member));
    }
    return total;
}

SolverResult inner_derivation_space(const ColourAlgebra& a, int k, int l) {
    const std::size_t n = a.dim();
    const Matrix phi = power(a.alpha(), k) * power(a.beta(), l);
    const Matrix id = Matrix::identity(n);
    const Matrix fa = a.alpha() - id;
    const Matrix fb = a.beta() - id;

    SolverResult result;
    result.kind = DerivationKind::der;
    result.k = k;
    result.l = l;
    std::vector<Vector> spanned;
    for (const auto& d : a.basis().degree_set()) {
        // fixed points of alpha and beta supported on degree d
        std::vector<std::size_t> outside;
        for (std::size_t i = 0; i < n; ++i) {
            if (a.basis().degree(i) != d) outside.push_back(i);
        }
        Matrix sys(2 * n + outside.size(), n);
        for (std::size_t r = 0; r < n; ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                sys(r, c) = fa(r, c);
                sys(n + r, c) = fb(r, c);
            }
        }
        for (std::size_t t = 0; t < outside.size(); ++t) sys(2 * n + t, outside[t]) = 1;
        for (const Vector& x : kernel_basis(sys)) {
            std::vector<Vector> cols;
            for (std::size_t j = 0; j < n; ++j) {
                cols.push_back(scaled(a.multiply(phi.column(j), x), a.eps().sign(d, a.basis().degree(j))));
            }
            HomEndo map{Matrix::from_columns(n, cols), d};
            Vector flat = flatten(map.matrix);
            spanned.push_back(flat);
            if (span_rank(spanned, n * n) < spanned.size()) {
                spanned.pop_back();
                continue;
            }
            result.basis.push_back({std::move(map)});
        }
    }
    return result;
}

AxiomReport verify_member(const ColourAlgebra& a, DerivationKind kind, int k, int l, const std::vector<HomEndo>& maps,
                          bool strict) {
    if (maps.size() != arity(kind)) throw DimensionError("wrong number of maps for " + to_string(kind));
    for (const auto& m : maps) {
        if (m.matrix.rows() != a.dim() || m.matrix.cols() != a.dim()) throw DimensionError("map has wrong shape");
    }
    AxiomReport report;
    report.subject = to_string(kind);
    const GroupElement gamma = maps.front().degree;
    bool graded = true;
    for (const auto& m : maps) graded = graded && m.degree == gamma && a.basis().is_graded_map(m.matrix, gamma);
    report.add("graded", graded);

    std::vector<Matrix> mats;
    for (const auto& m : maps) mats.push_back(m.matrix);
    const System sys(a, kind, k, l, gamma, strict);
    sys.run(mats, [&](const char* name, std::size_t map, std::size_t i, std::size_t j, const Element& v) {
        auto it = std::find_if(report.verdicts.begin(), report.verdicts.end(),
                               [&](const Verdict& v) { return v.name == name; });
        if (it == report.verdicts.end()) it = report.verdicts.insert(it, named(name));
        Verdict& verdict = *it;
        if (!verdict.passed || is_zero(v)) return;
        verdict.passed = false;
        verdict.witness = Witness{labels_for(a, map, i, j, maps.size()), labelled(v, a.basis().names())};
    });
    return report;
}

bool in_span(const SolverResult& space, const std::vector<HomEndo>& maps) {
    const Vector target = flatten(maps);
    if (is_zero(target)) return true;
    std::vector<Vector> outer;
    for (const auto& member : space.basis) outer.push_back(flatten(member));
    return span_contains(outer, {target}, target.size());
}

HomEndo jordan_product(const HomEndo& d1, const HomEndo& d2, const Bicharacter& eps, JordanSign sign) {
    if (d1.matrix.cols() != d2.matrix.rows() || d2.matrix.cols() != d1.matrix.rows()) {
        throw DimensionError("jordan_product: incompatible dimensions");
    }
    const int s = eps.sign(d1.degree, d2.degree) * (sign == JordanSign::plus ? 1 : -1);
    return {d1.matrix * d2.matrix + Rational(s) * (d2.matrix * d1.matrix), eps.group().add(d1.degree, d2.degree)};
}

HomEndo colour_commutator(const HomEndo& d1, const HomEndo& d2, const Bicharacter& eps) {
    return jordan_product(d1, d2, eps, JordanSign::minus);
}

AxiomReport check_jordan_axioms(const std::vector<HomEndo>& space, const Bicharacter& eps, const Matrix& alpha,
                                const Matrix& beta, JordanOptions options) {
    AxiomReport report;
    report.subject = "jordan";
    const std::size_t m = space.size();
    const std::size_t n = alpha.rows();
    const auto names = entry_names(n);
    const auto label = [](std::size_t i) { return "D" + std::to_string(i + 1); };
    const auto mu = [&](const HomEndo& x, const HomEndo& y) { return jordan_product(x, y, eps, options.sign); };
    const auto lift = [](const Matrix& f, const HomEndo& x) { return HomEndo{f * x.matrix, x.degree}; };
    const auto record = [&](Verdict& v, std::vector<std::string> tuple, const Matrix& defect) {
        if (!v.passed || defect.is_zero()) return;
        v.passed = false;
        v.witness = Witness{std::move(tuple), labelled(flatten(defect), names)};
    };

    std::vector<Vector> flat;
    for (const auto& d : space) flat.push_back(flatten(d.matrix));
    bool closed = true;
    for (std::size_t i = 0; i < m && closed; ++i) {
        for (std::size_t j = 0; j < m && closed; ++j) {
            const Vector p = flatten(mu(space[i], space[j]).matrix);
            if (!is_zero(p) && !span_contains(flat, {p}, n * n)) closed = false;
        }
    }
    report.add_flag("closed", closed);

    Verdict commute = named("maps_commute");
    for (std::size_t i = 0; i < m; ++i) {
        record(commute, {label(i)}, alpha * (beta * space[i].matrix) - beta * (alpha * space[i].matrix));
    }

    report.verdicts.push_back(std::move(commute));

    Verdict comm = named("colour_commutative");
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const HomEndo lhs = mu(lift(beta, space[i]), lift(alpha, space[j]));
            const HomEndo rhs = mu(lift(beta, space[j]), lift(alpha, space[i]));
            const Rational e = eps.sign(space[i].degree, space[j].degree);
            record(comm, {label(i), label(j)}, lhs.matrix - e * rhs.matrix);
        }
    }

    report.verdicts.push_back(std::move(comm));

    const Matrix a2b = alpha * alpha * beta;
    const Matrix a3 = alpha * alpha * alpha;
    const Matrix b2 = beta * beta;
    const Matrix ab = alpha * beta;
    // eps(w, x+z) as(mu(b^2 x, ab y), a^2 b z, a^3 w)
    const auto term = [&](const HomEndo& x, const HomEndo& y, const HomEndo& z, const HomEndo& w) {
        const HomEndo p = mu(lift(b2, x), lift(ab, y));
        const HomEndo q = lift(a2b, z);
        const HomEndo r = lift(a3, w);
        const Matrix as = mu(lift(alpha, p), mu(q, r)).matrix - mu(mu(p, q), lift(beta, r)).matrix;
        const Rational e = eps.sign(w.degree, eps.group().add(x.degree, z.degree));
        return Matrix(e * as);
    };
    Verdict jordan = named("jordan_identity");
    jordan.note = options.cycling == JordanOptions::Cycling::xzw ? "cycled over (x,z,w)" : "cycled over (x,y,w)";
    for (std::size_t x = 0; x < m && jordan.passed; ++x) {
        for (std::size_t y = 0; y < m && jordan.passed; ++y) {
            for (std::size_t z = 0; z < m && jordan.passed; ++z) {
                for (std::size_t w = 0; w < m && jordan.passed; ++w) {
                    const auto &X = space[x], &Y = space[y], &Z = space[z], &W = space[w];
                    Matrix sum = options.cycling == JordanOptions::Cycling::xzw
                                     ? term(X, Y, Z, W) + term(Z, Y, W, X) + term(W, Y, X, Z)
                                     : term(X, Y, Z, W) + term(Y, W, Z, X) + term(W, X, Z, Y);
                    record(jordan, {label(x), label(y), label(z), label(w)}, sum);
                }
            }
        }
    }
    report.verdicts.push_back(std::move(jordan));
    return report;
}

}  // namespace bihom
