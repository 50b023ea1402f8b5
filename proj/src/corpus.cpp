#include "bihom/corpus.hpp"

#include "bihom/constructions.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

enum : std::size_t { H, X, Y, F, G };

ColourAlgebra from_table(GradedBasis basis, Bicharacter eps,
                         const std::vector<std::tuple<std::size_t, std::size_t, Rational, std::size_t>>& table,
                         AlgebraKind kind) {
    const std::size_t n = basis.size();
    std::vector<Element> product(n * n, Element(n));
    for (const auto& [i, j, c, k] : table) product[i * n + j][k] += c;
    return ColourAlgebra(std::move(basis), std::move(eps), std::move(product), Matrix::identity(n),
                         Matrix::identity(n), kind);
}

std::map<std::string, bool> all_pass(const std::vector<std::string>& names) {
    std::map<std::string, bool> m;
    for (const auto& n : names) m[n] = true;
    return m;
}

const std::vector<std::string> kLieVerdicts = {"product_even",       "alpha_even",          "beta_even",
                                               "alpha_beta_commute", "bihom_skewsymmetry",  "bihom_jacobi",
                                               "alpha_multiplicative", "beta_multiplicative", "regular"};

const std::vector<std::string> kAssocVerdicts = {"product_even",       "alpha_even",          "beta_even",
                                                 "alpha_beta_commute", "alpha_multiplicative", "beta_multiplicative",
                                                 "bihom_associative",  "regular"};

// Splits "L_K" or "(L,K)" into two rationals.
std::pair<Rational, Rational> twist_parameters(std::string_view rest) {
    std::string s(rest);
    char sep = '_';
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw LookupError("unknown corpus name");
        s = s.substr(1, s.size() - 2);
        sep = ',';
    } else if (!s.empty() && s.front() == '_') {
        s = s.substr(1);
    } else {
        throw LookupError("unknown corpus name");
    }
    auto cut = s.find(sep);
    if (cut == std::string::npos) throw LookupError("unknown corpus name");
    try {
        return {parse_rational(s.substr(0, cut)), parse_rational(s.substr(cut + 1))};
    } catch (const std::invalid_argument&) {
        throw LookupError("bad osp12_twist parameters '" + std::string(rest) + "'");
    }
}

}  // namespace

ColourAlgebra osp12_classical() {
    auto z2 = GradingGroup::z2();
    GroupElement even = z2.zero(), odd = z2.generator(0);
    GradedBasis basis(z2, {"H", "X", "Y", "F", "G"}, {even, even, even, odd, odd});
    // The ten defining brackets and their mirrors under super skewsymmetry.
    std::vector<std::tuple<std::size_t, std::size_t, Rational, std::size_t>> t = {
        {H, X, 2, X},  {X, H, -2, X}, {H, Y, -2, Y}, {Y, H, 2, Y},  {X, Y, 1, H},  {Y, X, -1, H},
        {Y, G, 1, F},  {G, Y, -1, F}, {X, F, 1, G},  {F, X, -1, G}, {H, F, -1, F}, {F, H, 1, F},
        {H, G, 1, G},  {G, H, -1, G}, {G, F, 1, H},  {F, G, 1, H},  {G, G, -2, X}, {F, F, 2, Y},
    };
    return from_table(std::move(basis), Bicharacter::super(), t, AlgebraKind::lie);
}

Matrix osp12_scaling(const Rational& lambda) {
    if (sgn(lambda) == 0) throw std::invalid_argument("osp12 twist parameters must be nonzero");
    Rational l2 = lambda * lambda;
    Rational il = 1 / lambda;
    Rational il2 = 1 / l2;
    return Matrix::diagonal({1, l2, il2, il, lambda});
}

ColourAlgebra build_osp12(const Rational& lambda, const Rational& kappa) {
    return yau_twist(osp12_classical(), osp12_scaling(lambda), osp12_scaling(kappa));
}

ColourAlgebra zero_algebra(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i + 1));
    auto g = GradingGroup::trivial();
    GradedBasis basis(g, std::move(names), std::vector<GroupElement>(n, g.zero()));
    return ColourAlgebra::zero(std::move(basis), Bicharacter::trivial(g), AlgebraKind::lie);
}

ColourAlgebra mat2_assoc() {
    auto g = GradingGroup::trivial();
    GradedBasis basis(g, {"E11", "E12", "E21", "E22"}, std::vector<GroupElement>(4, g.zero()));
    // E_ab E_cd = delta_bc E_ad, index k = 2a + b.
    std::vector<std::tuple<std::size_t, std::size_t, Rational, std::size_t>> t;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b)
            for (std::size_t d = 0; d < 2; ++d) t.emplace_back(2 * a + b, 2 * b + d, 1, 2 * a + d);
    return from_table(std::move(basis), Bicharacter::trivial(g), t, AlgebraKind::associative);
}

ColourAlgebra z2z2_colour_example() {
    GradingGroup g(0, {2, 2});
    GradedBasis basis(g, {"x1", "x2", "x3"}, {g.element({1, 0}), g.element({0, 1}), g.element({1, 1})});
    Bicharacter eps(g, {{1, -1}, {-1, 1}});
    std::vector<std::tuple<std::size_t, std::size_t, Rational, std::size_t>> t = {
        {0, 1, 1, 2}, {1, 0, 1, 2}, {1, 2, 1, 0}, {2, 1, 1, 0}, {2, 0, 1, 1}, {0, 2, 1, 1},
    };
    ColourAlgebra base = from_table(std::move(basis), eps, t, AlgebraKind::lie);
    return yau_twist(base, Matrix::diagonal({1, -1, -1}), Matrix::diagonal({-1, 1, -1}));
}

CorpusEntry corpus(std::string_view name) {
    const std::string n(name);
    if (n == "osp12_classical") return {n, osp12_classical(), all_pass(kLieVerdicts)};
    if (n == "mat2_assoc") {
        auto exp = all_pass(kAssocVerdicts);
        exp["colour_commutative"] = false;
        return {n, mat2_assoc(), exp};
    }
    if (n == "z2z2_colour_example") return {n, z2z2_colour_example(), all_pass(kLieVerdicts)};
    if (n.rfind("zero_", 0) == 0) {
        std::size_t dim = 0;
        try {
            std::size_t used = 0;
            dim = std::stoul(n.substr(5), &used);
            if (used != n.size() - 5 || dim == 0 || dim > 64) throw std::invalid_argument("range");
        } catch (const std::exception&) {
            throw LookupError("unknown corpus name '" + n + "'");
        }
        return {n, zero_algebra(dim), all_pass(kLieVerdicts)};
    }
    if (n.rfind("osp12_twist", 0) == 0) {
        auto [l, k] = twist_parameters(std::string_view(n).substr(11));
        if (sgn(l) == 0 || sgn(k) == 0) throw LookupError("osp12_twist parameters must be nonzero");
        return {n, build_osp12(l, k), all_pass(kLieVerdicts)};
    }
    throw LookupError("unknown corpus name '" + n + "'");
}

std::vector<std::string> corpus_names() {
    return {"zero_3", "osp12_classical", "osp12_twist_2_3", "mat2_assoc", "z2z2_colour_example"};
}

}  // namespace bihom
