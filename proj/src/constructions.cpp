#include "bihom/constructions.hpp"

#include <algorithm>
#include <set>

#include "bihom/axioms.hpp"
#include "bihom/errors.hpp"

namespace bihom {

namespace {

void require(const Verdict& v, const std::string& context) {
    if (v.passed) return;
    std::string msg = context + ": " + v.name + " fails";
    if (v.witness) msg += " at " + v.witness->to_string();
    throw ValidationError(msg);
}

void require(const AxiomReport& r, const std::string& context) {
    for (const auto& v : r.verdicts)
        if (!v.informational) require(v, context);
}

std::vector<GroupElement> sums(const GradingGroup& g, const std::vector<GroupElement>& a,
                               const std::vector<GroupElement>& b) {
    std::set<GroupElement> out;
    for (const auto& x : a)
        for (const auto& y : b) out.insert(g.add(x, y));
    return {out.begin(), out.end()};
}

std::vector<GroupElement> merged(std::vector<GroupElement> a, const std::vector<GroupElement>& b) {
    std::set<GroupElement> s(a.begin(), a.end());
    s.insert(b.begin(), b.end());
    return {s.begin(), s.end()};
}

}  // namespace

ColourAlgebra yau_twist(const ColourAlgebra& a, const Matrix& a2, const Matrix& b2) {
    const std::size_t n = a.dim();
    if (a2.rows() != n || a2.cols() != n || b2.rows() != n || b2.cols() != n)
        throw DimensionError("yau_twist: twisting maps must be dim x dim");
    require(check_axioms(a), "yau_twist input");
    const auto& B = a.basis();
    require(check_map_even(B, a2, "twist_alpha_even"), "yau_twist");
    require(check_map_even(B, b2, "twist_beta_even"), "yau_twist");
    require(check_multiplicative(a, a2, "twist_alpha_multiplicative"), "yau_twist");
    require(check_multiplicative(a, b2, "twist_beta_multiplicative"), "yau_twist");
    require(check_maps_commute(B, a2, b2, "twist_maps_commute"), "yau_twist");
    require(check_maps_commute(B, a.alpha(), a2, "alpha_commutes_with_twist_alpha"), "yau_twist");
    require(check_maps_commute(B, a.alpha(), b2, "alpha_commutes_with_twist_beta"), "yau_twist");
    require(check_maps_commute(B, a.beta(), a2, "beta_commutes_with_twist_alpha"), "yau_twist");
    require(check_maps_commute(B, a.beta(), b2, "beta_commutes_with_twist_beta"), "yau_twist");

    std::vector<Element> product(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) product[i * n + j] = a.multiply(a2.column(i), b2.column(j));
    return ColourAlgebra(B, a.eps(), std::move(product), a.alpha() * a2, a.beta() * b2, a.kind());
}

ColourAlgebra commutator_bracket(const ColourAlgebra& a) {
    const std::size_t n = a.dim();
    Matrix ai = invert(a.alpha());
    Matrix bi = invert(a.beta());
    Matrix left = ai * a.beta();   // alpha^-1 beta
    Matrix right = a.alpha() * bi;  // alpha beta^-1
    std::vector<Element> product(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element c = a.structure(i, j);
            axpy(c, -a.sign(i, j), a.multiply(left.column(j), right.column(i)));
            product[i * n + j] = std::move(c);
        }
    return ColourAlgebra(a.basis(), a.eps(), std::move(product), a.alpha(), a.beta(), AlgebraKind::lie);
}

ColourAlgebra commutator_algebra(const ColourAlgebra& a) {
    if (!is_invertible(a.alpha()) || !is_invertible(a.beta()))
        throw SingularMatrixError("commutator_algebra: alpha and beta must be invertible");
    require(check_associative_axioms(a), "commutator_algebra input");
    return commutator_bracket(a);
}

MultiplierTable MultiplierTable::constant(const GradingGroup& group, const std::vector<GroupElement>& degrees,
                                          const Rational& value) {
    MultiplierTable t(group);
    for (const auto& g : degrees)
        for (const auto& h : degrees) t.set(g, h, value);
    return t;
}

void MultiplierTable::set(const GroupElement& g, const GroupElement& h, const Rational& value) {
    if (sgn(value) == 0) throw std::invalid_argument("multiplier values must be nonzero");
    if (!group_.contains(g) || !group_.contains(h))
        throw DimensionError("multiplier entry outside group " + group_.signature());
    entries_[{g, h}] = value;
}

bool MultiplierTable::contains(const GroupElement& g, const GroupElement& h) const {
    return entries_.count({g, h}) != 0;
}

const Rational& MultiplierTable::at(const GroupElement& g, const GroupElement& h) const {
    auto it = entries_.find({g, h});
    if (it == entries_.end())
        throw LookupError("multiplier table has no entry for (" + group_.format(g) + "; " + group_.format(h) + ")");
    return it->second;
}

AxiomReport validate_multiplier(const MultiplierTable& s, const std::vector<GroupElement>& degrees,
                                MultiplierMode mode) {
    const auto& G = s.group();
    AxiomReport rep;
    auto fmt = [&](std::initializer_list<GroupElement> gs) {
        std::vector<std::string> out;
        for (const auto& g : gs) out.push_back(G.format(g));
        return out;
    };
    if (mode == MultiplierMode::symmetric) {
        rep.subject = "symmetric multiplier";
        std::optional<Witness> sym;
        for (const auto& x : degrees)
            for (const auto& y : degrees) {
                if (sym) break;
                Rational d = s.at(x, y) - s.at(y, x);
                if (sgn(d) != 0) sym = Witness{fmt({x, y}), {{"difference", d}}};
            }
        rep.add("symmetric", !sym, sym);

        std::optional<Witness> cyc;
        for (const auto& x : degrees)
            for (const auto& y : degrees)
                for (const auto& z : degrees) {
                    if (cyc) break;
                    Rational v1 = s.at(x, y) * s.at(z, G.add(x, y));
                    Rational v2 = s.at(y, z) * s.at(x, G.add(y, z));
                    Rational v3 = s.at(z, x) * s.at(y, G.add(z, x));
                    if (v1 != v2 || v1 != v3)
                        cyc = Witness{fmt({x, y, z}), {{"difference", v1 != v2 ? v1 - v2 : v1 - v3}}};
                }
        rep.add("cyclic_invariance", !cyc, cyc);
    } else {
        rep.subject = "multiplier cocycle";
        std::optional<Witness> coc;
        for (const auto& x : degrees)
            for (const auto& y : degrees)
                for (const auto& z : degrees) {
                    if (coc) break;
                    Rational lhs = s.at(x, G.add(y, z)) * s.at(y, z);
                    Rational rhs = s.at(x, y) * s.at(G.add(x, y), z);
                    if (lhs != rhs) coc = Witness{fmt({x, y, z}), {{"difference", lhs - rhs}}};
                }
        rep.add("cocycle", !coc, coc);
    }
    return rep;
}

MultiplierTable multiplier_from_omega(const GradingGroup& group, const OmegaTable& omega,
                                      const std::vector<GroupElement>& degrees) {
    auto w = [&](const GroupElement& g) -> const Rational& {
        auto it = omega.find(g);
        if (it == omega.end()) throw LookupError("omega has no value at " + group.format(g));
        if (sgn(it->second) == 0) throw std::invalid_argument("omega must be nonzero");
        return it->second;
    };
    auto is_degree = [&](const GroupElement& g) {
        return std::find(degrees.begin(), degrees.end(), g) != degrees.end();
    };
    // Validation only ever pairs a degree with a degree or a pairwise sum.
    auto support = merged(degrees, sums(group, degrees, degrees));
    MultiplierTable t(group);
    for (const auto& x : support)
        for (const auto& y : support) {
            if (!is_degree(x) && !is_degree(y)) continue;
            Rational v = w(group.add(x, y)) / (w(x) * w(y));
            t.set(x, y, v);
        }
    return t;
}

ColourAlgebra sigma_twist(const ColourAlgebra& a, const MultiplierTable& s) {
    auto degrees = a.basis().degree_set();
    require(validate_multiplier(s, degrees, MultiplierMode::symmetric), "sigma_twist multiplier");
    const std::size_t n = a.dim();
    std::vector<Element> product(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            product[i * n + j] = scaled(a.structure(i, j), s.at(a.basis().degree(i), a.basis().degree(j)));
    return a.with_product(std::move(product));
}

Bicharacter multiplier_delta(const MultiplierTable& s, const std::vector<GroupElement>& degrees) {
    const auto& G = s.group();
    std::vector<std::vector<int>> gen(G.rank(), std::vector<int>(G.rank(), 1));
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < G.rank(); ++j) {
            Rational d = s.at(G.generator(i), G.generator(j)) / s.at(G.generator(j), G.generator(i));
            if (d != 1 && d != -1)
                throw ValidationError("delta takes the value " + to_string(d) + " on generators e" +
                                      std::to_string(i + 1) + ", e" + std::to_string(j + 1) +
                                      "; only +1 and -1 are supported");
            gen[i][j] = d == 1 ? 1 : -1;
        }
    Bicharacter delta(G, std::move(gen));
    require(validate_bicharacter(delta), "delta bicharacter");
    for (const auto& x : degrees)
        for (const auto& y : degrees) {
            Rational d = s.at(x, y) / s.at(y, x);
            if (d != delta(x, y))
                throw ValidationError("delta(" + G.format(x) + "; " + G.format(y) + ") = " + to_string(d) +
                                      " is not the bicharacter determined by the generator entries");
        }
    return delta;
}

ColourAlgebra delta_twist(const ColourAlgebra& a, const MultiplierTable& s) {
    auto degrees = a.basis().degree_set();
    require(validate_multiplier(s, degrees, MultiplierMode::cocycle), "delta_twist multiplier");
    Bicharacter delta = multiplier_delta(s, degrees);
    const auto& G = a.eps().group();
    std::vector<std::vector<int>> gen(G.rank(), std::vector<int>(G.rank()));
    for (std::size_t i = 0; i < G.rank(); ++i)
        for (std::size_t j = 0; j < G.rank(); ++j) gen[i][j] = a.eps().gen_value(i, j) * delta.gen_value(i, j);

    const std::size_t n = a.dim();
    std::vector<Element> product(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            product[i * n + j] = scaled(a.structure(i, j), s.at(a.basis().degree(i), a.basis().degree(j)));
    return ColourAlgebra(a.basis(), Bicharacter(G, std::move(gen)), std::move(product), a.alpha(), a.beta(),
                         a.kind());
}

}  // namespace bihom
