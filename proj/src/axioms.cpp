#include "bihom/axioms.hpp"

#include <array>

#include "bihom/errors.hpp"

namespace bihom {

namespace {

Witness make_witness(const GradedBasis& basis, std::initializer_list<std::size_t> idx, const Element& defect) {
    Witness w;
    for (auto i : idx) w.tuple.push_back(basis.name(i));
    w.defect = labelled(defect, basis.names());
    return w;
}

std::vector<Element> columns(const Matrix& m) {
    std::vector<Element> out;
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.column(c));
    return out;
}

std::vector<GroupElement> bicharacter_sample(const GradingGroup& g) {
    if (g.is_finite() && g.elements().size() <= 64) return g.elements();
    // {-1,0,1}-combinations of generators, reduced; enough to expose any
    // failure of the generator-level invariants.
    std::vector<GroupElement> out;
    const std::size_t r = g.rank();
    std::size_t total = 1;
    for (std::size_t i = 0; i < r && total <= 729; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::vector<std::int64_t> c(r);
        std::size_t t = code;
        for (std::size_t i = 0; i < r; ++i, t /= 3) c[i] = static_cast<std::int64_t>(t % 3) - 1;
        out.push_back(g.element(std::move(c)));
    }
    return out;
}

}  // namespace

AxiomReport validate_bicharacter(const Bicharacter& eps) {
    AxiomReport rep;
    rep.subject = "bicharacter on " + eps.group().signature();
    const auto& g = eps.group();
    const std::size_t r = g.rank();
    auto gen = [](std::size_t i) { return "e" + std::to_string(i + 1); };

    std::optional<Witness> sym;
    for (std::size_t i = 0; i < r && !sym; ++i)
        for (std::size_t j = 0; j < r && !sym; ++j)
            if (eps.gen_value(i, j) * eps.gen_value(j, i) != 1)
                sym = Witness{{gen(i), gen(j)}, {{"value", Rational(eps.gen_value(i, j) * eps.gen_value(j, i))}}};
    rep.add("generator_skewsymmetry", !sym, sym);

    // v^m must be 1 for a generator of order m; with v = -1 this needs m even.
    std::optional<Witness> order;
    for (std::size_t j = g.free_rank(); j < r && !order; ++j) {
        auto m = g.torsion()[j - g.free_rank()];
        if (m % 2 == 0) continue;
        for (std::size_t i = 0; i < r && !order; ++i)
            if (eps.gen_value(i, j) == -1 || eps.gen_value(j, i) == -1)
                order = Witness{{gen(i), gen(j)}, {{"value^" + std::to_string(m), Rational(-1)}}};
    }
    rep.add("torsion_order", !order, order);

    auto sample = bicharacter_sample(g);
    std::optional<Witness> skew;
    for (std::size_t a = 0; a < sample.size() && !skew; ++a)
        for (std::size_t b = 0; b < sample.size() && !skew; ++b) {
            int v = eps.sign(sample[a], sample[b]) * eps.sign(sample[b], sample[a]);
            if (v != 1) skew = Witness{{g.format(sample[a]), g.format(sample[b])}, {{"value", Rational(v)}}};
        }
    rep.add("skewsymmetry_on_sample", !skew, skew);

    std::optional<Witness> bimult;
    for (std::size_t a = 0; a < sample.size() && !bimult; ++a)
        for (std::size_t b = 0; b < sample.size() && !bimult; ++b)
            for (std::size_t c = 0; c < sample.size() && !bimult; ++c) {
                const auto& x = sample[a];
                const auto& y = sample[b];
                const auto& z = sample[c];
                int left = eps.sign(x, g.add(y, z)) * eps.sign(x, y) * eps.sign(x, z);
                int right = eps.sign(g.add(x, y), z) * eps.sign(x, z) * eps.sign(y, z);
                if (left != 1 || right != 1)
                    bimult = Witness{{g.format(x), g.format(y), g.format(z)},
                                     {{"ratio", Rational(left != 1 ? left : right)}}};
            }
    rep.add("bimultiplicative_on_sample", !bimult, bimult);
    return rep;
}

Element jacobiator(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z, JacobiMode mode) {
    const std::array<const Element*, 3> v{&x, &y, &z};
    std::array<GroupElement, 3> d{a.degree_of(x), a.degree_of(y), a.degree_of(z)};
    Element out(a.dim());
    for (int c = 0; c < 3; ++c) {
        const Element& p = *v[c];
        const Element& q = *v[(c + 1) % 3];
        const Element& r = *v[(c + 2) % 3];
        Rational e = a.eps()(d[(c + 2) % 3], d[c]);
        Element term;
        if (mode == JacobiMode::bihom) {
            const Matrix& al = a.alpha();
            const Matrix& be = a.beta();
            term = a.multiply(be.apply(be.apply(p)), a.multiply(be.apply(q), al.apply(r)));
        } else {
            term = a.multiply(a.alpha().apply(p), a.multiply(q, r));
        }
        axpy(out, e, term);
    }
    return out;
}

Element jacobiator(const ColourAlgebra& a, std::size_t i, std::size_t j, std::size_t k, JacobiMode mode) {
    return jacobiator(a, a.basis_vector(i), a.basis_vector(j), a.basis_vector(k), mode);
}

Element skew_defect(const ColourAlgebra& a, std::size_t i, std::size_t j) {
    Element bi = a.beta().column(i), bj = a.beta().column(j);
    Element ai = a.alpha().column(i), aj = a.alpha().column(j);
    Element out = a.multiply(bi, aj);
    axpy(out, a.sign(i, j), a.multiply(bj, ai));
    return out;
}

Verdict check_product_even(const ColourAlgebra& a) {
    const auto& B = a.basis();
    const auto& G = B.group();
    Verdict v{"product_even", true, false, std::nullopt, {}};
    for (std::size_t i = 0; i < a.dim() && v.passed; ++i)
        for (std::size_t j = 0; j < a.dim() && v.passed; ++j) {
            GroupElement target = G.add(B.degree(i), B.degree(j));
            Element stray(a.dim());
            const Element& c = a.structure(i, j);
            for (std::size_t k = 0; k < a.dim(); ++k)
                if (sgn(c[k]) != 0 && B.degree(k) != target) stray[k] = c[k];
            if (!is_zero(stray)) {
                v.passed = false;
                v.witness = make_witness(B, {i, j}, stray);
            }
        }
    return v;
}

Verdict check_map_even(const GradedBasis& basis, const Matrix& m, const std::string& name) {
    Verdict v{name, true, false, std::nullopt, {}};
    for (std::size_t b = 0; b < basis.size() && v.passed; ++b) {
        Element stray(basis.size());
        for (std::size_t r = 0; r < basis.size(); ++r)
            if (sgn(m(r, b)) != 0 && basis.degree(r) != basis.degree(b)) stray[r] = m(r, b);
        if (!is_zero(stray)) {
            v.passed = false;
            v.witness = make_witness(basis, {b}, stray);
        }
    }
    return v;
}

Verdict check_maps_commute(const GradedBasis& basis, const Matrix& f, const Matrix& g, const std::string& name) {
    Verdict v{name, true, false, std::nullopt, {}};
    Matrix diff = f * g - g * f;
    for (std::size_t b = 0; b < basis.size() && v.passed; ++b) {
        Element col = diff.column(b);
        if (!is_zero(col)) {
            v.passed = false;
            v.witness = make_witness(basis, {b}, col);
        }
    }
    return v;
}

Verdict check_multiplicative(const ColourAlgebra& a, const Matrix& m, const std::string& name) {
    Verdict v{name, true, false, std::nullopt, {}};
    auto img = columns(m);
    for (std::size_t i = 0; i < a.dim() && v.passed; ++i)
        for (std::size_t j = 0; j < a.dim() && v.passed; ++j) {
            Element d = m.apply(a.structure(i, j)) - a.multiply(img[i], img[j]);
            if (!is_zero(d)) {
                v.passed = false;
                v.witness = make_witness(a.basis(), {i, j}, d);
            }
        }
    return v;
}

namespace {

void add_common(AxiomReport& rep, const ColourAlgebra& a) {
    rep.verdicts.push_back(check_product_even(a));
    rep.verdicts.push_back(check_map_even(a.basis(), a.alpha(), "alpha_even"));
    rep.verdicts.push_back(check_map_even(a.basis(), a.beta(), "beta_even"));
    rep.verdicts.push_back(check_maps_commute(a.basis(), a.alpha(), a.beta(), "alpha_beta_commute"));
}

void add_multiplicative(AxiomReport& rep, const ColourAlgebra& a) {
    rep.verdicts.push_back(check_multiplicative(a, a.alpha(), "alpha_multiplicative"));
    rep.verdicts.push_back(check_multiplicative(a, a.beta(), "beta_multiplicative"));
}

void add_regular(AxiomReport& rep, const ColourAlgebra& a) {
    rep.add_flag("regular", is_invertible(a.alpha()) && is_invertible(a.beta()));
}

}  // namespace

AxiomReport check_lie_axioms(const ColourAlgebra& a) {
    AxiomReport rep;
    rep.subject = "BiHom-Lie colour axioms";
    add_common(rep, a);

    std::optional<Witness> skew;
    for (std::size_t i = 0; i < a.dim() && !skew; ++i)
        for (std::size_t j = 0; j < a.dim() && !skew; ++j) {
            Element d = skew_defect(a, i, j);
            if (!is_zero(d)) skew = make_witness(a.basis(), {i, j}, d);
        }
    rep.add("bihom_skewsymmetry", !skew, skew);

    // The cyclic sum needs homogeneous arguments; basis vectors always are.
    std::optional<Witness> jac;
    for (std::size_t i = 0; i < a.dim() && !jac; ++i)
        for (std::size_t j = 0; j < a.dim() && !jac; ++j)
            for (std::size_t k = 0; k < a.dim() && !jac; ++k) {
                Element d = jacobiator(a, i, j, k, JacobiMode::bihom);
                if (!is_zero(d)) jac = make_witness(a.basis(), {i, j, k}, d);
            }
    rep.add("bihom_jacobi", !jac, jac);

    add_multiplicative(rep, a);
    add_regular(rep, a);
    return rep;
}

AxiomReport check_associative_axioms(const ColourAlgebra& a) {
    AxiomReport rep;
    rep.subject = "BiHom-associative colour axioms";
    add_common(rep, a);
    add_multiplicative(rep, a);

    auto al = columns(a.alpha());
    auto be = columns(a.beta());
    std::optional<Witness> assoc;
    for (std::size_t i = 0; i < a.dim() && !assoc; ++i)
        for (std::size_t j = 0; j < a.dim() && !assoc; ++j)
            for (std::size_t k = 0; k < a.dim() && !assoc; ++k) {
                Element d = a.multiply(al[i], a.structure(j, k)) - a.multiply(a.structure(i, j), be[k]);
                if (!is_zero(d)) assoc = make_witness(a.basis(), {i, j, k}, d);
            }
    rep.add("bihom_associative", !assoc, assoc);

    bool commutative = true;
    for (std::size_t i = 0; i < a.dim() && commutative; ++i)
        for (std::size_t j = 0; j < a.dim() && commutative; ++j)
            commutative = a.structure(i, j) == scaled(a.structure(j, i), a.sign(i, j));
    rep.add_flag("colour_commutative", commutative);
    add_regular(rep, a);
    return rep;
}

AxiomReport check_axioms(const ColourAlgebra& a) {
    return a.kind() == AlgebraKind::lie ? check_lie_axioms(a) : check_associative_axioms(a);
}

}  // namespace bihom
