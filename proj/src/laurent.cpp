#include "bihom/laurent.hpp"

#include "bihom/errors.hpp"

namespace bihom {

LaurentPoly LaurentPoly::monomial(const Rational& c, long exponent) {
    LaurentPoly p;
    p.add_term(exponent, c);
    return p;
}

Rational LaurentPoly::coefficient(long exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPoly::add_term(long exponent, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.emplace(exponent, c);
    if (inserted) return;
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
    LaurentPoly out;
    for (const auto& [e1, c1] : lhs.terms_)
        for (const auto& [e2, c2] : rhs.terms_) out.add_term(e1 + e2, c1 * c2);
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
        if (!s.empty()) s += " + ";
        std::string mono = e == 0 ? "" : (e == 1 ? "t" : "t^" + std::to_string(e));
        if (mono.empty())
            s += bihom::to_string(c);
        else
            s += (c == 1 ? "" : bihom::to_string(c) + "*") + mono;
    }
    return s;
}

std::vector<LaurentComponent> laurent_bracket(const ColourAlgebra& a, const Element& x, const LaurentPoly& f,
                                              const Element& y, const LaurentPoly& g) {
    if (!a.basis().is_homogeneous(x) || !a.basis().is_homogeneous(y))
        throw ValidationError("laurent_bracket: arguments must be homogeneous");
    Element b = a.multiply(x, y);
    LaurentPoly fg = f * g;
    if (is_zero(b) || fg.is_zero()) return {};
    if (a.basis().is_homogeneous(b)) return {{std::move(b), std::move(fg)}};
    // Split by degree; unreachable for even products of homogeneous inputs.
    std::vector<LaurentComponent> out;
    for (const auto& d : a.basis().degree_set()) {
        Element part(a.dim());
        for (std::size_t k = 0; k < a.dim(); ++k)
            if (a.basis().degree(k) == d) part[k] = b[k];
        if (!is_zero(part)) out.push_back({std::move(part), fg});
    }
    return out;
}

LaurentElement tensor(const Element& x, const LaurentPoly& f) {
    LaurentElement out;
    if (is_zero(x)) return out;
    for (const auto& [e, c] : f.terms()) out[e] = scaled(x, c);
    return out;
}

namespace {

void accumulate(LaurentElement& into, const LaurentElement& x, const Rational& c) {
    for (const auto& [e, v] : x) {
        auto it = into.find(e);
        if (it == into.end()) it = into.emplace(e, Element(v.size())).first;
        axpy(it->second, c, v);
        if (is_zero(it->second)) into.erase(it);
    }
}

LaurentElement bracket(const ColourAlgebra& a, const LaurentElement& x, const LaurentElement& y) {
    LaurentElement out;
    for (const auto& [e1, v1] : x)
        for (const auto& [e2, v2] : y) accumulate(out, {{e1 + e2, a.multiply(v1, v2)}}, 1);
    return out;
}

LaurentElement apply_map(const Matrix& m, const LaurentElement& x) {
    LaurentElement out;
    for (const auto& [e, v] : x) {
        Element w = m.apply(v);
        if (!is_zero(w)) out.emplace(e, std::move(w));
    }
    return out;
}

Element flatten(const LaurentElement& x, std::size_t n, std::vector<std::string>* names,
                const std::vector<std::string>& basis_names) {
    Element out;
    for (const auto& [e, v] : x)
        for (std::size_t k = 0; k < n; ++k)
            if (sgn(v[k]) != 0) {
                out.push_back(v[k]);
                names->push_back(basis_names[k] + "*t^" + std::to_string(e));
            }
    return out;
}

Witness laurent_witness(const ColourAlgebra& a, std::vector<std::string> tuple, const LaurentElement& defect) {
    std::vector<std::string> names;
    Element flat = flatten(defect, a.dim(), &names, a.basis().names());
    return Witness{std::move(tuple), labelled(flat, names)};
}

}  // namespace

AxiomReport check_laurent_samples(const ColourAlgebra& a, const std::vector<LaurentSample>& samples) {
    AxiomReport rep;
    rep.subject = "Laurent extension samples";
    std::vector<LaurentElement> el;
    std::vector<GroupElement> deg;
    std::vector<std::string> label;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        el.push_back(tensor(samples[i].x, samples[i].f));
        deg.push_back(a.degree_of(samples[i].x));
        label.push_back("s" + std::to_string(i));
    }
    const Matrix& al = a.alpha();
    const Matrix& be = a.beta();

    std::optional<Witness> skew;
    for (std::size_t i = 0; i < el.size() && !skew; ++i)
        for (std::size_t j = 0; j < el.size() && !skew; ++j) {
            LaurentElement d = bracket(a, apply_map(be, el[i]), apply_map(al, el[j]));
            accumulate(d, bracket(a, apply_map(be, el[j]), apply_map(al, el[i])), a.eps()(deg[i], deg[j]));
            if (!d.empty()) skew = laurent_witness(a, {label[i], label[j]}, d);
        }
    rep.add("bihom_skewsymmetry", !skew, skew);

    std::optional<Witness> jac;
    for (std::size_t i = 0; i < el.size() && !jac; ++i)
        for (std::size_t j = 0; j < el.size() && !jac; ++j)
            for (std::size_t k = 0; k < el.size() && !jac; ++k) {
                const std::size_t idx[3] = {i, j, k};
                LaurentElement sum;
                for (int c = 0; c < 3; ++c) {
                    std::size_t p = idx[c], q = idx[(c + 1) % 3], r = idx[(c + 2) % 3];
                    LaurentElement t =
                        bracket(a, apply_map(be, apply_map(be, el[p])), bracket(a, apply_map(be, el[q]), apply_map(al, el[r])));
                    accumulate(sum, t, a.eps()(deg[r], deg[p]));
                }
                if (!sum.empty()) jac = laurent_witness(a, {label[i], label[j], label[k]}, sum);
            }
    rep.add("bihom_jacobi", !jac, jac);
    return rep;
}

}  // namespace bihom
