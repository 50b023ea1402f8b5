#include "bihom/algebra.hpp"

#include <set>

#include "bihom/errors.hpp"

namespace bihom {

GradedBasis::GradedBasis(GradingGroup group, std::vector<std::string> names, std::vector<GroupElement> degrees)
    : group_(std::move(group)), names_(std::move(names)), degrees_(std::move(degrees)) {
    if (names_.size() != degrees_.size()) throw DimensionError("basis: names and degrees differ in length");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty()) throw std::invalid_argument("basis: empty name");
        if (!seen.insert(names_[i]).second) throw std::invalid_argument("basis: duplicate name '" + names_[i] + "'");
        if (!group_.contains(degrees_[i]))
            throw DimensionError("basis: degree of '" + names_[i] + "' is not an element of " + group_.signature());
    }
}

std::optional<std::size_t> GradedBasis::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

std::vector<GroupElement> GradedBasis::degree_set() const {
    std::vector<GroupElement> out;
    for (const auto& d : degrees_) {
        bool found = false;
        for (const auto& e : out) found = found || e == d;
        if (!found) out.push_back(d);
    }
    return out;
}

std::optional<GroupElement> GradedBasis::degree_of(const Element& x, const GroupElement& fallback) const {
    if (x.size() != size()) throw DimensionError("element length does not match basis");
    std::optional<GroupElement> d;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (sgn(x[i]) == 0) continue;
        if (!d)
            d = degrees_[i];
        else if (*d != degrees_[i])
            return std::nullopt;
    }
    return d ? d : std::optional<GroupElement>(fallback);
}

bool GradedBasis::is_homogeneous(const Element& x) const { return degree_of(x, group_.zero()).has_value(); }

bool GradedBasis::is_graded_map(const Matrix& m, const GroupElement& shift) const {
    if (m.rows() != size() || m.cols() != size()) return false;
    for (std::size_t a = 0; a < size(); ++a)
        for (std::size_t b = 0; b < size(); ++b)
            if (sgn(m(a, b)) != 0 && degrees_[a] != group_.add(degrees_[b], shift)) return false;
    return true;
}

std::string_view to_string(AlgebraKind kind) {
    switch (kind) {
        case AlgebraKind::lie: return "lie";
        case AlgebraKind::associative: return "associative";
        case AlgebraKind::generic: return "generic";
    }
    return "generic";
}

AlgebraKind parse_kind(std::string_view text) {
    if (text == "lie") return AlgebraKind::lie;
    if (text == "associative") return AlgebraKind::associative;
    if (text == "generic") return AlgebraKind::generic;
    throw std::invalid_argument("unknown algebra kind '" + std::string(text) + "'");
}

ColourAlgebra::ColourAlgebra(GradedBasis basis, Bicharacter eps, std::vector<Element> product, Matrix alpha,
                             Matrix beta, AlgebraKind kind)
    : basis_(std::move(basis)),
      eps_(std::move(eps)),
      product_(std::move(product)),
      alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      kind_(kind) {
    const std::size_t n = basis_.size();
    if (!(eps_.group() == basis_.group()))
        throw DimensionError("bicharacter group " + eps_.group().signature() + " differs from grading group " +
                             basis_.group().signature());
    if (product_.size() != n * n) throw DimensionError("product table must have dim^2 entries");
    for (const auto& c : product_)
        if (c.size() != n) throw DimensionError("structure constant has wrong length");
    if (alpha_.rows() != n || alpha_.cols() != n) throw DimensionError("alpha must be dim x dim");
    if (beta_.rows() != n || beta_.cols() != n) throw DimensionError("beta must be dim x dim");
    index_terms();
}

ColourAlgebra ColourAlgebra::zero(GradedBasis basis, Bicharacter eps, AlgebraKind kind) {
    const std::size_t n = basis.size();
    return ColourAlgebra(std::move(basis), std::move(eps), std::vector<Element>(n * n, Element(n)),
                         Matrix::identity(n), Matrix::identity(n), kind);
}

void ColourAlgebra::index_terms() {
    terms_.clear();
    const std::size_t n = dim();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (sgn(product_[i * n + j][k]) != 0) terms_.push_back({i, j, k, product_[i * n + j][k]});
}

Element ColourAlgebra::multiply(const Element& x, const Element& y) const {
    const std::size_t n = dim();
    if (x.size() != n || y.size() != n) throw DimensionError("multiply: element length does not match basis");
    Element out(n);
    for (const auto& t : terms_) {
        if (sgn(x[t.i]) == 0 || sgn(y[t.j]) == 0) continue;
        out[t.k] += t.c * x[t.i] * y[t.j];
    }
    return out;
}

GroupElement ColourAlgebra::degree_of(const Element& x) const {
    auto d = basis_.degree_of(x, basis_.group().zero());
    if (!d) throw ValidationError("element is not homogeneous");
    return *d;
}

ColourAlgebra ColourAlgebra::with_product(std::vector<Element> product) const {
    return ColourAlgebra(basis_, eps_, std::move(product), alpha_, beta_, kind_);
}

ColourAlgebra ColourAlgebra::with_maps(Matrix alpha, Matrix beta) const {
    return ColourAlgebra(basis_, eps_, product_, std::move(alpha), std::move(beta), kind_);
}

ColourAlgebra ColourAlgebra::with_eps(Bicharacter eps) const {
    return ColourAlgebra(basis_, std::move(eps), product_, alpha_, beta_, kind_);
}

ColourAlgebra ColourAlgebra::with_kind(AlgebraKind kind) const {
    return ColourAlgebra(basis_, eps_, product_, alpha_, beta_, kind);
}

bool operator==(const ColourAlgebra& a, const ColourAlgebra& b) {
    return a.basis_ == b.basis_ && a.eps_ == b.eps_ && a.product_ == b.product_ && a.alpha_ == b.alpha_ &&
           a.beta_ == b.beta_ && a.kind_ == b.kind_;
}

Element product_eval(const ColourAlgebra& a, const Element& x, const Element& y) { return a.multiply(x, y); }

}  // namespace bihom
