#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/grading.hpp"
#include "bihom/matrix.hpp"

namespace bihom {

/// Coordinates over a GradedBasis.
using Element = Vector;

class GradedBasis {
   public:
    GradedBasis() = default;
    /// Throws on duplicate names or degrees outside the group.
    GradedBasis(GradingGroup group, std::vector<std::string> names, std::vector<GroupElement> degrees);

    std::size_t size() const noexcept { return names_.size(); }
    const GradingGroup& group() const noexcept { return group_; }
    const std::vector<std::string>& names() const noexcept { return names_; }
    const std::vector<GroupElement>& degrees() const noexcept { return degrees_; }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const GroupElement& degree(std::size_t i) const { return degrees_.at(i); }
    std::optional<std::size_t> index_of(std::string_view name) const;

    /// Degrees occurring in the basis, without repetition, in first-occurrence order.
    std::vector<GroupElement> degree_set() const;

    /// Degree shared by all nonzero coordinates; nullopt for mixed support.
    /// The zero vector has every degree and reports `fallback`.
    std::optional<GroupElement> degree_of(const Element& x, const GroupElement& fallback) const;
    bool is_homogeneous(const Element& x) const;

    /// Matrix of an even map: entry (a,b) vanishes unless deg(a) = deg(b) + shift.
    bool is_graded_map(const Matrix& m, const GroupElement& shift) const;

    friend bool operator==(const GradedBasis&, const GradedBasis&) = default;

   private:
    GradingGroup group_;
    std::vector<std::string> names_;
    std::vector<GroupElement> degrees_;
};

enum class AlgebraKind { lie, associative, generic };

std::string_view to_string(AlgebraKind kind);
AlgebraKind parse_kind(std::string_view text);

/// Finite-dimensional graded algebra with structure maps alpha and beta.
/// The product is read as a bracket for lie algebras and as mu otherwise;
/// the construction only checks shapes, the axiom checks decide the rest.
class ColourAlgebra {
   public:
    ColourAlgebra() = default;
    /// `product[i * n + j]` is the product of basis vectors i and j.
    ColourAlgebra(GradedBasis basis, Bicharacter eps, std::vector<Element> product, Matrix alpha, Matrix beta,
                  AlgebraKind kind);

    /// Algebra with zero product and identity maps.
    static ColourAlgebra zero(GradedBasis basis, Bicharacter eps, AlgebraKind kind = AlgebraKind::lie);

    std::size_t dim() const noexcept { return basis_.size(); }
    const GradedBasis& basis() const noexcept { return basis_; }
    const Bicharacter& eps() const noexcept { return eps_; }
    const Matrix& alpha() const noexcept { return alpha_; }
    const Matrix& beta() const noexcept { return beta_; }
    AlgebraKind kind() const noexcept { return kind_; }
    const std::vector<Element>& product_table() const noexcept { return product_; }

    const Element& structure(std::size_t i, std::size_t j) const { return product_.at(i * dim() + j); }

    Element multiply(const Element& x, const Element& y) const;
    Element basis_vector(std::size_t i) const { return unit_vector(dim(), i); }

    /// eps on the degrees of two basis vectors.
    int sign(std::size_t i, std::size_t j) const { return eps_.sign(basis_.degree(i), basis_.degree(j)); }

    /// Degree of a homogeneous element; throws ValidationError on mixed support.
    GroupElement degree_of(const Element& x) const;

    ColourAlgebra with_product(std::vector<Element> product) const;
    ColourAlgebra with_maps(Matrix alpha, Matrix beta) const;
    ColourAlgebra with_eps(Bicharacter eps) const;
    ColourAlgebra with_kind(AlgebraKind kind) const;

    friend bool operator==(const ColourAlgebra& a, const ColourAlgebra& b);

   private:
    struct Term {
        std::size_t i, j, k;
        Rational c;
    };
    void index_terms();

    GradedBasis basis_;
    Bicharacter eps_;
    std::vector<Element> product_;
    Matrix alpha_;
    Matrix beta_;
    AlgebraKind kind_ = AlgebraKind::generic;
    std::vector<Term> terms_;  // sparse view of product_
};

Element product_eval(const ColourAlgebra& a, const Element& x, const Element& y);

}  // namespace bihom
