#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Element of S3 stored as the image tuple of (1,2,3): it rearranges a
/// triple as (x_{p1}, x_{p2}, x_{p3}).
struct Permutation3 {
    std::array<int, 3> image{1, 2, 3};

    static Permutation3 id() { return {{1, 2, 3}}; }
    static Permutation3 s1() { return {{2, 1, 3}}; }
    static Permutation3 s2() { return {{1, 3, 2}}; }
    /// s1 o s2: s2 acts first.
    static Permutation3 s1s2() { return {{3, 1, 2}}; }
    static Permutation3 s2s1() { return {{2, 3, 1}}; }
    /// s2 s1 s2 = (1 3)
    static Permutation3 s2s1s2() { return {{3, 2, 1}}; }

    static std::vector<Permutation3> all();

    int sign() const;
    /// (this o other)(x) = this(other(x)).
    Permutation3 compose(const Permutation3& other) const;
    std::string name() const;

    template <class T>
    std::array<T, 3> apply(const std::array<T, 3>& x) const {
        return {x[image[0] - 1], x[image[1] - 1], x[image[2] - 1]};
    }

    friend bool operator==(const Permutation3&, const Permutation3&) = default;
};

enum class Subgroup { G1 = 1, G2, G3, G4, G5, G6 };

Subgroup parse_subgroup(std::string_view text);
std::string to_string(Subgroup g);
std::vector<Permutation3> elements(Subgroup g);

/// alpha(x)(yz) - (xy)beta(z)
Element associator(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z);

/// Degree |sigma(x1,x2,x3)|: product of eps(x_i, x_j) over the pairs i < j
/// that sigma puts out of order.
Rational perm_degree(const Bicharacter& eps, const Permutation3& p, const std::array<GroupElement, 3>& degrees);

/// Same value obtained by writing p as a word in s1, s2 and applying the
/// rule |si o sj (x)| = |sj(x)| |si(sj(x))| letter by letter.
Rational perm_degree_by_composition(const Bicharacter& eps, const Permutation3& p,
                                    const std::array<GroupElement, 3>& degrees);

/// Cyclic sum S(x,y,z) of eps(z,x) as(alpha^-1 beta^2 x, beta y, alpha z).
/// The bracket form sum eps(z,x)[beta^2 x, beta(y) alpha(z)] is evaluated as
/// well; the two must agree. Requires invertible alpha and beta
/// (SingularMatrixError otherwise) that are multiplicative (ValidationError
/// otherwise); disagreement throws std::logic_error.
Element cyclic_S(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z);

/// Signed sum over G of sign(sigma) |sigma(x)| as(alpha^-1 beta^2 u1, beta u2,
/// alpha u3) with (u1,u2,u3) = sigma(x,y,z). The structure maps stay in their
/// slots while the elements are permuted.
Element g_signed_sum(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k);

/// The same sum written out term by term for each subgroup.
Element g_expanded(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k);

/// LHS - RHS of the printed G2..G5 conditions, transcribed literally (maps
/// attached to the permuted elements). G1 and G6 have no printed expansion
/// and return the signed sum.
Element g_printed_condition(const ColourAlgebra& a, Subgroup g, std::size_t i, std::size_t j, std::size_t k);

/// Verdict g_associative over all basis triples, plus the informational flag
/// printed_condition for the literal display.
AxiomReport check_g_associative(const ColourAlgebra& a, Subgroup g);

/// Verdict s_symmetry: S(x,y,z) = eps(x,y)eps(y,z)eps(z,x) S(x,z,y) on all basis triples.
AxiomReport check_s_symmetry(const ColourAlgebra& a);

/// Verdict flexible: as(x,y,x) = 0 on basis pairs. Flag flexible_polarized:
/// as(x,y,z) + as(z,y,x) = 0 for x, z of equal degree.
AxiomReport check_flexible(const ColourAlgebra& a);

/// [x,y]' = [x,y] - eps(x,y)[alpha^-1 beta y, alpha beta^-1 x]
ColourAlgebra primed_bracket(const ColourAlgebra& a);

}  // namespace bihom
