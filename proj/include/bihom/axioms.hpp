#pragma once

#include <cstddef>
#include <string>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

AxiomReport validate_bicharacter(const Bicharacter& eps);

enum class JacobiMode {
    /// cyclic sum of eps(z,x) [beta^2 x, [beta y, alpha z]]
    bihom,
    /// cyclic sum of eps(z,x) [alpha x, [y, z]], the single-map identity
    hom,
};

Element jacobiator(const ColourAlgebra& a, std::size_t i, std::size_t j, std::size_t k, JacobiMode mode);

/// Same cyclic sum on arbitrary homogeneous elements.
Element jacobiator(const ColourAlgebra& a, const Element& x, const Element& y, const Element& z, JacobiMode mode);

/// [beta x, alpha y] + eps(x,y) [beta y, alpha x] on basis vectors i, j.
Element skew_defect(const ColourAlgebra& a, std::size_t i, std::size_t j);

/// Verdicts: product_even, alpha_even, beta_even, alpha_beta_commute,
/// bihom_skewsymmetry, bihom_jacobi, alpha_multiplicative,
/// beta_multiplicative, and the flag regular.
AxiomReport check_lie_axioms(const ColourAlgebra& a);

/// Verdicts: product_even, alpha_even, beta_even, alpha_beta_commute,
/// alpha_multiplicative, beta_multiplicative, bihom_associative, and the
/// flags colour_commutative and regular.
AxiomReport check_associative_axioms(const ColourAlgebra& a);

/// Dispatches on a.kind(); generic algebras get the associative suite.
AxiomReport check_axioms(const ColourAlgebra& a);

// Building blocks shared with other modules. Each returns a verdict with the
// first failing basis tuple as witness.
Verdict check_product_even(const ColourAlgebra& a);
Verdict check_map_even(const GradedBasis& basis, const Matrix& m, const std::string& name);
Verdict check_maps_commute(const GradedBasis& basis, const Matrix& f, const Matrix& g, const std::string& name);
Verdict check_multiplicative(const ColourAlgebra& a, const Matrix& m, const std::string& name);

}  // namespace bihom
