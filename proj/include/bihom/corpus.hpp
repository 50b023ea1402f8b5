#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/algebra.hpp"

namespace bihom {

/// osp(1,2) over the super grading, basis H, X, Y (even) and F, G (odd).
ColourAlgebra osp12_classical();

/// alpha_lambda = diag(1, lambda^2, lambda^-2, lambda^-1, lambda) on H, X, Y, F, G.
Matrix osp12_scaling(const Rational& lambda);

/// Yau twist of osp12_classical() by alpha_lambda and beta_kappa.
ColourAlgebra build_osp12(const Rational& lambda, const Rational& kappa);

/// n-dimensional abelian algebra, trivial grading, identity maps.
ColourAlgebra zero_algebra(std::size_t n);

/// 2x2 matrix units E11, E12, E21, E22 under the matrix product.
ColourAlgebra mat2_assoc();

/// Three-dimensional Z2 x Z2 colour Lie algebra twisted by two commuting
/// sign automorphisms.
ColourAlgebra z2z2_colour_example();

struct CorpusEntry {
    std::string name;
    ColourAlgebra algebra;
    /// Expected outcome of every non-informational verdict of check_axioms
    /// plus the flags, keyed by verdict name.
    std::map<std::string, bool> expected;
};

/// Accepts zero_N, osp12_classical, osp12_twist(L,K), osp12_twist_L_K,
/// mat2_assoc and z2z2_colour_example. Throws LookupError otherwise.
CorpusEntry corpus(std::string_view name);

/// The shipped corpus, in a fixed order.
std::vector<std::string> corpus_names();

}  // namespace bihom
