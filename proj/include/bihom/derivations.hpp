#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Homogeneous endomorphism of degree gamma: maps A_d into A_{d+gamma}.
struct HomEndo {
    Matrix matrix;
    GroupElement degree;

    friend bool operator==(const HomEndo&, const HomEndo&) = default;
};

enum class DerivationKind { der, qder, gder, centroid, qcentroid };

DerivationKind parse_derivation_kind(std::string_view text);
std::string to_string(DerivationKind kind);
/// Number of maps in one solution: 1, 2 (D, D') or 3 (D, D', D'').
std::size_t arity(DerivationKind kind);

struct SolverResult {
    DerivationKind kind = DerivationKind::der;
    int k = 0;
    int l = 0;
    /// nullopt when the result collects every degree.
    std::optional<GroupElement> degree;
    bool strict = false;
    /// Each member holds arity(kind) maps.
    std::vector<std::vector<HomEndo>> basis;

    std::size_t dimension() const noexcept { return basis.size(); }
    /// The c-th map of every member.
    std::vector<HomEndo> projection(std::size_t c) const;
};

/// D[x,y] = [Dx, phi y] + eps(gamma,x)[phi x, Dy], [D,alpha] = [D,beta] = 0,
/// phi = alpha^k beta^l.
SolverResult derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma);

/// Pairs (D, D') with D'[x,y] = [Dx, phi y] + eps(gamma,x)[phi x, Dy].
SolverResult quasi_derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma);

/// Triples (D, D', D'') with D''[x,y] = [Dx, phi y] + eps(gamma,x)[phi x, D'y].
SolverResult generalized_derivation_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma);

/// D[x,y] = [Dx, phi y] = eps(gamma,x)[phi x, Dy]. Commutation with beta is
/// imposed unless strict, which keeps only [D, alpha] = 0.
SolverResult centroid_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma, bool strict = false);

/// [Dx, phi y] = eps(gamma,x)[phi x, Dy] with the same commutation rules.
SolverResult quasi_centroid_space(const ColourAlgebra& a, int k, int l, const GroupElement& gamma,
                                  bool strict = false);

SolverResult solve_space(const ColourAlgebra& a, DerivationKind kind, int k, int l, const GroupElement& gamma,
                         bool strict = false);

/// Every degree gamma = deg(e_a) - deg(e_b) that a nonzero map can have.
std::vector<GroupElement> endomorphism_degrees(const ColourAlgebra& a);

/// solve_space over all endomorphism_degrees(), members concatenated.
SolverResult solve_all_degrees(const ColourAlgebra& a, DerivationKind kind, int k, int l, bool strict = false);

/// Span of y -> eps(x,y)[alpha^k beta^l y, x] over homogeneous x fixed by
/// alpha and beta. These are the values of the degree-zero coboundary of the
/// adjoint module; without the sign the map is no derivation for odd x.
SolverResult inner_derivation_space(const ColourAlgebra& a, int k, int l);

/// Re-evaluates the defining identities of `kind` on all basis pairs.
AxiomReport verify_member(const ColourAlgebra& a, DerivationKind kind, int k, int l,
                          const std::vector<HomEndo>& maps, bool strict = false);

/// True when `maps` (arity(kind) components) lies in the span of the result.
bool in_span(const SolverResult& space, const std::vector<HomEndo>& maps);

enum class JordanSign { plus, minus };

/// D1 o D2 + eps(d1,d2) D2 o D1, or the minus variant.
HomEndo jordan_product(const HomEndo& d1, const HomEndo& d2, const Bicharacter& eps,
                       JordanSign sign = JordanSign::plus);

/// D1 o D2 - eps(d1,d2) D2 o D1
HomEndo colour_commutator(const HomEndo& d1, const HomEndo& d2, const Bicharacter& eps);

struct JordanOptions {
    /// Variables cycled in the four-variable identity; y stays fixed by default.
    enum class Cycling { xzw, xyw } cycling = Cycling::xzw;
    JordanSign sign = JordanSign::plus;
};

/// Verdicts maps_commute, colour_commutative, jordan_identity over the given
/// basis of a space of endomorphisms with induced maps D -> alpha o D and
/// D -> beta o D. Closure of the span under the product is reported as the
/// flag closed; the identities are evaluated in End(A) either way.
AxiomReport check_jordan_axioms(const std::vector<HomEndo>& space, const Bicharacter& eps, const Matrix& alpha,
                                const Matrix& beta, JordanOptions options = {});

}  // namespace bihom
