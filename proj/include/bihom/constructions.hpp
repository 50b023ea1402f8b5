#pragma once

#include <map>
#include <utility>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Product [x,y] o (a2 x b2) with structure maps alpha o a2 and beta o b2.
/// The input must pass its axiom suite, a2 and b2 must be even morphisms of
/// the product, and all four maps must commute pairwise; anything else throws
/// ValidationError with the failing verdict in the message.
ColourAlgebra yau_twist(const ColourAlgebra& a, const Matrix& a2, const Matrix& b2);

/// xy - eps(x,y) (alpha^-1 beta y)(alpha beta^-1 x), no hypothesis checks
/// beyond invertibility of alpha and beta. The result is tagged lie.
ColourAlgebra commutator_bracket(const ColourAlgebra& a);

/// commutator_bracket() of a BiHom-associative colour algebra; throws
/// ValidationError when the associative suite fails.
ColourAlgebra commutator_algebra(const ColourAlgebra& a);

/// Finite table sigma: G x G -> Q*, defined only where explicitly set.
class MultiplierTable {
   public:
    MultiplierTable() = default;
    explicit MultiplierTable(GradingGroup group) : group_(std::move(group)) {}

    /// Constant table on all pairs of the given degrees.
    static MultiplierTable constant(const GradingGroup& group, const std::vector<GroupElement>& degrees,
                                    const Rational& value);

    const GradingGroup& group() const noexcept { return group_; }
    /// Throws std::invalid_argument for value 0, DimensionError outside the group.
    void set(const GroupElement& g, const GroupElement& h, const Rational& value);
    bool contains(const GroupElement& g, const GroupElement& h) const;
    /// Throws LookupError for pairs that were never set.
    const Rational& at(const GroupElement& g, const GroupElement& h) const;
    const std::map<std::pair<GroupElement, GroupElement>, Rational>& entries() const noexcept { return entries_; }

    friend bool operator==(const MultiplierTable&, const MultiplierTable&) = default;

   private:
    GradingGroup group_;
    std::map<std::pair<GroupElement, GroupElement>, Rational> entries_;
};

enum class MultiplierMode { symmetric, cocycle };

/// Symmetric mode: verdicts symmetric and cyclic_invariance. Cocycle mode:
/// verdict cocycle. Triples range over the given degrees.
AxiomReport validate_multiplier(const MultiplierTable& s, const std::vector<GroupElement>& degrees,
                                MultiplierMode mode);

using OmegaTable = std::map<GroupElement, Rational>;

/// tau(x,y) = omega(x+y) / (omega(x) omega(y)) on every pair drawn from the
/// degrees and their pairwise sums. omega must be known on all sums of up to
/// three degrees; a missing entry throws LookupError.
MultiplierTable multiplier_from_omega(const GradingGroup& group, const OmegaTable& omega,
                                      const std::vector<GroupElement>& degrees);

/// [x,y]^sigma = sigma(x,y)[x,y]; sigma must pass symmetric-mode validation
/// on the degree set of a.
ColourAlgebra sigma_twist(const ColourAlgebra& a, const MultiplierTable& s);

/// delta(x,y) = sigma(x,y) / sigma(y,x) as a bicharacter, read from the
/// generator entries of the table and cross-checked on the degree set.
Bicharacter multiplier_delta(const MultiplierTable& s, const std::vector<GroupElement>& degrees);

/// sigma-twist whose bicharacter becomes eps * delta. Requires the cocycle
/// condition and delta valued in {+1, -1}.
ColourAlgebra delta_twist(const ColourAlgebra& a, const MultiplierTable& s);

}  // namespace bihom
