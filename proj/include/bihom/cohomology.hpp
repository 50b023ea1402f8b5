#pragma once

#include <map>
#include <vector>

#include "bihom/algebra.hpp"
#include "bihom/report.hpp"

namespace bihom {

/// Module (V, rho, alpha_V, beta_V) over a BiHom-Lie colour algebra.
/// rho[i] is the action of the i-th basis vector of the algebra on V.
struct Representation {
    ColourAlgebra algebra;
    GradedBasis space;
    std::vector<Matrix> rho;
    Matrix alpha_v;
    Matrix beta_v;

    /// rho extended linearly to an arbitrary element.
    Matrix action(const Element& x) const;
};

/// Verdicts alpha_v_even, beta_v_even, alpha_v_beta_v_commute, rho_even,
/// rho_alpha, rho_beta, rho_bracket.
AxiomReport validate_representation(const Representation& rep);

/// rho(a) = [alpha^s beta^l a, .] on V = A with alpha_V = alpha, beta_V = beta.
Representation adjoint_rep(const ColourAlgebra& a, int s, int l);

struct DualResult {
    Representation candidate;
    /// Verdict eq31 (the condition on rho) and flag candidate_is_representation.
    AxiomReport report;
};

/// Dual space with degrees negated, rho~(x) = -rho(x)^T, alpha~ = alpha_V^T,
/// beta~ = beta_V^T.
DualResult dual_rep(const Representation& rep);

/// f with values on canonical basis tuples; missing tuples map to zero.
struct Cochain {
    int n = 0;
    GroupElement degree;
    std::map<std::vector<std::size_t>, Element> values;
};

struct CanonicalTuple {
    /// +1 or -1, or 0 when the tuple forces the value to vanish.
    int sign = 1;
    std::vector<std::size_t> tuple;
};

/// Sorts a basis tuple by adjacent transpositions, each contributing
/// -eps(x_i, x_{i+1}). A repeated index of a degree d with eps(d,d) = +1
/// yields sign 0.
CanonicalTuple canonicalize(const ColourAlgebra& a, std::vector<std::size_t> tuple);

/// Nondecreasing tuples; repeats allowed only for degrees with eps(d,d) = -1.
std::vector<std::vector<std::size_t>> canonical_tuples(const ColourAlgebra& a, int n);

/// f on a basis tuple in any order.
Element evaluate(const Representation& rep, const Cochain& f, const std::vector<std::size_t>& tuple);
/// f on arbitrary elements, by multilinear expansion.
Element evaluate(const Representation& rep, const Cochain& f, const std::vector<Element>& args);

/// Coordinates of degree-gamma n-cochains: one per (canonical tuple t, basis
/// vector w of V) with deg w = gamma + sum of the degrees in t.
class CochainSpace {
   public:
    CochainSpace(const Representation& rep, int n, GroupElement gamma);

    int n() const noexcept { return n_; }
    const GroupElement& gamma() const noexcept { return gamma_; }
    std::size_t dim() const noexcept { return coords_.size(); }
    const std::vector<std::vector<std::size_t>>& tuples() const noexcept { return tuples_; }
    /// (tuple index, V basis index) of each coordinate.
    const std::vector<std::pair<std::size_t, std::size_t>>& coordinates() const noexcept { return coords_; }

    Cochain from_coordinates(const Vector& c) const;
    /// Throws ValidationError when f has a value outside the allowed degrees.
    Vector to_coordinates(const Cochain& f) const;

   private:
    int n_;
    GroupElement gamma_;
    std::size_t dim_v_;
    std::vector<std::vector<std::size_t>> tuples_;
    std::vector<std::pair<std::size_t, std::size_t>> coords_;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> index_;
};

/// Degrees gamma for which the degree-gamma n-cochains have nonzero ambient space.
std::vector<GroupElement> realized_degrees(const Representation& rep, int n);

/// Basis of the degree-gamma part of C^n_{alpha,beta}(A, V); empty for n < 0.
std::vector<Cochain> cochain_basis(const Representation& rep, int n, const GroupElement& gamma);

/// Failures of f o alpha = alpha_V o f and f o beta = beta_V o f on canonical
/// tuples; verdicts commutes_alpha and commutes_beta.
AxiomReport check_cochain_membership(const Representation& rep, const Cochain& f);

/// Placement of the eps prefactor in the first sum of the coboundary:
/// between uses eps(x_{s+1} + ... + x_{t-1}, x_t), prefix uses
/// eps(x_0 + ... + x_{t-1}, x_t).
enum class EpsConvention { between, prefix };

/// The convention under which the composite of consecutive coboundaries
/// vanishes on the corpus.
inline constexpr EpsConvention kDefaultEpsConvention = EpsConvention::between;

/// delta_r(f) on one basis tuple of length n+1 (in any order).
Element coboundary_value(const Representation& rep, int r, const Cochain& f, const std::vector<std::size_t>& tuple,
                         EpsConvention conv = kDefaultEpsConvention);

/// delta_r(f) stored on canonical tuples. f must lie in C^n_{alpha,beta}.
Cochain apply_coboundary(const Representation& rep, int r, const Cochain& f,
                         EpsConvention conv = kDefaultEpsConvention);

/// Matrix of delta_r^n from the cochain_basis(n, gamma) coordinates to the
/// cochain_basis(n+1, gamma) coordinates.
Matrix coboundary_matrix(const Representation& rep, int n, int r, const GroupElement& gamma,
                         EpsConvention conv = kDefaultEpsConvention);

struct CohomologyResult {
    int n = 0;
    int r = 0;
    GroupElement degree;
    std::size_t dim_cochains = 0;
    std::size_t dim_cocycles = 0;
    std::size_t dim_coboundaries = 0;
    long dim_cohomology = 0;
    /// Image of delta^{n-1} contained in the kernel of delta^n.
    bool inclusion_holds = true;
};

CohomologyResult cohomology_dims(const Representation& rep, int n, int r, const GroupElement& gamma,
                                 EpsConvention conv = kDefaultEpsConvention);

}  // namespace bihom
