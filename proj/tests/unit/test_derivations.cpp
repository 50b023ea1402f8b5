#include <doctest.h>

#include "bihom/corpus.hpp"
#include "bihom/derivations.hpp"
#include "helpers.hpp"

using namespace bihom;

namespace {

HomEndo times(const Rational& c, const HomEndo& d) { return {c * d.matrix, d.degree}; }

// y -> [x, y] for a basis vector x of an algebra with identity maps.
HomEndo ad(const ColourAlgebra& a, std::size_t i) {
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < a.dim(); ++j) cols.push_back(a.structure(i, j));
    return {Matrix::from_columns(a.dim(), cols), a.basis().degree(i)};
}

}  // namespace

TEST_CASE("zero algebra: every map qualifies") {
    const ColourAlgebra z = zero_algebra(3);
    const GroupElement g0 = z.basis().group().zero();
    CHECK(derivation_space(z, 0, 0, g0).dimension() == 9);
    CHECK(quasi_derivation_space(z, 0, 0, g0).dimension() == 18);
    CHECK(generalized_derivation_space(z, 0, 0, g0).dimension() == 27);
    CHECK(centroid_space(z, 0, 0, g0).dimension() == 9);
    CHECK(quasi_centroid_space(z, 0, 0, g0).dimension() == 9);
    CHECK(inner_derivation_space(z, 0, 0).dimension() == 0);
}

TEST_CASE("osp(1,2): derivations are exactly the inner ones") {
    const ColourAlgebra a = osp12_classical();
    const SolverResult all = solve_all_degrees(a, DerivationKind::der, 0, 0);
    CHECK(all.dimension() == 5);
    const auto& z2 = a.basis().group();
    CHECK(derivation_space(a, 0, 0, z2.element({0})).dimension() == 3);
    CHECK(derivation_space(a, 0, 0, z2.element({1})).dimension() == 2);
    for (std::size_t i = 0; i < 5; ++i) {
        const HomEndo d = ad(a, i);
        CHECK(in_span(all, {d}));
        CHECK(verify_member(a, DerivationKind::der, 0, 0, {d}).passed());
        // y -> [y, x] is a derivation only up to the sign eps(x, y)
        std::vector<Vector> cols;
        for (std::size_t j = 0; j < 5; ++j) cols.push_back(a.structure(j, i));
        const HomEndo right{Matrix::from_columns(5, cols), d.degree};
        CHECK(verify_member(a, DerivationKind::der, 0, 0, {right}).passed() == (i < 3));
    }
    const SolverResult inner = inner_derivation_space(a, 0, 0);
    CHECK(inner.dimension() == 5);
    for (const auto& m : inner.basis) CHECK(in_span(all, m));
}

TEST_CASE("derivation-type inclusions on twisted osp") {
    const ColourAlgebra a = build_osp12(2, 3);
    for (auto [k, l] : std::vector<std::pair<int, int>>{{0, 0}, {-1, 2}, {1, 0}}) {
        for (const auto& gamma : endomorphism_degrees(a)) {
            INFO("k=" << k << " l=" << l);
            const SolverResult der = derivation_space(a, k, l, gamma);
            const SolverResult qder = quasi_derivation_space(a, k, l, gamma);
            const SolverResult gder = generalized_derivation_space(a, k, l, gamma);
            const SolverResult cen = centroid_space(a, k, l, gamma);
            const SolverResult qc = quasi_centroid_space(a, k, l, gamma);
            for (const auto& m : der.basis) {
                const HomEndo& d = m[0];
                CHECK(verify_member(a, DerivationKind::der, k, l, {d}).passed());
                CHECK(in_span(qder, {d, d}));
                CHECK(in_span(gder, {d, d, d}));
            }
            for (const auto& m : cen.basis) {
                const HomEndo& c = m[0];
                CHECK(verify_member(a, DerivationKind::centroid, k, l, {c}).passed());
                CHECK(in_span(qc, {c}));
                CHECK(in_span(qder, {c, times(2, c)}));
                CHECK(in_span(gder, {c, c, times(2, c)}));
            }
            for (const auto& m : gder.basis)
                CHECK(verify_member(a, DerivationKind::gder, k, l, m).passed());
            CHECK(centroid_space(a, k, l, gamma, true).dimension() >= cen.dimension());
        }
    }
}

TEST_CASE("solver output lies in the declared degree") {
    const ColourAlgebra a = z2z2_colour_example();
    for (const auto& gamma : endomorphism_degrees(a))
        for (const auto& m : quasi_derivation_space(a, 0, 1, gamma).basis)
            for (const auto& d : m) {
                CHECK(d.degree == gamma);
                CHECK(a.basis().is_graded_map(d.matrix, gamma));
            }
}

TEST_CASE("identity-map algebra: centroid contains the identity") {
    const ColourAlgebra a = osp12_classical();
    const SolverResult c = centroid_space(a, 0, 0, a.basis().group().zero());
    CHECK(in_span(c, {HomEndo{Matrix::identity(5), a.basis().group().zero()}}));
}

TEST_CASE("Jordan product basics") {
    const ColourAlgebra a = osp12_classical();
    const HomEndo h = ad(a, 0), f = ad(a, 3), g = ad(a, 4);
    const HomEndo hh = jordan_product(h, h, a.eps());
    CHECK(hh.matrix == Rational(2) * (h.matrix * h.matrix));
    // odd pair: plus variant is the anticommutator with a sign flip, i.e. the commutator
    CHECK(jordan_product(f, g, a.eps()).matrix == f.matrix * g.matrix - g.matrix * f.matrix);
    CHECK(colour_commutator(f, g, a.eps()).matrix == f.matrix * g.matrix + g.matrix * f.matrix);
    CHECK(jordan_product(h, f, a.eps(), JordanSign::minus).matrix == colour_commutator(h, f, a.eps()).matrix);
    CHECK(jordan_product(f, g, a.eps()).degree == a.basis().group().zero());

    // ad_H o ad_H is not a derivation, so Der is not closed under the product
    const SolverResult der = solve_all_degrees(a, DerivationKind::der, 0, 0);
    CHECK_FALSE(in_span(der, {hh}));
    const AxiomReport r = check_jordan_axioms(der.projection(0), a.eps(), a.alpha(), a.beta());
    CHECK_FALSE(r.verdict("closed").passed);
    CHECK(r.verdict("closed").informational);
}

TEST_CASE("Jordan identity: trivial space passes, literal cycling passes on Der") {
    const ColourAlgebra a = osp12_classical();
    const GroupElement g0 = a.basis().group().zero();
    const AxiomReport zero = check_jordan_axioms({HomEndo{Matrix(5, 5), g0}}, a.eps(), a.alpha(), a.beta());
    CHECK(zero.passed());

    const SolverResult der = solve_all_degrees(a, DerivationKind::der, 0, 0);
    JordanOptions literal;
    literal.cycling = JordanOptions::Cycling::xyw;
    CHECK(check_jordan_axioms(der.projection(0), a.eps(), a.alpha(), a.beta(), literal).passed());

    // with y held fixed the identity demands ((xy)x)x = (xy)(xx) at x = z = w
    const AxiomReport fixed_y = check_jordan_axioms(der.projection(0), a.eps(), a.alpha(), a.beta());
    CHECK_FALSE(fixed_y.passed("jordan_identity"));
}

TEST_CASE("colour commutativity fails when the induced maps do not commute with the product") {
    const GradingGroup trivial;
    const Bicharacter eps = Bicharacter::trivial(trivial);
    const HomEndo d1{Matrix{{0, 0}, {1, 0}}, trivial.zero()};
    const HomEndo d2{Matrix{{1, 0}, {0, 0}}, trivial.zero()};
    const Matrix alpha{{1, 1}, {0, 1}};
    const AxiomReport r = check_jordan_axioms({d1, d2}, eps, alpha, Matrix::identity(2));
    CHECK(r.passed("maps_commute"));
    const Verdict& v = r.verdict("colour_commutative");
    CHECK_FALSE(v.passed);
    REQUIRE(v.witness);
    CHECK(v.witness->tuple == std::vector<std::string>{"D1", "D2"});
}

TEST_CASE("kind names") {
    for (auto k : {DerivationKind::der, DerivationKind::qder, DerivationKind::gder, DerivationKind::centroid,
                   DerivationKind::qcentroid})
        CHECK(parse_derivation_kind(to_string(k)) == k);
    CHECK(arity(DerivationKind::gder) == 3);
    CHECK_THROWS(parse_derivation_kind("nope"));
}
