#include <doctest.h>

#include "bihom/axioms.hpp"
#include "bihom/constructions.hpp"
#include "bihom/corpus.hpp"
#include "bihom/errors.hpp"
#include "bihom/io.hpp"
#include "bihom/laurent.hpp"
#include "helpers.hpp"

using namespace bihom;

namespace {

// 2x2 matrix of the element with coordinates v over E11, E12, E21, E22.
Matrix as_mat2(const Vector& v) { return Matrix{{v[0], v[1]}, {v[2], v[3]}}; }
Vector from_mat2(const Matrix& m) { return {m(0, 0), m(0, 1), m(1, 0), m(1, 1)}; }

// Conjugation by diag(p, 1) on the matrix-unit basis, columns are images.
Matrix conj_diag(const Rational& p) {
    Matrix c = Matrix::identity(4);
    c(1, 1) = p;
    c(2, 2) = 1 / p;
    return c;
}

std::string fixture(const std::string& name) {
    return read_file(std::string(BIHOM_SOURCE_DIR) + "/tests/fixtures/" + name);
}

}  // namespace

TEST_CASE("Yau twist of mat2 by diagonal conjugations matches the matrix product") {
    const Rational p(2), q(-3);
    const Matrix P{{p, 0}, {0, 1}}, Q{{q, 0}, {0, 1}};
    const ColourAlgebra t = yau_twist(mat2_assoc(), conj_diag(p), conj_diag(q));
    const AxiomReport r = check_associative_axioms(t);
    CHECK(r.passed());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const Matrix x = as_mat2(unit_vector(4, i)), y = as_mat2(unit_vector(4, j));
            const Matrix expected = (P * x * invert(P)) * (Q * y * invert(Q));
            CHECK(t.structure(i, j) == from_mat2(expected));
        }

    // The commutator bracket reduces to [alpha x, beta y] of matrices.
    const ColourAlgebra c = commutator_algebra(t);
    CHECK(c.kind() == AlgebraKind::lie);
    CHECK(check_lie_axioms(c).passed());
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            const Matrix ax = P * as_mat2(unit_vector(4, i)) * invert(P);
            const Matrix by = Q * as_mat2(unit_vector(4, j)) * invert(Q);
            CHECK(c.structure(i, j) == from_mat2(ax * by - by * ax));
        }
}

TEST_CASE("commutator of the untwisted mat2 is gl(2)") {
    const ColourAlgebra c = commutator_algebra(mat2_assoc());
    CHECK(c.structure(1, 2) == Vector{1, 0, 0, -1});
    CHECK(c.structure(0, 1) == Vector{0, 1, 0, 0});
    CHECK(is_zero(c.structure(0, 3)));
    CHECK(check_lie_axioms(c).passed());
}

TEST_CASE("commutator_algebra rejects a non-associative input") {
    const ColourAlgebra bad = mat2_assoc().with_product(commutator_algebra(mat2_assoc()).product_table());
    CHECK_THROWS_AS(commutator_algebra(bad.with_kind(AlgebraKind::associative)), ValidationError);
}

TEST_CASE("Yau twists compose") {
    const ColourAlgebra a = osp12_classical();
    const Matrix f1 = osp12_scaling(2), g1 = osp12_scaling(3);
    const Matrix f2 = osp12_scaling(Rational(1, 5)), g2 = osp12_scaling(-1);
    const ColourAlgebra twice = yau_twist(yau_twist(a, f1, g1), f2, g2);
    const ColourAlgebra once = yau_twist(a, f1 * f2, g1 * g2);
    CHECK(twice == once);
    CHECK(yau_twist(a, Matrix::identity(5), Matrix::identity(5)) == a);
    CHECK(build_osp12(2, 3) == yau_twist(a, f1, g1));
}

TEST_CASE("Yau twist hypotheses are enforced") {
    const ColourAlgebra a = osp12_classical();
    Matrix not_morphism = Matrix::identity(5);
    not_morphism(0, 0) = 2;
    CHECK_THROWS_AS(yau_twist(a, not_morphism, Matrix::identity(5)), ValidationError);
    Matrix odd(5, 5);
    odd(3, 0) = 1;
    CHECK_THROWS_AS(yau_twist(a, odd, Matrix::identity(5)), ValidationError);
}

TEST_CASE("sigma twist by a constant and by an omega coboundary") {
    const ColourAlgebra a = build_osp12(2, 3);
    const auto degrees = a.basis().degree_set();
    const MultiplierTable two = MultiplierTable::constant(a.basis().group(), degrees, 2);
    CHECK(validate_multiplier(two, degrees, MultiplierMode::symmetric).passed());
    const ColourAlgebra s = sigma_twist(a, two);
    CHECK(check_lie_axioms(s).passed());
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) CHECK(s.structure(i, j) == scaled(a.structure(i, j), 2));

    const GradingGroup& z2 = a.basis().group();
    const OmegaTable omega = parse_omega(fixture("omega_z2.txt"), z2);
    const MultiplierTable tau = multiplier_from_omega(z2, omega, degrees);
    CHECK(tau.at(z2.element({1}), z2.element({1})) == Rational(1, 9));
    CHECK(tau.at(z2.element({0}), z2.element({1})) == 1);
    const ColourAlgebra st = sigma_twist(a, tau);
    CHECK(check_lie_axioms(st).passed());
    CHECK(st.structure(3, 3) == scaled(a.structure(3, 3), Rational(1, 9)));
    CHECK(st.structure(0, 3) == a.structure(0, 3));
}

TEST_CASE("sigma twist rejects a non-symmetric multiplier") {
    const ColourAlgebra z = z2z2_colour_example();
    const MultiplierTable s = parse_multiplier(fixture("multiplier_z2z2.txt"), z.basis().group());
    CHECK_FALSE(validate_multiplier(s, z.basis().degree_set(), MultiplierMode::symmetric).passed());
    CHECK_THROWS_AS(sigma_twist(z, s), ValidationError);
    CHECK_THROWS_AS(MultiplierTable(z.basis().group()).set(z.basis().degree(0), z.basis().degree(0), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(MultiplierTable(z.basis().group()).at(z.basis().degree(0), z.basis().degree(0)), LookupError);
}

TEST_CASE("delta twist by (-1)^{x1 y2} trivializes the colour signs") {
    const ColourAlgebra z = z2z2_colour_example();
    const GradingGroup& g = z.basis().group();
    const MultiplierTable s = parse_multiplier(fixture("multiplier_z2z2.txt"), g);
    CHECK(validate_multiplier(s, g.elements(), MultiplierMode::cocycle).passed());
    const Bicharacter delta = multiplier_delta(s, z.basis().degree_set());
    for (const auto& x : g.elements())
        for (const auto& y : g.elements()) {
            CHECK(delta.sign(x, y) == z.eps().sign(x, y));
            const Rational ratio = s.at(x, y) / s.at(y, x);
            CHECK(ratio == delta.sign(x, y));
        }
    const ColourAlgebra t = delta_twist(z, s);
    for (const auto& x : g.elements())
        for (const auto& y : g.elements()) CHECK(t.eps().sign(x, y) == 1);
    CHECK(check_lie_axioms(t).passed());
    // structure constants are rescaled by sigma
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            CHECK(t.structure(i, j) == scaled(z.structure(i, j), s.at(z.basis().degree(i), z.basis().degree(j))));
}

TEST_CASE("Laurent polynomials") {
    const LaurentPoly f = LaurentPoly::monomial(2, -1) + LaurentPoly::monomial(1, 3);
    const LaurentPoly g = LaurentPoly::monomial(Rational(1, 2), 1);
    const LaurentPoly fg = f * g;
    CHECK(fg.coefficient(0) == 1);
    CHECK(fg.coefficient(4) == Rational(1, 2));
    CHECK(fg.terms().size() == 2);
    CHECK((f + LaurentPoly::monomial(-2, -1)) == LaurentPoly::monomial(1, 3));
    CHECK(LaurentPoly::monomial(0, 5).is_zero());
}

TEST_CASE("Laurent extension of osp12 twists keeps the axioms") {
    const ColourAlgebra a = build_osp12(2, 3);
    std::vector<LaurentSample> samples;
    for (std::size_t i = 0; i < 5; ++i)
        samples.push_back({a.basis_vector(i), LaurentPoly::monomial(Rational(static_cast<long>(i) + 1), static_cast<long>(i) - 2)});
    samples.push_back({a.basis_vector(3) + a.basis_vector(4), LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(-1, -1)});
    const AxiomReport r = check_laurent_samples(a, samples);
    INFO(r.to_string());
    CHECK(r.passed());

    const auto br = laurent_bracket(a, a.basis_vector(3), LaurentPoly::monomial(1, 2), a.basis_vector(3),
                                    LaurentPoly::monomial(1, -1));
    REQUIRE(br.size() == 1);
    CHECK(br[0].element == a.structure(3, 3));
    CHECK(br[0].poly == LaurentPoly::monomial(1, 1));
}
