#include <doctest.h>

#include <random>

#include "bihom/cohomology.hpp"
#include "bihom/corpus.hpp"
#include "bihom/derivations.hpp"
#include "helpers.hpp"

using namespace bihom;

namespace {

Cochain random_cochain(const Representation& rep, int n, const GroupElement& gamma, std::mt19937& rng) {
    const CochainSpace space(rep, n, gamma);
    return space.from_coordinates(testing::random_matrix(rng, space.dim(), 1, 0.8).column(0));
}

// Matrix whose column i is f(e_i).
Matrix as_matrix(const Representation& rep, const Cochain& f) {
    const std::size_t n = rep.algebra.dim();
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n; ++i) cols.push_back(evaluate(rep, f, std::vector<std::size_t>{i}));
    return Matrix::from_columns(rep.space.size(), cols);
}

std::vector<Vector> flatten(const std::vector<Matrix>& ms) {
    std::vector<Vector> out;
    for (const auto& m : ms) out.emplace_back(m.entries().begin(), m.entries().end());
    return out;
}

}  // namespace

TEST_CASE("canonical tuples carry the colour sign of the sorting") {
    const ColourAlgebra a = osp12_classical();  // H X Y even, F G odd
    CHECK(canonicalize(a, {0, 0}).sign == 0);
    CHECK(canonicalize(a, {1, 0}).sign == -1);
    CHECK(canonicalize(a, {1, 0}).tuple == std::vector<std::size_t>{0, 1});
    CHECK(canonicalize(a, {3, 3}).sign == 1);
    CHECK(canonicalize(a, {4, 3}).sign == 1);
    CHECK(canonicalize(a, {4, 0}).sign == -1);
    CHECK(canonicalize(a, {4, 3, 0}).sign == 1);
    CHECK(canonicalize(a, {4, 3, 0}).tuple == std::vector<std::size_t>{0, 3, 4});
    // 2-tuples: 10 strictly increasing plus FF and GG
    CHECK(canonical_tuples(a, 2).size() == 12);
    CHECK(canonical_tuples(a, 0).size() == 1);
}

TEST_CASE("cochain coordinates round-trip") {
    const Representation rep = adjoint_rep(build_osp12(2, 3), 0, 0);
    std::mt19937 rng(5);
    for (const auto& gamma : realized_degrees(rep, 2)) {
        const CochainSpace space(rep, 2, gamma);
        const Vector c = testing::random_matrix(rng, space.dim(), 1).column(0);
        CHECK(space.to_coordinates(space.from_coordinates(c)) == c);
    }
}

TEST_CASE("adjoint modules are representations") {
    for (auto [s, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}, {-1, 2}}) {
        const AxiomReport r = validate_representation(adjoint_rep(build_osp12(2, 3), s, l));
        INFO(s << "," << l << "\n" << r.to_string());
        CHECK(r.passed());
    }
}

TEST_CASE("first coboundary matches the r = 1 display") {
    const ColourAlgebra a = build_osp12(2, 3);
    const Representation rep = adjoint_rep(a, 0, 0);
    const Matrix ab = a.alpha() * a.beta();
    const Matrix ainv_b = invert(a.alpha()) * a.beta();
    std::mt19937 rng(11);
    for (const auto& gamma : realized_degrees(rep, 1)) {
        const Cochain f = random_cochain(rep, 1, gamma, rng);
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j) {
                const Vector x = a.basis_vector(i), y = a.basis_vector(j);
                const auto &dx = a.basis().degree(i), &dy = a.basis().degree(j);
                Vector expected = scaled(a.multiply(ab.apply(x), evaluate(rep, f, {y})), a.eps()(gamma, dx));
                axpy(expected, -a.eps()(a.basis().group().add(gamma, dx), dy),
                     a.multiply(ab.apply(y), evaluate(rep, f, {x})));
                axpy(expected, -1, evaluate(rep, f, {a.multiply(ainv_b.apply(x), y)}));
                CHECK(coboundary_value(rep, 1, f, {i, j}) == expected);
            }
    }
}

TEST_CASE("second coboundary matches the r = 1 display") {
    const ColourAlgebra a = build_osp12(2, 3);
    const Representation rep = adjoint_rep(a, 0, 0);
    const auto& grp = a.basis().group();
    const Matrix abb = a.alpha() * a.beta() * a.beta();
    const Matrix ainv_b = invert(a.alpha()) * a.beta();
    const Matrix& b = a.beta();
    std::mt19937 rng(13);
    for (const auto& gamma : realized_degrees(rep, 2)) {
        const Cochain f = random_cochain(rep, 2, gamma, rng);
        auto F = [&](const Vector& u, const Vector& v) { return evaluate(rep, f, {u, v}); };
        for (std::size_t i = 0; i < 5; ++i)
            for (std::size_t j = 0; j < 5; ++j)
                for (std::size_t k = 0; k < 5; ++k) {
                    const Vector x = a.basis_vector(i), y = a.basis_vector(j), z = a.basis_vector(k);
                    const auto &dx = a.basis().degree(i), &dy = a.basis().degree(j), &dz = a.basis().degree(k);
                    const auto gx = grp.add(gamma, dx), gxy = grp.add(gx, dy);
                    Vector e = scaled(a.multiply(abb.apply(x), F(y, z)), a.eps()(gamma, dx));
                    axpy(e, -a.eps()(gx, dy), a.multiply(abb.apply(y), F(x, z)));
                    axpy(e, a.eps()(gxy, dz), a.multiply(abb.apply(z), F(x, y)));
                    axpy(e, -1, F(a.multiply(ainv_b.apply(x), y), b.apply(z)));
                    axpy(e, a.eps()(dy, dz), F(a.multiply(ainv_b.apply(x), z), b.apply(y)));
                    axpy(e, 1, F(b.apply(x), a.multiply(ainv_b.apply(y), z)));
                    CHECK(coboundary_value(rep, 1, f, {i, j, k}) == e);
                }
    }
}

TEST_CASE("consecutive coboundaries compose to zero") {
    for (const char* name : {"osp12_classical", "osp12_twist_2_3", "z2z2_colour_example"}) {
        const ColourAlgebra a = corpus(name).algebra;
        for (auto [s, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, -1}}) {
            const Representation rep = adjoint_rep(a, s, l);
            for (int r : {0, 1})
                for (const auto& gamma : a.basis().degree_set())
                    for (int n = 0; n <= 1; ++n) {
                        INFO(name << " s=" << s << " l=" << l << " r=" << r << " n=" << n);
                        const Matrix d0 = coboundary_matrix(rep, n, r, gamma);
                        const Matrix d1 = coboundary_matrix(rep, n + 1, r, gamma);
                        if (d0.cols() == 0 || d1.rows() == 0) continue;
                        CHECK((d1 * d0).is_zero());
                    }
        }
    }
}

TEST_CASE("the prefix sign placement breaks the complex") {
    bool broken = false;
    for (const char* name : {"osp12_classical", "osp12_twist_2_3"}) {
        const Representation rep = adjoint_rep(corpus(name).algebra, 0, 0);
        for (const auto& gamma : rep.algebra.basis().degree_set())
            for (int n = 0; n <= 1; ++n) {
                const Matrix d0 = coboundary_matrix(rep, n, 1, gamma, EpsConvention::prefix);
                const Matrix d1 = coboundary_matrix(rep, n + 1, 1, gamma, EpsConvention::prefix);
                if (d0.cols() && d1.rows() && !(d1 * d0).is_zero()) broken = true;
            }
    }
    CHECK(broken);
}

TEST_CASE("low-degree cohomology of known examples") {
    const Representation z = adjoint_rep(zero_algebra(3), 0, 0);
    const GroupElement g0 = z.algebra.basis().group().zero();
    CHECK(cohomology_dims(z, 0, 0, g0).dim_cohomology == 3);
    CHECK(cohomology_dims(z, 1, 0, g0).dim_cohomology == 9);
    CHECK(cohomology_dims(z, 2, 0, g0).dim_cochains == 9);  // 3 pairs, 3 values

    // osp(1,2) is simple and rigid: no centre and only inner derivations
    const Representation o = adjoint_rep(osp12_classical(), 0, 0);
    for (const auto& gamma : o.algebra.basis().degree_set()) {
        CHECK(cohomology_dims(o, 0, 0, gamma).dim_cohomology == 0);
        const CohomologyResult h1 = cohomology_dims(o, 1, 0, gamma);
        CHECK(h1.dim_cohomology == 0);
        CHECK(h1.inclusion_holds);
    }
}

TEST_CASE("first cocycles are derivations and coboundaries are inner (r = 0)") {
    for (auto [s, l] : std::vector<std::pair<int, int>>{{0, 0}, {1, 0}, {0, 1}}) {
        const ColourAlgebra a = build_osp12(2, 3);
        const Representation rep = adjoint_rep(a, s, l);
        const SolverResult inner = inner_derivation_space(a, s + 1, l - 1);
        for (const auto& gamma : a.basis().degree_set()) {
            INFO("s=" << s << " l=" << l << " gamma=" << a.basis().group().format(gamma));
            const auto c1 = cochain_basis(rep, 1, gamma);
            // coboundaries, as matrices
            const Matrix d0 = coboundary_matrix(rep, 0, 0, gamma);
            std::vector<Matrix> bnd;
            for (std::size_t col = 0; col < d0.cols(); ++col) {
                Cochain f{1, gamma, {}};
                for (std::size_t b = 0; b < c1.size(); ++b)
                    if (!is_zero(d0(b, col)))
                        for (const auto& [t, v] : c1[b].values) {
                            auto& slot = f.values[t];
                            if (slot.empty()) slot = zero_vector(v.size());
                            axpy(slot, d0(b, col), v);
                        }
                bnd.push_back(as_matrix(rep, f));
            }
            std::vector<Matrix> inn;
            for (const auto& m : inner.projection(0))
                if (m.degree == gamma) inn.push_back(m.matrix);
            const std::size_t len = 25;
            CHECK(span_rank(flatten(bnd), len) == span_rank(flatten(inn), len));
            CHECK(span_contains(flatten(inn), flatten(bnd), len));

            // cocycles coincide with derivations of the shifted index
            const Matrix d1 = coboundary_matrix(rep, 1, 0, gamma);
            const SolverResult der = derivation_space(a, s + 2, l - 1, gamma);
            std::vector<Matrix> cyc;
            for (const auto& v : kernel_basis(d1)) {
                Matrix m(5, 5);
                for (std::size_t b = 0; b < c1.size(); ++b) m += v[b] * as_matrix(rep, c1[b]);
                cyc.push_back(m);
            }
            std::vector<Matrix> ders;
            for (const auto& m : der.projection(0)) ders.push_back(m.matrix);
            CHECK(cyc.size() == ders.size());
            CHECK(span_contains(flatten(ders), flatten(cyc), len));
        }
    }
}

TEST_CASE("cochain membership and dual module") {
    const Representation rep = adjoint_rep(build_osp12(2, 3), 0, 0);
    for (const auto& gamma : realized_degrees(rep, 1))
        for (const auto& f : cochain_basis(rep, 1, gamma)) CHECK(check_cochain_membership(rep, f).passed());

    const DualResult d = dual_rep(rep);
    for (std::size_t i = 0; i < 5; ++i) CHECK(d.candidate.rho[i] == Rational(-1) * rep.rho[i].transpose());
    CHECK(d.candidate.alpha_v == rep.alpha_v.transpose());
    CHECK(d.report.has("eq31"));
    CHECK(d.report.has("candidate_is_representation"));
    const auto& grp = rep.space.group();
    for (std::size_t i = 0; i < 5; ++i) CHECK(d.candidate.space.degree(i) == grp.negate(rep.space.degree(i)));

    const DualResult dz = dual_rep(adjoint_rep(zero_algebra(2), 0, 0));
    CHECK(dz.report.verdict("candidate_is_representation").passed);
}
