#include <doctest.h>

#include "bihom/axioms.hpp"
#include "bihom/errors.hpp"
#include "bihom/grading.hpp"

using namespace bihom;

TEST_CASE("group parsing and arithmetic") {
    const GradingGroup g = parse_group("Z x Z3");
    CHECK(g.free_rank() == 1);
    CHECK(g.torsion() == std::vector<std::int64_t>{3});
    CHECK(g.signature() == "Z x Z3");
    CHECK(g.element({-2, 5}).coords == std::vector<std::int64_t>{-2, 2});
    CHECK(g.add(g.element({1, 2}), g.element({1, 2})) == g.element({2, 1}));
    CHECK(g.negate(g.element({1, 1})) == g.element({-1, 2}));
    CHECK(g.parse_element(g.format(g.element({4, 2}))) == g.element({4, 2}));
    CHECK_THROWS_AS(g.elements(), LookupError);
    CHECK(parse_group("Z2 x Z2").elements().size() == 4);
    CHECK(parse_group("0").rank() == 0);
    CHECK(parse_group("0").format(parse_group("0").zero()) == "0");
    CHECK_THROWS(parse_group("Z3 x Z"));
    CHECK_THROWS(parse_group("Z1"));
    CHECK_THROWS(parse_group("Q"));
    CHECK_THROWS(g.parse_element("1"));
}

TEST_CASE("bicharacter is a skew-symmetric bicharacter on every pair") {
    const GradingGroup g = parse_group("Z2 x Z2");
    const Bicharacter eps(g, {{1, -1}, {-1, 1}});
    const auto els = g.elements();
    for (const auto& a : els)
        for (const auto& b : els) {
            CHECK(eps.sign(a, b) * eps.sign(b, a) == 1);
            for (const auto& c : els) {
                CHECK(eps.sign(g.add(a, b), c) == eps.sign(a, c) * eps.sign(b, c));
                CHECK(eps.sign(a, g.add(b, c)) == eps.sign(a, b) * eps.sign(a, c));
            }
        }
    CHECK(eps.sign(g.element({1, 0}), g.element({0, 1})) == -1);
    CHECK(eps.sign(g.element({1, 1}), g.element({1, 1})) == 1);
}

TEST_CASE("super sign") {
    const Bicharacter s = Bicharacter::super();
    const GradingGroup& z2 = s.group();
    CHECK(s.sign(z2.element({1}), z2.element({1})) == -1);
    CHECK(s.sign(z2.element({1}), z2.element({0})) == 1);
    CHECK(eps_eval(s, z2.element({1}), z2.element({1})) == -1);
}

TEST_CASE("bicharacter validation") {
    const GradingGroup z2z2 = parse_group("Z2 x Z2");
    CHECK_THROWS_AS(Bicharacter(z2z2, {{1, 2}, {2, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Bicharacter(z2z2, {{1}}), DimensionError);

    CHECK(validate_bicharacter(Bicharacter(z2z2, {{1, -1}, {-1, 1}})).passed());
    CHECK(validate_bicharacter(Bicharacter(parse_group("Z"), {{-1}})).passed());

    const AxiomReport asym = validate_bicharacter(Bicharacter(z2z2, {{1, -1}, {1, 1}}));
    CHECK_FALSE(asym.passed());
    CHECK_FALSE(asym.passed("generator_skewsymmetry"));

    const AxiomReport odd = validate_bicharacter(Bicharacter(parse_group("Z3"), {{-1}}));
    CHECK_FALSE(odd.passed("torsion_order"));

    const Bicharacter t = Bicharacter::trivial(parse_group("Z x Z4"));
    CHECK(t.sign(t.group().element({3, 1}), t.group().element({1, 3})) == 1);
    CHECK_THROWS_AS(t.sign(GroupElement{{1, 0, 0}}, t.group().zero()), DimensionError);
    CHECK_THROWS_AS(t.sign(GroupElement{{1, 7}}, t.group().zero()), DimensionError);
}
