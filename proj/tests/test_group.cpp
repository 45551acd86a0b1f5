#include <doctest.h>

#include "hsto/errors.hpp"
#include "hsto/group.hpp"
#include "oracles.hpp"

using namespace hsto;
using Kind = GroupDescriptor::Kind;

TEST_CASE("group grammar") {
    CHECK(parse_group("z2") == GroupDescriptor::z2_power(1));
    CHECK(parse_group("Z2^3") == GroupDescriptor::z2_power(3));
    CHECK(parse_group("d6") == GroupDescriptor::dihedral(1));
    CHECK(parse_group("d2") == GroupDescriptor::dihedral(0));
    CHECK(parse_group("t") == GroupDescriptor::torus(1));
    CHECK(parse_group("t^2") == GroupDescriptor::torus(2));
    CHECK(parse_group("su2") == GroupDescriptor::su2());
    auto p = parse_group("(z2) x (t)x(su2)");
    CHECK(p.kind() == Kind::Product);
    CHECK(p.factors().size() == 3);
    CHECK(parse_group(p.to_string()) == p);
    CHECK(parse_group("((z2)x(z2))x(t)").factors().size() == 3);
    for (const char* bad : {"", "z3", "d8", "d4", "t^0", "(z2", "su3", "z2x"}) CHECK_THROWS_AS(parse_group(bad), PreconditionError);
}

TEST_CASE("group invariants") {
    auto su2 = GroupDescriptor::su2();
    CHECK(su2.dim() == 3);
    CHECK_FALSE(su2.is_abelian());
    CHECK(su2.positive_dim_or_even_order());
    CHECK(GroupDescriptor::torus(2).dim() == 2);
    CHECK(GroupDescriptor::torus(2).is_abelian());
    CHECK_FALSE(GroupDescriptor::torus(2).is_elementary_abelian_2());
    CHECK(GroupDescriptor::dihedral(1).order() == 6);
    CHECK_FALSE(GroupDescriptor::dihedral(1).is_abelian());
    CHECK(GroupDescriptor::dihedral(0).is_elementary_abelian_2());
    CHECK(GroupDescriptor::z2_power(3).order() == 8);
    CHECK(GroupDescriptor::z2_power(0).order() == 1);
    CHECK_FALSE(GroupDescriptor::z2_power(0).positive_dim_or_even_order());
    auto p = GroupDescriptor::product({GroupDescriptor::z2_power(1), GroupDescriptor::torus(1)});
    CHECK(p.dim() == 1);
    CHECK(p.is_abelian());
    CHECK_FALSE(p.is_finite());
    auto q = GroupDescriptor::product({GroupDescriptor::z2_power(1), GroupDescriptor::z2_power(2)});
    CHECK(q.order() == 8);
    CHECK(q.is_elementary_abelian_2());
}

TEST_CASE("coefficient slots") {
    CHECK(GroupDescriptor::z2_power(1).slots()[0].name == "x");
    CHECK(GroupDescriptor::dihedral(2).slots()[0].name == "x");
    auto t = GroupDescriptor::z2_power(2).slots();
    CHECK(t[0].name == "t1");
    CHECK(t[1].name == "t2");
    CHECK(GroupDescriptor::torus(1).slots()[0].name == "y");
    CHECK(GroupDescriptor::torus(1).slots()[0].degree == 2);
    CHECK(GroupDescriptor::su2().slots()[0].degree == 4);
    auto p = GroupDescriptor::product({GroupDescriptor::z2_power(1), GroupDescriptor::torus(2)}).slots();
    REQUIRE(p.size() == 3);
    CHECK(p[0].name == "g1.x");
    CHECK(p[2].name == "g2.y2");
}

TEST_CASE("coefficient bases have the expected ranks") {
    for (int d = 0; d <= 12; ++d) {
        CHECK(coefficient_basis(GroupDescriptor::z2_power(1), d).size() == 1);
        CHECK(coefficient_basis(GroupDescriptor::z2_power(2), d).size() == static_cast<std::size_t>(d + 1));
        CHECK(coefficient_basis(GroupDescriptor::z2_power(3), d).size() == oracle::weak_compositions(d, 3).size());
        CHECK(coefficient_basis(GroupDescriptor::torus(1), d).size() == (d % 2 == 0 ? 1u : 0u));
        CHECK(coefficient_basis(GroupDescriptor::su2(), d).size() == (d % 4 == 0 ? 1u : 0u));
        CHECK(coefficient_basis(GroupDescriptor::z2_power(0), d).size() == (d == 0 ? 1u : 0u));
    }
    auto b = coefficient_basis(GroupDescriptor::z2_power(2), 2);
    CHECK(b.front().terms().front() == DPMonomial{0, 2});
    CHECK(b.back().terms().front() == DPMonomial{2, 0});
}

TEST_CASE("coefficient classes") {
    auto su2 = GroupDescriptor::su2();
    auto u = CoefficientClass::monomial(su2, {2});
    CHECK(u.degree() == 8);
    CHECK(u.to_string() == "u2");
    CHECK(u.as_su2() == su2_unit(2));
    CHECK(CoefficientClass::from_su2(su2_unit(2)) == u);
    auto z2 = GroupDescriptor::z2_power(1);
    auto c = CoefficientClass::monomial(z2, {3}) + CoefficientClass::monomial(z2, {3});
    CHECK(c.is_zero());
    CHECK(CoefficientClass::one(z2).to_string() == "1");
    CHECK_THROWS(CoefficientClass(z2, {{1, 1}}));
    CHECK_THROWS(CoefficientClass::from_dp(GroupDescriptor::torus(1), DPClass::monomial(GeneratorSet::standard("x", 1, 1), {1})));
}
