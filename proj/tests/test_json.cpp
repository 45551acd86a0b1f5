#include <doctest.h>

#include "hsto/json_io.hpp"

using namespace hsto;

TEST_CASE("divided power classes round-trip") {
    auto g = GeneratorSet::standard("x", 2, 1);
    DPClass a(g, {{1, 2}, {3, 0}});
    auto j = dp_to_json(a);
    CHECK(j["terms"][1] == json{{"x1", 3}});
    CHECK(dp_from_json(j) == a);
    CHECK(dp_from_json(dp_to_json(DPClass::one(g))) == DPClass::one(g));
}

TEST_CASE("coefficient classes round-trip") {
    for (const char* text : {"z2", "z2^2", "t^2", "su2", "(z2)x(t)", "d10"}) {
        auto g = parse_group(text);
        for (int d = 0; d <= 6; ++d)
            for (const auto& b : coefficient_basis(g, d)) REQUIRE(coefficient_from_json(coefficient_to_json(b), g) == b);
    }
    auto j = coefficient_to_json(CoefficientClass::monomial(GroupDescriptor::z2_power(1), {3}));
    CHECK(j["group"] == "z2");
    CHECK_THROWS(coefficient_from_json(j, GroupDescriptor::torus(1)));
}

TEST_CASE("symmetric group classes and factors round-trip") {
    SymClass a = juxtapose(SymClass::generator(EMonomial{{1, 1}}), SymClass::word(EWord::unit())) +
                 juxtapose(SymClass::word(EWord::from_subscripts({3, 4})), SymClass::word(EWord::from_subscripts({0})));
    CHECK(sym_from_json(sym_to_json(a)) == a);
    std::vector<OpFactor> fs{{2, SymClass::generator(EMonomial{{1}})}, {5, a}};
    auto back = factors_from_json(factors_to_json(fs));
    REQUIRE(back.size() == 2);
    CHECK(back[1].n == 5);
    CHECK(back[1].a == a);
}

TEST_CASE("certificate documents") {
    auto res = build_certificate(Target::HolOrdinary, GroupDescriptor::z2_power(1),
                                 {{2, SymClass::generator(EMonomial{{1}})}, {2, SymClass::generator(EMonomial{{2}})}});
    const auto& c = std::get<Certificate>(res);
    auto j = certificate_to_json(c);
    CHECK(j["version"] == "v1");
    CHECK(j["target"] == "HolOrdinary");
    CHECK(j["N"] == 2);
    CHECK(j["degree"] == 3);
    CHECK(j["stability"]["stable"] == true);
    CHECK(j["stability"]["stable_image"]["weight"] == 4);
    CHECK(j["stability"]["vanishing_bound"].is_null());
    CHECK(coefficient_from_json(j["witness"]["output"], c.group) == c.output);
    CHECK(factors_from_json(j["witness"]["factors"]).size() == 2);
    CHECK(j["shift_convention_note"].get<std::string>().size() > 10);

    auto t3 = t3_to_json(t3_verify(1, 2));
    CHECK(t3["pass"] == true);
}
