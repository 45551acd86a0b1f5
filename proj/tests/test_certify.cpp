#include <doctest.h>

#include <random>

#include "hsto/certify.hpp"
#include "hsto/errors.hpp"

using namespace hsto;

namespace {
const GroupDescriptor Z2 = GroupDescriptor::z2_power(1);
SymClass gen(std::vector<std::uint32_t> c) { return SymClass::generator(EMonomial{std::move(c)}); }
SymClass word(std::vector<std::uint32_t> s) { return SymClass::word(EWord::from_subscripts(std::move(s))); }

Certificate must(const std::variant<Certificate, CertifyFailure>& r) {
    REQUIRE(std::holds_alternative<Certificate>(r));
    return std::get<Certificate>(r);
}
} // namespace

TEST_CASE("target names") {
    CHECK(all_targets().size() == 7);
    for (auto t : all_targets()) CHECK(parse_target(target_name(t)) == t);
    CHECK(parse_target("aff-f2-unstable") == Target::AffF2Unstable);
    CHECK(parse_target("hol") == Target::HolOrdinary);
    CHECK_THROWS_AS(parse_target("aff"), PreconditionError);
}

TEST_CASE("ordinary holomorph certificate") {
    auto c = must(build_certificate(Target::HolOrdinary, Z2, {{2, gen({1})}, {2, gen({2})}}));
    CHECK(c.N == 2);
    CHECK(c.degree == 3);
    CHECK(c.stability.stable);
    CHECK_FALSE(c.stability.unstable);
    CHECK(c.stability.not_in_stabilization_image);
    REQUIRE(c.stability.stable_image);
    CHECK(c.stability.stable_image->weight == 4);
    CHECK(c.witness == CoefficientClass::one(Z2));
    CHECK(c.output == CoefficientClass::monomial(Z2, {3}));
    CHECK(c.shift_convention_note == std::string(kShiftConventionNote));
    CHECK(revalidate(c));
}

TEST_CASE("twisted automorphism certificate") {
    auto c = must(build_certificate(Target::AutTwisted, Z2, {{2, gen({3})}}));
    CHECK(c.N == 1);
    CHECK(c.degree == 2);
    CHECK(c.stability.unstable);
    REQUIRE(c.stability.vanishing_bound);
    CHECK(c.stability.vanishing_bound->degree == 2);
    CHECK(c.stability.vanishing_bound->rank_threshold == 2 * 2 + 3);
    CHECK(revalidate(c));
}

TEST_CASE("hypotheses and preconditions") {
    CHECK_THROWS_AS(build_certificate(Target::AffF2, GroupDescriptor::torus(1), {{2, gen({1})}}), HypothesisError);
    CHECK_THROWS_AS(build_certificate(Target::AffZ, GroupDescriptor::su2(), {{2, gen({1})}}), HypothesisError);
    CHECK_THROWS_AS(build_certificate(Target::AffZ, GroupDescriptor::dihedral(1), {{2, gen({1})}}), HypothesisError);
    CHECK_NOTHROW(check_target_hypothesis(Target::HolOrdinary, GroupDescriptor::z2_power(0)));
    CHECK_THROWS_AS(check_target_hypothesis(Target::HolUnstable, GroupDescriptor::z2_power(0)), HypothesisError);
    CHECK_NOTHROW(check_target_hypothesis(Target::AffZUnstable, GroupDescriptor::torus(2)));
    CHECK_THROWS_AS(check_target_hypothesis(Target::AffF2Unstable, GroupDescriptor::torus(1)), HypothesisError);
    CHECK_THROWS_AS(build_certificate(Target::HolUnstable, Z2, {{1, word({})}}), PreconditionError);
    CHECK_THROWS_AS(build_certificate(Target::HolOrdinary, Z2, {}), PreconditionError);
    CHECK_THROWS_AS(build_certificate(Target::HolOrdinary, Z2, {{4, gen({1})}}), PreconditionError);
}

TEST_CASE("failures are reported, not thrown") {
    auto r = build_certificate(Target::HolOrdinary, Z2, {{2, gen({1})}, {2, gen({1})}});
    REQUIRE(std::holds_alternative<CertifyFailure>(r));
    CHECK(std::get<CertifyFailure>(r).degree == 2);
    auto ok = must(build_certificate(Target::HolOrdinary, Z2, {{1, word({})}}));
    CHECK(ok.degree == 0);
    CHECK_FALSE(ok.stability.not_in_stabilization_image);
}

TEST_CASE("stable images") {
    auto a = stable_image({{2, gen({1})}}, 1);
    CHECK(a.product == gen({1}));
    CHECK(a.offset == 2);
    auto b = stable_image({{2, gen({1})}, {2, gen({2})}}, 3);
    CHECK(b.product == juxtapose(gen({1}), gen({2})));
    CHECK(b.weight == 4);
    CHECK(b.offset == 4);
    auto c = stable_image({{1, word({})}}, 0);
    CHECK(c.product == word({}));
    CHECK(c.offset == 1);
    CHECK_THROWS_AS(stable_image({{4, gen({1})}}, 1), PreconditionError);
    CHECK(stable_image({{2, gen({1})}, {4, gen({1, 1}) + gen({1, 2})}}, 5).offset == 12 - 6);
}

TEST_CASE("example family") {
    auto b1 = example_family({1, 2}, {1, 1}, 1);
    CHECK(b1.N == 3);
    REQUIRE(b1.factors.size() == 1);
    CHECK(b1.factors[0].n == 4);
    REQUIRE(b1.certificates.size() == 7);
    for (const auto& c : b1.certificates) {
        CHECK(c.degree == (c.target == Target::AutTwisted ? 2 : 3));
        CHECK(revalidate(c));
    }
    auto b2 = example_family({1, 2}, {1, 2}, 2);
    CHECK(b2.N == 2);
    for (const auto& c : b2.certificates) CHECK(c.degree == (c.target == Target::AutTwisted ? 2 : 3));
    CHECK_THROWS_WITH_AS(example_family({1, 3}, {1, 1}, 1), doctest::Contains("u[0] = 1 and u[1] = 3"), PreconditionError);
    CHECK_THROWS_AS(example_family({1, 2}, {1, 1}, 2), PreconditionError);
    CHECK_THROWS_AS(example_family({1, 2}, {1, 3}, 2), PreconditionError);
    CHECK_THROWS_AS(example_family({0, 2}, {1, 1}, 1), PreconditionError);
}

TEST_CASE("certificate bookkeeping on random inputs") {
    std::mt19937 rng(23);
    const std::vector<GroupDescriptor> groups{Z2, GroupDescriptor::z2_power(2), GroupDescriptor::torus(1),
                                              GroupDescriptor::torus(2), GroupDescriptor::su2(), GroupDescriptor::dihedral(1)};
    int built = 0;
    for (int trial = 0; trial < 150; ++trial) {
        const auto& g = groups[rng() % groups.size()];
        std::vector<OpFactor> fs;
        std::size_t r = 1 + rng() % 2;
        for (std::size_t i = 0; i < r; ++i) {
            bool single = g.kind() == GroupDescriptor::Kind::SU2 || rng() % 2;
            if (single) fs.push_back({2, gen({1 + static_cast<std::uint32_t>(rng() % 6)})});
            else fs.push_back({4, word({1 + static_cast<std::uint32_t>(rng() % 4), 1 + static_cast<std::uint32_t>(rng() % 8)})});
        }
        for (auto t : all_targets()) {
            std::variant<Certificate, CertifyFailure> res;
            try {
                res = build_certificate(t, g, fs);
            } catch (const HypothesisError&) {
                continue;
            }
            const int u = std::visit([](const auto& x) { return x.degree; }, res) + (t == Target::AutTwisted ? 1 : 0);
            int sum = 0;
            for (const auto& f : fs) sum += f.a.degree();
            REQUIRE(u == sum);
            if (auto* c = std::get_if<Certificate>(&res)) {
                ++built;
                REQUIRE(revalidate(*c));
                REQUIRE(c->N == total_rank_shift(fs));
                REQUIRE(c->output.degree() == c->witness.degree() + sum + g.dim() * static_cast<int>(c->N));
                REQUIRE((c->stability.stable != c->stability.unstable || (!c->stability.stable && t == Target::AffZ)));
                if (c->stability.vanishing_bound) REQUIRE(c->stability.vanishing_bound->degree == c->degree);
                auto tampered = *c;
                tampered.output += CoefficientClass::one(g) + CoefficientClass::one(g) + c->output;
                REQUIRE_FALSE(revalidate(tampered));
            }
        }
    }
    CHECK(built > 100);
}
