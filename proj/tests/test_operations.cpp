#include <doctest.h>

#include <random>

#include "hsto/errors.hpp"
#include "hsto/operations.hpp"
#include "oracles.hpp"

using namespace hsto;

namespace {

const GroupDescriptor Z2 = GroupDescriptor::z2_power(1);

DPClass va(std::vector<std::uint32_t> n) {
    auto k = n.size();
    return DPClass::monomial(v_generators(k), std::move(n));
}
CoefficientClass cb(const GroupDescriptor& g, std::vector<std::uint32_t> m) { return CoefficientClass::monomial(g, std::move(m)); }
CoefficientClass one(const GroupDescriptor& g) { return CoefficientClass::one(g); }

// (Z/2)^l: sum over all l x k matrices of the pushforward, times b. Computed with the
// oracle's own divided power arithmetic.
CoefficientClass z2_power_oracle(unsigned l, const std::vector<std::uint32_t>& n, const std::vector<std::uint32_t>& b) {
    const std::size_t k = n.size();
    oracle::Poly sum;
    for (std::uint32_t bits = 0; bits < (1u << (l * k)); ++bits) {
        std::vector<std::vector<bool>> K(l, std::vector<bool>(k));
        for (std::size_t i = 0; i < l; ++i)
            for (std::size_t j = 0; j < k; ++j) K[i][j] = (bits >> (i * k + j)) & 1;
        for (const auto& [m, c] : oracle::linear_push(K, n, l)) oracle::add_term(sum, m);
    }
    oracle::Poly bp{{b, true}};
    std::vector<DPMonomial> terms;
    for (const auto& [m, c] : oracle::multiply(sum, bp)) terms.push_back(m);
    return CoefficientClass(GroupDescriptor::z2_power(l), terms);
}

SymClass gen(std::vector<std::uint32_t> c) { return SymClass::generator(EMonomial{std::move(c)}); }

} // namespace

TEST_CASE("operation examples") {
    CHECK(alpha(Z2, 1, va({3}), cb(Z2, {4})) == cb(Z2, {7}));
    CHECK(alpha(Z2, 2, va({1, 2}), one(Z2)) == cb(Z2, {3}));
    CHECK(alpha(Z2, 2, va({0, 5}), one(Z2)).is_zero());
    auto v2 = GroupDescriptor::z2_power(2);
    CHECK(alpha(v2, 1, va({3}), one(v2)) == CoefficientClass(v2, {{1, 2}, {2, 1}}));
    auto t = GroupDescriptor::torus(1);
    CHECK(alpha(t, 1, va({1}), one(t)) == cb(t, {1}));
    CHECK(alpha(t, 2, va({1, 2}), one(t)) == cb(t, {3}));
    auto t2 = GroupDescriptor::torus(2);
    CHECK(alpha(t2, 1, va({2}), one(t2)) == cb(t2, {1, 1}));
    auto su2 = GroupDescriptor::su2();
    CHECK(alpha(su2, 1, va({1}), cb(su2, {0})) == cb(su2, {1}));
}

TEST_CASE("rank zero acts as the identity") {
    for (const auto& g : {Z2, GroupDescriptor::torus(2), GroupDescriptor::su2(), GroupDescriptor::dihedral(3)})
        for (int d = 0; d <= 8; ++d)
            for (const auto& b : coefficient_basis(g, d)) REQUIRE(alpha(g, 0, DPClass::one(v_generators(0)), b) == b);
}

TEST_CASE("unsupported groups and ranks raise") {
    CHECK_THROWS_AS(alpha(GroupDescriptor::torus(1), 3, va({1, 2, 4}), one(GroupDescriptor::torus(1))), UnsupportedError);
    CHECK_THROWS_AS(alpha(GroupDescriptor::su2(), 2, va({1, 2}), one(GroupDescriptor::su2())), UnsupportedError);
    CHECK_THROWS_AS(alpha(Z2, 2, va({1}), one(Z2)), PreconditionError);
}

TEST_CASE("Z/2 closed form matches the multinomial rule") {
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint32_t d = 0; d <= 8; ++d)
            for (const auto& n : oracle::weak_compositions(d, k))
                for (std::uint32_t m = 0; m <= 6; ++m) {
                    long e = oracle::z2_alpha(n, m);
                    auto got = alpha(Z2, k, va(n), cb(Z2, {m}));
                    if (e < 0) REQUIRE(got.is_zero());
                    else REQUIRE(got == cb(Z2, {static_cast<std::uint32_t>(e)}));
                }
}

TEST_CASE("(Z/2)^l matches the sum over linear maps") {
    for (unsigned l = 1; l <= 3; ++l)
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::uint32_t d = 0; d <= 6; ++d)
                for (const auto& n : oracle::weak_compositions(d, k))
                    for (std::uint32_t bd = 0; bd <= 2; ++bd)
                        for (const auto& b : oracle::weak_compositions(bd, l)) {
                            auto g = GroupDescriptor::z2_power(l);
                            auto expect = z2_power_oracle(l, n, b);
                            REQUIRE(alpha(g, k, va(n), cb(g, b)) == expect);
                            REQUIRE(alpha_z2_brute(l, k, va(n), cb(g, b)) == expect);
                        }
}

TEST_CASE("equal exponents kill the (Z/2)^l operations") {
    for (unsigned l = 1; l <= 2; ++l) {
        auto g = GroupDescriptor::z2_power(l);
        for (std::uint32_t n = 1; n <= 8; ++n)
            for (std::uint32_t m = 0; m <= 8; ++m) {
                REQUIRE(alpha(g, 2, va({n, n}), one(g)).is_zero());
                REQUIRE(alpha(g, 3, va({n, m, n}), one(g)).is_zero());
            }
    }
}

TEST_CASE("circle operations") {
    auto t = GroupDescriptor::torus(1);
    for (std::uint32_t n = 0; n <= 20; ++n)
        for (std::uint32_t m = 0; m <= 6; ++m) {
            auto got = alpha(t, 1, va({n}), cb(t, {m}));
            bool nonzero = n % 2 == 1 && oracle::binom((n + 1) / 2 + m, m);
            REQUIRE(got.is_zero() == !nonzero);
            if (nonzero) REQUIRE(got == cb(t, {(n + 1) / 2 + m}));
        }
    for (std::uint32_t n1 = 0; n1 <= 8; ++n1)
        for (std::uint32_t n2 = 0; n2 <= 8; ++n2) {
            auto got = alpha(t, 2, va({n1, n2}), one(t));
            std::uint32_t s = n1 + n2 + 3;
            bool nonzero = s % 2 == 0 && !oracle::binom(n1 + n2 + 2, n1 + 1);
            REQUIRE(got.is_zero() == !nonzero);
            if (nonzero) REQUIRE(got == cb(t, {s / 2}));
        }
}

TEST_CASE("telescoping identity behind the two-input circle operation") {
    for (std::uint32_t n1 = 0; n1 <= 64; ++n1)
        for (std::uint32_t n2 = 0; n2 <= 64; ++n2) {
            bool lhs = false;
            for (std::uint32_t i = 1; i <= n1 + 1; ++i) lhs ^= oracle::binom(n1 + n2 + 3, i);
            REQUIRE(lhs == !oracle::binom(n1 + n2 + 2, n1 + 1));
        }
}

TEST_CASE("dihedral operations are transported from Z/2") {
    for (unsigned n = 0; n <= 3; ++n) {
        auto d = GroupDescriptor::dihedral(n);
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::uint32_t deg = 0; deg <= 6; ++deg)
                for (const auto& a : oracle::weak_compositions(deg, k))
                    for (std::uint32_t m = 0; m <= 4; ++m)
                        REQUIRE(alpha(d, k, va(a), cb(d, {m})).terms() == alpha(Z2, k, va(a), cb(Z2, {m})).terms());
    }
}

TEST_CASE("degree contract on every dispatch branch") {
    std::mt19937 rng(17);
    const std::vector<GroupDescriptor> groups{
        Z2,
        GroupDescriptor::z2_power(2),
        GroupDescriptor::z2_power(3),
        GroupDescriptor::dihedral(2),
        GroupDescriptor::torus(1),
        GroupDescriptor::torus(2),
        GroupDescriptor::su2(),
        GroupDescriptor::product({Z2, GroupDescriptor::torus(1)}),
        GroupDescriptor::product({GroupDescriptor::su2(), Z2}),
    };
    int nonzero = 0;
    for (const auto& g : groups)
        for (int trial = 0; trial < 150; ++trial) {
            std::size_t k = rng() % 3;
            const auto fs = g.factors();
            if (k > 1 && std::any_of(fs.begin(), fs.end(), [](const auto& f) { return f.kind() == GroupDescriptor::Kind::SU2; })) k = 1;
            std::vector<std::uint32_t> n(k);
            for (auto& v : n) v = rng() % 8;
            int bd = static_cast<int>(rng() % 9);
            auto basis = coefficient_basis(g, bd);
            if (basis.empty()) continue;
            auto b = basis[rng() % basis.size()];
            auto out = alpha(g, k, va(n), b);
            if (out.is_zero()) continue;
            ++nonzero;
            int shift = g.dim() * ((1 << k) - 1);
            REQUIRE(out.degree() == va(n).degree() + b.degree() + shift);
        }
    CHECK(nonzero > 100);
}

TEST_CASE("products dispatch factorwise") {
    auto v2 = GroupDescriptor::z2_power(2);
    auto p = GroupDescriptor::product({Z2, Z2});
    for (std::size_t k = 1; k <= 3; ++k)
        for (std::uint32_t d = 0; d <= 6; ++d)
            for (const auto& n : oracle::weak_compositions(d, k))
                for (std::uint32_t bd = 0; bd <= 2; ++bd)
                    for (const auto& b : oracle::weak_compositions(bd, 2))
                        REQUIRE(alpha(v2, k, va(n), cb(v2, b)).terms() == alpha(p, k, va(n), cb(p, b)).terms());
    // circle times Z/2
    auto tz = GroupDescriptor::product({GroupDescriptor::torus(1), Z2});
    auto out = alpha(tz, 1, va({3}), one(tz));
    CHECK(out.degree() == 4);
}

TEST_CASE("A-count") {
    CHECK(a_count({3}, {1, 2}) == 1);
    for (std::uint32_t n = 1; n < 20; ++n) CHECK(a_count({n}, {n}) == 1);
    CHECK(a_count({6}, {2, 4}) == 1);
    CHECK(a_count({3, 3}, {2, 4}) == 0);
    CHECK(a_count({5, 6}, {3, 3, 5}) == 1);
    CHECK(a_count({3, 3}, {3, 3}) == 2);
    CHECK(a_count({3, 3}, {3, 3}, CountMode::Parity) == 0);
    for (std::uint32_t s = 0; s <= 9; ++s)
        for (std::size_t k = 1; k <= 3; ++k)
            for (std::size_t l = 1; l <= 3; ++l)
                for (const auto& n : oracle::weak_compositions(s, k))
                    for (const auto& e : oracle::weak_compositions(s, l)) {
                        auto c = oracle::a_count_brute(n, e);
                        REQUIRE(a_count(n, e) == c);
                        REQUIRE(a_count(n, e, CountMode::Parity) == c % 2);
                    }
}

TEST_CASE("A-count is invariant under doubling") {
    for (std::uint32_t s = 0; s <= 16; ++s)
        for (std::size_t k = 1; k <= 2; ++k)
            for (std::size_t l = 1; l <= 2; ++l)
                for (const auto& n : oracle::weak_compositions(s, k))
                    for (const auto& e : oracle::weak_compositions(s, l)) {
                        auto n2 = n, e2 = e;
                        for (auto& v : n2) v *= 2;
                        for (auto& v : e2) v *= 2;
                        REQUIRE(a_count(n2, e2) == a_count(n, e));
                    }
}

TEST_CASE("operations of symmetric group classes") {
    auto e1 = gen({1});
    CHECK(phi_sigma(Z2, 3, juxtapose(e1, SymClass::word(EWord::unit())), cb(Z2, {2})).is_zero());
    CHECK(phi_sigma(Z2, 2, e1, cb(Z2, {4})) == cb(Z2, {5}));
    CHECK(phi_sigma(Z2, 4, juxtapose(e1, gen({3})), cb(Z2, {0})).is_zero());
    CHECK(phi_sigma(Z2, 1, SymClass::word(EWord::unit()), cb(Z2, {6})) == cb(Z2, {6}));
    auto t = GroupDescriptor::torus(1);
    CHECK(phi_sigma(t, 1, SymClass::word(EWord::unit()), cb(t, {2})) == cb(t, {2}));
    CHECK_THROWS_AS(phi_sigma(Z2, 4, e1, one(Z2)), PreconditionError);
    CHECK_THROWS_AS(phi_sigma(GroupDescriptor::z2_power(0), 2, e1, one(GroupDescriptor::z2_power(0))), UnsupportedError);
    // decomposables vanish even where the indecomposable operations are not available
    auto e111 = gen({1, 1, 1});
    CHECK(phi_sigma(t, 16, juxtapose(e111, e111), one(t)).is_zero());
    CHECK_THROWS_AS(phi_sigma(t, 8, e111, one(t)), UnsupportedError);
    // E_3 o E_4 is not a generator but acts through x_1^[3] x_2^[4]
    CHECK(phi_sigma(Z2, 4, SymClass::word(EWord::from_subscripts({3, 4})), one(Z2)) == cb(Z2, {7}));
}

TEST_CASE("generators act through iota") {
    for (const auto& g : {Z2, GroupDescriptor::torus(1), GroupDescriptor::z2_power(2)})
        for (std::size_t k = 1; k <= 2; ++k)
            for (int d = 0; d <= 9; ++d)
                for (const auto& c : chains_of_degree(d, k)) {
                    auto w = EWord::from_chain(c);
                    REQUIRE(phi_sigma(g, std::uint64_t{1} << k, SymClass::word(w), one(g)) ==
                            alpha(g, k, va(iota_preimage(w)), one(g)));
                }
}

TEST_CASE("composites") {
    CHECK(composite_op(Z2, {{2, gen({1})}, {2, gen({2})}}, one(Z2)) == cb(Z2, {3}));
    CHECK(composite_op(Z2, {{4, gen({1, 1})}}, one(Z2)) == cb(Z2, {3}));
    CHECK(composite_op(Z2, {{2, gen({1})}, {2, gen({1})}}, one(Z2)).is_zero());
    CHECK(composite_op(Z2, {}, cb(Z2, {2})) == cb(Z2, {2}));
    CHECK(total_rank_shift({{2, gen({1})}, {4, gen({1, 1})}, {1, SymClass::word(EWord::unit())}}) == 4);
    // right to left: the circle shifts degree at every step
    auto t = GroupDescriptor::torus(1);
    auto out = composite_op(t, {{2, gen({1})}, {2, gen({3})}}, one(t));
    CHECK(out == alpha(t, 1, va({1}), alpha(t, 1, va({3}), one(t))));
}

TEST_CASE("witness search") {
    auto w = nontrivial_witness(Z2, 2, va({1, 2}));
    REQUIRE(w.witness);
    CHECK(*w.witness == one(Z2));
    CHECK(*w.output == cb(Z2, {3}));

    auto none = nontrivial_witness(Z2, 2, va({1, 3}));
    CHECK_FALSE(none.witness);
    CHECK(none.certified_trivial);

    auto su2 = GroupDescriptor::su2();
    auto s = nontrivial_witness(su2, 1, va({5}));
    REQUIRE(s.witness);
    CHECK(*s.witness == cb(su2, {0}));

    CHECK(default_degree_bound(su2, 1, va({5})) == 5 + 3 * 2 + 8);
    CHECK(default_degree_bound(Z2, 2, va({1, 2})) == 3 + 0 + 8);

    // search over the basis finds the first b of lowest degree
    auto v2 = GroupDescriptor::z2_power(2);
    auto r = nontrivial_witness(v2, 2, va({1, 1}));
    if (r.witness) CHECK(!alpha(v2, 2, va({1, 1}), *r.witness).is_zero());
    auto p = GroupDescriptor::product({Z2, GroupDescriptor::torus(1)});
    CHECK_FALSE(nontrivial_witness(p, 1, va({1})).witness);
    auto q = nontrivial_witness(p, 1, va({3}));
    REQUIRE(q.witness);
    CHECK(*q.output == alpha(p, 1, va({3}), *q.witness));
    CHECK(*q.output == CoefficientClass::monomial(p, {2, 1}));
}

TEST_CASE("witnesses agree with exhaustive evaluation") {
    for (std::uint32_t n = 0; n <= 40; ++n) {
        auto su2 = GroupDescriptor::su2();
        CHECK(nontrivial_witness(su2, 1, va({n})).witness.has_value() == (n % 4 == 1));
        auto t = GroupDescriptor::torus(1);
        CHECK(nontrivial_witness(t, 1, va({n})).witness.has_value() == (n % 2 == 1));
    }
    for (std::uint32_t d = 0; d <= 8; ++d)
        for (const auto& n : oracle::weak_compositions(d, 2)) {
            bool any = false;
            for (std::uint32_t m = 0; m <= 16 && !any; ++m) any = oracle::z2_alpha(n, m) >= 0;
            CHECK(nontrivial_witness(Z2, 2, va(n)).witness.has_value() == any);
            auto t = GroupDescriptor::torus(1);
            bool tany = false;
            for (std::uint32_t m = 0; m <= 16 && !tany; ++m) tany = !alpha(t, 2, va(n), cb(t, {m})).is_zero();
            CHECK(nontrivial_witness(t, 2, va(n)).witness.has_value() == tany);
        }
}
