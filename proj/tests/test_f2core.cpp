#include <doctest.h>

#include <random>

#include "hsto/f2core.hpp"
#include "oracles.hpp"

using namespace hsto;

namespace {

F2Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, double density = 0.5) {
    std::bernoulli_distribution bit(density);
    F2Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.set(i, j, bit(rng));
    return m;
}

F2Vector random_vector(std::mt19937& rng, std::size_t n) {
    std::bernoulli_distribution bit(0.5);
    F2Vector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, bit(rng));
    return v;
}

} // namespace

TEST_CASE("binomial parity on small values") {
    CHECK(binom_parity(3, 1));
    CHECK_FALSE(binom_parity(2, 1));
    for (std::uint64_t n = 0; n < 40; ++n) CHECK(binom_parity(n, 0));
    CHECK_FALSE(binom_parity(1, 2));
}

TEST_CASE("binomial parity matches Pascal's triangle") {
    for (std::size_t n = 0; n <= 256; ++n)
        for (std::size_t m = 0; m <= n; ++m) REQUIRE(binom_parity(n, m) == oracle::binom(n, m));
}

TEST_CASE("binomial parity matches exact binomials") {
    for (std::uint64_t n = 0; n <= 60; ++n)
        for (std::uint64_t m = 0; m <= n; ++m) REQUIRE(binom_parity(n, m) == (oracle::binom_exact(n, m) % 2 == 1));
}

TEST_CASE("multinomial parity") {
    std::vector<std::uint64_t> a{1, 2}, b{1, 1}, c{9};
    CHECK(multinomial_parity(a));
    CHECK_FALSE(multinomial_parity(b));
    CHECK(multinomial_parity(c));
    CHECK(multinomial_parity(std::vector<std::uint64_t>{}));
    for (std::uint32_t x = 0; x < 12; ++x)
        for (std::uint32_t y = 0; y < 12; ++y)
            for (std::uint32_t z = 0; z < 12; ++z) {
                std::vector<std::uint64_t> p{x, y, z};
                REQUIRE(multinomial_parity(p) == oracle::multinomial({x, y, z}));
            }
}

TEST_CASE("rank and kernel of identity and zero") {
    auto id = rank_kernel(F2Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.kernel.empty());

    auto z = rank_kernel(F2Matrix(2, 5));
    CHECK(z.rank == 0);
    REQUIRE(z.kernel.size() == 5);
    F2Span span(5);
    for (const auto& v : z.kernel) CHECK(span.add(v));
}

TEST_CASE("rank-nullity, kernel and row/column rank on random matrices") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        std::size_t r = 1 + rng() % 70, c = 1 + rng() % 70;
        auto m = random_matrix(rng, r, c, trial % 3 == 0 ? 0.1 : 0.5);
        auto rk = rank_kernel(m);
        REQUIRE(rk.rank + rk.kernel.size() == c);
        CHECK(rk.rank == column_rank(m));
        CHECK(rk.rank == rank(m.transpose()));
        F2Span span(c);
        for (const auto& v : rk.kernel) {
            CHECK(m.apply(v).is_zero());
            CHECK(span.add(v));
        }
    }
}

TEST_CASE("solve finds preimages exactly when they exist") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
        auto m = random_matrix(rng, r, c, 0.3);
        auto x = random_vector(rng, c);
        auto b = m.apply(x);
        auto sol = solve(m, b);
        REQUIRE(sol);
        CHECK(m.apply(*sol) == b);

        auto y = random_vector(rng, r);
        auto s2 = solve(m, y);
        F2Span img(r);
        for (std::size_t j = 0; j < c; ++j) img.add(m.column(j));
        CHECK(s2.has_value() == img.contains(y));
    }
}

TEST_CASE("matrix product is associative and apply is compatible") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        auto a = random_matrix(rng, 9, 70), b = random_matrix(rng, 70, 13), c = random_matrix(rng, 13, 5);
        CHECK((a * b) * c == a * (b * c));
        auto v = random_vector(rng, 13);
        CHECK((a * b).apply(v) == a.apply(b.apply(v)));
        CHECK((a + a).is_zero());
        CHECK(a.transpose().transpose() == a);
    }
}

TEST_CASE("span membership and columns") {
    F2Span s(4);
    F2Vector a(4), b(4);
    a.set(0); a.set(1);
    b.set(1); b.set(2);
    CHECK(s.add(a));
    CHECK(s.add(b));
    CHECK_FALSE(s.add(a ^ b));
    CHECK(s.contains(a ^ b));
    F2Vector e3(4);
    e3.set(3);
    CHECK_FALSE(s.contains(e3));
    CHECK(s.dim() == 2);

    auto m = from_columns({a, b}, 4);
    CHECK(m.rows() == 4);
    CHECK(m.cols() == 2);
    CHECK(m.column(1) == b);
    CHECK(a.weight() == 2);
}
