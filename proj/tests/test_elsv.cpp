#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hodgeforge/elsv.hpp"

using namespace hodgeforge;

TEST_CASE("rank of the twisted Hodge bundle") {
    CHECK(rank_eu(2, 2, {0, 0, 0}) == 2);
    CHECK(rank_eu(2, 5, {0, 0, 0}) == 2);
    CHECK(rank_eu(1, 2, {1, 1}) == 1);
    CHECK(rank_eu(0, 3, {1, 2}) == 0);
    CHECK(rank_eu(1, 3, {1, 1, 1}) == 1);
    CHECK_THROWS_AS(rank_eu(1, 3, {1, 1}), std::domain_error);
}

TEST_CASE("prefactor values") {
    CHECK(elsv_prefactor(0, 1, {3}) == Rational(9, 2));
    CHECK(elsv_prefactor(0, 2, {2}) == Rational(4));
    CHECK(elsv_prefactor(1, 1, {1}) == Rational(1));
    CHECK(elsv_prefactor(0, 2, {1, 3}) == Rational(12));  // 2^2 * 1 * 3^1/1!
    CHECK_THROWS_AS(elsv_prefactor(0, 2, {1}), std::domain_error);
}

TEST_CASE("genus-zero three-point block") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const HodgeBlock& blk = bridge.block(0, 1, 3, {0, 0, 0});
    REQUIRE(blk.entries.size() == 1);
    CHECK(blk.value({0, 0, 0}, 0) == Rational(1));
}

TEST_CASE("genus-one one-point blocks") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);

    const HodgeBlock& r1 = bridge.block(1, 1, 1, {0});
    CHECK(r1.value({1}, 0) == Rational(1, 24));  // <tau_1>
    CHECK(r1.value({0}, 1) == Rational(1, 24));  // <tau_0 lambda_1>

    const HodgeBlock& r2 = bridge.block(1, 2, 1, {0});
    CHECK(r2.value({0}, 1) == Rational(1, 48));
}

TEST_CASE("integral lookup canonicalizes and gates the stratum") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    CHECK(bridge.integral({1, 1, {1}, {0}, 0}) == Rational(1, 24));
    CHECK(bridge.integral({1, 1, {2}, {0}, 0}) == Rational(0));   // off stratum
    CHECK(bridge.integral({1, 1, {0}, {0}, 2}) == Rational(0));   // j beyond rank
    CHECK(bridge.integral({0, 1, {0}, {0}, 0}) == Rational(0));   // unstable
    CHECK(bridge.integral({1, 2, {0, 1}, {1, 1}, 1}) ==
          bridge.integral({1, 2, {1, 0}, {1, 1}, 1}));
}

TEST_CASE("fitted polynomial reproduces off-grid samples") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    std::mt19937 rng(5);

    const std::tuple<int, int, int, std::vector<int>> cases[] = {
        {1, 1, 2, {0, 0}},
        {0, 2, 4, {0, 1, 1, 0}},
        {1, 2, 1, {0}},
        {0, 3, 3, {0, 1, 2}},
    };
    for (const auto& [g, r, l, kL] : cases) {
        const HodgeBlock& blk = bridge.block(g, r, l, kL);
        const long D = 3L * g - 3 + l;
        for (int trial = 0; trial < 3; ++trial) {
            Composition mu(l);
            for (int i = 0; i < l; ++i) {
                const long m0 = kL[i] == 0 ? r : r - kL[i];
                mu[i] = m0 + r * (D + 1 + static_cast<long>(rng() % 3));
            }
            Rational fitted(0);
            for (const auto& [key, value] : blk.entries) {
                const auto& [b, j] = key;
                Rational term = value * Rational(-r).pow(j);
                for (int i = 0; i < l; ++i) term *= Rational(mu[i]).pow(b[i]);
                fitted += term;
            }
            const Rational direct =
                engine.reduced_hurwitz(g, r, mu) / elsv_prefactor(g, r, mu);
            CHECK(fitted == direct);
        }
    }
}

TEST_CASE("tensor grid and total-degree lattice agree") {
    HurwitzEngine e1, e2;
    HodgeBridge tensor(e1), lattice(e2);
    tensor.set_tensor_limit(1e9);
    lattice.set_tensor_limit(0);

    const std::tuple<int, int, int, std::vector<int>> cases[] = {
        {1, 1, 2, {0, 0}},
        {0, 2, 3, {0, 1, 1}},
        {0, 1, 4, {0, 0, 0, 0}},
        {1, 2, 2, {1, 1}},
    };
    for (const auto& [g, r, l, kL] : cases) {
        CHECK(tensor.block(g, r, l, kL).entries == lattice.block(g, r, l, kL).entries);
    }
}

TEST_CASE("permuting marked points permutes the recovered table") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const HodgeBlock& a = bridge.block(0, 2, 4, {0, 1, 1, 0});
    const HodgeBlock& b = bridge.block(0, 2, 4, {1, 0, 0, 1});
    // swap of positions (0<->1, 2<->3) maps one monodromy vector to the other
    for (const auto& [key, value] : a.entries) {
        const auto& [bl, j] = key;
        DescendentVector p{bl[1], bl[0], bl[3], bl[2]};
        CHECK(b.value(p, j) == value);
    }
}

TEST_CASE("genus-zero three-point values equal 1/r in every balanced sector") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const std::tuple<int, std::vector<int>> sectors[] = {
        {2, {0, 0, 0}}, {2, {0, 1, 1}}, {3, {0, 1, 2}}, {3, {1, 1, 1}},
        {4, {1, 3, 0}}, {5, {1, 4, 0}}, {5, {2, 3, 0}},
    };
    for (const auto& [r, k] : sectors) {
        CAPTURE(r);
        CHECK(bridge.integral({0, r, {0, 0, 0}, k, 0}) == Rational(1, r));
    }
}
