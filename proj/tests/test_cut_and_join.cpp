#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "hodgeforge/cut_and_join.hpp"
#include "hodgeforge/group_oracle.hpp"

using namespace hodgeforge;

TEST_CASE("ramification degree") {
    CHECK(ramification_degree(0, 1, {4}, 4) == 0);
    CHECK(ramification_degree(1, 1, {2}, 2) == 2);
    CHECK(ramification_degree(0, 2, {1, 1}, 1) == 2);
    CHECK(!ramification_degree(0, 1, {3}, 2).has_value());
}

TEST_CASE("base values and zero conventions") {
    HurwitzEngine engine;
    for (int r = 1; r <= 6; ++r) CHECK(engine.hurwitz(0, r, {static_cast<long>(r)}) == Rational(1, r));
    CHECK(engine.hurwitz(0, 3, {2}) == Rational(0));
    CHECK(engine.hurwitz(0, 1, {3}) == Rational(1));
}

TEST_CASE("profile order does not matter") {
    HurwitzEngine engine;
    CHECK(engine.hurwitz(0, 1, {3, 1, 2}) == engine.hurwitz(0, 1, {1, 2, 3}));
    CHECK(engine.hurwitz(1, 2, {4, 2}) == engine.hurwitz(1, 2, {2, 4}));
}

TEST_CASE("recursion agrees with the enumeration oracle on a spot envelope") {
    HurwitzEngine engine;
    // a representative slice; the full envelope runs in the acceptance suite
    const std::tuple<int, int, Composition> keys[] = {
        {0, 1, {1, 1, 1}}, {0, 1, {2, 1}}, {0, 1, {3}},    {1, 1, {2}},   {0, 2, {2, 2}},
        {0, 2, {1, 1}},    {1, 2, {2}},    {0, 3, {2, 1}}, {0, 3, {3}},   {1, 1, {1, 1}},
        {0, 2, {3, 1}},    {0, 1, {4}},    {1, 3, {3}},    {0, 2, {2, 1, 1}},
    };
    for (const auto& [g, r, mu] : keys) {
        CAPTURE(g);
        CAPTURE(r);
        CHECK(engine.hurwitz(g, r, mu) == oracle_hurwitz(g, r, mu));
    }
}

TEST_CASE("cold and warm caches agree") {
    HurwitzEngine warm;
    const Rational first = warm.hurwitz(1, 1, {3, 1});
    const Rational again = warm.hurwitz(1, 1, {3, 1});
    HurwitzEngine cold;
    CHECK(first == again);
    CHECK(first == cold.hurwitz(1, 1, {3, 1}));
}

TEST_CASE("on-disk cache round trip") {
    const std::string path = "hurwitz_cache_test.txt";
    Rational direct;
    {
        HurwitzEngine engine;
        direct = engine.hurwitz(1, 2, {4, 2});
        engine.save_cache(path);
    }
    {
        HurwitzEngine engine;
        const size_t added = engine.load_cache(path, 5);
        CHECK(added > 0);
        CHECK(engine.hurwitz(1, 2, {4, 2}) == direct);
    }
    std::remove(path.c_str());
}

TEST_CASE("a corrupted cache is rejected") {
    const std::string path = "hurwitz_cache_bad.txt";
    {
        FILE* f = std::fopen(path.c_str(), "w");
        std::fputs("0 2 2 1/3\n", f);  // true value is 1/2
        std::fclose(f);
    }
    HurwitzEngine engine;
    CHECK_THROWS_AS(engine.load_cache(path, 5), std::runtime_error);
    std::remove(path.c_str());
}

TEST_CASE("every recursion step lowers the ramification count by one") {
    // join: same genus and degree, one part fewer; cut: genus drops with one
    // part more; splittings partition s - 1 between the factors.
    const Composition mu{4, 2, 1};
    const int g = 2, r = 1, l = 3;
    const long s = *ramification_degree(g, l, mu, r);
    CHECK(*ramification_degree(g, l - 1, {4 + 2, 1}, r) == s - 1);
    CHECK(*ramification_degree(g - 1, l + 1, {3, 1, 2, 1}, r) == s - 1);
    for (long alpha = 1; alpha < 4; ++alpha) {
        for (int g1 = 0; g1 <= g; ++g1) {
            const auto s1 = ramification_degree(g1, 2, {alpha, 2}, r);
            const auto s2 = ramification_degree(g - g1, 2, {4 - alpha, 1}, r);
            REQUIRE(s1.has_value());
            REQUIRE(s2.has_value());
            CHECK(*s1 + *s2 == s - 1);
        }
    }
}

TEST_CASE("recursion agrees with the oracle at larger moduli") {
    HurwitzEngine engine;
    const std::tuple<int, int, Composition> keys[] = {
        {0, 4, {3, 1}}, {0, 4, {4}}, {0, 5, {5}}, {0, 5, {4, 1}}, {1, 4, {2, 2}}, {0, 6, {3, 3}},
    };
    for (const auto& [g, r, mu] : keys) {
        CAPTURE(r);
        CHECK(engine.hurwitz(g, r, mu) == oracle_hurwitz(g, r, mu));
    }
}
