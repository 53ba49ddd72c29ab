#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeforge/elsv.hpp"
#include "hodgeforge/io.hpp"

using namespace hodgeforge;

TEST_CASE("block JSON round trip is bit identical") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    for (const auto& [g, r, l, k] : {std::tuple<int, int, int, std::vector<int>>{1, 1, 1, {0}},
                                     {0, 2, 4, {0, 1, 1, 0}},
                                     {1, 2, 2, {1, 1}}}) {
        const HodgeBlock& blk = bridge.block(g, r, l, k);
        const HodgeBlock back = block_from_json(block_to_json(blk));
        CHECK(back.g == blk.g);
        CHECK(back.r == blk.r);
        CHECK(back.k == blk.k);
        CHECK(back.entries == blk.entries);
    }
}

TEST_CASE("the documented one-point block serializes both values") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const std::string json = block_to_json(bridge.block(1, 1, 1, {0}));
    CHECK(json.find("\"1/24\"") != std::string::npos);
    const HodgeBlock back = block_from_json(json);
    CHECK(back.value({1}, 0) == Rational(1, 24));
    CHECK(back.value({0}, 1) == Rational(1, 24));
}

TEST_CASE("coefficient table CSV round trip") {
    for (const auto& [r, k] : {std::pair<int, int>{1, 0}, {2, 1}, {5, 3}}) {
        const XiCoeffTable table = xi_coeff_table(r, k, 6);
        const XiCoeffTable back = xi_table_from_csv(xi_table_to_csv(table));
        CHECK(back.r == table.r);
        CHECK(back.k == table.k);
        REQUIRE(back.rows.size() == table.rows.size());
        for (size_t m = 0; m < table.rows.size(); ++m) CHECK(back.rows[m] == table.rows[m]);
    }
}

TEST_CASE("top CSV entry matches the closed form") {
    const std::string csv = xi_table_to_csv(xi_coeff_table(2, 1, 3));
    CHECK(csv.find("2,1,3,3,120") != std::string::npos);  // (2*3-1)!! * 2^3
    CHECK(csv.rfind("r,k,m,p,c", 0) == 0);
}
