#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeforge/laplace.hpp"

using namespace hodgeforge;

TEST_CASE("stable-range instances cancel in the series algebra") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const std::tuple<int, int, int> cases[] = {
        {1, 2, 1}, {1, 2, 2}, {0, 4, 1}, {1, 3, 2}, {1, 2, 3}, {0, 4, 2},
    };
    for (const auto& [g, l, r] : cases) {
        CAPTURE(g);
        CAPTURE(l);
        CAPTURE(r);
        const auto rep = verify_laplace_identity(g, l, r, bridge);
        CHECK(!rep.boundary);
        CHECK(rep.holds);
    }
}

TEST_CASE("boundary instances match the unstable two-point transform") {
    HurwitzEngine engine;
    HodgeBridge bridge(engine);
    const std::tuple<int, int, int> cases[] = {
        {1, 1, 1}, {1, 1, 2}, {0, 3, 1}, {0, 3, 2}, {1, 1, 3}, {0, 3, 3},
    };
    for (const auto& [g, l, r] : cases) {
        CAPTURE(g);
        CAPTURE(l);
        CAPTURE(r);
        const auto rep = verify_laplace_identity(g, l, r, bridge);
        CHECK(rep.boundary);
        CHECK(rep.compared_coeffs > 0);
        CHECK(rep.holds);
    }
}
