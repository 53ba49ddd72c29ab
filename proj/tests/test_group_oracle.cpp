#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hodgeforge/group_oracle.hpp"

using namespace hodgeforge;

TEST_CASE("hand-enumerable factorization counts") {
    CHECK(count_factorizations({2, 2, {2}, 0}) == BigInt(1));
    CHECK(count_factorizations({3, 1, {3}, 2}) == BigInt(6));
    // labeled fixed points of the identity: 2 labelings x 1 tuple
    CHECK(count_factorizations({2, 1, {1, 1}, 2}) == BigInt(2));
    CHECK_THROWS_AS(count_factorizations({3, 2, {3}, 1}), std::domain_error);
    CHECK_THROWS_AS(count_factorizations({12, 2, {12}, 0}), resource_error);
}

TEST_CASE("dropping the transitivity filter only increases the count") {
    const FactorizationInstance insts[] = {
        {3, 1, {1, 1, 1}, 4}, {4, 2, {2, 1, 1}, 3}, {4, 1, {2, 2}, 2}, {4, 4, {4}, 0},
    };
    for (const auto& inst : insts) {
        const BigInt with = count_factorizations(inst);
        const BigInt without = count_factorizations(inst, {}, false);
        CHECK((with == without || with < without));
    }
}

TEST_CASE("oracle Hurwitz numbers") {
    CHECK(oracle_hurwitz(0, 2, {2}) == Rational(1, 2));
    CHECK(oracle_hurwitz(0, 1, {3}) == Rational(1));
    CHECK(oracle_hurwitz(0, 3, {1}) == Rational(0));  // 3 does not divide 1
}

TEST_CASE("base family H(0, (r)) = 1/r") {
    for (int r = 2; r <= 6; ++r) CHECK(oracle_hurwitz(0, r, {static_cast<long>(r)}) == Rational(1, r));
}

TEST_CASE("permuting equal parts leaves the oracle unchanged") {
    CHECK(oracle_hurwitz(0, 1, {2, 1, 1}) == oracle_hurwitz(0, 1, {1, 2, 1}));
    CHECK(oracle_hurwitz(0, 1, {1, 1, 2}) == oracle_hurwitz(0, 1, {2, 1, 1}));
    CHECK(oracle_hurwitz(0, 2, {3, 1}) == oracle_hurwitz(0, 2, {1, 3}));
}
