#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "hodgeforge/combinatorics.hpp"
#include "hodgeforge/recursions.hpp"

using namespace hodgeforge;

namespace {

struct Fixture {
    HurwitzEngine engine;
    HodgeBridge bridge{engine};
    WittenDVV witten{bridge};
    OrbifoldDVV orbifold{bridge};
    BridgeProvider provider{bridge};
};

std::vector<DescendentVector> stratum_vectors(int l, long total) {
    std::vector<DescendentVector> out;
    DescendentVector cur(l, 0);
    std::function<void(int, long)> rec = [&](int pos, long left) {
        if (pos == l - 1) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (cur[pos] = 0; cur[pos] <= left; ++cur[pos]) rec(pos + 1, left - cur[pos]);
    };
    if (total >= 0) rec(0, total);
    return out;
}

}  // namespace

TEST_CASE("classic psi-intersection values") {
    Fixture f;
    CHECK(f.witten.tau(0, {0, 0, 0}) == Rational(1));
    CHECK(f.witten.tau(0, {1, 0, 0, 0}) == Rational(1));
    CHECK(f.witten.tau(1, {1}) == Rational(1, 24));
    CHECK(f.witten.tau(1, {0, 2}) == Rational(1, 24));
    CHECK(f.witten.tau(1, {1, 1}) == Rational(1, 24));
    CHECK(f.witten.tau(2, {4}) == Rational(1, 1152));
    CHECK(f.witten.tau(0, {3}) == Rational(0));  // off stratum
}

TEST_CASE("DVV equals the bridge on a spot envelope") {
    Fixture f;
    const std::pair<int, int> shapes[] = {{0, 3}, {0, 4}, {0, 5}, {1, 1}, {1, 2}, {1, 3}, {2, 1}};
    for (const auto& [g, l] : shapes) {
        for (const auto& b : stratum_vectors(l, 3L * g - 3 + l)) {
            CAPTURE(g);
            CAPTURE(b[0]);
            CHECK(f.witten.tau(g, b) ==
                  f.bridge.integral({g, 1, b, std::vector<int>(l, 0), 0}));
        }
    }
}

TEST_CASE("twisted recursion reduces to DVV at r = 1") {
    Fixture f;
    const std::pair<int, int> shapes[] = {{0, 3}, {0, 4}, {1, 1}, {1, 2}, {2, 1}};
    for (const auto& [g, l] : shapes) {
        for (const auto& b : stratum_vectors(l, 3L * g - 3 + l)) {
            CHECK(f.orbifold.tau(g, 1, b, std::vector<int>(l, 0)) == f.witten.tau(g, b));
        }
    }
}

TEST_CASE("twisted recursion equals the bridge for r = 2") {
    Fixture f;
    const int r = 2;
    const std::tuple<int, int, std::vector<int>> blocks[] = {
        {0, 3, {0, 1, 1}}, {0, 4, {0, 0, 1, 1}}, {1, 1, {0}}, {1, 2, {1, 1}}, {1, 2, {0, 0}},
    };
    for (const auto& [g, l, k] : blocks) {
        for (const auto& b : stratum_vectors(l, 3L * g - 3 + l)) {
            CAPTURE(g);
            CAPTURE(l);
            CHECK(f.orbifold.tau(g, r, b, k) == f.bridge.integral({g, r, b, k, 0}));
        }
    }
}

TEST_CASE("twisted recursion equals the bridge for r = 3") {
    Fixture f;
    const int r = 3;
    const std::tuple<int, int, std::vector<int>> blocks[] = {
        {0, 3, {0, 1, 2}}, {0, 3, {1, 1, 1}}, {0, 4, {0, 0, 1, 2}}, {1, 1, {0}}, {1, 2, {1, 2}},
    };
    for (const auto& [g, l, k] : blocks) {
        for (const auto& b : stratum_vectors(l, 3L * g - 3 + l)) {
            CAPTURE(g);
            CAPTURE(l);
            CAPTURE(b[0]);
            CHECK(f.orbifold.tau(g, r, b, k) == f.bridge.integral({g, r, b, k, 0}));
        }
    }
}

TEST_CASE("unbalanced monodromy is a domain error") {
    Fixture f;
    CHECK_THROWS_AS(f.orbifold.tau(0, 2, {0, 0, 1}, {0, 0, 1}), std::domain_error);
}

TEST_CASE("pivot independence") {
    Fixture f;
    std::mt19937 rng(17);
    int tried = 0;
    while (tried < 12) {
        const int g = static_cast<int>(rng() % 2);
        const int l = 2 + static_cast<int>(rng() % 3);
        const long dim = 3L * g - 3 + l;
        if (dim < 1) continue;
        const auto all = stratum_vectors(l, dim);
        const auto& b = all[rng() % all.size()];
        const Rational expect = f.witten.tau(g, b);
        bool any = false;
        for (int pivot = 0; pivot < l; ++pivot) {
            if (b[pivot] < 1) continue;
            any = true;
            CHECK(f.witten.tau_with_pivot(g, b, pivot) == expect);
        }
        if (any) ++tried;
    }

    // twisted variant, r = 2
    const std::vector<int> k{0, 1, 1, 0};
    for (const auto& b : stratum_vectors(4, 1)) {
        const Rational expect = f.orbifold.tau(0, 2, b, k);
        for (int pivot = 0; pivot < 4; ++pivot) {
            if (b[pivot] < 1) continue;
            CHECK(f.orbifold.tau_with_pivot(0, 2, b, k, pivot) == expect);
        }
    }
}

TEST_CASE("exact sine-quotient coefficients") {
    CHECK(half_sine_quotient_coeff(1) == Rational(1, 24));
    CHECK(half_sine_quotient_coeff(2) == Rational(7, 5760));
    CHECK(half_sine_quotient_coeff(3) == Rational(31, 967680));
    CHECK(lambda_g_onepoint(1, 1) == Rational(1, 24));
    CHECK(lambda_g_onepoint(2, 1) == Rational(7, 5760));
    CHECK(lambda_g_onepoint(1, 3) == Rational(1, 72));
}

TEST_CASE("one-point lambda values against the bridge") {
    Fixture f;
    for (int r = 1; r <= 3; ++r)
        for (int g = 1; g <= 2; ++g) {
            CAPTURE(r);
            CAPTURE(g);
            CHECK(f.bridge.integral({g, r, {2L * g - 2}, {0}, g}) == lambda_g_onepoint(g, r));
        }
}

TEST_CASE("multinomial lambda formula against the bridge") {
    Fixture f;
    CHECK(lambda_g_multipoint(1, 1, {1, 0}) == Rational(1, 24));
    for (int r = 1; r <= 2; ++r)
        for (int g = 1; g <= 2; ++g)
            for (int l = 1; l <= 3; ++l) {
                const long dim = 2L * g - 3 + l;
                if (dim < 0) continue;
                for (const auto& b : stratum_vectors(l, dim)) {
                    CAPTURE(r);
                    CAPTURE(g);
                    CAPTURE(l);
                    CHECK(f.bridge.integral({g, r, b, std::vector<int>(l, 0), g}) ==
                          lambda_g_multipoint(g, r, b));
                }
            }
}

TEST_CASE("twisted lambda-top values scale by 1/r on trivial monodromy") {
    Fixture f;
    auto c = check_zhou(1, 2, {0}, f.bridge);
    CHECK(c.twisted == Rational(1, 48));
    CHECK(c.equal());
    CHECK(check_zhou(1, 3, {1, 0}, f.bridge).equal());
    CHECK(check_zhou(2, 2, {2}, f.bridge).equal());
}

TEST_CASE("descendent exchange identity for lambda-top integrals") {
    // <tau_b lambda_g> = 1/(l-1) sum_{i<j} ((b_i+b_j)!/(b_i! b_j!)) <tau_{b_i+b_j-1} ...>
    Fixture f;
    for (int g = 1; g <= 2; ++g)
        for (int l = 2; l <= 3; ++l)
            for (const auto& b : stratum_vectors(l, 2L * g - 3 + l)) {
                const Rational lhs = f.bridge.integral({g, 1, b, std::vector<int>(l, 0), g});
                Rational sum(0);
                for (int i = 0; i < l; ++i)
                    for (int j = i + 1; j < l; ++j) {
                        if (b[i] + b[j] == 0) continue;
                        DescendentVector nb{b[i] + b[j] - 1};
                        for (int t = 0; t < l; ++t)
                            if (t != i && t != j) nb.push_back(b[t]);
                        sum += Rational(factorial(b[i] + b[j]),
                                        factorial(b[i]) * factorial(b[j])) *
                               f.bridge.integral({g, 1, nb, std::vector<int>(l - 1, 0), g});
                    }
                CHECK(lhs == sum / Rational(l - 1));
            }
}

TEST_CASE("lambda-top identity on twisted instances") {
    Fixture f;
    // empty Z: both sides vanish
    const auto z_empty = check_lambda_top_identity(1, 2, {1, 1}, {1, 1}, f.provider);
    CHECK(z_empty.lhs == Rational(0));
    CHECK(z_empty.rhs == Rational(0));

    const auto inst1 = check_lambda_top_identity(0, 2, {1, 0, 0, 0}, {0, 1, 1, 0}, f.provider);
    CHECK(inst1.equal());
    CHECK(inst1.lhs != Rational(0));

    const auto inst2 = check_lambda_top_identity(0, 2, {0, 0, 1, 0}, {0, 1, 1, 0}, f.provider);
    CHECK(inst2.equal());

    const auto inst3 = check_lambda_top_identity(1, 2, {2, 0, 0}, {0, 1, 1}, f.provider);
    CHECK(inst3.equal());

    const auto inst4 = check_lambda_top_identity(1, 3, {1, 1, 0}, {0, 1, 2}, f.provider);
    CHECK(inst4.equal());
}

TEST_CASE("r times the one-point lambda value does not depend on r") {
    for (int g = 1; g <= 4; ++g) {
        const Rational base = lambda_g_onepoint(g, 1);
        for (int r = 2; r <= 5; ++r)
            CHECK(Rational(r) * lambda_g_onepoint(g, r) == base);
    }
}
