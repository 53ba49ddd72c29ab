#ifndef HODGEFORGE_GROUP_ORACLE_HPP
#define HODGEFORGE_GROUP_ORACLE_HPP

#include <stdexcept>

#include "hodgeforge/indices.hpp"
#include "hodgeforge/rational.hpp"

namespace hodgeforge {

struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Transitive-factorization counting problem in S_d: sigma_0 of cycle type
// (r, ..., r), s transpositions, sigma_infty of cycle type mu with its cycles
// labeled by the parts of mu, product equal to the identity.
struct FactorizationInstance {
    int d = 1;
    int r = 1;
    Composition mu;
    int s = 0;
};

struct OracleLimits {
    int max_d = 7;
    int max_s = 5;
};

// Number of tuples (sigma_0, tau_1..tau_s, sigma_infty, labeling) as above,
// with <sigma_0, tau_i, sigma_infty> transitive. Set transitive_only = false
// to drop the transitivity filter.
BigInt count_factorizations(const FactorizationInstance& inst, const OracleLimits& limits = {},
                            bool transitive_only = true);

// count_factorizations / d! for the instance determined by (g, r, mu);
// returns 0 when r does not divide |mu| or the ramification count is negative.
Rational oracle_hurwitz(int g, int r, const Composition& mu, const OracleLimits& limits = {});

}  // namespace hodgeforge

#endif
