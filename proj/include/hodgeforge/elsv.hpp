#ifndef HODGEFORGE_ELSV_HPP
#define HODGEFORGE_ELSV_HPP

#include <map>
#include <mutex>

#include "hodgeforge/cut_and_join.hpp"
#include "hodgeforge/hodge_table.hpp"

namespace hodgeforge {

// Rank of the U-isotypic Hodge bundle over the monodromy vector k_L:
// g when all residues vanish, otherwise g - 1 + |k_L|/r.
long rank_eu(int g, int r, const std::vector<int>& kL);

// r^(1 - g + sum <mu_i/r>) * prod mu_i^floor(mu_i/r) / floor(mu_i/r)!.
// The fractional r-exponents must sum to an integer (requires r | |mu|).
Rational elsv_prefactor(int g, int r, const Composition& mu);

// Recovers linear Hurwitz-Hodge integrals from exact Hurwitz samples:
// P(mu) := H/(s! * prefactor) is a polynomial in mu whose mu^{b_L}-coefficient
// equals (-r)^j <tau_{b_L} lambda_j^U> with j = 3g-3+l-|b_L|. Sample profiles
// mu_i = m0_i + r q_i use the smallest positive representatives of -k_i.
class HodgeBridge {
public:
    explicit HodgeBridge(HurwitzEngine& engine) : engine_(engine) {}

    // Full block for the given monodromy labels (computed once, cached by the
    // sorted labels; permuting labels permutes entries consistently).
    const HodgeBlock& block(int g, int r, int l, const std::vector<int>& kL);

    // Single integral; zero off the dimension stratum, for j outside
    // [0, rank], or on unstable (g, l).
    Rational integral(const HodgeIntegralKey& key);

    // <tau_{b_L} Lambda> with Lambda resolved by dimension:
    // (-r)^j <tau_{b_L} lambda_j^U>, j = 3g-3+l-|b_L|.
    Rational lambda_resolved(int g, int r, const DescendentVector& b, const std::vector<int>& kL);

    HurwitzEngine& engine() { return engine_; }

    // Sample-count ceiling below which the full tensor grid is used; larger
    // blocks fall back to the total-degree lattice. Exposed for cross-checks.
    void set_tensor_limit(double limit) { tensor_limit_ = limit; }

private:
    HodgeBlock fit_block(int g, int r, int l, const std::vector<int>& kL) const;

    HurwitzEngine& engine_;
    double tensor_limit_ = 600;
    std::mutex mutex_;
    std::map<std::tuple<int, int, int, std::vector<int>>, HodgeBlock> blocks_;
};

class BridgeProvider final : public IntegralProvider {
public:
    explicit BridgeProvider(HodgeBridge& bridge) : bridge_(bridge) {}
    Rational value(const HodgeIntegralKey& key) const override { return bridge_.integral(key); }
    ProviderSource source() const override { return ProviderSource::elsv_bridge; }

private:
    HodgeBridge& bridge_;
};

}  // namespace hodgeforge

#endif
