#ifndef HODGEFORGE_HODGE_TABLE_HPP
#define HODGEFORGE_HODGE_TABLE_HPP

#include <algorithm>
#include <map>
#include <tuple>
#include <vector>

#include "hodgeforge/indices.hpp"
#include "hodgeforge/rational.hpp"

namespace hodgeforge {

// Key of a linear Hurwitz-Hodge integral <tau_{b_L} lambda_j^U>_g^{r, k_L}.
// Nonzero values live on the stratum |b_L| + j = 3g - 3 + l.
struct HodgeIntegralKey {
    int g = 0;
    int r = 1;
    DescendentVector b;
    std::vector<int> k;
    int j = 0;

    bool operator<(const HodgeIntegralKey& o) const {
        return std::tie(g, r, j, b, k) < std::tie(o.g, o.r, o.j, o.b, o.k);
    }
    bool operator==(const HodgeIntegralKey& o) const {
        return std::tie(g, r, j, b, k) == std::tie(o.g, o.r, o.j, o.b, o.k);
    }

    // The marked points are exchangeable: sorting (k_i, b_i) pairs canonicalizes.
    HodgeIntegralKey canonical() const {
        std::vector<std::pair<int, long>> pairs(b.size());
        for (size_t i = 0; i < b.size(); ++i) pairs[i] = {k[i], b[i]};
        std::sort(pairs.begin(), pairs.end());
        HodgeIntegralKey out = *this;
        for (size_t i = 0; i < pairs.size(); ++i) {
            out.k[i] = pairs[i].first;
            out.b[i] = pairs[i].second;
        }
        return out;
    }
};

// One completed (g, r, l, k_L) block: every key on the dimension stratum.
struct HodgeBlock {
    int g = 0;
    int r = 1;
    std::vector<int> k;
    std::map<std::pair<DescendentVector, int>, Rational> entries;  // (b_L, j) -> value

    Rational value(const DescendentVector& b, int j) const {
        auto it = entries.find({b, j});
        return it == entries.end() ? Rational(0) : it->second;
    }
};

enum class ProviderSource { elsv_bridge, recursion, fixed_base_table };

// Lookup contract for identity checkers; total on its declared domain,
// deterministic, off-stratum keys resolve to zero.
class IntegralProvider {
public:
    virtual ~IntegralProvider() = default;
    virtual Rational value(const HodgeIntegralKey& key) const = 0;
    virtual ProviderSource source() const = 0;
};

}  // namespace hodgeforge

#endif
