#ifndef HODGEFORGE_CUT_AND_JOIN_HPP
#define HODGEFORGE_CUT_AND_JOIN_HPP

#include <cstddef>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hodgeforge/indices.hpp"
#include "hodgeforge/rational.hpp"

namespace hodgeforge {

// Memo key: profile stored sorted descending, H is symmetric in the parts.
struct HurwitzKey {
    int g = 0;
    int r = 1;
    Composition mu;

    bool operator==(const HurwitzKey&) const = default;
};

struct HurwitzKeyHash {
    size_t operator()(const HurwitzKey& k) const {
        size_t h = std::hash<long>()((static_cast<long>(k.g) << 8) ^ k.r);
        for (long p : k.mu) h = h * 1000003u + std::hash<long>()(p);
        return h;
    }
};

// s = 2g - 2 + l + |mu|/r; nullopt when r does not divide |mu|.
std::optional<long> ramification_degree(int g, int l, const Composition& mu, int r);

// Orbifold Hurwitz numbers by the cut-and-join recursion, memoized and
// well-founded on the simple-ramification count s. The table stores the
// branch-point-symmetrized values H/s!; the public accessors scale back.
class HurwitzEngine {
public:
    // H_{g,l}^{(r)}(mu), normalized as transitive-factorization count / d!
    // (the group_oracle convention). Zero when r does not divide |mu| or the
    // ramification count is negative.
    Rational hurwitz(int g, int r, const Composition& mu);

    // H / s!; this is the normalization in which the cut-and-join equation
    // s*H = join + cut holds literally and the ELSV side is polynomial.
    Rational reduced_hurwitz(int g, int r, const Composition& mu);

    size_t size() const;
    void clear();

    // One record per line: "g r mu_1,...,mu_l value" with the hurwitz()
    // normalization. Loading verifies a few records by recomputation.
    void save_cache(const std::string& path) const;
    size_t load_cache(const std::string& path, int verify_samples = 3);

private:
    Rational eval(const HurwitzKey& key);
    std::optional<Rational> lookup(const HurwitzKey& key) const;
    void store(const HurwitzKey& key, const Rational& value);

    mutable std::mutex mutex_;
    std::unordered_map<HurwitzKey, Rational, HurwitzKeyHash> table_;
};

}  // namespace hodgeforge

#endif
