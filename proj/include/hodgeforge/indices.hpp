#ifndef HODGEFORGE_INDICES_HPP
#define HODGEFORGE_INDICES_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace hodgeforge {

// Ordered ramification profile (mu_1, ..., mu_l); parts are labeled, they
// index marked points. Every part is >= 1.
using Composition = std::vector<long>;

// Ordered monodromy residues k_L = (k_1, ..., k_l), each in [0, r-1].
struct MonodromyVector {
    int r = 1;
    std::vector<int> residues;

    long total() const { return std::accumulate(residues.begin(), residues.end(), 0L); }
    bool balanced() const { return total() % r == 0; }
};

// Descendent exponents b_L = (b_1, ..., b_l), nonnegative.
using DescendentVector = std::vector<long>;

inline void check_composition(const Composition& mu) {
    if (mu.empty()) throw std::domain_error("composition: empty");
    for (long p : mu)
        if (p < 1) throw std::domain_error("composition: part < 1");
}

inline long total(const Composition& mu) { return std::accumulate(mu.begin(), mu.end(), 0L); }

// Residues at the marked points of the ELSV moduli space: k_i = (-mu_i) mod r.
inline MonodromyVector monodromy_of(const Composition& mu, int r) {
    if (r < 1) throw std::domain_error("monodromy_of: modulus < 1");
    MonodromyVector k;
    k.r = r;
    k.residues.reserve(mu.size());
    for (long p : mu) k.residues.push_back(static_cast<int>(((-p) % r + r) % r));
    return k;
}

}  // namespace hodgeforge

#endif
