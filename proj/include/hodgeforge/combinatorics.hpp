#ifndef HODGEFORGE_COMBINATORICS_HPP
#define HODGEFORGE_COMBINATORICS_HPP

#include <span>
#include <vector>

#include "hodgeforge/rational.hpp"

namespace hodgeforge {

BigInt factorial(long n);

// n!! with the empty-product conventions (-1)!! = 0!! = 1. Throws for n < -1.
BigInt double_factorial(long n);

BigInt binomial(long n, long k);

// top! / prod(bottom_i!). Requires sum(bottom) == top.
BigInt multinomial(long top, std::span<const long> bottom);

inline BigInt multinomial(long top, const std::vector<long>& bottom) {
    return multinomial(top, std::span<const long>(bottom));
}

}  // namespace hodgeforge

#endif
