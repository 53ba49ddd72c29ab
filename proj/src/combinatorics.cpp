#include "hodgeforge/combinatorics.hpp"

#include <numeric>
#include <stdexcept>

namespace hodgeforge {

BigInt factorial(long n) {
    if (n < 0) throw std::domain_error("factorial: negative argument");
    BigInt r(1);
    for (long i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt double_factorial(long n) {
    if (n < -1) throw std::domain_error("double_factorial: argument below -1");
    BigInt r(1);
    for (long i = n; i >= 2; i -= 2) r *= i;
    return r;
}

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.raw(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt multinomial(long top, std::span<const long> bottom) {
    long sum = 0;
    for (long b : bottom) {
        if (b < 0) throw std::domain_error("multinomial: negative entry");
        sum += b;
    }
    if (sum != top) throw std::domain_error("multinomial: entries do not sum to top");
    BigInt r = factorial(top);
    Rational q(r);
    for (long b : bottom) q /= Rational(factorial(b));
    return q.numerator();  // exact by construction
}

}  // namespace hodgeforge
