#ifndef HODGEFORGE_XI_HPP
#define HODGEFORGE_XI_HPP

#include <vector>

#include "hodgeforge/emonomial.hpp"
#include "hodgeforge/rational.hpp"

namespace hodgeforge {

// Exact representation of xi_m^{r,k}(t), m >= -1. Seeds:
//   k =  0: (1/r)(e_{0,0} - e_{0,-1})            (rgrade 0)
//   k >= 1: (1/k) e_{k,0}                        (rgrade -k)
// Higher m by repeated application of t^{r+1}(t^r - 1) d/dt.
ESeries xi_series(int r, int k, int m);

// Rows m = 0..m_max of the expansion coefficients (c_{m,0}^k, ..., c_{m,m}^k),
// built by the interior recursion
//   c_{m+1,p} = r (m+p) c_{m,p-1} + (k - (m+1+p) r) c_{m,p}
// seeded by c_{1,1} = r, c_{1,0} = k - r.
struct XiCoeffTable {
    int r = 1;
    int k = 0;
    std::vector<std::vector<BigInt>> rows;

    const BigInt& c(long m, long p) const;
};

XiCoeffTable xi_coeff_table(int r, int k, int m_max);

// Closed forms: c_{m,m}^k = (2m-1)!! r^m and c_{m,0}^k = prod_{j=1..m}(k - jr).
BigInt xi_c_top(int r, long m);
BigInt xi_c_bottom(int r, int k, long m);

// The finite double/triple sum expanding the two-variable join kernel,
// assembled literally (empty inner sums when the upper bound is negative).
// Carries overall grade r^{-a/r} as rgrade = -a.
BivariateESeries join_kernel_expansion(int r, int a, int m);

// Checks join_kernel_expansion against the kernel's rational-function form in the
// eta variables, as an exact polynomial identity after clearing
// (1 - eta^r)-denominators and the (eta_i - eta_j) pole.
bool join_kernel_matches_rational_form(int r, int a, int m);

// Join constant: with a = (k1 + kj) mod r and m = b1 + bj - 1, the canonical
// coefficient of (e_{k1, 2b1+2}, e_{kj, 2bj+1}) in join_kernel_expansion(r, a, m),
// relative to the r^{-a/r} prefactor. The net r^(1/r)-grade of the target
// against the prefactor, k1 + kj - a, must be an integer multiple of r.
Rational join_constant(int r, int k1, int kj, long b1, long bj);

}  // namespace hodgeforge

#endif
