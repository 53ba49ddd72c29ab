#ifndef HODGEFORGE_RECURSIONS_HPP
#define HODGEFORGE_RECURSIONS_HPP

#include <map>
#include <mutex>
#include <optional>

#include "hodgeforge/elsv.hpp"

namespace hodgeforge {

// psi-intersection numbers <tau_{b_L}>_g by the DVV recursion, pivoting on an
// index of maximal b. Base values <tau_0^3>_0 and <tau_1>_1 come from the
// bridge at r = 1.
class WittenDVV {
public:
    explicit WittenDVV(HodgeBridge& bridge) : bridge_(bridge) {}

    // Zero off the stratum |b_L| = 3g - 3 + l.
    Rational tau(int g, const DescendentVector& b);

    // Same value via one expansion step at the given pivot (requires
    // b[pivot] >= 1); subcalls use the canonical pivot.
    Rational tau_with_pivot(int g, const DescendentVector& b, int pivot);

private:
    Rational expand(int g, const DescendentVector& b, int pivot);

    HodgeBridge& bridge_;
    std::mutex mutex_;
    std::map<std::pair<int, DescendentVector>, Rational> memo_;
};

// <tau_{b_L}>_g^{r, k_L} by the twisted DVV recursion, with join constants
// extracted from the two-variable kernel expansion. Base cases (all-b-zero
// genus 0; one-point genus 1) are served by the bridge.
class OrbifoldDVV {
public:
    explicit OrbifoldDVV(HodgeBridge& bridge) : bridge_(bridge) {}

    Rational tau(int g, int r, const DescendentVector& b, const std::vector<int>& k);
    Rational tau_with_pivot(int g, int r, const DescendentVector& b, const std::vector<int>& k,
                            int pivot);

private:
    Rational expand(int g, int r, const DescendentVector& b, const std::vector<int>& k, int pivot);

    HodgeBridge& bridge_;
    std::mutex mutex_;
    std::map<std::tuple<int, int, std::vector<std::pair<int, long>>>, Rational> memo_;
};

// Exact Taylor coefficient [t^{2g}] (t/2)/sin(t/2), by power-series reciprocal.
Rational half_sine_quotient_coeff(int g);

// (1/r) [t^{2g}] (t/2)/sin(t/2); the one-point lambda-top value.
Rational lambda_g_onepoint(int g, int r);

// multinomial(2g-3+l; b_L) * lambda_g_onepoint(g, r); requires the dimension
// constraint sum b_i = 2g - 3 + l.
Rational lambda_g_multipoint(int g, int r, const DescendentVector& b);

// Trivial-monodromy comparison <tau_b lambda_g>^{r,0} == (1/r) <tau_b lambda_g>^{1}.
struct ZhouCheck {
    Rational twisted;
    Rational untwisted;
    bool equal() const { return twisted == untwisted; }
};
ZhouCheck check_zhou(int g, int r, const DescendentVector& b, HodgeBridge& bridge);

// Both sides of the lambda-top identity for a monodromy vector with at least
// one nonzero residue, on the minimal stratum
// |b_L| = 2g - 2 + #{k_i = 0} + |k_L|/r. Empty Z gives (0, 0).
struct IdentityCheck {
    Rational lhs;
    Rational rhs;
    bool equal() const { return lhs == rhs; }
};
IdentityCheck check_lambda_top_identity(int g, int r, const DescendentVector& b,
                                        const std::vector<int>& k, const IntegralProvider& provider);

// Internal residue-label duality: the table labels record the monodromy at the
// marked point while the kernel formulas are written against the opposite
// sector, so constants are evaluated at r - k (mod r).
int dual_residue(int r, int k);

}  // namespace hodgeforge

#endif
