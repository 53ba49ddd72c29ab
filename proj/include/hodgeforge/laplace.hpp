#ifndef HODGEFORGE_LAPLACE_HPP
#define HODGEFORGE_LAPLACE_HPP

#include "hodgeforge/elsv.hpp"
#include "hodgeforge/emonomial.hpp"

namespace hodgeforge {

struct LaplaceReport {
    bool holds = false;
    // True when (g, l) touches the unstable boundary, i.e. the identity's
    // two-point kernel data lives below the stable range and the comparison
    // runs against the transform of raw genus-zero two-point numbers.
    bool boundary = false;
    // Number of exact series coefficients compared in the boundary case.
    size_t compared_coeffs = 0;
};

// Assembles both sides of the Laplace-transformed cut-and-join identity in
// the l-variate e-monomial algebra (join kernel replaced by its two-variable
// expansion) and compares exactly. For (g, l) in {(1,1), (0,3)} the stable
// difference is matched coefficient-by-coefficient against the transform of
// the unstable two-point contributions on a box that strictly contains the
// stable side's numerator support.
LaplaceReport verify_laplace_identity(int g, int l, int r, HodgeBridge& bridge);

}  // namespace hodgeforge

#endif
