#pragma once

// The counting bound for exponent tuples: exhaustive count of the solutions
// (l, x_1..x_l) of x_1+...+x_l <= (U-l)m against its closed-form upper bound
// built from the Lambert W function.

#include "spectra/certified.hpp"

namespace spectra {

/// Exhaustive count of tuples with 1 <= l <= U, x_i >= 1 integers and
/// x_1 + ... + x_l <= (U - l) m.
Int comb_brute(long U, const Rat& m);

/// U e^{W(m)(U+1)} when U <= m, and U e^{U m / e^{W(m-1)}} otherwise.
/// DomainError on nonpositive inputs.
CReal comb_bound(long U, const Rat& m);

/// The solution in (0,1) of log(e m eps/(1-eps)) = 1/eps, certified; its
/// derived quantity (1-eps)/eps equals W(m).
CReal comb_epsilon(const Rat& m, long prec_bits = 160);

}  // namespace spectra
