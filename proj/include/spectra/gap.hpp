#pragma once

// The golden-ratio gap analysis: interval endpoints x_k, y_k at scale
// phi^-(4k+4) and the exact cut values of the two near-3 configurations,
// everything inside Q(sqrt 5).

#include "spectra/surd.hpp"

#include <vector>

namespace spectra {

struct ConfigError : DomainError {
    using DomainError::DomainError;
};

struct GapSpec {
    long k;
    Surd x_exact, y_exact;  // 1.382 u_k and 2.236 u_k with u_k = 2(3phi-4)/(3 phi^{4k+4})
    CReal x, y;
};

GapSpec gap_endpoints(long k);  // pre: k >= 1

enum class GapCase { TypeA, TypeB };

/// Exact lambda - 3 at the marked cut of the all-ones-tail completion:
///   TypeA: 1^{s1} 22 1^{2k+1} | 22 1^{2k+j} 22 1^{s2}, tails 1-bar
///   TypeB: 1^{s1} 22 1^{2k} 22 | 1^{2k+3+j} 22 1^{s2}, tails 1-bar
/// With 1-bar tails the value does not depend on s1, s2; they are validated
/// against the configuration's admissibility only.
Surd gap_cut_value(long k, long j, GapCase type, long s1, long s2);

/// Model term (2(3phi-4)/(3 phi^4)) (phi^{-4k} + (-1)^j phi^{-(4k+2+2j)})
/// for TypeA; the TypeB analogue shifts both exponents by 2. Exact surd.
Surd gap_asymptotic_term(long k, long j, GapCase type);

struct GapPoint {
    GapCase type;
    long j;
    Surd value;
    int position;  // -1 below [x_k, y_k], 0 inside, +1 above
    Surd margin;   // distance to the nearer endpoint (nonnegative iff outside)
};

struct GapReport {
    GapSpec spec;
    long j_max, s_min;
    std::vector<GapPoint> points;
    bool all_outside;
};

GapReport gap_emptiness(long k, long j_max, long s_min);

/// phi^n as an exact element of Q(sqrt 5); n may be negative.
Surd phi_power(long n);

}  // namespace spectra
