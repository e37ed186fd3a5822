#pragma once

// Continued-fraction core: continuants, convergents, cylinder intervals
// I(alpha), the sizes s(alpha) and r(alpha), and exact values of eventually
// periodic continued fractions as quadratic surds.

#include "spectra/surd.hpp"

#include <span>
#include <vector>

namespace spectra {

struct EmptyWord : DomainError {
    EmptyWord() : DomainError("operation requires a nonempty word") {}
};
struct EmptyPeriod : DomainError {
    EmptyPeriod() : DomainError("periodic value requires a nonempty period") {}
};

using Digits = std::vector<int>;  // partial quotients, each >= 1

/// Convergent state after consuming a word: p/q = [0; c_1..c_n] together
/// with the previous convergent. Satisfies p*q_prev - p_prev*q = (-1)^(n-1).
struct Continuants {
    Int p, q, p_prev, q_prev;
    long n = 0;

    Rat value() const { return Rat(p, q); }
    void push(long digit);  // append one partial quotient
};

Continuants convergents(std::span<const int> w);

/// K(w): denominator of [0; w]; K(empty) = 1.
Int continuant(std::span<const int> w);

struct CfInterval {
    Rat lo, hi;  // endpoints of I(alpha), 0 <= lo < hi <= 1
    Rat mid() const { return (lo + hi) / 2; }
};

CfInterval interval_of(std::span<const int> w);

/// s(alpha) = |I(alpha)| = 1/(q_n (q_n + q_{n-1})), exact.
Rat size_s(std::span<const int> w);

/// 1/s(alpha) as an integer (q_n (q_n + q_{n-1})).
Int size_s_inverse(std::span<const int> w);

/// r(alpha) = floor(log(1/s(alpha))), certified.
long size_r(std::span<const int> w);

/// r(alpha) >= r iff 1/s(alpha) >= ceil(e^r); thresholds are cached per r.
bool size_r_at_least(const Int& s_inverse, long r);

/// Exact value of the purely periodic continued fraction [d_1; d_2, ..., d_k,
/// d_1, d_2, ...]. The value is the positive root of the period's Moebius
/// fixed-point equation and lies in (d_1, d_1 + 1).
Surd purely_periodic_value(std::span<const int> period);

/// Exact value of [head; pre_1, ..., pre_m, period repeated].
Surd periodic_value(long head, std::span<const int> preperiod, std::span<const int> period);

/// (A x + B) / (C x + D) applied to a surd.
Surd moebius_apply(const Int& A, const Int& B, const Int& C, const Int& D, const Surd& x);

}  // namespace spectra
