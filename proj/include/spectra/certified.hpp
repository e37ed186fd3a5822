#pragma once

// Certified-precision real arithmetic: every value is carried as a rational
// interval [lo, hi] guaranteed to contain the exact real. Transcendental
// endpoints come from MPFR with directed rounding, so enclosures stay sound
// under composition.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace spectra {

using Int = mpz_class;
using Rat = mpq_class;

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

Rat rat_from_string(const std::string& num, const std::string& den);

/// Interval enclosure of a real number. Invariant: lo <= hi.
class CReal {
public:
    CReal() : lo_(0), hi_(0) {}
    explicit CReal(const Rat& exact) : lo_(exact), hi_(exact) {}
    CReal(Rat lo, Rat hi);

    static CReal exact_int(long v) { return CReal(Rat(v)); }

    const Rat& lo() const { return lo_; }
    const Rat& hi() const { return hi_; }
    Rat mid() const { return (lo_ + hi_) / 2; }
    Rat width() const { return hi_ - lo_; }
    bool is_exact() const { return lo_ == hi_; }
    double approx() const { return mid().get_d(); }

    bool certainly_less(const CReal& o) const { return hi_ < o.lo_; }
    bool certainly_greater(const CReal& o) const { return lo_ > o.hi_; }
    bool contains(const Rat& x) const { return lo_ <= x && x <= hi_; }

    CReal operator-() const { return CReal(-hi_, -lo_); }
    CReal operator+(const CReal& o) const { return CReal(lo_ + o.lo_, hi_ + o.hi_); }
    CReal operator-(const CReal& o) const { return CReal(lo_ - o.hi_, hi_ - o.lo_); }
    CReal operator*(const CReal& o) const;
    CReal operator/(const CReal& o) const;  // requires o to exclude 0

    CReal abs() const;

private:
    Rat lo_, hi_;
};

// Directed-rounding enclosures. prec_bits controls the working precision of
// the MPFR evaluation; enclosures are widened, never clipped.
CReal log_enclosure(const Rat& x, long prec_bits = 128);       // x > 0
CReal log_enclosure(const CReal& x, long prec_bits = 128);     // lo > 0
CReal exp_enclosure(const Rat& x, long prec_bits = 128);
CReal exp_enclosure(const CReal& x, long prec_bits = 128);
CReal sqrt_enclosure(const Int& d, long prec_bits = 128);      // d >= 0
CReal pow_enclosure(const CReal& base, const CReal& expo, long prec_bits = 128);  // base > 0

// certified_log per the module contract: enclosure of log x with width
// below 2^-precision_bits. DomainError for x <= 0.
CReal certified_log(const Rat& x, long precision_bits);
CReal certified_log(const CReal& x, long precision_bits);

/// floor(log n) for an integer n >= 1, certified by refinement. log of an
/// integer is irrational except n = 1, so the refinement terminates.
long floor_log(const Int& n);

/// Smallest integer N with N > e^r, i.e. ceil(e^r) for r >= 1 (e^r is
/// irrational there); returns 1 for r = 0. floor(log n) >= r iff n >= N.
Int exp_ceil(long r);

/// Principal-branch Lambert W. Requires x >= -1/e (DomainError otherwise);
/// result satisfies the defining identity w*e^w = x with relative enclosure
/// width below 1e-13.
CReal lambert_w(const CReal& x, long prec_bits = 128);

/// Double-precision Halley evaluation, used as a starting point and kept
/// deliberately separate from the certified path.
double lambert_w_double(double x);

// Shared constants.
CReal phi_enclosure(long prec_bits = 160);      // (1+sqrt5)/2
CReal c1_enclosure(long prec_bits = 160);       // log((3+sqrt5)/2)
CReal c0_enclosure(long prec_bits = 160);       // -log log((3+sqrt5)/2)

}  // namespace spectra
