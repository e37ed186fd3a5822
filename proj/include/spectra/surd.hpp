#pragma once

// Exact arithmetic in real quadratic fields: values (a + b*sqrt(d))/c with
// integer a, b, c, d. Canonical form: c > 0, gcd(a,b,c) = 1, b = 0 => d = 0,
// perfect-square parts of d folded into b. Square factors of d are stripped
// by trial division up to a fixed bound; discriminants arising from long
// periods are too large to factor fully, so equality and ordering never rely
// on d being squarefree (they go through exact perfect-square tests and
// directed-rounding refinement instead).

#include "spectra/certified.hpp"

#include <compare>
#include <string>

namespace spectra {

enum class Ordering { LT, EQ, GT };

class Surd {
public:
    Surd() : a_(0), b_(0), c_(1), d_(0) {}
    Surd(Int a, Int b, Int c, Int d);

    static Surd rational(const Rat& r);
    static Surd sqrt_int(const Int& d) { return Surd(0, 1, 1, d); }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }
    const Int& d() const { return d_; }

    bool is_rational() const { return b_ == 0; }
    Rat rational_value() const;  // requires is_rational()
    Rat rational_part() const { return Rat(a_, c_); }
    Rat surd_part() const { return Rat(b_, c_); }

    Surd operator-() const { return Surd(-a_, -b_, c_, d_); }
    Surd operator+(const Surd& o) const;
    Surd operator-(const Surd& o) const;
    Surd operator*(const Surd& o) const;
    Surd operator/(const Surd& o) const;
    Surd reciprocal() const;

    Surd operator+(const Rat& r) const { return *this + rational(r); }
    Surd operator-(const Rat& r) const { return *this - rational(r); }

    bool operator==(const Surd& o) const;
    bool operator!=(const Surd& o) const { return !(*this == o); }

    int sign() const;  // -1, 0, +1 exactly

    CReal enclosure(long prec_bits = 128) const;
    double approx() const;
    std::string str() const;  // "(a+b*sqrt(d))/c" debugging form

private:
    void normalize();
    bool same_field(const Surd& o) const;  // compatible for exact field ops

    Int a_, b_, c_, d_;
};

/// Exact ordering of real values; terminates for distinct reals because two
/// normalized surds are equal only when the algebraic test says so.
Ordering surd_compare(const Surd& x, const Surd& y);

inline bool surd_less(const Surd& x, const Surd& y) { return surd_compare(x, y) == Ordering::LT; }

Ordering compare_surd_rational(const Surd& x, const Rat& r);

/// Ordering of x against r + s where s is a CReal threshold (used for bounds
/// of the form 3 +- e^-R). Never-equal inputs are the caller's obligation;
/// refinement runs through the provided generator of tighter enclosures.
Ordering compare_surd_creal(const Surd& x, const CReal& t_lo_hi, long start_prec = 128);

}  // namespace spectra
