#include "spectra/certified.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <cassert>

namespace spectra {

Rat rat_from_string(const std::string& num, const std::string& den) {
    Int n(num), d(den);
    if (d <= 0) throw DomainError("rational denominator must be positive");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

CReal::CReal(Rat lo, Rat hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw std::logic_error("CReal endpoints out of order");
}

CReal CReal::operator*(const CReal& o) const {
    Rat c1 = lo_ * o.lo_, c2 = lo_ * o.hi_, c3 = hi_ * o.lo_, c4 = hi_ * o.hi_;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return CReal(lo, hi);
}

CReal CReal::operator/(const CReal& o) const {
    if (o.lo_ <= 0 && o.hi_ >= 0) throw DomainError("division by interval containing zero");
    Rat c1 = lo_ / o.lo_, c2 = lo_ / o.hi_, c3 = hi_ / o.lo_, c4 = hi_ / o.hi_;
    Rat lo = std::min(std::min(c1, c2), std::min(c3, c4));
    Rat hi = std::max(std::max(c1, c2), std::max(c3, c4));
    return CReal(lo, hi);
}

CReal CReal::abs() const {
    if (lo_ >= 0) return *this;
    if (hi_ <= 0) return -*this;
    return CReal(Rat(0), std::max(-lo_, hi_));
}

namespace {

// RAII mpfr value.
struct Mpfr {
    mpfr_t v;
    explicit Mpfr(long prec) { mpfr_init2(v, prec); }
    ~Mpfr() { mpfr_clear(v); }
    Mpfr(const Mpfr&) = delete;
    Mpfr& operator=(const Mpfr&) = delete;
};

Rat rat_of_mpfr(const mpfr_t x) {
    if (mpfr_zero_p(x)) return Rat(0);
    mpz_class mant;
    mpfr_exp_t e = mpfr_get_z_2exp(mant.get_mpz_t(), x);
    Rat r(mant);
    if (e >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(e));
        r *= Rat(p);
    } else {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(-e));
        r /= Rat(p);
    }
    return r;
}

// Enclosure of f applied to a rational, f monotone increasing.
template <typename F>
CReal mono_enclosure(const Rat& x, long prec, F&& f) {
    Mpfr a(prec), lo(prec), hi(prec);
    mpfr_set_q(a.v, x.get_mpq_t(), MPFR_RNDD);
    f(lo.v, a.v, MPFR_RNDD);
    mpfr_set_q(a.v, x.get_mpq_t(), MPFR_RNDU);
    f(hi.v, a.v, MPFR_RNDU);
    return CReal(rat_of_mpfr(lo.v), rat_of_mpfr(hi.v));
}

}  // namespace

CReal log_enclosure(const Rat& x, long prec_bits) {
    if (x <= 0) throw DomainError("log of nonpositive value");
    return mono_enclosure(x, prec_bits, [](mpfr_t r, const mpfr_t a, mpfr_rnd_t rnd) {
        mpfr_log(r, a, rnd);
    });
}

CReal log_enclosure(const CReal& x, long prec_bits) {
    if (x.lo() <= 0) throw DomainError("log of interval touching zero");
    CReal a = log_enclosure(x.lo(), prec_bits);
    CReal b = log_enclosure(x.hi(), prec_bits);
    return CReal(a.lo(), b.hi());
}

CReal exp_enclosure(const Rat& x, long prec_bits) {
    return mono_enclosure(x, prec_bits, [](mpfr_t r, const mpfr_t a, mpfr_rnd_t rnd) {
        mpfr_exp(r, a, rnd);
    });
}

CReal exp_enclosure(const CReal& x, long prec_bits) {
    CReal a = exp_enclosure(x.lo(), prec_bits);
    CReal b = exp_enclosure(x.hi(), prec_bits);
    return CReal(a.lo(), b.hi());
}

CReal sqrt_enclosure(const Int& d, long prec_bits) {
    if (d < 0) throw DomainError("sqrt of negative integer");
    if (mpz_perfect_square_p(d.get_mpz_t())) {
        Int root;
        mpz_sqrt(root.get_mpz_t(), d.get_mpz_t());
        return CReal(Rat(root));
    }
    Mpfr a(prec_bits), lo(prec_bits), hi(prec_bits);
    mpfr_set_z(a.v, d.get_mpz_t(), MPFR_RNDD);
    mpfr_sqrt(lo.v, a.v, MPFR_RNDD);
    mpfr_set_z(a.v, d.get_mpz_t(), MPFR_RNDU);
    mpfr_sqrt(hi.v, a.v, MPFR_RNDU);
    return CReal(rat_of_mpfr(lo.v), rat_of_mpfr(hi.v));
}

CReal pow_enclosure(const CReal& base, const CReal& expo, long prec_bits) {
    if (base.lo() <= 0) throw DomainError("pow requires positive base");
    return exp_enclosure(expo * log_enclosure(base, prec_bits), prec_bits);
}

CReal certified_log(const Rat& x, long precision_bits) {
    if (x <= 0) throw DomainError("certified_log: x <= 0");
    if (x == 1) return CReal(Rat(0));
    Rat target = Rat(1) / Rat(Int(1) << std::max(0L, precision_bits));
    for (long prec = std::max(64L, precision_bits + 16);; prec *= 2) {
        CReal e = log_enclosure(x, prec);
        if (e.width() < target) return e;
        if (prec > (1L << 22)) throw std::runtime_error("certified_log: precision runaway");
    }
}

CReal certified_log(const CReal& x, long precision_bits) {
    if (x.is_exact()) return certified_log(x.lo(), precision_bits);
    if (x.lo() <= 0) throw DomainError("certified_log: interval touches zero");
    return log_enclosure(x, std::max(64L, precision_bits + 16));
}

long floor_log(const Int& n) {
    if (n < 1) throw DomainError("floor_log: n < 1");
    if (n == 1) return 0;
    for (long prec = 64;; prec *= 2) {
        CReal e = log_enclosure(Rat(n), prec);
        Int flo, fhi;
        mpz_fdiv_q(flo.get_mpz_t(), e.lo().get_num().get_mpz_t(), e.lo().get_den().get_mpz_t());
        mpz_fdiv_q(fhi.get_mpz_t(), e.hi().get_num().get_mpz_t(), e.hi().get_den().get_mpz_t());
        if (flo == fhi) return flo.get_si();
        if (prec > (1L << 20)) throw std::runtime_error("floor_log: precision runaway");
    }
}

Int exp_ceil(long r) {
    if (r < 0) throw DomainError("exp_ceil: negative exponent");
    if (r == 0) return Int(1);
    for (long prec = 64 + 2 * r;; prec *= 2) {
        CReal e = exp_enclosure(Rat(r), prec);
        Int clo, chi;
        mpz_cdiv_q(clo.get_mpz_t(), e.lo().get_num().get_mpz_t(), e.lo().get_den().get_mpz_t());
        mpz_cdiv_q(chi.get_mpz_t(), e.hi().get_num().get_mpz_t(), e.hi().get_den().get_mpz_t());
        if (clo == chi) return clo;
        if (prec > (1L << 22)) throw std::runtime_error("exp_ceil: precision runaway");
    }
}

double lambert_w_double(double x) {
    if (x < -0.3678794411714423216) throw DomainError("lambert_w: x < -1/e");
    double w;
    if (x > std::exp(1.0)) {
        double l1 = std::log(x), l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    } else if (x > -0.25) {
        w = x / (1.0 + x);
    } else {
        // near the branch point: w = -1 + sqrt(2(ex+1)) expansion
        double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
        w = -1.0 + p - p * p / 3.0;
    }
    for (int i = 0; i < 64; ++i) {
        double ew = std::exp(w);
        double f = w * ew - x;
        double denom = ew * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        double step = f / denom;
        w -= step;
        if (std::abs(step) <= 1e-17 * (1.0 + std::abs(w))) break;
    }
    return w;
}

namespace {

// f(w) = w e^w as an enclosure, w rational.
CReal xexp(const Rat& w, long prec) { return CReal(w) * exp_enclosure(w, prec); }

// Certified W(t) for rational t: a bracket [w1, w2] with f(w1) <= t <= f(w2),
// bisected down to the requested absolute width. f is increasing on [-1, oo).
CReal lambert_w_point(const Rat& t, const Rat& abs_width, long prec) {
    if (t == 0) return CReal(Rat(0));
    double td = t.get_d();
    double w0 = std::isfinite(td) ? lambert_w_double(std::max(td, -0.3678794411714423))
                                  : 700.0;  // t beyond double range: expand upward from here
    Rat lo(mpq_class(w0 - 1e-9)), hi(mpq_class(w0 + 1e-9));
    Rat minus_one(-1);
    if (lo < minus_one) lo = minus_one;
    Rat step(1, 4);
    for (int guard = 0;; ++guard) {
        if (guard > 4096) throw std::runtime_error("lambert_w: lower bracket runaway");
        CReal f = xexp(lo, prec);
        if (f.hi() <= t) break;
        if (f.lo() > t) {
            lo -= step;
            step *= 2;
            if (lo < minus_one) { lo = minus_one; break; }
        } else {
            prec *= 2;
        }
    }
    step = Rat(1, 4);
    for (int guard = 0;; ++guard) {
        if (guard > 4096) throw std::runtime_error("lambert_w: upper bracket runaway");
        CReal f = xexp(hi, prec);
        if (f.lo() >= t) break;
        if (f.hi() < t) {
            hi += step;
            step *= 2;
        } else {
            prec *= 2;
        }
    }
    while (hi - lo > abs_width) {
        Rat mid = (lo + hi) / 2;
        CReal f = xexp(mid, prec);
        if (f.hi() <= t) {
            lo = mid;
        } else if (f.lo() >= t) {
            hi = mid;
        } else {
            prec *= 2;  // f(mid) too blurry to place relative to t
            if (prec > (1L << 20)) throw std::runtime_error("lambert_w: precision runaway");
        }
    }
    return CReal(lo, hi);
}

}  // namespace

CReal lambert_w(const CReal& x, long prec_bits) {
    CReal me = -exp_enclosure(Rat(-1), std::max(prec_bits, 96L));  // encloses -1/e
    if (x.hi() < me.lo()) throw DomainError("lambert_w: x < -1/e");
    double scale_src = std::max(std::abs(x.lo().get_d()), std::abs(x.hi().get_d()));
    double scale = std::isfinite(scale_src) && scale_src > 0
                       ? std::max(1.0, std::log(scale_src + 2.0))
                       : 1.0;
    Rat width(mpq_class(scale * 1e-14));
    if (width <= 0) width = Rat(1, Int(1) << 50);
    // endpoints below the certified domain edge are replaced by the safe
    // bounds W >= -1 and W(me.hi()) respectively
    Rat wlo, whi;
    if (x.lo() >= me.hi()) wlo = lambert_w_point(x.lo(), width, prec_bits).lo();
    else wlo = Rat(-1);
    if (x.hi() >= me.hi()) whi = lambert_w_point(x.hi(), width, prec_bits).hi();
    else whi = lambert_w_point(me.hi(), width, prec_bits).hi();
    return CReal(wlo, whi);
}

CReal phi_enclosure(long prec_bits) {
    CReal s5 = sqrt_enclosure(Int(5), prec_bits);
    return (s5 + CReal(Rat(1))) / CReal(Rat(2));
}

CReal c1_enclosure(long prec_bits) {
    CReal s5 = sqrt_enclosure(Int(5), prec_bits);
    CReal arg = (s5 + CReal(Rat(3))) / CReal(Rat(2));
    return log_enclosure(arg, prec_bits);
}

CReal c0_enclosure(long prec_bits) { return -log_enclosure(c1_enclosure(prec_bits), prec_bits); }

}  // namespace spectra
