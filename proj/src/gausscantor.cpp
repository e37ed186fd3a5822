#include "spectra/gausscantor.hpp"

#include "spectra/cfcore.hpp"

#include <algorithm>

namespace spectra {

void validate_primitive(const GaussAlphabet& B) {
    if (B.blocks.size() < 2) throw NonPrimitive("alphabet needs at least two blocks");
    for (size_t i = 0; i < B.blocks.size(); ++i) {
        if (B.blocks[i].empty()) throw NonPrimitive("empty block");
        for (size_t j = 0; j < B.blocks.size(); ++j) {
            if (i == j) continue;
            const std::string& a = B.blocks[i].str();
            const std::string& b = B.blocks[j].str();
            if (a.size() <= b.size() && b.compare(0, a.size(), a) == 0)
                throw NonPrimitive("block '" + a + "' is a prefix of '" + b + "'");
        }
    }
}

namespace {

// digit sequence of the stationary policy (parity 0 -> b0, parity 1 -> b1),
// returned as (preperiod, period)
std::pair<Digits, Digits> policy_digits(const Word& b0, const Word& b1) {
    bool b0_odd = b0.size() % 2 != 0;
    bool b1_odd = b1.size() % 2 != 0;
    Digits pre, per;
    if (!b0_odd) {
        per = b0.to_digits();  // parity stays 0
    } else if (!b1_odd) {
        pre = b0.to_digits();  // 0 -> 1, then parity stays 1
        per = b1.to_digits();
    } else {
        Digits d0 = b0.to_digits(), d1 = b1.to_digits();  // 2-cycle
        per = d0;
        per.insert(per.end(), d1.begin(), d1.end());
    }
    return {pre, per};
}

}  // namespace

HullPoints hull(const GaussAlphabet& B) {
    validate_primitive(B);
    bool first = true;
    HullPoints h;
    for (const Word& b0 : B.blocks) {
        for (const Word& b1 : B.blocks) {
            auto [pre, per] = policy_digits(b0, b1);
            Surd v = periodic_value(0, pre, per);
            if (first) {
                h.min_point = v;
                h.max_point = v;
                first = false;
                continue;
            }
            if (surd_compare(v, h.min_point) == Ordering::LT) h.min_point = v;
            if (surd_compare(v, h.max_point) == Ordering::GT) h.max_point = v;
        }
    }
    return h;
}

ExpansionBounds expansion_bounds(const GaussAlphabet& B) {
    HullPoints h = hull(B);
    ExpansionBounds out;
    for (const Word& b : B.blocks) {
        Continuants c = convergents(b.to_digits());
        // |psi'| at the image of hull point z is (q_r + z q_{r-1})^2, an
        // increasing function of z
        auto at = [&](const Surd& z) {
            Surd lin = Surd::rational(Rat(c.q)) + Surd::rational(Rat(c.q_prev)) * z;
            return lin * lin;
        };
        Surd lo = at(h.min_point), hi = at(h.max_point);
        for (long prec = 192;; prec *= 2) {
            CReal le = lo.enclosure(prec), he = hi.enclosure(prec);
            if (le.lo() > 1) {
                out.lambda.push_back(le.lo());
                out.Lambda.push_back(he.hi());
                break;
            }
            if (prec > (1L << 16)) throw std::runtime_error("expansion bound not > 1");
        }
    }
    return out;
}

CReal pressure_residual(const std::vector<Rat>& bounds, const Rat& x) {
    CReal sum{Rat(0)};
    for (const Rat& b : bounds) sum = sum + exp_enclosure(CReal(-x) * log_enclosure(b, 192), 192);
    return (sum - CReal(Rat(1))).abs();
}

namespace {

// sign of sum b^-x - 1, refined until certain
int pressure_sign(const std::vector<Rat>& bounds, const Rat& x) {
    for (long prec = 160;; prec *= 2) {
        CReal sum{Rat(0)};
        for (const Rat& b : bounds)
            sum = sum + exp_enclosure(CReal(-x) * log_enclosure(b, prec), prec);
        if (sum.lo() > 1) return 1;
        if (sum.hi() < 1) return -1;
        if (prec > (1L << 16)) return 0;  // equality within 2^-65536: treat as root
    }
}

CReal pressure_root(const std::vector<Rat>& bounds, const Rat& tol) {
    Rat lo(0), hi(5, 4);
    while (pressure_sign(bounds, hi) > 0) {
        hi *= 2;
        if (hi > 64) throw NoRoot("pressure equation has no root below 64");
    }
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int s = pressure_sign(bounds, mid);
        if (s > 0) {
            lo = mid;
        } else if (s < 0) {
            hi = mid;
        } else {
            return CReal(mid, mid);
        }
    }
    return CReal(lo, hi);
}

}  // namespace

DimensionBracket dimension_bracket(const GaussAlphabet& B, const Rat& tol) {
    if (tol <= 0) throw DomainError("dimension_bracket requires tol > 0");
    ExpansionBounds eb = expansion_bounds(B);
    DimensionBracket out;
    out.alpha_upper = pressure_root(eb.lambda, tol);
    out.beta_lower = pressure_root(eb.Lambda, tol);
    return out;
}

GaussAlphabet lower_bound_alphabet(long r) {
    if (r < 2) throw DomainError("lower_bound_alphabet requires r >= 2");
    long k = 2 * r;
    long s = 1;
    for (;; ++s) {
        Digits ones(s, 1);
        if (size_r_at_least(size_s_inverse(ones), r)) break;
    }
    GaussAlphabet B;
    B.blocks.push_back(Word::repeated(1, k));
    for (long j = 2; j <= k + 1; ++j) {
        std::string blk = std::string(k + 1 - j, '1') + "22" + std::string(s, '1');
        B.blocks.push_back(Word(blk));
    }
    validate_primitive(B);
    return B;
}

GaussAlphabet square_alphabet(const GaussAlphabet& B) {
    GaussAlphabet out;
    for (const Word& a : B.blocks)
        for (const Word& b : B.blocks) out.blocks.push_back(a + b);
    return out;
}

namespace {

// left side of the d-tilde equation minus 1, as a certified sign
int dtilde_sign(long r, const Rat& d, long prec) {
    long k = 2 * r;
    CReal logphi = log_enclosure(phi_enclosure(prec), prec);
    CReal log4 = log_enclosure(Rat(4), prec);
    CReal dd{d};
    CReal t1 = exp_enclosure(-(dd * (log4 + CReal(Rat(4 * r)) * logphi)), prec);
    CReal q = exp_enclosure(-(dd * CReal(Rat(2)) * logphi), prec);          // phi^{-2d}
    CReal qk = exp_enclosure(-(dd * CReal(Rat(2 * k)) * logphi), prec);     // phi^{-2kd}
    CReal expo = exp_enclosure(-(dd * CReal(Rat(r + 8))), prec);
    CReal one{Rat(1)};
    CReal t2 = expo * (one - qk) / (one - q);
    CReal lhs = t1 + t2;
    if (lhs.lo() > 1) return 1;
    if (lhs.hi() < 1) return -1;
    return 0;
}

}  // namespace

CReal d_tilde(long r, const Rat& tol) {
    if (r < 2) throw DomainError("d_tilde requires r >= 2");
    if (tol <= 0) throw DomainError("d_tilde requires tol > 0");
    Rat lo = Rat(1, Int("1000000000000"));  // 1e-12
    Rat hi(1);
    long prec = 192;
    auto sign_at = [&](const Rat& d) {
        for (long p = prec;; p *= 2) {
            int s = dtilde_sign(r, d, p);
            if (s != 0) return s;
            if (p > (1L << 16)) throw std::runtime_error("d_tilde: sign refinement runaway");
        }
    };
    if (sign_at(lo) <= 0 || sign_at(hi) >= 0)
        throw NoRoot("d_tilde: bracket [1e-12, 1] fails the sign test");
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        if (sign_at(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    return CReal(lo, hi);
}

AsymptoticD asymptotic_d(const CReal& eps) {
    CReal inv_e = exp_enclosure(Rat(-1), 160);
    if (!(eps.lo() > 0) || !eps.certainly_less(inv_e))
        throw DomainError("asymptotic_d requires 0 < eps < 1/e");
    CReal L = -log_enclosure(eps, 192);  // |log eps| > 1
    CReal c0 = c0_enclosure(192);
    CReal arg = exp_enclosure(c0, 192) * L;
    CReal two{Rat(2)};
    AsymptoticD out;
    out.g1 = two * lambert_w(arg, 192) / L;
    out.g2 = two * log_enclosure(L, 192) / L;
    return out;
}

}  // namespace spectra
