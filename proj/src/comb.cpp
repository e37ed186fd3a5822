#include "spectra/comb.hpp"

namespace spectra {

namespace {

// number of (x_1..x_l), x_i >= 1, summing to at most `budget`, by recursion
Int count_tuples(long l, const Int& budget) {
    if (budget < l) return Int(0);
    if (l == 1) return budget;  // x_1 in 1..budget
    Int total(0);
    for (Int x = 1; x + (l - 1) <= budget; ++x) total += count_tuples(l - 1, budget - x);
    return total;
}

}  // namespace

Int comb_brute(long U, const Rat& m) {
    if (U < 1 || m <= 0) throw DomainError("comb_brute requires U >= 1, m > 0");
    Int total(0);
    for (long l = 1; l <= U; ++l) {
        Rat cap = Rat(U - l) * m;
        Int budget;
        mpz_fdiv_q(budget.get_mpz_t(), cap.get_num().get_mpz_t(), cap.get_den().get_mpz_t());
        if (budget < l) continue;
        total += count_tuples(l, budget);
    }
    return total;
}

CReal comb_bound(long U, const Rat& m) {
    if (U < 1 || m <= 0) throw DomainError("comb_bound requires U >= 1, m > 0");
    CReal u(Rat(U));
    if (Rat(U) <= m) {
        CReal w = lambert_w(CReal(m));
        return u * exp_enclosure(w * CReal(Rat(U + 1)), 192);
    }
    CReal wm1 = lambert_w(CReal(m - 1));
    CReal denom = exp_enclosure(wm1, 192);
    return u * exp_enclosure(CReal(Rat(U)) * CReal(m) / denom, 192);
}

CReal comb_epsilon(const Rat& m, long prec_bits) {
    if (m <= 0) throw DomainError("comb_epsilon requires m > 0");
    // g(eps) = 1/eps - log(e m eps / (1-eps)) is strictly decreasing with a
    // sign change on (0,1); bisect with certified evaluations
    auto g_sign = [&](const Rat& eps, long prec) -> int {
        CReal lhs = CReal(Rat(1)) / CReal(eps);
        Rat arg = m * eps / (Rat(1) - eps);
        CReal rhs = CReal(Rat(1)) + log_enclosure(arg, prec);  // log(e x) = 1 + log x
        CReal diff = lhs - rhs;
        if (diff.lo() > 0) return 1;
        if (diff.hi() < 0) return -1;
        return 0;
    };
    Rat lo(1, 1000000), hi(999999, 1000000);
    long prec = prec_bits;
    while (g_sign(lo, prec) <= 0) lo /= 2;
    while (g_sign(hi, prec) >= 0) hi = (hi + 1) / 2;
    Rat tol = Rat(1) / (Int(1) << prec_bits);
    while (hi - lo > tol) {
        Rat mid = (lo + hi) / 2;
        int s = g_sign(mid, prec);
        if (s > 0) {
            lo = mid;
        } else if (s < 0) {
            hi = mid;
        } else {
            prec *= 2;
            if (prec > (1L << 18)) break;  // interval is already tiny
        }
    }
    return CReal(lo, hi);
}

}  // namespace spectra
