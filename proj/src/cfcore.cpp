#include "spectra/cfcore.hpp"

#include <map>
#include <mutex>

namespace spectra {

void Continuants::push(long digit) {
    if (digit < 1) throw DomainError("partial quotient must be >= 1");
    Int np = digit * p + p_prev;
    Int nq = digit * q + q_prev;
    p_prev = p;
    q_prev = q;
    p = np;
    q = nq;
    ++n;
}

Continuants convergents(std::span<const int> w) {
    if (w.empty()) throw EmptyWord();
    Continuants c{Int(0), Int(1), Int(1), Int(0), 0};
    // seeds: p_0 = 0, q_0 = 1, p_{-1} = 1, q_{-1} = 0
    for (int d : w) c.push(d);
    return c;
}

Int continuant(std::span<const int> w) {
    if (w.empty()) return Int(1);
    return convergents(w).q;
}

CfInterval interval_of(std::span<const int> w) {
    Continuants c = convergents(w);
    Rat e1(c.p, c.q);
    Rat e2(c.p + c.p_prev, c.q + c.q_prev);
    e1.canonicalize();
    e2.canonicalize();
    if (e1 < e2) return {e1, e2};
    return {e2, e1};
}

Rat size_s(std::span<const int> w) {
    Rat s(Int(1), size_s_inverse(w));
    s.canonicalize();
    return s;
}

Int size_s_inverse(std::span<const int> w) {
    Continuants c = convergents(w);
    return c.q * (c.q + c.q_prev);
}

long size_r(std::span<const int> w) { return floor_log(size_s_inverse(w)); }

bool size_r_at_least(const Int& s_inverse, long r) {
    if (r <= 0) return true;
    static std::map<long, Int> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lk(mu);
    auto it = cache.find(r);
    if (it == cache.end()) it = cache.emplace(r, exp_ceil(r)).first;
    return s_inverse >= it->second;
}

Surd moebius_apply(const Int& A, const Int& B, const Int& C, const Int& D, const Surd& x) {
    Surd num = Surd(A, 0, 1, 0) * x + Surd::rational(Rat(B));
    Surd den = Surd(C, 0, 1, 0) * x + Surd::rational(Rat(D));
    return num / den;
}

Surd purely_periodic_value(std::span<const int> period) {
    if (period.empty()) throw EmptyPeriod();
    // period matrix: prod [[d,1],[1,0]] = [[m00,m01],[m10,m11]];
    // x = (m00 x + m01)/(m10 x + m11)
    Int m00(1), m01(0), m10(0), m11(1);
    for (int d : period) {
        if (d < 1) throw DomainError("partial quotient must be >= 1");
        Int n00 = m00 * d + m01, n10 = m10 * d + m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
    }
    // m10 x^2 + (m11 - m00) x - m01 = 0; root product is -m01/m10 < 0, so the
    // positive root is the purely periodic value
    Int A = m10, B = m11 - m00, C = -m01;
    Int disc = B * B - 4 * A * C;
    Surd root = Surd(-B, 1, 2 * A, disc);
    if (root.sign() <= 0) throw std::logic_error("periodic value root selection failed");
    return root;
}

Surd periodic_value(long head, std::span<const int> preperiod, std::span<const int> period) {
    if (period.empty()) throw EmptyPeriod();
    Surd x = purely_periodic_value(period);
    // value = [head; pre..., x] via the Moebius product of digit matrices
    Int m00(head), m01(1), m10(1), m11(0);
    for (int d : preperiod) {
        if (d < 1) throw DomainError("partial quotient must be >= 1");
        Int n00 = m00 * d + m01, n10 = m10 * d + m11;
        m01 = m00;
        m11 = m10;
        m00 = n00;
        m10 = n10;
    }
    return moebius_apply(m00, m01, m10, m11, x);
}

}  // namespace spectra
