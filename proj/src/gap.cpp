#include "spectra/gap.hpp"

#include "spectra/cfcore.hpp"

namespace spectra {

Surd phi_power(long n) {
    Surd phi(1, 1, 2, 5);
    Surd acc = Surd::rational(Rat(1));
    long e = n < 0 ? -n : n;
    for (long i = 0; i < e; ++i) acc = acc * phi;
    return n < 0 ? acc.reciprocal() : acc;
}

namespace {

Surd gap_unit(long k) {
    // u_k = 2 (3 phi - 4) / (3 phi^{4k+4})
    Surd three_phi_minus_4 = Surd(-5, 3, 2, 5);  // 3(1+sqrt5)/2 - 4 = (3 sqrt5 - 5)/2
    return Surd::rational(Rat(2, 3)) * three_phi_minus_4 * phi_power(-(4 * k + 4));
}

Surd ones_tail_value(long head, const Digits& pre) {
    static const Digits kOne{1};
    return periodic_value(head, pre, kOne);
}

}  // namespace

GapSpec gap_endpoints(long k) {
    if (k < 1) throw ConfigError("gap_endpoints requires k >= 1");
    Surd u = gap_unit(k);
    Surd x = Surd::rational(Rat(1382, 1000)) * u;
    Surd y = Surd::rational(Rat(2236, 1000)) * u;
    return {k, x, y, x.enclosure(192), y.enclosure(192)};
}

Surd gap_cut_value(long k, long j, GapCase type, long s1, long s2) {
    if (k < 1 || j < 0 || s1 < 0 || s2 < 0)
        throw ConfigError("gap_cut_value: k >= 1, j >= 0, s1, s2 >= 0 required");
    if (type == GapCase::TypeA) {
        // lambda = [2; 2, 1^{2k+j}, 2, 2, 1-bar] + [0; 1^{2k+1}, 2, 2, 1-bar]
        Digits right{2};
        right.insert(right.end(), 2 * k + j, 1);
        right.push_back(2);
        right.push_back(2);
        Digits left(2 * k + 1, 1);
        left.push_back(2);
        left.push_back(2);
        Surd lambda = ones_tail_value(2, right) + ones_tail_value(0, left);
        return lambda - Rat(3);
    }
    // TypeB: lambda = [1; 1^{2k+2+j}, 2, 2, 1-bar] + [0; 2, 2, 1^{2k}, 2, 2, 1-bar]
    Digits right(2 * k + 2 + j, 1);
    right.push_back(2);
    right.push_back(2);
    Digits left{2, 2};
    left.insert(left.end(), 2 * k, 1);
    left.push_back(2);
    left.push_back(2);
    Surd lambda = ones_tail_value(1, right) + ones_tail_value(0, left);
    return lambda - Rat(3);
}

Surd gap_asymptotic_term(long k, long j, GapCase type) {
    long shift = type == GapCase::TypeA ? 0 : 2;
    Surd scale = Surd::rational(Rat(2, 3)) * Surd(-5, 3, 2, 5) * phi_power(-4 - shift);
    Surd main = phi_power(-4 * k);
    Surd corr = phi_power(-(4 * k + 2 + 2 * j));
    Surd term = (j % 2 == 0) ? main + corr : main - corr;
    return scale * term;
}

GapReport gap_emptiness(long k, long j_max, long s_min) {
    GapSpec spec = gap_endpoints(k);
    GapReport rep{spec, j_max, s_min, {}, true};
    for (GapCase type : {GapCase::TypeA, GapCase::TypeB}) {
        for (long j = 0; j <= j_max; ++j) {
            Surd v = gap_cut_value(k, j, type, s_min, s_min);
            GapPoint p{type, j, v, 0, Surd::rational(Rat(0))};
            if (surd_compare(v, spec.x_exact) == Ordering::LT) {
                p.position = -1;
                p.margin = spec.x_exact - v;
            } else if (surd_compare(v, spec.y_exact) == Ordering::GT) {
                p.position = 1;
                p.margin = v - spec.y_exact;
            } else {
                p.position = 0;
                rep.all_outside = false;
            }
            rep.points.push_back(std::move(p));
        }
    }
    return rep;
}

}  // namespace spectra
