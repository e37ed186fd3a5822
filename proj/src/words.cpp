#include "spectra/words.hpp"

#include <algorithm>
#include <cassert>

namespace spectra {

Word::Word(std::string digits) : s_(std::move(digits)) {
    for (char c : s_)
        if (c != '1' && c != '2') throw DomainError("word digits must be 1 or 2");
}

Word Word::repeated(int digit, size_t count) {
    if (digit != 1 && digit != 2) throw DomainError("word digits must be 1 or 2");
    return Word(std::string(count, static_cast<char>('0' + digit)));
}

Digits Word::to_digits() const {
    Digits d;
    d.reserve(s_.size());
    for (char c : s_) d.push_back(c - '0');
    return d;
}

Word Word::transpose() const {
    std::string t(s_.rbegin(), s_.rend());
    return Word(std::move(t));
}

Word Word::rotated(size_t k) const {
    if (empty()) return *this;
    k %= size();
    return Word(s_.substr(k) + s_.substr(0, k));
}

void Word::push_back(int digit) {
    if (digit != 1 && digit != 2) throw DomainError("word digits must be 1 or 2");
    s_.push_back(static_cast<char>('0' + digit));
}

std::vector<Run> runs(const Word& w) {
    if (w.empty()) throw EmptyWord();
    std::vector<Run> out;
    size_t i = 0;
    while (i < w.size()) {
        size_t j = i;
        while (j < w.size() && w.digit(j) == w.digit(i)) ++j;
        out.push_back({w.digit(i), i, j - i});
        i = j;
    }
    return out;
}

Word block_M(size_t len) { return Word(len % 2 == 0 ? "12" : "21"); }
Word block_m(size_t len) { return Word(len % 2 == 0 ? "21" : "12"); }

TailPattern extremal_tail(Side side, size_t side_len, bool maximize) {
    // The value [v t] is increasing in the tail value iff |v| is even; the
    // value [0; u t] is increasing iff |u| is odd. The largest tail value is
    // [(21)^inf], the smallest [(12)^inf]. Spelled out per side this is the
    // parity table: lambda+ appends m_v / M_u, lambda- appends M_v / m_u.
    if (side == Side::Right) return {side, maximize ? block_m(side_len) : block_M(side_len)};
    return {side, maximize ? block_M(side_len) : block_m(side_len)};
}

namespace {

Surd side_value_right(const Word& v, const Word& block) {
    Digits d = v.to_digits();
    Digits per = block.to_digits();
    return periodic_value(d[0], std::span<const int>(d).subspan(1), per);
}

Surd side_value_left(const Word& u, const Word& block) {
    Digits d = u.to_digits();
    Digits per = block.to_digits();
    return periodic_value(0, d, per);
}

}  // namespace

Surd lambda_minus(const Section& s) {
    if (s.cut == 0 || s.cut >= s.word.size()) throw DegenerateCut();
    Word u = s.word.subword(0, s.cut).transpose();
    Word v = s.word.subword(s.cut, s.word.size() - s.cut);
    Surd right = side_value_right(v, extremal_tail(Side::Right, v.size(), false).block);
    Surd left = side_value_left(u, extremal_tail(Side::Left, u.size(), false).block);
    return right + left;
}

Surd lambda_plus(const Section& s) {
    if (s.cut == 0 || s.cut >= s.word.size()) throw DegenerateCut();
    Word u = s.word.subword(0, s.cut).transpose();
    Word v = s.word.subword(s.cut, s.word.size() - s.cut);
    Surd right = side_value_right(v, extremal_tail(Side::Right, v.size(), true).block);
    Surd left = side_value_left(u, extremal_tail(Side::Left, u.size(), true).block);
    return right + left;
}

std::pair<Surd, Surd> lambda_bounds(const Section& s) { return {lambda_minus(s), lambda_plus(s)}; }

Surd lambda_at_cut(const PeriodicBiWord& w, size_t position) {
    if (w.period.empty()) throw EmptyPeriod();
    size_t n = w.period.size();
    position %= n;
    Word right = w.period.rotated(position);
    Word left = right.transpose();  // digits before the cut, read leftward
    Digits rd = right.to_digits(), ld = left.to_digits();
    Surd rv = purely_periodic_value(rd);
    Surd lv = purely_periodic_value(ld).reciprocal();
    return rv + lv;
}

MarkovValue markov_value_periodic(const PeriodicBiWord& w) {
    if (w.period.empty()) throw EmptyPeriod();
    MarkovValue best{lambda_at_cut(w, 0), 0};
    for (size_t k = 1; k < w.period.size(); ++k) {
        Surd v = lambda_at_cut(w, k);
        if (surd_compare(v, best.value) == Ordering::GT) best = {v, k};
    }
    return best;
}

std::vector<PatternViolation> forbidden_patterns(const Word& w, long r) {
    if (r < 5) throw DomainError("forbidden_patterns requires r >= 5");
    std::vector<PatternViolation> out;
    for (size_t i = 0; i + 3 <= w.size(); ++i) {
        if (w.digit(i) == 1 && w.digit(i + 1) == 2 && w.digit(i + 2) == 1)
            out.push_back({PatternViolation::Pattern121, i, 3});
        if (w.digit(i) == 2 && w.digit(i + 1) == 1 && w.digit(i + 2) == 2)
            out.push_back({PatternViolation::Pattern212, i, 3});
    }
    for (const Run& run : runs(w)) {
        if (run.length < 3 || run.length % 2 == 0) continue;
        bool internal = run.start > 0 && run.start + run.length < w.size();
        if (!internal) continue;
        // r(c^n) <= r - 4 means NOT r(c^n) >= r - 3
        Digits block(run.length, run.digit);
        if (!size_r_at_least(size_s_inverse(block), r - 3))
            out.push_back({PatternViolation::OddInternalBlock, run.start, run.length});
    }
    return out;
}

SandwichBounds sandwich_check(const Word& w, const Word& R_head, const Word& S_head) {
    if (R_head.empty() || S_head.empty())
        throw ConfigMismatch("sandwich_check: R and S heads must be nonempty");
    if (R_head.digit(0) == S_head.digit(0))
        throw ConfigMismatch("sandwich_check: requires R_1 != S_1");
    Word b("11");
    Word bwb = b + w + b;
    Word bw1 = b + w + Word("1");
    // sign([w,S]-[w,R]) from the first-disagreement cylinders: with R_1 != S_1
    // the cylinders I(w R_1) and I(w S_1) are ordered and interior-disjoint.
    // [w,X] = 1/[0; w, X] flips the order of the [0;...] cylinders.
    Digits wr = w.to_digits(), ws = w.to_digits();
    wr.push_back(R_head.digit(0));
    ws.push_back(S_head.digit(0));
    CfInterval ir = interval_of(wr), is = interval_of(ws);
    int sign = is.mid() < ir.mid() ? 1 : -1;
    return {size_s(bwb.to_digits()), size_s(bw1.to_digits()), sign};
}

}  // namespace spectra
