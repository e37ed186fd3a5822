#pragma once

// Words over {1,2}: transposes, runs, sections with extremal-tail lambda
// bounds, exact lambda at cuts of periodic bi-infinite words, Markov values,
// forbidden patterns, and the even-length sandwich bounds.

#include "spectra/cfcore.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace spectra {

struct DegenerateCut : DomainError {
    DegenerateCut() : DomainError("lambda bounds need both sides of the cut nonempty") {}
};
struct ConfigMismatch : DomainError {
    using DomainError::DomainError;
};

/// Finite word over the alphabet {1,2}.
class Word {
public:
    Word() = default;
    explicit Word(std::string digits);
    static Word repeated(int digit, size_t count);

    size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    int digit(size_t i) const { return s_[i] - '0'; }
    const std::string& str() const { return s_; }

    Digits to_digits() const;
    Word transpose() const;
    Word subword(size_t pos, size_t len) const { return Word(s_.substr(pos, len)); }
    Word rotated(size_t k) const;  // w[k..] + w[..k]

    void push_back(int digit);
    Word operator+(const Word& o) const { return Word(s_ + o.s_); }

    auto operator<=>(const Word&) const = default;

private:
    std::string s_;
};

struct WordHash {
    size_t operator()(const Word& w) const { return std::hash<std::string>{}(w.str()); }
};

struct Run {
    int digit;
    size_t start, length;
};

/// Maximal run-length encoding; concatenation reproduces the word.
std::vector<Run> runs(const Word& w);

/// A word together with a cut position; the section u*|v has u* = first
/// `cut` digits (so u is their transpose) and v the rest.
struct Section {
    Word word;
    size_t cut;
};

/// Periodic bi-infinite word ...ppp... given by one period.
struct PeriodicBiWord {
    Word period;
};

enum class Side { Left, Right };

/// The parity blocks of the extremal tails: M is "12" for even reference
/// length and "21" for odd; m is the swap. lambda+ appends m after v and M
/// after u; lambda- appends M after v and m after u.
Word block_M(size_t len);
Word block_m(size_t len);

struct TailPattern {
    Side side;
    Word block;
};
TailPattern extremal_tail(Side side, size_t side_len, bool maximize);

/// Exact lambda-(s) and lambda+(s): the smallest and largest lambda a cut of
/// any bi-infinite word containing the section can attain.
Surd lambda_minus(const Section& s);
Surd lambda_plus(const Section& s);
std::pair<Surd, Surd> lambda_bounds(const Section& s);

/// Exact lambda at a cut of a periodic bi-infinite word: cut k puts the bar
/// before digit k of the period, lambda = [right tail] + [0; left reversed].
Surd lambda_at_cut(const PeriodicBiWord& w, size_t position);

struct MarkovValue {
    Surd value;
    size_t argmax_cut;
};

/// sup over shifts = max over the |period| cuts, exact.
MarkovValue markov_value_periodic(const PeriodicBiWord& w);

struct PatternViolation {
    enum Kind { Pattern121, Pattern212, OddInternalBlock } kind;
    size_t position;  // start index of the run or pattern
    size_t length;    // pattern length (3 for 121/212, block length otherwise)
};

/// Occurrences of 121, 212, and internal blocks c'c^n c' with n >= 3 odd and
/// r(c^n) <= r - 4. Requires r >= 5.
std::vector<PatternViolation> forbidden_patterns(const Word& w, long r);

struct SandwichBounds {
    Rat lower;  // s(bwb)
    Rat upper;  // s(bw1)
    int sign;   // predicted sign of lambda - 3
};

/// The size bounds and sign of Lemma-style sections R* w* 11 | 22 w S with
/// R_1 != S_1: s(bwb) < sign([w,S]-[w,R]) (lambda-3) < s(bw1).
SandwichBounds sandwich_check(const Word& w, const Word& R_head, const Word& S_head);

}  // namespace spectra
