#pragma once

// Certified membership and enumeration for Sigma(t,n) with t near 3, the Q_r
// covering words, and covering-based dimension estimates.

#include "spectra/christoffel.hpp"
#include "spectra/words.hpp"

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace spectra {

struct ResourceLimit : std::runtime_error {
    ResourceLimit(const std::string& what, std::string partial)
        : std::runtime_error(what), partial_state(std::move(partial)) {}
    std::string partial_state;  // JSON frontier snapshot for resumption
};

/// Exact bound for Sigma(t, n): a rational, or 3 +- e^-R kept as a certified
/// threshold (comparisons against surds resolve by refinement; a surd never
/// equals 3 +- e^-R).
class Bound {
public:
    enum Kind { Exact, ThreePlusExp, ThreeMinusExp };

    static Bound exact(Rat v) { return Bound(Exact, std::move(v), 0); }
    static Bound three_plus_exp(long R) { return Bound(ThreePlusExp, Rat(3), R); }
    static Bound three_minus_exp(long R) { return Bound(ThreeMinusExp, Rat(3), R); }

    Kind kind() const { return kind_; }
    const Rat& exact_value() const { return value_; }
    long exponent() const { return R_; }

    CReal enclosure(long prec_bits = 128) const;
    /// Ordering of lambda against this bound.
    Ordering compare(const Surd& lambda) const;
    /// Quick double bracket [lo, hi] containing the bound.
    std::pair<double, double> double_bracket() const;
    std::string str() const;

    bool operator==(const Bound& o) const {
        return kind_ == o.kind_ && value_ == o.value_ && R_ == o.R_;
    }

private:
    Bound(Kind k, Rat v, long R) : kind_(k), value_(std::move(v)), R_(R) {}
    Kind kind_;
    Rat value_;
    long R_;
};

struct SearchLimits {
    size_t node_budget = 5'000'000;
};

struct MembershipVerdict {
    enum Status { CertifiedIn, CertifiedOut, Unknown } status;
    std::optional<Word> witness;  // CertifiedIn: period realizing w with value <= t
    long refutation_depth = -1;   // CertifiedOut: extension depth at which all branches died
};

/// Reusable state across membership queries at one bound: the witness pool
/// with cached Markov values and the extension-viability memo.
class MembershipContext {
public:
    MembershipContext(Bound t, long max_word_len);

    MembershipVerdict membership(const Word& w, long depth);
    size_t nodes_used() const { return nodes_; }
    void set_limits(const SearchLimits& l) { limits_ = l; }

    const Bound& bound() const { return t_; }

    /// True when some internal cut of w already has lambda- above t.
    bool certainly_dead(const Word& w);

private:
    std::optional<Word> find_witness(const Word& w);

    Bound t_;
    long max_len_;
    SearchLimits limits_;
    size_t nodes_ = 0;
    struct PoolEntry {
        Word period;
        int8_t mv_ok = -1;  // lazily resolved: -1 unknown, 0 above t, 1 admissible
    };
    std::vector<PoolEntry> pool_;
    std::unordered_map<std::string, bool> dead_memo_;
};

MembershipVerdict membership(const Word& w, const Bound& t, long depth);

struct SigmaSet {
    Bound t;
    long n = 0;
    long depth = 0;
    std::vector<Word> certified;
    std::vector<Word> unknown;
};

/// Pruned incremental search: length-k candidates are kept only when both
/// their length-(k-1) prefix and suffix survived.
SigmaSet enumerate_sigma(const Bound& t, long n, long depth,
                         const SearchLimits& limits = {});

struct TheoremReport {
    long n = 0;
    long B = 0;
    SigmaSet lower;   // t = 3 - B^-n
    SigmaSet middle;  // t = 3
    SigmaSet upper;   // t = 3 + B^-n
    bool lower_equals_middle = false;
    bool middle_equals_upper = false;
    bool middle_included_in_upper = false;
    bool middle_matches_tree_oracle = false;
    size_t unknown_total = 0;
    size_t lower_witnesses_checked = 0;  // periodic witnesses certifying the lower side
};

/// Desk-scale three-way comparison of Theorem-style equalities; reports only,
/// asserts nothing beyond monotone inclusions.
TheoremReport verify_theorem_equalities(long n, long B, long depth,
                                        const SearchLimits& limits = {});

struct QrSet {
    long r = 0;
    std::vector<Word> words;    // not certified out
    std::vector<Word> unknown;  // subset of words lacking an In-witness
};

/// Words with r(w) >= r, r(parent) < r, membership not CertifiedOut.
QrSet q_r_words(long r, const Bound& t, long depth, const SearchLimits& limits = {});

struct CoveringReport {
    Bound t;
    long r = 0;
    size_t count = 0;
    size_t unknown_count = 0;
    CReal estimate;  // log(count)/r, certified rounding
};

CoveringReport covering_estimate(const Bound& t, long r, long depth,
                                 const SearchLimits& limits = {});

/// Sound double-precision screen: lambda-(cut) certainly above `hi` of the
/// bound's bracket. Used only to discard, never to admit.
bool cut_certainly_above(const Word& w, size_t cut, double bound_hi);

}  // namespace spectra
