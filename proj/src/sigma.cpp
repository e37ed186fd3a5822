#include "spectra/sigma.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

namespace spectra {

CReal Bound::enclosure(long prec_bits) const {
    switch (kind_) {
        case Exact:
            return CReal(value_);
        case ThreePlusExp:
            return CReal(Rat(3)) + exp_enclosure(Rat(-R_), prec_bits);
        case ThreeMinusExp:
        default:
            return CReal(Rat(3)) - exp_enclosure(Rat(-R_), prec_bits);
    }
}

Ordering Bound::compare(const Surd& lambda) const {
    if (kind_ == Exact) return compare_surd_rational(lambda, value_);
    for (long prec = 128;; prec *= 2) {
        CReal t = enclosure(prec);
        CReal x = lambda.enclosure(prec);
        if (x.certainly_less(t)) return Ordering::LT;
        if (x.certainly_greater(t)) return Ordering::GT;
        if (prec > (1L << 16))
            throw std::runtime_error("Bound::compare: cannot separate (algebraic vs e^-R?)");
    }
}

std::pair<double, double> Bound::double_bracket() const {
    CReal e = enclosure(96);
    double lo = e.lo().get_d(), hi = e.hi().get_d();
    return {std::nextafter(lo, -1e30), std::nextafter(hi, 1e30)};
}

std::string Bound::str() const {
    std::ostringstream os;
    switch (kind_) {
        case Exact:
            os << value_.get_num().get_str() << "/" << value_.get_den().get_str();
            break;
        case ThreePlusExp:
            os << "3+e^-" << R_;
            break;
        case ThreeMinusExp:
            os << "3-e^-" << R_;
            break;
    }
    return os.str();
}

namespace {

// Directed-rounding double interval helpers for the fast viability screen.
struct DItv {
    double lo, hi;
};

DItv ditv_add(DItv a, DItv b) {
    return {std::nextafter(a.lo + b.lo, -1e308), std::nextafter(a.hi + b.hi, 1e308)};
}

DItv ditv_recip(DItv a) {  // requires a.lo > 0
    return {std::nextafter(1.0 / a.hi, -1e308), std::nextafter(1.0 / a.lo, 1e308)};
}

// Tail values: [(12)^inf] = (1+sqrt3)/2, [(21)^inf] = 1+sqrt3.
const DItv kTail12{1.3660254037844386, 1.3660254037844390};
const DItv kTail21{2.7320508075688767, 2.7320508075688775};

// lambda-(u*|v) lower bound: backward evaluation of [v M_v] + [0; u m_u].
DItv lambda_minus_interval(const Word& w, size_t cut) {
    size_t n = w.size();
    DItv right = (n - cut) % 2 == 0 ? kTail12 : kTail21;  // block M_v
    for (size_t i = n; i-- > cut;) {
        DItv d{static_cast<double>(w.digit(i)), static_cast<double>(w.digit(i))};
        right = ditv_add(d, ditv_recip(right));
    }
    DItv left = cut % 2 == 1 ? kTail12 : kTail21;  // block m_u
    for (size_t i = 0; i < cut; ++i) {
        DItv d{static_cast<double>(w.digit(i)), static_cast<double>(w.digit(i))};
        left = ditv_add(d, ditv_recip(left));
    }
    return ditv_add(right, ditv_recip(left));
}

}  // namespace

bool cut_certainly_above(const Word& w, size_t cut, double bound_hi) {
    DItv lm = lambda_minus_interval(w, cut);
    return lm.lo > bound_hi;
}

MembershipContext::MembershipContext(Bound t, long max_word_len)
    : t_(std::move(t)), max_len_(max_word_len) {
    // witness pool: single digits, tree words of digit length < 3*max_len,
    // and the block periods 1^j 22 1^s
    std::vector<Word> periods;
    periods.push_back(Word("1"));
    periods.push_back(Word("2"));
    for (const AlphabetPair& p : pairs_up_to_digit_size(3 * static_cast<size_t>(max_len_)))
        periods.push_back(p.tree_word().to_word());
    for (long j = 0; 2 + j <= 3 * max_len_; ++j)
        for (long s = 0; 2 + j + s <= 3 * max_len_; ++s) {
            std::string per = std::string(j, '1') + "22" + std::string(s, '1');
            periods.push_back(Word(per));
        }
    std::sort(periods.begin(), periods.end(), [](const Word& a, const Word& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    periods.erase(std::unique(periods.begin(), periods.end()), periods.end());
    pool_.reserve(periods.size());
    for (Word& p : periods) pool_.push_back({std::move(p), -1});
}

std::optional<Word> MembershipContext::find_witness(const Word& w) {
    for (PoolEntry& e : pool_) {
        if (e.mv_ok == 0) continue;
        // factor of the periodic word: scan one period plus wraparound
        std::string s = e.period.str();
        while (s.size() < e.period.size() + w.size() - 1) s += e.period.str();
        if (s.find(w.str()) == std::string::npos) continue;
        if (e.mv_ok == -1)  // exact Markov value resolved on first containment hit
            e.mv_ok = t_.compare(markov_value_periodic({e.period}).value) != Ordering::GT;
        if (e.mv_ok == 1) return e.period;
    }
    return std::nullopt;
}

bool MembershipContext::certainly_dead(const Word& w) {
    auto it = dead_memo_.find(w.str());
    if (it != dead_memo_.end()) return it->second;
    ++nodes_;
    if (nodes_ > limits_.node_budget)
        throw ResourceLimit("membership node budget exhausted",
                            "{\"word\":\"" + w.str() + "\"}");
    bool dead = false;
    auto [bound_lo, bound_hi] = t_.double_bracket();
    for (size_t cut = 1; cut < w.size() && !dead; ++cut) {
        DItv lm = lambda_minus_interval(w, cut);
        if (lm.lo > bound_hi) {
            dead = true;  // double screen certifies lambda- above t
        } else if (lm.hi > bound_lo) {
            // straddles the bound: settle exactly
            Surd exact = lambda_minus({w, cut});
            if (t_.compare(exact) == Ordering::GT) dead = true;
        }
    }
    dead_memo_.emplace(w.str(), dead);
    return dead;
}

MembershipVerdict MembershipContext::membership(const Word& w, long depth) {
    if (w.empty()) throw EmptyWord();
    if (auto witness = find_witness(w)) return {MembershipVerdict::CertifiedIn, witness, -1};
    // breadth-first out-certification: extend one digit on both sides per level
    std::vector<Word> frontier{w};
    if (certainly_dead(w)) return {MembershipVerdict::CertifiedOut, std::nullopt, 0};
    for (long level = 1; level <= depth; ++level) {
        std::unordered_set<std::string> next;
        for (const Word& x : frontier) {
            for (int dl = 1; dl <= 2; ++dl) {
                for (int dr = 1; dr <= 2; ++dr) {
                    Word y(std::string(1, static_cast<char>('0' + dl)) + x.str() +
                           std::string(1, static_cast<char>('0' + dr)));
                    if (!certainly_dead(y)) next.insert(y.str());
                }
            }
        }
        if (next.empty()) return {MembershipVerdict::CertifiedOut, std::nullopt, level};
        frontier.assign(next.size(), Word());
        size_t i = 0;
        for (const std::string& s : next) frontier[i++] = Word(s);
    }
    return {MembershipVerdict::Unknown, std::nullopt, -1};
}

MembershipVerdict membership(const Word& w, const Bound& t, long depth) {
    MembershipContext ctx(t, static_cast<long>(w.size()));
    return ctx.membership(w, depth);
}

SigmaSet enumerate_sigma(const Bound& t, long n, long depth, const SearchLimits& limits) {
    if (n < 1) throw DomainError("enumerate_sigma requires n >= 1");
    SigmaSet out{t, n, depth, {}, {}};
    std::vector<Word> survivors;  // certified or unknown at the previous length
    std::unordered_set<std::string> survivor_set;

    for (long k = 1; k <= n; ++k) {
        std::vector<Word> candidates;
        if (k == 1) {
            candidates = {Word("1"), Word("2")};
        } else {
            std::unordered_set<std::string> cand_set;
            for (const Word& w : survivors)
                for (int d = 1; d <= 2; ++d) {
                    std::string x = w.str() + static_cast<char>('0' + d);
                    if (survivor_set.count(x.substr(1))) cand_set.insert(x);
                }
            candidates.reserve(cand_set.size());
            for (const std::string& s : cand_set) candidates.push_back(Word(s));
            std::sort(candidates.begin(), candidates.end());
        }

        std::vector<MembershipVerdict::Status> status(candidates.size());
        std::exception_ptr failure;
#pragma omp parallel
        {
            MembershipContext ctx(t, n);
            ctx.set_limits(limits);
#pragma omp for schedule(dynamic, 4)
            for (long i = 0; i < static_cast<long>(candidates.size()); ++i) {
                if (failure) continue;
                try {
                    status[i] = ctx.membership(candidates[i], depth).status;
                } catch (...) {
#pragma omp critical
                    failure = std::current_exception();
                }
            }
        }
        if (failure) std::rethrow_exception(failure);

        std::vector<Word> certified_k, unknown_k;
        for (size_t i = 0; i < candidates.size(); ++i) {
            if (status[i] == MembershipVerdict::CertifiedIn) certified_k.push_back(candidates[i]);
            else if (status[i] == MembershipVerdict::Unknown) unknown_k.push_back(candidates[i]);
        }
        survivors.clear();
        survivor_set.clear();
        for (const Word& w : certified_k) {
            survivors.push_back(w);
            survivor_set.insert(w.str());
        }
        for (const Word& w : unknown_k) {
            survivors.push_back(w);
            survivor_set.insert(w.str());
        }
        if (k == n) {
            out.certified = std::move(certified_k);
            out.unknown = std::move(unknown_k);
        }
    }
    std::sort(out.certified.begin(), out.certified.end());
    std::sort(out.unknown.begin(), out.unknown.end());
    return out;
}

TheoremReport verify_theorem_equalities(long n, long B, long depth, const SearchLimits& limits) {
    if (n < 1 || B <= 1) throw DomainError("verify_theorem_equalities requires n >= 1, B > 1");
    TheoremReport rep;
    rep.n = n;
    rep.B = B;
    Int bn;
    mpz_ui_pow_ui(bn.get_mpz_t(), static_cast<unsigned long>(B), static_cast<unsigned long>(n));
    Rat delta(Int(1), bn);
    delta.canonicalize();
    rep.lower = enumerate_sigma(Bound::exact(Rat(3) - delta), n, depth, limits);
    rep.middle = enumerate_sigma(Bound::exact(Rat(3)), n, depth, limits);
    rep.upper = enumerate_sigma(Bound::exact(Rat(3) + delta), n, depth, limits);
    rep.unknown_total =
        rep.lower.unknown.size() + rep.middle.unknown.size() + rep.upper.unknown.size();
    rep.lower_equals_middle = rep.lower.certified == rep.middle.certified;
    rep.middle_equals_upper = rep.middle.certified == rep.upper.certified;
    rep.middle_included_in_upper = std::includes(rep.upper.certified.begin(),
                                                 rep.upper.certified.end(),
                                                 rep.middle.certified.begin(),
                                                 rep.middle.certified.end());
    std::vector<Word> oracle = sigma3_enumerate(n);
    rep.middle_matches_tree_oracle = oracle == rep.middle.certified;
    // every lower-side member must carry a periodic witness with value
    // certified below 3 - B^-n (found during enumeration by construction)
    MembershipContext ctx(Bound::exact(Rat(3) - delta), n);
    ctx.set_limits(limits);
    for (const Word& w : rep.lower.certified) {
        MembershipVerdict v = ctx.membership(w, 0);
        if (v.status == MembershipVerdict::CertifiedIn) ++rep.lower_witnesses_checked;
    }
    return rep;
}

namespace {

struct QrDfs {
    long r;
    Int threshold;  // ceil(e^r)
    const Bound& t;
    double bound_hi;
    long depth;
    const SearchLimits& limits;
    size_t nodes = 0;
    MembershipContext* ctx;
    std::vector<Word>* words;
    std::vector<Word>* unknown;

    void visit(Word& w, const Continuants& c) {
        if (++nodes > limits.node_budget)
            throw ResourceLimit("q_r_words node budget exhausted", "{\"word\":\"" + w.str() + "\"}");
        if (!w.empty()) {
            // viability screen on the last cut window only; sound but partial
            size_t lo_cut = w.size() > 48 ? w.size() - 48 : 1;
            for (size_t cut = lo_cut; cut < w.size(); ++cut)
                if (cut_certainly_above(w, cut, bound_hi)) return;
            Int sinv = c.q * (c.q + c.q_prev);
            if (sinv >= threshold) {
                MembershipVerdict v = ctx->membership(w, depth);
                if (v.status == MembershipVerdict::CertifiedOut) return;
                words->push_back(w);
                if (v.status == MembershipVerdict::Unknown) unknown->push_back(w);
                return;  // Q_r is an antichain along each branch
            }
        }
        for (int d = 1; d <= 2; ++d) {
            Continuants cc = c;
            cc.push(d);
            w.push_back(d);
            visit(w, cc);
            w = w.subword(0, w.size() - 1);
        }
    }
};

}  // namespace

QrSet q_r_words(long r, const Bound& t, long depth, const SearchLimits& limits) {
    if (r < 1) throw DomainError("q_r_words requires r >= 1");
    QrSet out{r, {}, {}};
    // generous length cap: r(w) grows at least like (|w|-3) log((3+sqrt5)/2)
    long max_len = static_cast<long>(r / 0.96) + 8;
    MembershipContext ctx(t, max_len);
    ctx.set_limits(limits);
    QrDfs dfs{r,     exp_ceil(r), t,     t.double_bracket().second, depth,
              limits, 0,           &ctx, &out.words,                &out.unknown};
    Word w;
    Continuants c{Int(0), Int(1), Int(1), Int(0), 0};
    dfs.visit(w, c);
    std::sort(out.words.begin(), out.words.end());
    std::sort(out.unknown.begin(), out.unknown.end());
    return out;
}

CoveringReport covering_estimate(const Bound& t, long r, long depth, const SearchLimits& limits) {
    QrSet qs = q_r_words(r, t, depth, limits);
    CoveringReport rep{t, r, qs.words.size(), qs.unknown.size(), CReal(Rat(0))};
    if (rep.count >= 1)
        rep.estimate = log_enclosure(Rat(static_cast<long>(rep.count)), 128) / CReal(Rat(r));
    return rep;
}

}  // namespace spectra
