#include "spectra/christoffel.hpp"

#include <omp.h>

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace spectra {

ABWord::ABWord(std::string letters) : s_(std::move(letters)) {
    for (char c : s_)
        if (c != 'a' && c != 'b') throw DomainError("ABWord letters must be a or b");
}

Word ABWord::to_word() const {
    std::string d;
    d.reserve(2 * s_.size());
    for (char c : s_) d += (c == 'a') ? "22" : "11";
    return Word(std::move(d));
}

std::optional<ABWord> ABWord::from_word(const Word& w) {
    if (w.empty()) return ABWord();
    std::string out;
    for (const Run& r : runs(w)) {
        if (r.length % 2 != 0) return std::nullopt;
        out.append(r.length / 2, r.digit == 2 ? 'a' : 'b');
    }
    return ABWord(std::move(out));
}

ABWord ABWord::transpose() const {
    std::string t(s_.rbegin(), s_.rend());
    return ABWord(std::move(t));
}

bool ABWord::is_palindrome() const {
    return std::equal(s_.begin(), s_.begin() + s_.size() / 2, s_.rbegin());
}

ABWord substitute(const ABWord& w, char g) {
    if (g != 'U' && g != 'V') throw DomainError("substitution must be U or V");
    std::string out;
    for (size_t i = 0; i < w.size(); ++i) {
        char c = w.letter(i);
        if (g == 'U')
            out += (c == 'a') ? "ab" : "b";
        else
            out += (c == 'a') ? "a" : "ab";
    }
    return ABWord(std::move(out));
}

ABWord b_first(const ABWord& w) {
    if (w.empty() || w.letter(0) != 'a') throw PrefixMismatch("b_first needs a word starting with a");
    std::string s = w.str();
    s[0] = 'b';
    return ABWord(std::move(s));
}

ABWord a_last(const ABWord& w) {
    if (w.empty() || w.letter(w.size() - 1) != 'b')
        throw PrefixMismatch("a_last needs a word ending with b");
    std::string s = w.str();
    s.back() = 'a';
    return ABWord(std::move(s));
}

AlphabetPair AlphabetPair::parent() const {
    if (is_root()) throw DomainError("root pair has no parent");
    AlphabetPair p;
    p.derivation = derivation.substr(0, derivation.size() - 1);
    if (last_move() == 'U') {
        // (alpha, beta) = (uv, v)
        p.beta = beta;
        p.alpha = ABWord(alpha.str().substr(0, alpha.size() - beta.size()));
    } else {
        // (alpha, beta) = (u, uv)
        p.alpha = alpha;
        p.beta = ABWord(beta.str().substr(alpha.size()));
    }
    return p;
}

PairSlope slope_of(const AlphabetPair& p) {
    return {static_cast<long>(p.alpha.size()), static_cast<long>(p.beta.size())};
}

AlphabetPair pair_from_slope(const PairSlope& s) {
    if (s.p < 1 || s.q < 1 || std::gcd(s.p, s.q) != 1)
        throw NotReduced("pair_from_slope requires a reduced positive fraction");
    // unwind the continued fraction of p/q: U steps subtract q from p, V steps
    // subtract p from q; replay forward from the root
    std::string moves;
    long p = s.p, q = s.q;
    while (!(p == 1 && q == 1)) {
        if (p > q) {
            moves.push_back('U');
            p -= q;
        } else {
            moves.push_back('V');
            q -= p;
        }
    }
    AlphabetPair out = AlphabetPair::root();
    for (auto it = moves.rbegin(); it != moves.rend(); ++it)
        out = (*it == 'U') ? out.child_U() : out.child_V();
    return out;
}

std::optional<LetterSeq> factorize_tokens(const std::string& s, const std::string& tok_a,
                                          const std::string& tok_b) {
    size_t n = s.size();
    std::vector<char> reach(n + 1, 0);
    reach[n] = 1;
    auto match = [&](size_t i, const std::string& t) {
        return i + t.size() <= n && s.compare(i, t.size(), t) == 0 && reach[i + t.size()];
    };
    for (size_t i = n; i-- > 0;) reach[i] = match(i, tok_a) || match(i, tok_b);
    if (!reach[0]) return std::nullopt;
    LetterSeq out;
    const std::string& first = tok_a.size() >= tok_b.size() ? tok_a : tok_b;
    const std::string& second = tok_a.size() >= tok_b.size() ? tok_b : tok_a;
    uint8_t first_id = tok_a.size() >= tok_b.size() ? 0 : 1;
    size_t i = 0;
    while (i < n) {
        if (match(i, first)) {
            out.push_back(first_id);
            i += first.size();
        } else {
            out.push_back(1 - first_id);
            i += second.size();
        }
    }
    return out;
}

std::optional<LetterSeq> factorize_over(const AlphabetPair& p, const ABWord& w) {
    return factorize_tokens(w.str(), p.alpha.str(), p.beta.str());
}

std::vector<AlphabetPair> pairs_up_to_digit_size(size_t bound) {
    // root always included so tiny words still have a tree word to live in;
    // |alpha beta| in digits is 2(p+q)
    std::vector<AlphabetPair> out;
    out.push_back(AlphabetPair::root());
    for (long total = 3; 4 * total < 2 * static_cast<long>(bound); ++total)
        for (long p = 1; p < total; ++p) {
            long q = total - p;
            if (std::gcd(p, q) != 1) continue;
            out.push_back(pair_from_slope({p, q}));
        }
    return out;
}

std::optional<ABWord> min_containing_tree_word(const Word& w) {
    if (w.empty()) throw EmptyWord();
    const std::string& needle = w.str();
    for (long total = 2; 4 * total < 6 * static_cast<long>(w.size()); ++total) {
        for (long p = 1; p < total; ++p) {
            long q = total - p;
            if (std::gcd(p, q) != 1) continue;
            ABWord tw = pair_from_slope({p, q}).tree_word();
            if (tw.to_word().str().find(needle) != std::string::npos) return tw;
        }
    }
    return std::nullopt;
}

namespace {

void collect_cyclic_factors(const AlphabetPair& pair, long n,
                            std::unordered_set<std::string>& sink) {
    std::string w = pair.tree_word().to_word().str();
    // periodized tree word, truncated so factors spanning the seam are found
    std::string ext = w;
    while (ext.size() < w.size() + static_cast<size_t>(n) - 1) ext += w;
    ext.resize(w.size() + n - 1);
    if (ext.size() < static_cast<size_t>(n)) return;
    for (size_t i = 0; i + n <= ext.size(); ++i) sink.insert(ext.substr(i, n));
}

}  // namespace

std::vector<Word> sigma3_enumerate_serial(long n) {
    if (n < 1) throw DomainError("sigma3_enumerate requires n >= 1");
    std::unordered_set<std::string> seen;
    for (const AlphabetPair& p : pairs_up_to_digit_size(3 * n))
        collect_cyclic_factors(p, n, seen);
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const std::string& s : seen) out.push_back(Word(s));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Word> sigma3_enumerate(long n) {
    if (n < 1) throw DomainError("sigma3_enumerate requires n >= 1");
    std::vector<AlphabetPair> pairs = pairs_up_to_digit_size(3 * n);
    std::vector<std::unordered_set<std::string>> chunks;
#pragma omp parallel
    {
#pragma omp single
        chunks.resize(omp_get_num_threads());
        std::unordered_set<std::string>& mine = chunks[omp_get_thread_num()];
#pragma omp for schedule(dynamic, 16)
        for (long i = 0; i < static_cast<long>(pairs.size()); ++i)
            collect_cyclic_factors(pairs[i], n, mine);
    }
    std::unordered_set<std::string> seen;
    for (auto& c : chunks) seen.merge(c);
    std::vector<Word> out;
    out.reserve(seen.size());
    for (const std::string& s : seen) out.push_back(Word(s));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace spectra
