#pragma once

// The Nielsen substitution tree: pairs (alpha, beta), the substitutions U/V,
// b_first/a_last, slope parameterization, factorization over a pair, and the
// Sigma(3,n) enumeration through tree-word factors.

#include "spectra/words.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

struct PrefixMismatch : DomainError {
    using DomainError::DomainError;
};
struct NotReduced : DomainError {
    using DomainError::DomainError;
};

/// Word over the letters a = "22" and b = "11".
class ABWord {
public:
    ABWord() = default;
    explicit ABWord(std::string letters);

    size_t size() const { return s_.size(); }
    bool empty() const { return s_.empty(); }
    char letter(size_t i) const { return s_[i]; }
    const std::string& str() const { return s_; }
    size_t digit_size() const { return 2 * s_.size(); }

    Word to_word() const;
    /// Parses a digit word with all runs of even length; nullopt otherwise.
    static std::optional<ABWord> from_word(const Word& w);

    ABWord transpose() const;
    ABWord operator+(const ABWord& o) const { return ABWord(s_ + o.s_); }
    bool is_palindrome() const;

    auto operator<=>(const ABWord&) const = default;

private:
    std::string s_;
};

/// Nielsen substitutions: U: a -> ab, b -> b; V: a -> a, b -> ab.
ABWord substitute(const ABWord& w, char g);

/// b_first(a w+) = b w+ ; a_last(w- b) = w- a. PrefixMismatch otherwise.
ABWord b_first(const ABWord& w);
ABWord a_last(const ABWord& w);

struct PairSlope {
    long p, q;  // |alpha|/|beta| in letters, lowest terms
};

/// Vertex (alpha, beta) of the doubled tree, with the derivation from (a,b).
struct AlphabetPair {
    ABWord alpha, beta;
    std::string derivation;  // over 'U', 'V'

    static AlphabetPair root() { return {ABWord("a"), ABWord("b"), ""}; }
    bool is_root() const { return derivation.empty(); }
    char last_move() const { return derivation.back(); }

    AlphabetPair child_U() const { return {alpha + beta, beta, derivation + "U"}; }
    AlphabetPair child_V() const { return {alpha, alpha + beta, derivation + "V"}; }
    std::pair<AlphabetPair, AlphabetPair> children() const { return {child_U(), child_V()}; }
    /// Pair this one was derived from; undefined at the root.
    AlphabetPair parent() const;

    ABWord tree_word() const { return alpha + beta; }
    size_t digit_size() const { return alpha.digit_size() + beta.digit_size(); }

    bool operator==(const AlphabetPair& o) const { return alpha == o.alpha && beta == o.beta; }
};

PairSlope slope_of(const AlphabetPair& p);

/// Inverse of slope_of: runs the continued fraction of p/q as U/V moves.
AlphabetPair pair_from_slope(const PairSlope& s);

/// Factorization letters: 0 = alpha, 1 = beta.
using LetterSeq = std::vector<uint8_t>;

/// Factorizes a digit string over two tokens; deterministic (prefers the
/// longer token when both complete). nullopt when no factorization exists.
std::optional<LetterSeq> factorize_tokens(const std::string& s, const std::string& tok_a,
                                          const std::string& tok_b);

/// Factorization of w as a concatenation of alpha and beta.
std::optional<LetterSeq> factorize_over(const AlphabetPair& p, const ABWord& w);

/// Shortest tree word (= alpha beta of some pair) of digit length < 3|w|
/// containing w as a digit factor; nullopt if none exists under that bound.
std::optional<ABWord> min_containing_tree_word(const Word& w);

/// Sigma(3,n): all length-n factors of periodized tree words of digit length
/// < 3n (the root pair is always included). Sorted lexicographically.
std::vector<Word> sigma3_enumerate(long n);
std::vector<Word> sigma3_enumerate_serial(long n);

/// All pairs with digit length |alpha beta| < bound, root included.
std::vector<AlphabetPair> pairs_up_to_digit_size(size_t bound);

}  // namespace spectra
