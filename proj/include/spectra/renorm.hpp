#pragma once

// Weak/semi renormalizability and the renormalization step: decompositions
// w = w1 gamma w2 over an alphabet pair, the eight-case alphabet refinement,
// iteration to a target alphabet size, and kernel exponent classification.

#include "spectra/christoffel.hpp"

#include <optional>
#include <string>
#include <vector>

namespace spectra {

struct ForbiddenConfiguration : std::runtime_error {
    explicit ForbiddenConfiguration(const std::string& what) : std::runtime_error(what) {}
};
struct NonRenormalizable : std::runtime_error {
    explicit NonRenormalizable(const std::string& what) : std::runtime_error(what) {}
};
struct MixedKernel : std::runtime_error {
    explicit MixedKernel(const std::string& what) : std::runtime_error(what) {}
};

constexpr uint8_t kAlpha = 0;
constexpr uint8_t kBeta = 1;

/// w = w1 . expand(kernel) . w2 with w1 a digit suffix of alpha beta, w2 a
/// digit prefix, both shorter than max(|alpha|,|beta|) digits. The trailing
/// words may be odd digit fragments, so they live at digit level.
struct RenormDecomposition {
    AlphabetPair pair;
    Word w1;
    LetterSeq kernel;  // over {kAlpha, kBeta}
    Word w2;

    Word kernel_digits() const;
    Word digits() const;  // w1 + kernel + w2
    size_t kernel_size_digits() const;
    bool kernel_starts_with(uint8_t letter) const;
    bool kernel_ends_with(uint8_t letter) const;
};

/// Checks the decomposition invariants, including the parent-dependent
/// boundary conditions of the definition.
bool decomposition_valid(const RenormDecomposition& d, std::string* why = nullptr);

/// Finds a decomposition of w over the pair, maximizing the kernel length
/// (ties: shorter w1, then shorter w2). nullopt when none exists.
std::optional<RenormDecomposition> check_weak_renorm(const Word& w, const AlphabetPair& p);

struct SemiRenorm {
    Word extension;  // the extended word actually decomposed
    RenormDecomposition decomposition;
};

/// Extends w by at most one digit on each side until the extension is weakly
/// renormalizable over p; minimal extensions first, right side preferred.
std::optional<SemiRenorm> semi_renorm(const Word& w, const AlphabetPair& p);

struct RenormStep {
    RenormDecomposition decomposition;
    std::string case_label;  // e.g. "no-vv/case3(r=1)"
};

/// One application of the renormalization algorithm: rewrites the
/// decomposition over a child pair per the case analysis. Throws
/// ForbiddenConfiguration when the kernel shape certifies a Markov value
/// above the 3 + e^-r regime (both uu and vv, or the boundary-trapped
/// power cases). budget_r only drives the optional heuristic pattern scan.
RenormStep renorm_step(const RenormDecomposition& d, long budget_r = 0);

struct RenormTrace {
    std::vector<RenormStep> steps;
};

struct RenormUntilResult {
    AlphabetPair pair;
    RenormDecomposition decomposition;
    RenormTrace trace;
};

/// Iterates renorm_step from the trivial (a,b) start (after semi_renorm)
/// until |alpha beta| reaches target_digits. Throws NonRenormalizable if the
/// start fails and propagates ForbiddenConfiguration from the steps.
RenormUntilResult renorm_until(const Word& w, size_t target_digits, long budget_r = 0);

struct KernelViolation {
    size_t index;        // position i of the offending pair (e_i, e_{i+1})
    bool boundary;       // i = 0 or i = l-1 one-sided bullet
    bool unconditional;  // boundary bullets may carry a size_r side condition
    long size_r_power;   // r(theta^{e}) of the relevant power
};

struct KernelForm {
    enum Shape { AlphaPowers, BetaPowers } shape;
    std::vector<long> exponents;  // e_0 .. e_l of theta-powers
    bool ends_with_separator;     // kernel ends with the single-letter block
    std::vector<KernelViolation> violations;
};

/// Parses the kernel as powers of one letter separated by single occurrences
/// of the other; MixedKernel if both alpha alpha and beta beta occur. Flags
/// every adjacent exponent jump outside the characterization.
KernelForm kernel_exponents(const RenormDecomposition& d);

}  // namespace spectra
