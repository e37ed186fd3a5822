#pragma once

// Gauss-Cantor sets K(B): exact hull endpoints, expansion bounds of the
// Markov-partition map, Palis-Takens dimension brackets, the lower-bound
// alphabet family, the d-tilde pressure equation, and the Lambert-W
// asymptotics.

#include "spectra/words.hpp"

#include <vector>

namespace spectra {

struct NonPrimitive : DomainError {
    using DomainError::DomainError;
};
struct NoRoot : std::runtime_error {
    explicit NoRoot(const std::string& what) : std::runtime_error(what) {}
};

struct GaussAlphabet {
    std::vector<Word> blocks;
};

/// Throws NonPrimitive unless no block is a prefix of another and >= 2 blocks.
void validate_primitive(const GaussAlphabet& B);

/// Exact extremes of K(B), realized by stationary parity policies (the
/// orientation of the continued-fraction order flips with the parity of
/// consumed digits, so extremal tails are eventually periodic over at most
/// two blocks).
struct HullPoints {
    Surd min_point, max_point;
};
HullPoints hull(const GaussAlphabet& B);

/// Per-block inf/sup of |psi'| over I_j, evaluated exactly at the cylinder
/// images of the hull endpoints and then rounded outward to rationals.
struct ExpansionBounds {
    std::vector<Rat> lambda;   // rounded down
    std::vector<Rat> Lambda;   // rounded up
};
ExpansionBounds expansion_bounds(const GaussAlphabet& B);

struct DimensionBracket {
    CReal beta_lower, alpha_upper;
};

/// alpha solves sum lambda_j^-alpha = 1 and beta solves sum Lambda_j^-beta = 1
/// by certified bisection to width tol, rounded outward.
DimensionBracket dimension_bracket(const GaussAlphabet& B, const Rat& tol);

/// Residual |sum bounds_j^-x - 1| at a point, certified.
CReal pressure_residual(const std::vector<Rat>& bounds, const Rat& x);

/// B = {1^k} u {1^{k+1-j} 22 1^s : 2 <= j <= k+1} with k = 2r and s minimal
/// with r(1^s) >= r.
GaussAlphabet lower_bound_alphabet(long r);

/// All two-block concatenations; primitive whenever B is.
GaussAlphabet square_alphabet(const GaussAlphabet& B);

/// Unique root in (0,1) of
///   (4 phi^{4r})^{-d} + sum_{t=0}^{2r-1} phi^{-2td} e^{-(r+8)d} = 1,
/// bisected to tol. NoRoot when the bracket [1e-12, 1] fails the sign test.
CReal d_tilde(long r, const Rat& tol);

struct AsymptoticD {
    CReal g1;  // 2 W(e^{c0} |log eps|) / |log eps|
    CReal g2;  // 2 log|log eps| / |log eps|
};

/// Requires 0 < eps < 1/e.
AsymptoticD asymptotic_d(const CReal& eps);

}  // namespace spectra
