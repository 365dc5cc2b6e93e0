#pragma once

#include "knottunnel/corridor.hpp"
#include "knottunnel/exactnum.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace knottunnel {

/// Raw (p,q) torus-knot parameters, possibly negative or swapped.
struct TorusInput {
    Integer p;
    Integer q;
};

/// Canonical form p > q >= 1 (or p = q = 1 for the trivial knot).
/// `mirrored` records an odd number of sign flips in the input.
struct NormalizedTorus {
    Integer p;
    Integer q;
    bool mirrored = false;
};

/// Sort and strip signs. Throws std::domain_error on gcd > 1 (a torus
/// link) or a zero coordinate.
NormalizedTorus normalize(const TorusInput& input);

enum class Letter { U, L };

std::string to_string(Letter l);

/// Chronological nontrivial cabling letters U^{n_2} L^{n_3} U^{n_4} ...
/// with the final exponent reduced by one; the trivial L^{n_1} block is
/// omitted. Throws std::domain_error when the expansion has a single term.
std::vector<Letter> letter_word(const CF& cf);

/// One cabling step: the updated matrix M(K_rho, K_lambda) with the letter
/// multiplied on the left, its stage knot (the row sums), and the integer
/// slope (the permanent) for every step after the first.
struct CablingStep {
    Letter letter;
    Mat2 matrix;
    std::optional<Integer> slope;
    std::pair<Integer, Integer> stage_knot;
};

struct CablingTrace {
    CF cf;
    std::vector<Letter> letters;
    SimpleSlope m0;
    std::vector<CablingStep> steps;
    SString s_string;
};

/// The full slope pipeline for the short tunnel of a nontrivial torus
/// knot. Requires q >= 2. When mirrored, every slope is negated and m0 is
/// replaced by its Q/Z negation.
CablingTrace cabling_trace(const NormalizedTorus& nt);

/// The s-string of the short tunnel: s_i = '0' exactly when letters i and
/// i+1 coincide. Requires q >= 2.
SString torus_sstring(const NormalizedTorus& nt);

/// Depth of the short tunnel via the corridor of its s-string;
/// 0 for the trivial knot.
int torus_depth(const NormalizedTorus& nt);

/// Classification of the short tunnel: regular exactly when
/// p is not congruent to +-1 mod q.
TunnelClass torus_classify(const TorusInput& input);

/// br of a (p,q) torus knot with p > q is q (1 for the trivial knot).
Integer torus_bridge_number(const NormalizedTorus& nt);

/// The printed slope line, e.g. "[ 1/3 ], 5, 17, 29, 99, 169, 577".
std::string slope_line(const CablingTrace& trace);

} // namespace knottunnel
