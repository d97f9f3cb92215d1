#pragma once

#include <vector>

#include "braids/braid_word.hpp"
#include "braids/path_model.hpp"
#include "braids/permutation_point.hpp"

namespace braids {

/**
 * Lexicographic rank permutation of a configuration: point k gets the
 * rank of (Re, Im) in lexicographic order. Requires distinct points.
 */
Permutation lex_order(const ExactConfiguration& z);

// A finite superset of the times where the lexicographic order can
// change along the path: per pair and per segment, the real-difference
// crossing time, plus the endpoints of stretches where the real parts
// agree identically.
std::vector<Rational> discontinuity_times(const PLPath& path);

/**
 * Reference algorithm: the braid of a generic PL path, one letter per
 * transposition of the lexicographic order, signed by the imaginary
 * order of the two swapping strands at the crossing. Throws
 * ContractViolation on non-generic input (simultaneous or non-adjacent
 * order changes, or real parts agreeing on a whole stretch).
 */
BraidWord exact_braid(const PLPath& path);

}  // namespace braids
