#pragma once

#include <vector>

#include "braids/permutation.hpp"

namespace braids {

/**
 * A word in the Artin generators of the braid group on n strands.
 * Letter g with 1 <= |g| <= n-1 denotes sigma_|g| (inverse when g < 0).
 */
struct BraidWord {
  int n = 0;
  std::vector<int> letters;

  bool operator==(const BraidWord&) const = default;
};

// Validates letter ranges; throws ContractViolation.
BraidWord make_word(int n, std::vector<int> letters);

// The underlying strand permutation: letter g contributes the swap
// (|g|, |g|+1), composed left to right with compose(a, b)(k) = a(b(k)).
Permutation permutation_of_braid(const BraidWord& w);

// Cancels adjacent inverse pairs until none remain.
BraidWord free_reduce(BraidWord w);

// Reverse of the word with all letters negated (the inverse braid).
BraidWord inverse_word(BraidWord w);

// Concatenation; both words must share the same n.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/**
 * The braid of the straight-line motion from the permutation point
 * p(pi, phi) to p(id, phi'): one letter per inversion of pi, signed by
 * the imaginary order of the two strands at the moment their real
 * parts cross.
 */
BraidWord elementary_braid(const Permutation& pi, const Permutation& phi);

// Exact word-problem test via the left-greedy (Garside) normal form.
// Both words must be on the same number of strands.
bool braids_equal(const BraidWord& a, const BraidWord& b);

}  // namespace braids
