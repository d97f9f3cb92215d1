#pragma once

#include <vector>

#include "braids/arrangement.hpp"
#include "braids/path_model.hpp"
#include "braids/permutation.hpp"

namespace braids {
namespace fixtures {

/**
 * Four points at radius 2, ninety degrees apart, rotating a quarter
 * turn counterclockwise: a closed motion with closure 1->2->3->4->1.
 * Sampled at 32 breakpoints with centers rounded to denominator 4096
 * and a uniform tube radius of 1/8 (far above the rounding error).
 */
PLTube quarter_turn_tube();

// Closure permutation of the quarter turn: strand k ends where strand
// k+1 (cyclically) started.
Permutation quarter_turn_closure();

// The five-arrangement covering sequence of the quarter-turn motion.
std::vector<Arrangement> quarter_turn_cover();

// Two strands swapping along straight lines: F1 = s, F2 = 1 - s + i.
PLPath crossing_pair();

}  // namespace fixtures
}  // namespace braids
