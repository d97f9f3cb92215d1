#pragma once

#include <vector>

#include "braids/arrangement.hpp"
#include "braids/path_model.hpp"

namespace braids {

/**
 * A covering sequence for a motion: arrangements[k] contains the
 * configuration for every time in [times[k], times[k+1]], and
 * consecutive arrangements intersect.
 */
struct Cover {
  std::vector<Arrangement> arrangements;
  std::vector<Rational> times;  // arrangements.size() + 1 entries, 0 to 1
};

/**
 * Computes a cover by querying the separation predicate: the initial
 * arrangement queries every pair at t = 0; afterwards the incomparable
 * pairs left by dropping the minimum-lifetime edge are re-queried at
 * its expiry time. One snapshot per outer iteration, stored verbatim.
 */
Cover cover(const PathApproximation& path);

}  // namespace braids
