#pragma once

#include <vector>

#include "braids/permutation.hpp"
#include "braids/rational.hpp"

namespace braids {

// A labeled configuration of n distinct rational points in the plane.
struct ExactConfiguration {
  std::vector<QPoint> points;

  int n() const { return static_cast<int>(points.size()); }
  bool operator==(const ExactConfiguration&) const = default;
};

/**
 * The permutation point p(pi, phi): point k sits at pi(k) + phi(k) i.
 * pi gives the real ranks, phi the imaginary ranks.
 */
struct PermutationPoint {
  Permutation pi;
  Permutation phi;

  bool operator==(const PermutationPoint&) const = default;
};

// The configuration with point k at (pi(k), phi(k)).
ExactConfiguration embed(const PermutationPoint& p);

// Relabeling action: the strand carrying label sigma(k) now carries k,
// i.e. p(pi, phi) maps to p(pi . sigma^-1, phi . sigma^-1).
PermutationPoint act_on_point(const Permutation& sigma, const PermutationPoint& p);

// Same action on a configuration: point k of the result is point
// sigma^-1(k) of the input.
ExactConfiguration act_on_configuration(const Permutation& sigma,
                                        const ExactConfiguration& z);

}  // namespace braids
