#pragma once

#include <map>
#include <string>
#include <vector>

#include "braids/arrangement.hpp"
#include "braids/braid_word.hpp"
#include "braids/path_model.hpp"
#include "braids/permutation_point.hpp"

namespace braids {

/**
 * An arrangement together with a permutation point of its cell and a
 * lifetime per edge. Edge insertion repairs the point by a sequence of
 * adjacent rank transpositions, emitting one braid letter per real-axis
 * swap (the braid of sliding the old point to the new one).
 */
class PointedArrangement {
 public:
  // Point chosen deterministically via permutation_point_in.
  explicit PointedArrangement(Arrangement g);

  const Arrangement& arrangement() const { return g_; }
  const PermutationPoint& point() const { return point_; }
  int n() const { return g_.n(); }

  const std::map<Edge, Rational>& lifetimes() const { return lifetimes_; }
  void set_lifetime(const Edge& e, const Rational& t);
  const Rational& lifetime(const Edge& e) const;

  // Edge in the structure with the smallest lifetime (ties: smallest
  // edge in lexicographic order). Requires a non-empty edge set.
  Edge min_lifetime_edge() const;

  /**
   * Inserts edge (i, j, axis) with the given lifetime and restores the
   * point by adjacent transpositions of the affected ranks, returning
   * the chronological word of emitted letters (empty for the imaginary
   * axis or when the point already satisfies the edge). Throws
   * ContractViolation if the edge would create a cycle.
   */
  BraidWord insert(int i, int j, Axis axis, const Rational& lifetime);

  // Removes an edge; the remaining graph must still be a valid
  // arrangement, otherwise throws ContractViolation.
  void erase_edge(const Edge& e);

  // Vertices whose real rank must move above pi(i) when inserting the
  // real edge (i, j): those reachable from j in the Re-subgraph
  // (including j) with rank below pi(i).
  std::vector<int> affected_set(int i, int j) const;

  // One table row in the style: edges | pi^-1 | phi^-1 | lifetimes.
  std::string dump() const;

 private:
  BraidWord reorder(int i, int j, Axis axis);

  Arrangement g_;
  PermutationPoint point_;
  std::map<Edge, Rational> lifetimes_;
};

}  // namespace braids
