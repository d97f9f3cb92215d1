#pragma once

#include <vector>

#include "braids/arrangement.hpp"
#include "braids/braid_word.hpp"
#include "braids/path_model.hpp"
#include "braids/permutation_point.hpp"

namespace braids {

/**
 * The braid of a motion, reported between two permutation points: the
 * motion is homotopic to start_point -> (braid word) -> end_point with
 * the bracketing straight moves inside the start/end cells.
 */
struct BraidResult {
  Arrangement start_arrangement;
  PermutationPoint start_point;
  BraidWord word;
  Arrangement end_arrangement;
  PermutationPoint end_point;
};

/**
 * Braid of a covering sequence of arrangements: walks deterministic
 * permutation points of the consecutive intersections, accumulating one
 * elementary braid per step. Consecutive arrangements must intersect.
 */
BraidResult braid_of_cover(const std::vector<Arrangement>& arrangements);

/**
 * Streaming computation driven by the separation predicate: maintains a
 * pointed arrangement, replacing expired edges and accumulating the
 * letters emitted by the insertions, chronologically. With debug_verify
 * the arrangement and point invariants are re-checked every iteration.
 */
BraidResult braid_stream(const PathApproximation& path, bool debug_verify = false);

enum class ComposeMode {
  direct,  // f's end arrangement and point must equal g's start
  bridge,  // join through a point of the intersection cell
};

// Concatenates two results; in bridge mode the words are joined by the
// elementary braids through the intersection of f's end cell and g's
// start cell (which must be non-empty).
BraidResult compose_results(const BraidResult& f, const BraidResult& g, ComposeMode mode);

/**
 * Closed word of a loop with closure permutation sigma (strand k ends
 * where strand sigma(k) started): appends the bridge from the end point
 * back through the relabeled start cell. Throws ClosureError when the
 * end cell and the relabeled start cell do not intersect.
 */
BraidWord close_loop(const BraidResult& r, const Permutation& sigma);

// r's word re-bracketed between the given points, which must lie in the
// start/end cells respectively.
BraidWord bridge_to_points(const BraidResult& r, const PermutationPoint& from,
                           const PermutationPoint& to);

/**
 * The canonical braid of a motion with exact endpoints z0, z1: bridges
 * r to the lexicographic permutation points of the endpoints, making
 * the word independent of every interior point choice.
 */
BraidWord canonical_bridged_word(const BraidResult& r, const ExactConfiguration& z0,
                                 const ExactConfiguration& z1);

// Canonical closed word of a loop with exact start z0: the closed word
// conjugated back to the lexicographic base point of z0.
BraidWord canonical_closed_word(const BraidResult& r, const Permutation& sigma,
                                const ExactConfiguration& z0);

}  // namespace braids
