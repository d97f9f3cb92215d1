#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braids/permutation.hpp"
#include "braids/permutation_point.hpp"

namespace braids {

enum class Axis : std::uint8_t { Re, Im };

const char* axis_name(Axis axis);

// Directed edge i -> j on the given axis: coordinate of i below that of j.
struct Edge {
  int i;
  int j;
  Axis axis;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

std::string edge_to_string(const Edge& e);

/**
 * A pair of partial orders on {1, ..., n} encoded as one edge-labeled
 * directed graph: Re-edges order real parts, Im-edges imaginary parts.
 * The structure is a valid arrangement when both subgraphs are acyclic
 * and every pair of vertices is comparable in at least one of them.
 */
class Arrangement {
 public:
  explicit Arrangement(int n, std::vector<Edge> edges = {});

  int n() const { return n_; }
  const std::vector<Edge>& edges() const { return edges_; }  // sorted, unique
  bool has_edge(const Edge& e) const;

  void add_edge(const Edge& e);
  void remove_edge(const Edge& e);

  // Is there a non-empty path i -> ... -> j in the axis subgraph?
  bool reaches(int i, int j, Axis axis) const;

  bool axis_acyclic(Axis axis) const;
  bool is_arrangement() const;

  // Pairs (i < j) comparable in neither order.
  std::vector<std::pair<int, int>> incomparable_pairs() const;

  bool operator==(const Arrangement& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  const std::vector<std::uint64_t>& closure(Axis axis) const;

  int n_;
  std::vector<Edge> edges_;
  mutable bool closure_valid_ = false;
  mutable std::vector<std::uint64_t> reach_re_, reach_im_;  // bit j-1 of slot i-1
};

// Union of the edge sets when it is again a valid arrangement.
std::optional<Arrangement> intersect_cells(const Arrangement& a, const Arrangement& b);

// Relabels vertices: edge (i, j) becomes (sigma(i), sigma(j)).
Arrangement relabel(const Permutation& sigma, const Arrangement& g);

// Deterministic permutation point inside the cell: Kahn topological sort
// of each axis subgraph, ties broken by smallest vertex index first.
PermutationPoint permutation_point_in(const Arrangement& g);

// Does p(pi, phi) satisfy every edge of g?
bool point_in_cell(const Arrangement& g, const PermutationPoint& p);

// Does the exact configuration satisfy every edge of g (strictly)?
bool config_in_cell(const Arrangement& g, const ExactConfiguration& z);

// The full arrangement of a configuration: one edge per pair per axis
// wherever the coordinates differ. Requires all points distinct.
Arrangement arrangement_of_configuration(const ExactConfiguration& z);

/**
 * Number of arrangements induced by families of n pairwise disjoint
 * axis-aligned open boxes, counted up to simultaneous relabeling of the
 * two orders. Both orders of a box arrangement are interval orders and
 * jointly compare every pair; conversely each such pair is realizable.
 */
long long count_box_arrangements(int n);

}  // namespace braids
