#pragma once

#include <optional>
#include <vector>

#include "braids/arrangement.hpp"
#include "braids/permutation_point.hpp"
#include "braids/rational.hpp"

namespace braids {

/**
 * Answer of the separation predicate for a pair at time t: the axis
 * coordinate of i_low stays strictly below that of j_high on the whole
 * closed interval [t, until].
 */
struct SepResult {
  int i_low;
  int j_high;
  Axis axis;
  Rational until;
};

/**
 * Abstract motion of n labeled points over the time interval [0, 1],
 * observed only through the separation predicate. Backends may also
 * expose exact endpoint configurations.
 */
class PathApproximation {
 public:
  virtual ~PathApproximation() = default;

  virtual int strand_count() const = 0;
  virtual SepResult sep(int i, int j, const Rational& t) const = 0;
  virtual std::optional<ExactConfiguration> start_configuration() const {
    return std::nullopt;
  }
  virtual std::optional<ExactConfiguration> end_configuration() const {
    return std::nullopt;
  }
};

/**
 * Piecewise-linear motion with exact rational breakpoints. Strand i is
 * linear on each [times[k], times[k+1]]; strands never collide.
 */
class PLPath final : public PathApproximation {
 public:
  // times: strictly increasing, from 0 to 1. vertices[i][k] is the
  // position of strand i+1 at times[k]. Collision-freeness is checked
  // exactly per segment.
  PLPath(std::vector<Rational> times, std::vector<std::vector<QPoint>> vertices);

  int strand_count() const override { return static_cast<int>(vertices_.size()); }
  SepResult sep(int i, int j, const Rational& t) const override;
  std::optional<ExactConfiguration> start_configuration() const override;
  std::optional<ExactConfiguration> end_configuration() const override;

  const std::vector<Rational>& times() const { return times_; }
  const std::vector<std::vector<QPoint>>& vertices() const { return vertices_; }

  QPoint eval(int strand, const Rational& t) const;
  ExactConfiguration configuration_at(const Rational& t) const;

  // Index k with times[k] <= t < times[k+1] (the last segment at t = 1).
  int segment_of(const Rational& t) const;

 private:
  std::vector<Rational> times_;
  std::vector<std::vector<QPoint>> vertices_;
};

/**
 * Piecewise-linear tube: a PL center per strand plus a per-strand,
 * per-segment box radius (in the max norm). The true motion is only
 * known to stay inside the boxes; instantaneous boxes of distinct
 * strands must stay disjoint.
 */
class PLTube final : public PathApproximation {
 public:
  PLTube(std::vector<Rational> times, std::vector<std::vector<QPoint>> centers,
         std::vector<std::vector<Rational>> radii);  // radii[i][k] on segment k

  int strand_count() const override { return static_cast<int>(centers_.size()); }
  SepResult sep(int i, int j, const Rational& t) const override;
  // The exact rational center configurations stand in for the unknown
  // true endpoints; they lie in every cell the true endpoints occupy.
  std::optional<ExactConfiguration> start_configuration() const override;
  std::optional<ExactConfiguration> end_configuration() const override;

  const std::vector<Rational>& times() const { return times_; }
  const std::vector<std::vector<QPoint>>& centers() const { return centers_; }
  const std::vector<std::vector<Rational>>& radii() const { return radii_; }

  const PLPath& center_path() const { return centers_path_; }

 private:
  std::vector<Rational> times_;
  std::vector<std::vector<QPoint>> centers_;
  std::vector<std::vector<Rational>> radii_;
  PLPath centers_path_;
};

// Axis-aligned closed box [re_lo, re_hi] x [im_lo, im_hi].
struct Box {
  Rational re_lo, re_hi, im_lo, im_hi;
};

// Exact hull of the tube of strand i over [a, b] (piecewise-linear
// center hull inflated by the largest radius among touched segments).
Box interval_eval(const PLTube& tube, int strand, const Rational& a, const Rational& b);

// Exact backend: picks the axis whose strict separation at t persists
// longest, computing the first sign change of the PL difference.
SepResult sep_exact(const PLPath& path, int i, int j, const Rational& t);

// Interval backend: delta-halving box separation, comparisons tried in
// the order Re<, Re>, Im<, Im>.
SepResult sep_tube(const PLTube& tube, int i, int j, const Rational& t);

// The restriction of `path` to [a, b], re-parameterized to [0, 1].
PLPath subpath(const PLPath& path, const Rational& a, const Rational& b);

}  // namespace braids
