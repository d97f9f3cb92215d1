#include "braids/path_model.hpp"

#include <algorithm>

#include "braids/errors.hpp"

namespace braids {
namespace {

void check_time_grid(const std::vector<Rational>& times) {
  if (times.size() < 2 || times.front() != 0 || times.back() != 1)
    throw ContractViolation("time grid must run from 0 to 1 with at least one segment");
  for (size_t k = 0; k + 1 < times.size(); ++k)
    if (!(times[k] < times[k + 1]))
      throw ContractViolation("time grid must be strictly increasing");
}

// The sub-interval of [0, 1] where |(1-u) a + u b| <= r, as an optional
// pair of bounds.
std::optional<std::pair<Rational, Rational>> small_band(const Rational& a,
                                                        const Rational& b,
                                                        const Rational& r) {
  if (a == b) {
    if (abs(a) <= r) return std::make_pair(Rational(0), Rational(1));
    return std::nullopt;
  }
  Rational u1 = (a - r) / (a - b);
  Rational u2 = (a + r) / (a - b);
  if (u2 < u1) std::swap(u1, u2);
  u1 = std::max(u1, Rational(0));
  u2 = std::min(u2, Rational(1));
  if (u2 < u1) return std::nullopt;
  return std::make_pair(u1, u2);
}

}  // namespace

// --- PLPath ---

PLPath::PLPath(std::vector<Rational> times, std::vector<std::vector<QPoint>> vertices)
    : times_(std::move(times)), vertices_(std::move(vertices)) {
  check_time_grid(times_);
  if (vertices_.empty()) throw ContractViolation("path needs at least one strand");
  for (const auto& strand : vertices_)
    if (strand.size() != times_.size())
      throw ContractViolation("each strand needs one vertex per breakpoint");
  const int n = strand_count();
  for (size_t k = 0; k + 1 < times_.size(); ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        // Collision on the segment iff some convex combination of the
        // endpoint differences vanishes in both coordinates.
        QPoint da{vertices_[i - 1][k].re - vertices_[j - 1][k].re,
                  vertices_[i - 1][k].im - vertices_[j - 1][k].im};
        QPoint db{vertices_[i - 1][k + 1].re - vertices_[j - 1][k + 1].re,
                  vertices_[i - 1][k + 1].im - vertices_[j - 1][k + 1].im};
        auto re_band = small_band(da.re, db.re, Rational(0));
        if (!re_band) continue;
        auto im_band = small_band(da.im, db.im, Rational(0));
        if (!im_band) continue;
        if (std::max(re_band->first, im_band->first) <=
            std::min(re_band->second, im_band->second))
          throw ContractViolation("strands " + std::to_string(i) + " and " +
                                  std::to_string(j) + " collide on segment " +
                                  std::to_string(k));
      }
    }
  }
}

int PLPath::segment_of(const Rational& t) const {
  if (t < 0 || t > 1) throw ContractViolation("time outside [0, 1]");
  auto it = std::upper_bound(times_.begin(), times_.end(), t);
  int k = static_cast<int>(it - times_.begin()) - 1;
  return std::min(k, static_cast<int>(times_.size()) - 2);
}

QPoint PLPath::eval(int strand, const Rational& t) const {
  const int k = segment_of(t);
  const Rational lambda = (t - times_[k]) / (times_[k + 1] - times_[k]);
  const QPoint& a = vertices_[strand - 1][k];
  const QPoint& b = vertices_[strand - 1][k + 1];
  return QPoint{a.re + lambda * (b.re - a.re), a.im + lambda * (b.im - a.im)};
}

ExactConfiguration PLPath::configuration_at(const Rational& t) const {
  ExactConfiguration z;
  for (int i = 1; i <= strand_count(); ++i) z.points.push_back(eval(i, t));
  return z;
}

std::optional<ExactConfiguration> PLPath::start_configuration() const {
  return configuration_at(Rational(0));
}

std::optional<ExactConfiguration> PLPath::end_configuration() const {
  return configuration_at(Rational(1));
}

SepResult PLPath::sep(int i, int j, const Rational& t) const {
  return sep_exact(*this, i, j, t);
}

SepResult sep_exact(const PLPath& path, int i, int j, const Rational& t) {
  const int n = path.strand_count();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw ContractViolation("sep: bad strand pair");
  if (t < 0 || !(t < 1)) throw ContractViolation("sep: time must satisfy 0 <= t < 1");

  // First vanishing time of the axis difference after t (nullopt: never).
  auto first_root = [&](Axis axis) -> std::optional<Rational> {
    auto diff = [&](const Rational& s) {
      QPoint a = path.eval(i, s), b = path.eval(j, s);
      return axis == Axis::Re ? a.re - b.re : a.im - b.im;
    };
    Rational prev_t = t;
    Rational prev_v = diff(t);
    for (int k = path.segment_of(t) + 1; k < static_cast<int>(path.times().size()); ++k) {
      const Rational& cur_t = path.times()[k];
      if (!(cur_t > t)) continue;
      Rational cur_v = diff(cur_t);
      if (cur_v == 0) {
        if (prev_v == 0) return prev_t;
        return cur_t;
      }
      if ((prev_v > 0) != (cur_v > 0) && prev_v != 0)
        return prev_t + (cur_t - prev_t) * prev_v / (prev_v - cur_v);
      prev_t = cur_t;
      prev_v = cur_v;
    }
    return std::nullopt;
  };

  QPoint a = path.eval(i, t), b = path.eval(j, t);
  const Rational dre = a.re - b.re, dim = a.im - b.im;
  if (dre == 0 && dim == 0)
    throw ContractViolation("sep: strands coincide at the query time");

  // Among the axes that strictly separate at t, keep the one whose
  // separation persists longest.
  std::optional<Axis> best;
  std::optional<Rational> best_root;  // nullopt = never vanishes
  for (Axis axis : {Axis::Re, Axis::Im}) {
    if ((axis == Axis::Re ? dre : dim) == 0) continue;
    auto root = first_root(axis);
    if (!best || (best_root && (!root || *root > *best_root))) {
      best = axis;
      best_root = root;
    }
  }
  const Rational d = *best == Axis::Re ? dre : dim;
  Rational until = best_root ? (t + *best_root) / 2 : Rational(1);
  return d < 0 ? SepResult{i, j, *best, until} : SepResult{j, i, *best, until};
}

// --- PLTube ---

PLTube::PLTube(std::vector<Rational> times, std::vector<std::vector<QPoint>> centers,
               std::vector<std::vector<Rational>> radii)
    : times_(std::move(times)),
      centers_(std::move(centers)),
      radii_(std::move(radii)),
      centers_path_(times_, centers_) {
  // The center PLPath constructor has validated grid and sizes.
  const int n = strand_count();
  const size_t segments = times_.size() - 1;
  if (radii_.size() != centers_.size())
    throw ContractViolation("tube needs one radius row per strand");
  for (const auto& row : radii_) {
    if (row.size() != segments)
      throw ContractViolation("tube needs one radius per strand per segment");
    for (const Rational& r : row)
      if (r < 0) throw ContractViolation("tube radii must be non-negative");
  }
  // Instantaneous boxes of distinct strands must stay disjoint: per
  // segment the sets {t : |d_axis(t)| <= r_i + r_j} are intervals; the
  // tubes meet iff the two intervals overlap.
  for (size_t k = 0; k < segments; ++k) {
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        const Rational r = radii_[i - 1][k] + radii_[j - 1][k];
        auto band = [&](auto coord) {
          return small_band(coord(centers_[i - 1][k]) - coord(centers_[j - 1][k]),
                            coord(centers_[i - 1][k + 1]) - coord(centers_[j - 1][k + 1]),
                            r);
        };
        auto re_band = band([](const QPoint& p) { return p.re; });
        if (!re_band) continue;
        auto im_band = band([](const QPoint& p) { return p.im; });
        if (!im_band) continue;
        if (std::max(re_band->first, im_band->first) <=
            std::min(re_band->second, im_band->second))
          throw ContractViolation("tubes of strands " + std::to_string(i) + " and " +
                                  std::to_string(j) + " overlap on segment " +
                                  std::to_string(k));
      }
    }
  }
}

std::optional<ExactConfiguration> PLTube::start_configuration() const {
  return centers_path_.configuration_at(Rational(0));
}

std::optional<ExactConfiguration> PLTube::end_configuration() const {
  return centers_path_.configuration_at(Rational(1));
}

SepResult PLTube::sep(int i, int j, const Rational& t) const {
  return sep_tube(*this, i, j, t);
}

Box interval_eval(const PLTube& tube, int strand, const Rational& a, const Rational& b) {
  if (a > b) throw ContractViolation("interval_eval: empty interval");
  const PLPath& path = tube.center_path();
  QPoint p = path.eval(strand, a);
  Box box{p.re, p.re, p.im, p.im};
  auto absorb = [&box](const QPoint& q) {
    box.re_lo = std::min(box.re_lo, q.re);
    box.re_hi = std::max(box.re_hi, q.re);
    box.im_lo = std::min(box.im_lo, q.im);
    box.im_hi = std::max(box.im_hi, q.im);
  };
  absorb(path.eval(strand, b));
  for (const Rational& bp : tube.times())
    if (a < bp && bp < b) absorb(path.eval(strand, bp));
  // Inflate by the largest radius among the touched segments.
  Rational r(0);
  for (size_t k = 0; k + 1 < tube.times().size(); ++k)
    if (tube.times()[k] <= b && a <= tube.times()[k + 1])
      r = std::max(r, tube.radii()[strand - 1][k]);
  box.re_lo -= r;
  box.re_hi += r;
  box.im_lo -= r;
  box.im_hi += r;
  return box;
}

SepResult sep_tube(const PLTube& tube, int i, int j, const Rational& t) {
  const int n = tube.strand_count();
  if (i < 1 || i > n || j < 1 || j > n || i == j)
    throw ContractViolation("sep: bad strand pair");
  if (t < 0 || !(t < 1)) throw ContractViolation("sep: time must satisfy 0 <= t < 1");

  Rational delta = 1 - t;
  const Rational floor = delta / (Rational(std::uint64_t(1) << 32) *
                                  Rational(std::uint64_t(1) << 32));
  while (delta >= floor) {
    Box bi = interval_eval(tube, i, t, t + delta);
    Box bj = interval_eval(tube, j, t, t + delta);
    if (bi.re_hi < bj.re_lo) return SepResult{i, j, Axis::Re, t + delta};
    if (bj.re_hi < bi.re_lo) return SepResult{j, i, Axis::Re, t + delta};
    if (bi.im_hi < bj.im_lo) return SepResult{i, j, Axis::Im, t + delta};
    if (bj.im_hi < bi.im_lo) return SepResult{j, i, Axis::Im, t + delta};
    delta /= 2;
  }
  throw ContractViolation("tubes of strands " + std::to_string(i) + " and " +
                          std::to_string(j) + " cannot be separated at time " +
                          rational_to_string(t));
}

PLPath subpath(const PLPath& path, const Rational& a, const Rational& b) {
  if (!(Rational(0) <= a && a < b && b <= 1))
    throw ContractViolation("subpath needs 0 <= a < b <= 1");
  std::vector<Rational> times{0};
  std::vector<Rational> sample{a};
  for (const Rational& t : path.times())
    if (a < t && t < b) {
      times.push_back((t - a) / (b - a));
      sample.push_back(t);
    }
  times.push_back(1);
  sample.push_back(b);
  std::vector<std::vector<QPoint>> vertices(path.strand_count());
  for (int i = 1; i <= path.strand_count(); ++i)
    for (const Rational& t : sample) vertices[i - 1].push_back(path.eval(i, t));
  return PLPath(std::move(times), std::move(vertices));
}

}  // namespace braids
