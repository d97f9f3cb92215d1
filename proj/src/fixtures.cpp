#include "braids/fixtures.hpp"

namespace braids {
namespace fixtures {
namespace {

// 2 cos(k pi / 64) and 2 sin(k pi / 64) for k = 0..32, times 4096.
constexpr int kCos[33] = {8192, 8182, 8153, 8103, 8035, 7946, 7839, 7713, 7568,
                          7405, 7225, 7027, 6811, 6580, 6333, 6070, 5793, 5501,
                          5197, 4880, 4551, 4212, 3862, 3503, 3135, 2760, 2378,
                          1990, 1598, 1202, 803,  402,  0};
constexpr int kSin[33] = {0,    402,  803,  1202, 1598, 1990, 2378, 2760, 3135,
                          3503, 3862, 4212, 4551, 4880, 5197, 5501, 5793, 6070,
                          6333, 6580, 6811, 7027, 7225, 7405, 7568, 7713, 7839,
                          7946, 8035, 8103, 8153, 8182, 8192};

}  // namespace

PLTube quarter_turn_tube() {
  const int segments = 32;
  std::vector<Rational> times;
  for (int k = 0; k <= segments; ++k) times.emplace_back(k, segments);
  // Strand p starts at angle (p-1) * 90 degrees; the quarter-turn
  // phases are exact axis symmetries of the first-quadrant table.
  std::vector<std::vector<QPoint>> centers(4);
  for (int k = 0; k <= segments; ++k) {
    const Rational c(kCos[k], 4096), s(kSin[k], 4096);
    centers[0].push_back(QPoint{c, s});
    centers[1].push_back(QPoint{-s, c});
    centers[2].push_back(QPoint{-c, -s});
    centers[3].push_back(QPoint{s, -c});
  }
  std::vector<std::vector<Rational>> radii(4, std::vector<Rational>(segments, Rational(1, 8)));
  return PLTube(std::move(times), std::move(centers), std::move(radii));
}

Permutation quarter_turn_closure() { return Permutation({2, 3, 4, 1}); }

std::vector<Arrangement> quarter_turn_cover() {
  using enum Axis;
  return {
      Arrangement(4, {{1, 2, Im}, {4, 1, Im}, {4, 3, Im}, {4, 2, Im}, {3, 2, Im}, {3, 1, Re}}),
      Arrangement(4, {{2, 1, Re}, {4, 1, Im}, {4, 3, Im}, {4, 2, Im}, {3, 2, Im}, {3, 1, Re}}),
      Arrangement(4, {{2, 1, Re}, {4, 1, Im}, {4, 2, Im}, {3, 2, Im}, {3, 4, Re}, {3, 1, Re}}),
      Arrangement(4, {{2, 1, Re}, {2, 4, Re}, {4, 1, Im}, {3, 2, Im}, {3, 4, Re}, {3, 1, Re}}),
      Arrangement(4, {{2, 1, Re}, {2, 4, Re}, {4, 1, Im}, {3, 2, Im}, {3, 4, Re}, {3, 1, Im}}),
  };
}

PLPath crossing_pair() {
  std::vector<Rational> times{Rational(0), Rational(1)};
  std::vector<std::vector<QPoint>> vertices{
      {QPoint{Rational(0), Rational(0)}, QPoint{Rational(1), Rational(0)}},
      {QPoint{Rational(1), Rational(1)}, QPoint{Rational(0), Rational(1)}},
  };
  return PLPath(std::move(times), std::move(vertices));
}

}  // namespace fixtures
}  // namespace braids
