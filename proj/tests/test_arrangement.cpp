#include <doctest.h>

#include <random>

#include "braids/arrangement.hpp"
#include "braids/errors.hpp"
#include "support/grid_oracle.hpp"
#include "support/random_gen.hpp"

using namespace braids;

namespace {

ExactConfiguration random_config(std::mt19937& rng, int n) {
  while (true) {
    ExactConfiguration z;
    for (int k = 0; k < n; ++k)
      z.points.push_back(QPoint{testing::random_rational(rng, -8, 8, 16),
                                testing::random_rational(rng, -8, 8, 16)});
    bool distinct = true;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (z.points[a] == z.points[b]) distinct = false;
    if (distinct) return z;
  }
}

}  // namespace

TEST_CASE("construction validates and dedupes") {
  Arrangement g(3, {{1, 2, Axis::Re}, {1, 2, Axis::Re}, {2, 3, Axis::Im}});
  CHECK(g.edges().size() == 2);
  CHECK(g.has_edge({1, 2, Axis::Re}));
  CHECK_THROWS_AS(Arrangement(2, {{1, 1, Axis::Re}}), ContractViolation);
  CHECK_THROWS_AS(Arrangement(2, {{1, 3, Axis::Re}}), ContractViolation);
}

TEST_CASE("reachability and validity") {
  Arrangement g(4, {{1, 2, Axis::Re}, {2, 3, Axis::Re}, {3, 4, Axis::Im}});
  CHECK(g.reaches(1, 3, Axis::Re));
  CHECK_FALSE(g.reaches(1, 4, Axis::Re));
  CHECK_FALSE(g.reaches(1, 3, Axis::Im));
  CHECK_FALSE(g.is_arrangement());  // pair (1, 4) incomparable
  CHECK(g.incomparable_pairs() ==
        std::vector<std::pair<int, int>>{{1, 4}, {2, 4}});

  g.add_edge({4, 1, Axis::Im});
  g.add_edge({4, 2, Axis::Im});
  CHECK(g.is_arrangement());

  // A real cycle breaks validity.
  g.add_edge({3, 1, Axis::Re});
  CHECK_FALSE(g.axis_acyclic(Axis::Re));
  CHECK(g.axis_acyclic(Axis::Im));
  CHECK_FALSE(g.is_arrangement());
}

TEST_CASE("permutation point lies in the cell") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 5;
    Arrangement g = arrangement_of_configuration(random_config(rng, n));
    CHECK(g.is_arrangement());
    PermutationPoint p = permutation_point_in(g);
    CHECK(point_in_cell(g, p));
    CHECK(config_in_cell(g, embed(p)));
  }
}

TEST_CASE("arrangement of a configuration contains it") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    ExactConfiguration z = random_config(rng, 2 + trial % 5);
    CHECK(config_in_cell(arrangement_of_configuration(z), z));
  }
  CHECK_THROWS_AS(arrangement_of_configuration(ExactConfiguration{
                      {QPoint{Rational(1), Rational(1)}, QPoint{Rational(1), Rational(1)}}}),
                  ContractViolation);
}

TEST_CASE("intersection of cells") {
  Arrangement a(2, {{1, 2, Axis::Re}});
  Arrangement b(2, {{1, 2, Axis::Im}});
  auto meet = intersect_cells(a, b);
  REQUIRE(meet.has_value());
  CHECK(meet->edges().size() == 2);

  Arrangement c(2, {{2, 1, Axis::Re}});
  CHECK_FALSE(intersect_cells(a, c).has_value());
}

TEST_CASE("relabel moves cells with the action") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    int n = 2 + trial % 5;
    ExactConfiguration z = random_config(rng, n);
    Arrangement g = arrangement_of_configuration(z);
    Permutation sigma = testing::random_permutation(rng, n);
    CHECK(config_in_cell(relabel(sigma, g), act_on_configuration(sigma, z)));
  }
}

TEST_CASE("box arrangement counts") {
  CHECK(count_box_arrangements(1) == 1);
  CHECK(count_box_arrangements(2) == 4);
  CHECK(count_box_arrangements(3) == 40);
  CHECK(count_box_arrangements(4) == 772);
  CHECK_THROWS_AS(count_box_arrangements(6), ContractViolation);
}

TEST_CASE("box arrangement counts match the grid enumeration") {
  CHECK(testing::grid_box_arrangements(2) == count_box_arrangements(2));
  CHECK(testing::grid_box_arrangements(3) == count_box_arrangements(3));
}
