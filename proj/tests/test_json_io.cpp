#include <doctest.h>

#include <random>

#include "braids/braid_engine.hpp"
#include "braids/errors.hpp"
#include "braids/fixtures.hpp"
#include "braids/json_io.hpp"
#include "support/random_gen.hpp"

using namespace braids;
using nlohmann::json;

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rational(3, 4));
  CHECK(parse_rational("-7") == Rational(-7));
  CHECK(rational_to_string(Rational(6, 4)) == "3/2");
  CHECK(rational_to_string(Rational(-5)) == "-5");
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("a"), ParseError);
}

TEST_CASE("paths round-trip through their file form") {
  std::mt19937 rng(61);
  for (int trial = 0; trial < 10; ++trial) {
    PLPath path = testing::random_pl_path(rng, 2 + trial % 4, 2 + trial % 4, 32);
    auto back = parse_path(path_to_json(path));
    auto* pl = dynamic_cast<PLPath*>(back.get());
    REQUIRE(pl != nullptr);
    CHECK(pl->times() == path.times());
    CHECK(pl->vertices() == path.vertices());
  }
  PLTube tube = fixtures::quarter_turn_tube();
  auto back = parse_path(tube_to_json(tube));
  auto* t = dynamic_cast<PLTube*>(back.get());
  REQUIRE(t != nullptr);
  CHECK(t->radii() == tube.radii());
  CHECK(t->center_path().vertices() == tube.center_path().vertices());
}

TEST_CASE("malformed path files are parse errors") {
  json good = path_to_json(fixtures::crossing_pair());
  CHECK_THROWS_AS(parse_path(json{{"kind", "spline"}}), ParseError);
  json j = good;
  j.erase("times");
  CHECK_THROWS_AS(parse_path(j), ParseError);
  j = good;
  j["times"] = json::array({"0", "2/3"});  // must end at 1
  CHECK_THROWS_AS(parse_path(j), ParseError);
  j = good;
  j["radii"] = json::array();  // radii on a pl_path
  CHECK_THROWS_AS(parse_path(j), ParseError);
  j = good;
  j["strands"].erase(1);  // strand count mismatch
  CHECK_THROWS_AS(parse_path(j), ParseError);
  // Colliding strands fail the model contract, reported as a parse error.
  j = good;
  j["strands"][1] = j["strands"][0];
  CHECK_THROWS_AS(parse_path(j), ParseError);
}

TEST_CASE("arrangements round-trip") {
  Arrangement g(3, {{1, 2, Axis::Re}, {2, 3, Axis::Im}, {1, 3, Axis::Re}});
  CHECK(parse_arrangement(arrangement_to_json(g)) == g);
  CHECK_THROWS_AS(parse_arrangement(json{{"n", 2}}), ParseError);
  CHECK_THROWS_AS(
      parse_arrangement(json{{"n", 2}, {"edges", json::array({json::array({1, 3, "re"})})}}),
      ParseError);
  CHECK_THROWS_AS(
      parse_arrangement(json{{"n", 2}, {"edges", json::array({json::array({1, 2, "up"})})}}),
      ParseError);
}

TEST_CASE("permutations and words round-trip") {
  CHECK(parse_permutation(json::array({2, 3, 1})) == Permutation({2, 3, 1}));
  CHECK_THROWS_AS(parse_permutation(json::array({1, 1, 2})), ParseError);
  BraidWord w = make_word(4, {2, -1, 3, 3});
  CHECK(parse_word(4, word_to_json(w)).letters == w.letters);
  CHECK_THROWS_AS(parse_word(2, json::array({0})), ParseError);
  CHECK_THROWS_AS(parse_word(2, json::array({2})), ParseError);
}

TEST_CASE("results serialize with both interface points") {
  BraidResult r = braid_stream(fixtures::crossing_pair());
  json j = result_to_json(r, make_word(2, {1}));
  CHECK(j.contains("word"));
  CHECK(j["start"].contains("arrangement"));
  CHECK(parse_permutation(j["start"]["pi"]) == r.start_point.pi);
  CHECK(parse_permutation(j["end"]["phi"]) == r.end_point.phi);
  CHECK(parse_arrangement(j["end"]["arrangement"]) == r.end_arrangement);
  CHECK(parse_word(2, j["closed_word"]).letters == std::vector<int>{1});
  json open = result_to_json(r, std::nullopt);
  CHECK(!open.contains("closed_word"));
}
