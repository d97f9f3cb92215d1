// End-to-end acceptance checks: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "braids/arrangement.hpp"
#include "braids/braid_engine.hpp"
#include "braids/errors.hpp"
#include "braids/exact_oracle.hpp"
#include "braids/fixtures.hpp"
#include "braids/path_model.hpp"
#include "braids/pointed_arrangement.hpp"
#include "support/arrangement_gen.hpp"
#include "support/grid_oracle.hpp"
#include "support/random_gen.hpp"
#include "support/word_variants.hpp"

using namespace braids;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

void report(int number, bool ok, const std::string& detail, double ms) {
  std::printf("%s criterion %d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", number,
              detail.c_str(), ms);
  if (!ok) ++failures;
}

// --- 1: box arrangement counts -------------------------------------------

void criterion_counts() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string detail = "box arrangement counts";
  const long long expected[] = {0, 1, 4, 40, 772};
  for (int n = 2; n <= 4; ++n) {
    auto tn = Clock::now();
    long long got = count_box_arrangements(n);
    double elapsed = ms_since(tn);
    if (got != expected[n] || (n == 4 && elapsed > 60000)) {
      ok = false;
      detail += " [n=" + std::to_string(n) + " gave " + std::to_string(got) +
                " in " + std::to_string(elapsed) + " ms]";
    }
  }
  for (int n = 2; n <= 3; ++n) {
    long long grid = testing::grid_box_arrangements(n);
    if (grid != expected[n]) {
      ok = false;
      detail += " [grid oracle n=" + std::to_string(n) + " gave " +
                std::to_string(grid) + "]";
    }
  }
  report(1, ok, detail + " 4/40/772, grid-checked for n<=3", ms_since(t0));
}

// --- 2: closed word of the quarter-turn tube ------------------------------

void criterion_quarter_turn() {
  auto t0 = Clock::now();
  bool ok = false;
  std::string detail = "quarter-turn tube closes to s2 s1 s3";
  try {
    PLTube tube = fixtures::quarter_turn_tube();
    BraidResult r = braid_stream(tube);
    BraidWord w = canonical_closed_word(r, fixtures::quarter_turn_closure(),
                                        *tube.start_configuration());
    ok = braids_equal(w, make_word(4, {2, 1, 3}));
  } catch (const std::exception& e) {
    detail += std::string(" [") + e.what() + "]";
  }
  double ms = ms_since(t0);
  if (ms > 1000) {
    ok = false;
    detail += " [over the 1 s budget]";
  }
  report(2, ok, detail, ms);
}

// --- 3: braid of the five-arrangement cover -------------------------------

void criterion_cover_braid() {
  auto t0 = Clock::now();
  bool ok = false;
  std::string detail = "five-arrangement cover yields s2 s1";
  try {
    BraidResult r = braid_of_cover(fixtures::quarter_turn_cover());
    PermutationPoint p1{Permutation({4, 3, 1, 2}), Permutation({3, 4, 2, 1})};
    PermutationPoint p4{Permutation({4, 1, 2, 3}), Permutation({4, 3, 2, 1})};
    ok = braids_equal(bridge_to_points(r, p1, p4), make_word(4, {2, 1}));
  } catch (const std::exception& e) {
    detail += std::string(" [") + e.what() + "]";
  }
  report(3, ok, detail, ms_since(t0));
}

// --- 4: streaming braid vs exact reference --------------------------------

void criterion_stream_vs_oracle() {
  auto t0 = Clock::now();
  std::mt19937 rng(2024);
  int good = 0, bad = 0;
  for (int trial = 0; trial < 200; ++trial) {
    int n = 2 + trial % 5;           // 2..6 strands
    int segments = 2 + trial % 9;    // 2..10 segments
    PLPath path = testing::random_pl_path(rng, n, segments, 64);
    std::optional<BraidWord> reference;
    try {
      reference = exact_braid(path);
    } catch (const ContractViolation&) {
      --trial;  // non-generic sample: replace it
      continue;
    }
    try {
      BraidResult r = braid_stream(path);
      BraidWord streamed = canonical_bridged_word(
          r, *path.start_configuration(), *path.end_configuration());
      braids_equal(streamed, *reference) ? ++good : ++bad;
    } catch (const std::exception&) {
      ++bad;
    }
  }
  double ms = ms_since(t0);
  bool ok = good == 200 && bad == 0 && ms < 300000;
  report(4, ok,
         "streaming vs exact reference on " + std::to_string(good) + "/200 random motions",
         ms);
}

// --- 5: separation predicate soundness ------------------------------------

bool sep_answer_sound(const PathApproximation& backend, const PLTube* tube,
                      const PLPath* path, const SepResult& s, const Rational& t) {
  if (!(t < s.until) || s.until > 1) return false;
  for (int k = 0; k <= 65; ++k) {
    Rational u = t + (s.until - t) * k / 65;
    if (path) {
      QPoint a = path->eval(s.i_low, u), b = path->eval(s.j_high, u);
      const Rational& lo = s.axis == Axis::Re ? a.re : a.im;
      const Rational& hi = s.axis == Axis::Re ? b.re : b.im;
      if (!(lo < hi)) return false;
    } else {
      Box a = interval_eval(*tube, s.i_low, u, u);
      Box b = interval_eval(*tube, s.j_high, u, u);
      const Rational& lo = s.axis == Axis::Re ? a.re_hi : a.im_hi;
      const Rational& hi = s.axis == Axis::Re ? b.re_lo : b.im_lo;
      if (!(lo < hi)) return false;
    }
  }
  (void)backend;
  return true;
}

std::optional<PLTube> shrink_to_tube(const PLPath& path, std::mt19937& rng) {
  int segments = static_cast<int>(path.times().size()) - 1;
  Rational r(1, 8 << (rng() % 3));
  for (int attempt = 0; attempt < 24; ++attempt, r /= 2) {
    try {
      std::vector<std::vector<Rational>> radii(
          path.vertices().size(), std::vector<Rational>(segments, r));
      return PLTube(path.times(), path.vertices(), radii);
    } catch (const ContractViolation&) {
    }
  }
  return std::nullopt;
}

void criterion_sep() {
  auto t0 = Clock::now();
  std::mt19937 rng(777);
  std::vector<std::unique_ptr<PLPath>> paths;
  std::vector<std::unique_ptr<PLTube>> tubes;
  while (paths.size() < 12)
    paths.push_back(std::make_unique<PLPath>(
        testing::random_pl_path(rng, 2 + rng() % 4, 2 + rng() % 5, 32)));
  while (tubes.size() < 12) {
    PLPath p = testing::random_pl_path(rng, 2 + rng() % 4, 2 + rng() % 5, 32);
    if (auto t = shrink_to_tube(p, rng)) tubes.push_back(std::make_unique<PLTube>(*t));
  }
  int violations = 0;
  for (int q = 0; q < 10000; ++q) {
    bool use_tube = q % 2;
    const PathApproximation& backend =
        use_tube ? static_cast<const PathApproximation&>(*tubes[q / 2 % tubes.size()])
                 : *paths[q / 2 % paths.size()];
    int n = backend.strand_count();
    int i = 1 + rng() % n, j = 1 + rng() % n;
    if (i == j) j = i % n + 1;
    Rational t = testing::random_rational(rng, 0, 1, 97);
    if (t == 1) t = Rational(96, 97);
    SepResult s = backend.sep(i, j, t);
    bool labels_ok = (s.i_low == i && s.j_high == j) || (s.i_low == j && s.j_high == i);
    const PLTube* tube = use_tube ? static_cast<const PLTube*>(&backend) : nullptr;
    const PLPath* path = use_tube ? nullptr : static_cast<const PLPath*>(&backend);
    if (!labels_ok || !sep_answer_sound(backend, tube, path, s, t)) ++violations;
  }
  report(5, violations == 0,
         "10000 separation queries verified at 66 sample times, " +
             std::to_string(violations) + " violations",
         ms_since(t0));
}

// --- 6: edge insertion vs elementary braid --------------------------------

void criterion_insert() {
  auto t0 = Clock::now();
  std::mt19937 rng(999);
  int done = 0, violations = 0;
  while (done < 1000) {
    Arrangement g = testing::random_arrangement(rng, 2 + rng() % 6);
    auto edge = testing::random_insertable_edge(rng, g);
    if (!edge) continue;
    ++done;
    PointedArrangement pa(g);
    Permutation pi_old = pa.point().pi, phi_old = pa.point().phi;
    BraidWord w = pa.insert(edge->i, edge->j, edge->axis, Rational(1));
    Permutation inv = pa.point().pi.inverse();
    bool ok = point_in_cell(pa.arrangement(), pa.point()) &&
              braids_equal(w, elementary_braid(compose(pi_old, inv),
                                               compose(phi_old, inv)));
    if (!ok) ++violations;
  }
  report(6, violations == 0,
         "1000 edge insertions match their elementary braids, " +
             std::to_string(violations) + " violations",
         ms_since(t0));
}

// --- 7: braid word equivalence --------------------------------------------

void criterion_equality() {
  auto t0 = Clock::now();
  std::mt19937 rng(1234);
  int violations = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int n = 2 + trial % 7;
    BraidWord w = testing::random_word(rng, n, 1 + trial % 12);
    if (!braids_equal(w, testing::equivalent_variant(rng, w))) ++violations;
  }
  BraidWord pos = make_word(2, {1}), neg = make_word(2, {-1}), empty = make_word(2, {});
  if (braids_equal(pos, neg) || braids_equal(pos, empty) || braids_equal(neg, empty))
    ++violations;
  report(7, violations == 0,
         "1000 rewrites recognized equal; generator, inverse and identity "
         "distinguished; " + std::to_string(violations) + " violations",
         ms_since(t0));
}

// --- 8: splitting and recomposing motions ---------------------------------

void criterion_split() {
  auto t0 = Clock::now();
  std::mt19937 rng(4321);
  int good = 0;
  for (int trial = 0; trial < 50; ++trial) {
    int n = 2 + trial % 4;
    PLPath path = testing::random_pl_path(rng, n, 2 + trial % 6, 32);
    Rational cut = testing::random_rational(rng, 0, 1, 29);
    if (cut == 0 || cut == 1) cut = Rational(1, 2);
    try {
      BraidResult left = braid_stream(subpath(path, Rational(0), cut));
      BraidResult right = braid_stream(subpath(path, cut, Rational(1)));
      BraidResult joined = compose_results(left, right, ComposeMode::bridge);
      BraidWord split_word = canonical_bridged_word(
          joined, *path.start_configuration(), *path.end_configuration());
      BraidWord whole = canonical_bridged_word(braid_stream(path),
                                               *path.start_configuration(),
                                               *path.end_configuration());
      if (braids_equal(split_word, whole)) ++good;
    } catch (const std::exception&) {
    }
  }
  report(8, good == 50,
         "split-and-recompose agreed on " + std::to_string(good) + "/50 motions",
         ms_since(t0));
}

}  // namespace

int main() {
  criterion_counts();
  criterion_quarter_turn();
  criterion_cover_braid();
  criterion_stream_vs_oracle();
  criterion_sep();
  criterion_insert();
  criterion_equality();
  criterion_split();
  return failures;
}
