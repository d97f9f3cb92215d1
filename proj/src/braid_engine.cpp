#include "braids/braid_engine.hpp"

#include <map>

#include "braids/errors.hpp"
#include "braids/exact_oracle.hpp"
#include "braids/pointed_arrangement.hpp"

namespace braids {
namespace {

// Elementary braid of the straight move p(pi, phi) -> p(pi2, phi2)
// inside a common cell; only the target's real ranks matter.
BraidWord straight_move(const PermutationPoint& from, const PermutationPoint& to) {
  Permutation inv = to.pi.inverse();
  return elementary_braid(compose(from.pi, inv), compose(from.phi, inv));
}

}  // namespace

BraidResult braid_of_cover(const std::vector<Arrangement>& arrangements) {
  if (arrangements.empty())
    throw ContractViolation("braid_of_cover: empty cover");
  const int n = arrangements.front().n();
  for (size_t k = 0; k < arrangements.size(); ++k)
    if (arrangements[k].n() != n || !arrangements[k].is_arrangement())
      throw ContractViolation("braid_of_cover: entry " + std::to_string(k) +
                              " is not a valid arrangement");
  PermutationPoint p = permutation_point_in(arrangements.front());
  BraidResult out{arrangements.front(), p, BraidWord{n, {}}, arrangements.back(), p};
  for (size_t k = 1; k < arrangements.size(); ++k) {
    auto meet = intersect_cells(arrangements[k - 1], arrangements[k]);
    if (!meet)
      throw ContractViolation("braid_of_cover: entries " + std::to_string(k - 1) +
                              " and " + std::to_string(k) + " do not intersect");
    PermutationPoint q = permutation_point_in(*meet);
    out.word = concat(out.word, straight_move(p, q));
    p = q;
  }
  out.end_point = p;
  return out;
}

BraidResult braid_stream(const PathApproximation& path, bool debug_verify) {
  const int n = path.strand_count();
  if (n == 1) {
    Arrangement g(1);
    PermutationPoint p{Permutation::identity(1), Permutation::identity(1)};
    return BraidResult{g, p, BraidWord{1, {}}, g, p};
  }

  Arrangement g0(n);
  std::map<Edge, Rational> initial;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      SepResult r = path.sep(i, j, Rational(0));
      Edge e{r.i_low, r.j_high, r.axis};
      g0.add_edge(e);
      initial[e] = r.until;
    }
  PointedArrangement pa(g0);  // validates the arrangement
  for (const auto& [e, life] : initial) pa.set_lifetime(e, life);

  BraidResult out{g0, pa.point(), BraidWord{n, {}}, g0, pa.point()};
  const long guard = 1000000;
  long iterations = 0;
  while (true) {
    Edge e = pa.min_lifetime_edge();
    const Rational t = pa.lifetime(e);
    if (t >= 1) break;
    if (++iterations > guard)
      throw ContractViolation("braid_stream: no progress after " +
                              std::to_string(guard) + " iterations near edge " +
                              edge_to_string(e) + " at time " + rational_to_string(t));

    // A transitively implied edge can simply be dropped.
    Arrangement without = pa.arrangement();
    without.remove_edge(e);
    if (without.reaches(e.i, e.j, e.axis)) {
      pa.erase_edge(e);
      continue;
    }

    SepResult r = path.sep(e.i, e.j, t);
    Edge fresh{r.i_low, r.j_high, r.axis};
    if (fresh == e) {
      pa.set_lifetime(e, r.until);  // same separation, extended lifetime
      continue;
    }
    out.word = concat(out.word, pa.insert(fresh.i, fresh.j, fresh.axis, r.until));

    // Keep every pair that relied on the dropped edge comparable: chain
    // predecessors of i onto j and j's successors onto i, evaluated in
    // the graph without e.
    without = pa.arrangement();
    without.remove_edge(e);
    for (int k = 1; k <= n; ++k) {
      if (k == e.i || k == e.j) continue;
      if (without.reaches(k, e.i, e.axis) && !without.reaches(k, e.j, e.axis)) {
        pa.insert(k, e.j, e.axis, t);
        without.add_edge(Edge{k, e.j, e.axis});
      }
      if (without.reaches(e.j, k, e.axis) && !without.reaches(e.i, k, e.axis)) {
        pa.insert(e.i, k, e.axis, t);
        without.add_edge(Edge{e.i, k, e.axis});
      }
    }
    pa.erase_edge(e);

    if (debug_verify &&
        (!pa.arrangement().is_arrangement() ||
         !point_in_cell(pa.arrangement(), pa.point())))
      throw ContractViolation("braid_stream: invariant broken at time " +
                              rational_to_string(t));
  }
  out.end_arrangement = pa.arrangement();
  out.end_point = pa.point();
  return out;
}

BraidResult compose_results(const BraidResult& f, const BraidResult& g, ComposeMode mode) {
  if (f.word.n != g.word.n)
    throw ContractViolation("compose: strand counts differ");
  if (mode == ComposeMode::direct) {
    if (!(f.end_arrangement == g.start_arrangement) || !(f.end_point == g.start_point))
      throw ContractViolation("compose: endpoints do not match for direct mode");
    return BraidResult{f.start_arrangement, f.start_point, concat(f.word, g.word),
                       g.end_arrangement, g.end_point};
  }
  auto meet = intersect_cells(f.end_arrangement, g.start_arrangement);
  if (!meet)
    throw ContractViolation("compose: end and start cells do not intersect");
  PermutationPoint q = permutation_point_in(*meet);
  BraidWord word = concat(concat(f.word, straight_move(f.end_point, q)),
                          concat(straight_move(q, g.start_point), g.word));
  return BraidResult{f.start_arrangement, f.start_point, std::move(word),
                     g.end_arrangement, g.end_point};
}

BraidWord close_loop(const BraidResult& r, const Permutation& sigma) {
  if (sigma.size() != r.word.n)
    throw ContractViolation("close_loop: closure size mismatch");
  // Strand k ends where strand sigma(k) started, so the end cell must
  // meet the accordingly relabeled start cell.
  Arrangement shifted = relabel(sigma.inverse(), r.start_arrangement);
  auto meet = intersect_cells(r.end_arrangement, shifted);
  if (!meet)
    throw ClosureError("closure permutation inconsistent: end cell does not "
                       "meet the relabeled start cell");
  PermutationPoint q = permutation_point_in(*meet);
  PermutationPoint target = act_on_point(sigma.inverse(), r.start_point);
  return concat(r.word, concat(straight_move(r.end_point, q),
                               straight_move(q, target)));
}

BraidWord bridge_to_points(const BraidResult& r, const PermutationPoint& from,
                           const PermutationPoint& to) {
  if (!point_in_cell(r.start_arrangement, from) ||
      !point_in_cell(r.end_arrangement, to))
    throw ContractViolation("bridge_to_points: point outside its cell");
  return concat(straight_move(from, r.start_point),
                concat(r.word, straight_move(r.end_point, to)));
}

BraidWord canonical_bridged_word(const BraidResult& r, const ExactConfiguration& z0,
                                 const ExactConfiguration& z1) {
  if (!config_in_cell(r.start_arrangement, z0) ||
      !config_in_cell(r.end_arrangement, z1))
    throw ContractViolation("canonical bridging: endpoint outside its cell");
  // The straight move from an exact endpoint to any permutation point
  // sharing its lexicographic real ranks keeps the order constant, so
  // bridging to p(lex(z), phi) contributes no letters for any phi that
  // fits the cell.
  PermutationPoint from{lex_order(z0), permutation_point_in(r.start_arrangement).phi};
  PermutationPoint to{lex_order(z1), permutation_point_in(r.end_arrangement).phi};
  return bridge_to_points(r, from, to);
}

BraidWord canonical_closed_word(const BraidResult& r, const Permutation& sigma,
                                const ExactConfiguration& z0) {
  if (!config_in_cell(r.start_arrangement, z0))
    throw ContractViolation("canonical closure: start endpoint outside its cell");
  BraidWord inner = close_loop(r, sigma);
  PermutationPoint base{lex_order(z0), permutation_point_in(r.start_arrangement).phi};
  return concat(straight_move(base, r.start_point),
                concat(inner, straight_move(r.start_point, base)));
}

}  // namespace braids
