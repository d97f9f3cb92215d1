#include "braids/cover_engine.hpp"

#include <map>

#include "braids/errors.hpp"

namespace braids {

Cover cover(const PathApproximation& path) {
  const int n = path.strand_count();
  Arrangement g(n);
  if (n == 1) return Cover{{g}, {Rational(0), Rational(1)}};

  std::map<Edge, Rational> lifetimes;
  auto query = [&](int i, int j, const Rational& t) {
    SepResult r = path.sep(i, j, t);
    Edge e{r.i_low, r.j_high, r.axis};
    g.add_edge(e);
    lifetimes[e] = r.until;
  };

  Rational t(0);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) query(i, j, t);

  Cover out;
  out.times.push_back(t);
  const long guard = 100000;
  while (true) {
    if (static_cast<long>(out.arrangements.size()) > guard)
      throw ContractViolation("cover: no progress after " + std::to_string(guard) +
                              " snapshots; separation predicate too weak");
    // Repair: the smallest incomparable pair is re-queried until the
    // arrangement is whole again.
    while (true) {
      auto missing = g.incomparable_pairs();
      if (missing.empty()) break;
      query(missing.front().first, missing.front().second, t);
    }
    if (!g.is_arrangement())
      throw ContractViolation("cover: separation answers form a cyclic order");
    out.arrangements.push_back(g);

    // Drop the edge that expires first and advance to its expiry.
    Edge victim = lifetimes.begin()->first;
    for (const auto& [e, life] : lifetimes)
      if (life < lifetimes.at(victim)) victim = e;
    Rational expiry = lifetimes.at(victim);
    g.remove_edge(victim);
    lifetimes.erase(victim);
    out.times.push_back(std::min(expiry, Rational(1)));
    if (expiry >= 1) break;
    t = expiry;
  }
  return out;
}

}  // namespace braids
