#include "braids/exact_oracle.hpp"

#include <algorithm>
#include <numeric>

#include "braids/errors.hpp"

namespace braids {

Permutation lex_order(const ExactConfiguration& z) {
  const int n = z.n();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (z.points[a].re != z.points[b].re) return z.points[a].re < z.points[b].re;
    return z.points[a].im < z.points[b].im;
  });
  std::vector<int> rank(n);
  for (int pos = 0; pos < n; ++pos) {
    if (pos > 0 && z.points[idx[pos - 1]] == z.points[idx[pos]])
      throw ContractViolation("lex_order: coincident points");
    rank[idx[pos]] = pos + 1;
  }
  return Permutation(std::move(rank));
}

std::vector<Rational> discontinuity_times(const PLPath& path) {
  const int n = path.strand_count();
  std::vector<Rational> out;
  for (size_t k = 0; k + 1 < path.times().size(); ++k) {
    const Rational& ta = path.times()[k];
    const Rational& tb = path.times()[k + 1];
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        Rational va = path.vertices()[i - 1][k].re - path.vertices()[j - 1][k].re;
        Rational vb = path.vertices()[i - 1][k + 1].re - path.vertices()[j - 1][k + 1].re;
        if (va == vb) {
          // Real parts agree on the whole segment: the lexicographic
          // order can only change at its ends.
          if (va == 0) {
            out.push_back(ta);
            out.push_back(tb);
          }
          continue;
        }
        Rational lambda = va / (va - vb);
        if (0 <= lambda && lambda <= 1) out.push_back(ta + lambda * (tb - ta));
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

BraidWord exact_braid(const PLPath& path) {
  const int n = path.strand_count();
  std::vector<Rational> events = discontinuity_times(path);
  Permutation alpha = lex_order(*path.start_configuration());
  std::vector<int> letters;
  for (size_t e = 0; e < events.size(); ++e) {
    const Rational& t = events[e];
    // The order just after t: sample halfway to the next event (the
    // order is constant between events), or at 1 for the last one.
    Rational probe = t == 1 ? Rational(1)
                            : (t + (e + 1 < events.size() ? events[e + 1] : Rational(1))) / 2;
    Permutation beta = lex_order(path.configuration_at(probe));
    Permutation gamma = compose(beta, alpha.inverse());  // positions -> positions
    if (gamma.is_identity()) continue;
    int moved = 0, pos = 0;
    for (int p = 1; p <= n; ++p)
      if (gamma(p) != p) {
        ++moved;
        pos = p;
      }
    if (moved != 2 || gamma(pos) != pos - 1 || gamma(pos - 1) != pos)
      throw ContractViolation("path is not generic: non-adjacent or simultaneous "
                              "order change at time " + rational_to_string(t));
    const int j = pos - 1;
    const int u = alpha.inverse()(j);      // left strand before the swap
    const int v = alpha.inverse()(j + 1);  // right strand before the swap
    Rational im_diff = path.eval(v, t).im - path.eval(u, t).im;
    if (im_diff == 0)
      throw ContractViolation("path is not generic: strands meet at time " +
                              rational_to_string(t));
    letters.push_back(im_diff > 0 ? j : -j);
    alpha = beta;
  }
  if (alpha != lex_order(*path.end_configuration()))
    throw ContractViolation("path is not generic: unresolved order change at t = 1");
  return BraidWord{n, std::move(letters)};
}

}  // namespace braids
