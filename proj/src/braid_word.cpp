#include "braids/braid_word.hpp"

#include <cstdlib>

#include "braids/errors.hpp"

namespace braids {
namespace {

// --- Garside left-greedy normal form over simple (permutation) braids ---
//
// A word is brought to the form Delta^k . a_1 ... a_m with each a_i a
// non-trivial simple braid, identified with its strand permutation, and
// each pair (a_i, a_{i+1}) left-weighted. Factor products follow the
// word homomorphism: perm(u.v) = compose(perm(u), perm(v)).

Permutation half_twist(int n) {  // permutation of Delta: k -> n+1-k
  std::vector<int> img(n);
  for (int k = 1; k <= n; ++k) img[k - 1] = n + 1 - k;
  return Permutation(std::move(img));
}

Permutation tau(const Permutation& a, const Permutation& w0) {
  return compose(w0, compose(a, w0));
}

// sigma_i extends a on the right within the simple braids.
bool extends_right(const Permutation& a, int i) { return a(i) < a(i + 1); }

// sigma_i left-divides the simple braid with permutation b.
bool left_divides(const Permutation& b_inv, int i) { return b_inv(i) > b_inv(i + 1); }

// Transfers every right-extension of `a` that divides `b` from b to a.
// Returns true if anything moved.
bool left_weight(Permutation& a, Permutation& b) {
  bool moved = false;
  const int n = a.size();
  bool again = true;
  while (again) {
    again = false;
    Permutation b_inv = b.inverse();
    for (int i = 1; i < n; ++i) {
      if (extends_right(a, i) && left_divides(b_inv, i)) {
        Permutation s = Permutation::transposition(n, i);
        a = compose(a, s);
        b = compose(s, b);
        moved = again = true;
        break;
      }
    }
  }
  return moved;
}

struct NormalForm {
  int delta = 0;
  std::vector<Permutation> factors;

  bool operator==(const NormalForm&) const = default;
};

NormalForm normal_form(const BraidWord& w) {
  const int n = w.n;
  const Permutation w0 = half_twist(n);
  NormalForm nf;
  for (int g : w.letters) {
    const int i = std::abs(g);
    const Permutation s = Permutation::transposition(n, i);
    if (g > 0) {
      nf.factors.push_back(s);
    } else {
      // sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1); push Delta^-1 left.
      nf.delta -= 1;
      for (Permutation& f : nf.factors) f = tau(f, w0);
      nf.factors.push_back(compose(w0, s));
    }
  }
  // Local left-weighting passes until globally stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t j = 0; j + 1 < nf.factors.size(); ++j)
      if (left_weight(nf.factors[j], nf.factors[j + 1])) changed = true;
  }
  // Full factors at the front join Delta's power; trivial ones at the back go.
  size_t lead = 0;
  while (lead < nf.factors.size() && nf.factors[lead] == w0) ++lead;
  nf.delta += static_cast<int>(lead);
  nf.factors.erase(nf.factors.begin(), nf.factors.begin() + lead);
  while (!nf.factors.empty() && nf.factors.back().is_identity()) nf.factors.pop_back();
  return nf;
}

}  // namespace

BraidWord make_word(int n, std::vector<int> letters) {
  if (n < 1) throw ContractViolation("braid word needs n >= 1 strands");
  for (int g : letters)
    if (g == 0 || std::abs(g) > n - 1)
      throw ContractViolation("braid letter out of range for n strands");
  return BraidWord{n, std::move(letters)};
}

Permutation permutation_of_braid(const BraidWord& w) {
  Permutation p = Permutation::identity(w.n);
  for (int g : w.letters) p = compose(p, Permutation::transposition(w.n, std::abs(g)));
  return p;
}

BraidWord free_reduce(BraidWord w) {
  std::vector<int> out;
  out.reserve(w.letters.size());
  for (int g : w.letters) {
    if (!out.empty() && out.back() == -g)
      out.pop_back();
    else
      out.push_back(g);
  }
  w.letters = std::move(out);
  return w;
}

BraidWord inverse_word(BraidWord w) {
  std::vector<int> out(w.letters.rbegin(), w.letters.rend());
  for (int& g : out) g = -g;
  w.letters = std::move(out);
  return w;
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ContractViolation("concatenating words on different strand counts");
  BraidWord out = a;
  out.letters.insert(out.letters.end(), b.letters.begin(), b.letters.end());
  return out;
}

BraidWord elementary_braid(const Permutation& pi, const Permutation& phi) {
  const int n = pi.size();
  if (phi.size() != n)
    throw ContractViolation("elementary_braid: pi and phi sizes differ");
  // Bubble-sort the image array of pi; each swap at position j is a
  // right-composition with (j, j+1), so pi . r_1 ... r_m = id and the
  // left-to-right transposition decomposition of pi is the reversal.
  std::vector<int> img = pi.images();
  std::vector<int> swaps;
  bool dirty = true;
  while (dirty) {
    dirty = false;
    for (int j = 1; j < n; ++j) {
      if (img[j - 1] > img[j]) {
        std::swap(img[j - 1], img[j]);
        swaps.push_back(j);
        dirty = true;
      }
    }
  }
  const int m = static_cast<int>(swaps.size());
  std::vector<int> taus(m);
  for (int k = 0; k < m; ++k) taus[k] = swaps[m - 1 - k];
  // Letter k compares the imaginary ranks carried to the crossing time:
  // psi_k = phi . (tau_{k+1} ... tau_m)^-1.
  std::vector<int> letters(m);
  Permutation inv = Permutation::identity(n);
  for (int k = m - 1; k >= 0; --k) {
    Permutation psi = compose(phi, inv);
    const int i = taus[k];
    letters[k] = psi(i) > psi(i + 1) ? i : -i;
    inv = compose(inv, Permutation::transposition(n, i));
  }
  return BraidWord{n, std::move(letters)};
}

bool braids_equal(const BraidWord& a, const BraidWord& b) {
  if (a.n != b.n) throw ContractViolation("braids_equal: strand counts differ");
  return normal_form(a) == normal_form(b);
}

}  // namespace braids
