#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "braids/arrangement.hpp"
#include "braids/errors.hpp"

namespace braids {
namespace {

// Strict partial orders are encoded as bitmasks with bit (i*n + j) set
// when i comes before j (0-based labels).

bool is_strict_order(std::uint64_t rel, int n) {
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!((rel >> (i * n + j)) & 1)) continue;
      if ((rel >> (j * n + i)) & 1) return false;
      for (int k = 0; k < n; ++k)
        if (((rel >> (j * n + k)) & 1) && !((rel >> (i * n + k)) & 1)) return false;
    }
  return true;
}

// Interval orders are exactly the strict orders with no induced 2+2.
bool is_interval_order(std::uint64_t rel, int n) {
  auto lt = [&](int a, int b) { return (rel >> (a * n + b)) & 1; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!lt(a, b)) continue;
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d)
          if (lt(c, d) && !lt(a, d) && !lt(c, b)) return false;
    }
  return true;
}

// Unordered-pair comparability mask (bit per pair i < j).
std::uint64_t comparable_mask(std::uint64_t rel, int n) {
  std::uint64_t out = 0;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (((rel >> (i * n + j)) & 1) || ((rel >> (j * n + i)) & 1))
        out |= std::uint64_t(1) << bit;
  return out;
}

std::uint64_t apply_perm(std::uint64_t rel, const std::vector<int>& s, int n) {
  std::uint64_t out = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if ((rel >> (i * n + j)) & 1) out |= std::uint64_t(1) << (s[i] * n + s[j]);
  return out;
}

}  // namespace

long long count_box_arrangements(int n) {
  if (n < 1) throw ContractViolation("count_box_arrangements: n must be positive");
  if (n > 5)
    throw ContractViolation("count_box_arrangements: exhaustive order enumeration "
                            "is not feasible beyond n = 5");
  if (n == 1) return 1;

  std::vector<std::uint64_t> interval_orders;
  const int off_diagonal = n * (n - 1);
  // Candidate relations list only off-diagonal bits; re-pack to i*n+j.
  for (std::uint64_t cand = 0; cand < (std::uint64_t(1) << off_diagonal); ++cand) {
    std::uint64_t rel = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        if ((cand >> bit++) & 1) rel |= std::uint64_t(1) << (i * n + j);
      }
    if (is_strict_order(rel, n) && is_interval_order(rel, n))
      interval_orders.push_back(rel);
  }

  const std::uint64_t full = (std::uint64_t(1) << (n * (n - 1) / 2)) - 1;
  std::vector<std::uint64_t> cmp(interval_orders.size());
  for (size_t k = 0; k < interval_orders.size(); ++k)
    cmp[k] = comparable_mask(interval_orders[k], n);

  // Burnside over simultaneous relabeling: orbits = average number of
  // covering pairs (P, Q) fixed by each permutation.
  std::vector<int> s(n);
  std::iota(s.begin(), s.end(), 0);
  long long fixed_sum = 0;
  long long perm_count = 0;
  do {
    ++perm_count;
    std::vector<std::uint64_t> fixed_cmp;
    for (size_t k = 0; k < interval_orders.size(); ++k)
      if (apply_perm(interval_orders[k], s, n) == interval_orders[k])
        fixed_cmp.push_back(cmp[k]);
    for (std::uint64_t a : fixed_cmp)
      for (std::uint64_t b : fixed_cmp)
        if ((a | b) == full) ++fixed_sum;
  } while (std::next_permutation(s.begin(), s.end()));

  return fixed_sum / perm_count;
}

}  // namespace braids
