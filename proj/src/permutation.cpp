#include "braids/permutation.hpp"

#include "braids/errors.hpp"

namespace braids {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  std::vector<char> seen(n, 0);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1])
      throw ContractViolation("image array is not a permutation of 1..n");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  Permutation p;
  p.images_ = std::move(img);
  return p;
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i >= n) throw ContractViolation("transposition index out of range");
  Permutation p = identity(n);
  std::swap(p.images_[i - 1], p.images_[i]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (int k = 1; k <= size(); ++k) p.images_[images_[k - 1] - 1] = k;
  return p;
}

bool Permutation::is_identity() const {
  for (int k = 1; k <= size(); ++k)
    if (images_[k - 1] != k) return false;
  return true;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size())
    throw ContractViolation("composing permutations of different sizes");
  std::vector<int> img(a.size());
  for (int k = 1; k <= a.size(); ++k) img[k - 1] = a(b(k));
  return Permutation(std::move(img));
}

}  // namespace braids
