#pragma once

#include <compare>
#include <vector>

namespace braids {

/**
 * A permutation of {1, ..., n}, stored as the array of images.
 * All indices and images are 1-based throughout the library.
 */
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);  // validates bijectivity

  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // the swap (i, i+1)

  int size() const { return static_cast<int>(images_.size()); }
  int operator()(int k) const { return images_[k - 1]; }

  Permutation inverse() const;
  bool is_identity() const;
  const std::vector<int>& images() const { return images_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> images_;
};

// Functional composition: compose(a, b)(k) = a(b(k)).
Permutation compose(const Permutation& a, const Permutation& b);

}  // namespace braids
