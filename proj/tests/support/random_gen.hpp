#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "braids/braid_word.hpp"
#include "braids/errors.hpp"
#include "braids/path_model.hpp"
#include "braids/permutation.hpp"
#include "braids/rational.hpp"

namespace braids::testing {

inline Permutation random_permutation(std::mt19937& rng, int n) {
  std::vector<int> img(n);
  for (int k = 0; k < n; ++k) img[k] = k + 1;
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

inline BraidWord random_word(std::mt19937& rng, int n, int length) {
  std::vector<int> letters;
  std::uniform_int_distribution<int> gen(1, n - 1);
  std::bernoulli_distribution sign;
  for (int k = 0; k < length; ++k) {
    int g = gen(rng);
    letters.push_back(sign(rng) ? g : -g);
  }
  return BraidWord{n, std::move(letters)};
}

inline Rational random_rational(std::mt19937& rng, int lo, int hi, int max_den) {
  std::uniform_int_distribution<int> den(1, max_den);
  int q = den(rng);
  std::uniform_int_distribution<long long> num(static_cast<long long>(lo) * q,
                                               static_cast<long long>(hi) * q);
  return Rational(num(rng), q);
}

// A random PL path with denominators <= max_den; resamples until the
// segments are collision-free (almost always immediately).
inline PLPath random_pl_path(std::mt19937& rng, int n, int segments, int max_den = 64) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::vector<Rational> times{Rational(0)};
    std::vector<Rational> interior;
    for (int k = 1; k < segments; ++k)
      interior.push_back(random_rational(rng, 0, 1, max_den));
    std::sort(interior.begin(), interior.end());
    bool distinct = true;
    for (const Rational& t : interior) {
      if (!times.empty() && t == times.back()) distinct = false;
      if (t != 0 && t != 1) times.push_back(t);
    }
    times.push_back(Rational(1));
    if (!distinct || static_cast<int>(times.size()) < 2) continue;

    std::vector<std::vector<QPoint>> vertices(n);
    for (int i = 0; i < n; ++i)
      for (size_t k = 0; k < times.size(); ++k)
        vertices[i].push_back(QPoint{random_rational(rng, -8, 8, max_den),
                                     random_rational(rng, -8, 8, max_den)});
    try {
      return PLPath(std::move(times), std::move(vertices));
    } catch (const ContractViolation&) {
      continue;  // collision; resample
    }
  }
  throw std::runtime_error("could not sample a collision-free path");
}

// Nudges every vertex by at most 1/den; retries until collision-free.
inline PLPath perturbed(std::mt19937& rng, const PLPath& path, int den = 4096) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    std::uniform_int_distribution<int> nudge(-3, 3);
    auto vertices = path.vertices();
    for (auto& strand : vertices)
      for (auto& p : strand) {
        p.re += Rational(nudge(rng), den);
        p.im += Rational(nudge(rng), den);
      }
    try {
      return PLPath(path.times(), std::move(vertices));
    } catch (const ContractViolation&) {
      continue;
    }
  }
  throw std::runtime_error("could not perturb into general position");
}

}  // namespace braids::testing
