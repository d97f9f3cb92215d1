#include "braids/pointed_arrangement.hpp"

#include <algorithm>

#include "braids/errors.hpp"

namespace braids {

PointedArrangement::PointedArrangement(Arrangement g) : g_(std::move(g)) {
  if (!g_.is_arrangement())
    throw ContractViolation("pointed arrangement requires a valid arrangement");
  point_ = permutation_point_in(g_);
}

void PointedArrangement::set_lifetime(const Edge& e, const Rational& t) {
  if (!g_.has_edge(e))
    throw ContractViolation("set_lifetime: absent edge " + edge_to_string(e));
  lifetimes_[e] = t;
}

const Rational& PointedArrangement::lifetime(const Edge& e) const {
  auto it = lifetimes_.find(e);
  if (it == lifetimes_.end())
    throw ContractViolation("lifetime: absent edge " + edge_to_string(e));
  return it->second;
}

Edge PointedArrangement::min_lifetime_edge() const {
  if (lifetimes_.empty())
    throw ContractViolation("min_lifetime_edge: no edges");
  auto best = lifetimes_.begin();
  for (auto it = std::next(best); it != lifetimes_.end(); ++it)
    if (it->second < best->second) best = it;
  return best->first;
}

std::vector<int> PointedArrangement::affected_set(int i, int j) const {
  std::vector<int> out;
  const int bound = point_.pi(i);
  for (int k = 1; k <= n(); ++k)
    if ((k == j || g_.reaches(j, k, Axis::Re)) && point_.pi(k) < bound)
      out.push_back(k);
  return out;
}

BraidWord PointedArrangement::reorder(int i, int j, Axis axis) {
  Permutation& rank = axis == Axis::Re ? point_.pi : point_.phi;
  const Permutation& other = axis == Axis::Re ? point_.phi : point_.pi;
  std::vector<int> letters;
  const int m = rank(j), M = rank(i);
  if (m > M) return BraidWord{n(), {}};  // point already satisfies the edge

  // Vertices that must end up above i's rank: j and everything the new
  // constraint chains after it inside the window.
  std::vector<char> lifted(n() + 1, 0);
  for (int k = 1; k <= n(); ++k)
    lifted[k] = (k == j || g_.reaches(j, k, axis)) && rank(k) < M;

  std::vector<int> img = rank.images();
  std::vector<int> inv(n() + 1);
  for (int k = 1; k <= n(); ++k) inv[img[k - 1]] = k;

  int lifted_below = 1;  // j itself, at rank m
  for (int x = m + 1; x <= M; ++x) {
    const int v = inv[x];
    if (lifted[v]) {
      ++lifted_below;
      continue;
    }
    // Bubble v below the lifted block: swap ranks (y-1, y), v at y.
    for (int y = x; y > x - lifted_below + 1 - 1; --y) {
      const int u = inv[y - 1];
      if (axis == Axis::Re) letters.push_back(other(u) < other(v) ? y - 1 : -(y - 1));
      img[u - 1] = y;
      img[v - 1] = y - 1;
      inv[y] = u;
      inv[y - 1] = v;
    }
  }
  rank = Permutation(std::move(img));
  return BraidWord{n(), std::move(letters)};
}

BraidWord PointedArrangement::insert(int i, int j, Axis axis, const Rational& life) {
  const Edge e{i, j, axis};
  if (i == j || i < 1 || i > n() || j < 1 || j > n())
    throw ContractViolation("insert: bad edge " + edge_to_string(e));
  if (j == i || g_.reaches(j, i, axis))
    throw ContractViolation("insert: edge " + edge_to_string(e) +
                            " would close a cycle");
  g_.add_edge(e);
  lifetimes_[e] = life;
  return reorder(i, j, axis);
}

void PointedArrangement::erase_edge(const Edge& e) {
  g_.remove_edge(e);
  if (!g_.is_arrangement()) {
    g_.add_edge(e);
    throw ContractViolation("erase_edge: removing " + edge_to_string(e) +
                            " leaves an uncovered pair");
  }
  lifetimes_.erase(e);
}

std::string PointedArrangement::dump() const {
  std::string out = "edges:";
  for (const Edge& e : g_.edges()) out += " " + edge_to_string(e);
  auto ranks = [this](const Permutation& p) {
    std::string s;
    Permutation inv = p.inverse();
    for (int k = 1; k <= n(); ++k) s += (k > 1 ? " " : "") + std::to_string(inv(k));
    return s;
  };
  out += " | pi_inv: " + ranks(point_.pi);
  out += " | phi_inv: " + ranks(point_.phi);
  out += " | lifetimes:";
  for (const auto& [e, t] : lifetimes_)
    out += " " + edge_to_string(e) + "=" + rational_to_string(t);
  return out;
}

}  // namespace braids
