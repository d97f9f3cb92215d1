#include "braids/arrangement.hpp"

#include <algorithm>
#include <queue>

#include "braids/errors.hpp"

namespace braids {

const char* axis_name(Axis axis) { return axis == Axis::Re ? "re" : "im"; }

std::string edge_to_string(const Edge& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + "," +
         axis_name(e.axis) + ")";
}

Arrangement::Arrangement(int n, std::vector<Edge> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 1 || n > 64) throw ContractViolation("arrangement size must be in 1..64");
  for (const Edge& e : edges_)
    if (e.i < 1 || e.i > n || e.j < 1 || e.j > n || e.i == e.j)
      throw ContractViolation("arrangement edge " + edge_to_string(e) + " out of range");
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool Arrangement::has_edge(const Edge& e) const {
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

void Arrangement::add_edge(const Edge& e) {
  if (e.i < 1 || e.i > n_ || e.j < 1 || e.j > n_ || e.i == e.j)
    throw ContractViolation("arrangement edge " + edge_to_string(e) + " out of range");
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it != edges_.end() && *it == e) return;
  edges_.insert(it, e);
  closure_valid_ = false;
}

void Arrangement::remove_edge(const Edge& e) {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e))
    throw ContractViolation("removing absent edge " + edge_to_string(e));
  edges_.erase(it);
  closure_valid_ = false;
}

const std::vector<std::uint64_t>& Arrangement::closure(Axis axis) const {
  if (!closure_valid_) {
    reach_re_.assign(n_, 0);
    reach_im_.assign(n_, 0);
    for (const Edge& e : edges_) {
      auto& reach = e.axis == Axis::Re ? reach_re_ : reach_im_;
      reach[e.i - 1] |= std::uint64_t(1) << (e.j - 1);
    }
    for (auto* reach : {&reach_re_, &reach_im_}) {
      bool changed = true;
      while (changed) {
        changed = false;
        for (int i = 0; i < n_; ++i) {
          std::uint64_t acc = (*reach)[i];
          std::uint64_t frontier = acc;
          while (frontier) {
            int j = std::countr_zero(frontier);
            frontier &= frontier - 1;
            acc |= (*reach)[j];
          }
          if (acc != (*reach)[i]) {
            (*reach)[i] = acc;
            changed = true;
          }
        }
      }
    }
    closure_valid_ = true;
  }
  return axis == Axis::Re ? reach_re_ : reach_im_;
}

bool Arrangement::reaches(int i, int j, Axis axis) const {
  return (closure(axis)[i - 1] >> (j - 1)) & 1;
}

bool Arrangement::axis_acyclic(Axis axis) const {
  const auto& reach = closure(axis);
  for (int i = 0; i < n_; ++i)
    if ((reach[i] >> i) & 1) return false;
  return true;
}

bool Arrangement::is_arrangement() const {
  if (!axis_acyclic(Axis::Re) || !axis_acyclic(Axis::Im)) return false;
  return incomparable_pairs().empty();
}

std::vector<std::pair<int, int>> Arrangement::incomparable_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j)
      if (!reaches(i, j, Axis::Re) && !reaches(j, i, Axis::Re) &&
          !reaches(i, j, Axis::Im) && !reaches(j, i, Axis::Im))
        out.emplace_back(i, j);
  return out;
}

std::optional<Arrangement> intersect_cells(const Arrangement& a, const Arrangement& b) {
  if (a.n() != b.n()) throw ContractViolation("intersecting arrangements of different sizes");
  std::vector<Edge> edges = a.edges();
  edges.insert(edges.end(), b.edges().begin(), b.edges().end());
  Arrangement g(a.n(), std::move(edges));
  if (!g.axis_acyclic(Axis::Re) || !g.axis_acyclic(Axis::Im)) return std::nullopt;
  return g;
}

Arrangement relabel(const Permutation& sigma, const Arrangement& g) {
  if (sigma.size() != g.n()) throw ContractViolation("relabel: size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.edges().size());
  for (const Edge& e : g.edges()) edges.push_back(Edge{sigma(e.i), sigma(e.j), e.axis});
  return Arrangement(g.n(), std::move(edges));
}

namespace {

// Kahn topological sort of one axis subgraph; smallest vertex index
// first among the available ones. Returns the rank permutation.
Permutation axis_ranks(const Arrangement& g, Axis axis) {
  const int n = g.n();
  std::vector<int> indegree(n + 1, 0);
  for (const Edge& e : g.edges())
    if (e.axis == axis) ++indegree[e.j];
  std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
  for (int v = 1; v <= n; ++v)
    if (indegree[v] == 0) ready.push(v);
  std::vector<int> rank(n, 0);
  int next = 1;
  while (!ready.empty()) {
    int v = ready.top();
    ready.pop();
    rank[v - 1] = next++;
    for (const Edge& e : g.edges())
      if (e.axis == axis && e.i == v && --indegree[e.j] == 0) ready.push(e.j);
  }
  if (next != n + 1)
    throw ContractViolation(std::string("cycle in ") + axis_name(axis) + " subgraph");
  return Permutation(std::move(rank));
}

}  // namespace

PermutationPoint permutation_point_in(const Arrangement& g) {
  return PermutationPoint{axis_ranks(g, Axis::Re), axis_ranks(g, Axis::Im)};
}

bool point_in_cell(const Arrangement& g, const PermutationPoint& p) {
  if (p.pi.size() != g.n()) throw ContractViolation("point_in_cell: size mismatch");
  for (const Edge& e : g.edges()) {
    const Permutation& ranks = e.axis == Axis::Re ? p.pi : p.phi;
    if (ranks(e.i) >= ranks(e.j)) return false;
  }
  return true;
}

bool config_in_cell(const Arrangement& g, const ExactConfiguration& z) {
  if (z.n() != g.n()) throw ContractViolation("config_in_cell: size mismatch");
  for (const Edge& e : g.edges()) {
    const QPoint& a = z.points[e.i - 1];
    const QPoint& b = z.points[e.j - 1];
    if (e.axis == Axis::Re ? !(a.re < b.re) : !(a.im < b.im)) return false;
  }
  return true;
}

Arrangement arrangement_of_configuration(const ExactConfiguration& z) {
  const int n = z.n();
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const QPoint& a = z.points[i - 1];
      const QPoint& b = z.points[j - 1];
      if (a == b)
        throw ContractViolation("configuration has coincident points " +
                                std::to_string(i) + " and " + std::to_string(j));
      if (a.re < b.re) edges.push_back({i, j, Axis::Re});
      if (b.re < a.re) edges.push_back({j, i, Axis::Re});
      if (a.im < b.im) edges.push_back({i, j, Axis::Im});
      if (b.im < a.im) edges.push_back({j, i, Axis::Im});
    }
  }
  return Arrangement(n, std::move(edges));
}

}  // namespace braids
