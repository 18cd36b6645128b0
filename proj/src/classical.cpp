#include "forestdist/classical.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace forestdist {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<std::vector<int>> adjacency(const WeightedMultigraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const Edge& e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  for (auto& nb : adj) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return adj;
}

}  // namespace

Matrix shortest_path_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  const auto adj = adjacency(g);
  Matrix d = Matrix::Constant(n, n, kInf);
  for (int s = 0; s < n; ++s) {
    d(s, s) = 0.0;
    std::queue<int> frontier;
    frontier.push(s);
    while (!frontier.empty()) {
      const int x = frontier.front();
      frontier.pop();
      for (int y : adj[x]) {
        if (d(s, y) == kInf) {
          d(s, y) = d(s, x) + 1.0;
          frontier.push(y);
        }
      }
    }
  }
  return d;
}

Matrix weighted_shortest_path_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  // Parallel edges collapse to their smallest resistance.
  Matrix r = Matrix::Constant(n, n, kInf);
  for (const Edge& e : g.edges()) {
    const double res = 1.0 / e.weight;
    r(e.u, e.v) = std::min(r(e.u, e.v), res);
    r(e.v, e.u) = r(e.u, e.v);
  }
  std::vector<std::vector<std::pair<int, double>>> adj(n);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && r(u, v) < kInf) adj[u].push_back({v, r(u, v)});

  Matrix d = Matrix::Constant(n, n, kInf);
  using Item = std::pair<double, int>;
  for (int s = 0; s < n; ++s) {
    d(s, s) = 0.0;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    pq.push({0.0, s});
    while (!pq.empty()) {
      const auto [dist, x] = pq.top();
      pq.pop();
      if (dist > d(s, x)) continue;
      for (const auto& [y, res] : adj[x]) {
        if (dist + res < d(s, y)) {
          d(s, y) = dist + res;
          pq.push({d(s, y), y});
        }
      }
    }
  }
  // Per-source runs accumulate path sums in different orders; take the
  // smaller of the two rounding-level variants to keep d symmetric.
  d = d.cwiseMin(d.transpose().eval());
  return d;
}

Matrix resistance_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  Matrix d = Matrix::Constant(n, n, kInf);
  d.diagonal().setZero();
  for (const auto& component : connected_components(g)) {
    if (component.size() < 2) continue;
    const Subgraph sub = induced_subgraph(g, component);
    const Matrix x = laplacian_pseudoinverse(laplacian(sub.graph));
    const int cn = static_cast<int>(component.size());
    for (int a = 0; a < cn; ++a)
      for (int b = 0; b < cn; ++b)
        d(sub.old_ids[a], sub.old_ids[b]) = x(a, a) + x(b, b) - 2.0 * x(a, b);
  }
  d.diagonal().setZero();
  return d;
}

}  // namespace forestdist
