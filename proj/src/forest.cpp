#include "forestdist/forest.hpp"

#include <algorithm>
#include <cmath>

namespace forestdist {

ForestTally enumerate_rooted_forests(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  const auto& edges = g.edges();
  const int m = static_cast<int>(edges.size());
  if (m > kMaxOracleEdges)
    throw std::invalid_argument("forest enumeration is capped at " +
                                std::to_string(kMaxOracleEdges) + " edges, got " +
                                std::to_string(m));

  ForestTally tally;
  tally.f_ij = Matrix::Zero(n, n);
  tally.f_p.assign(n, Matrix::Zero(n, n));
  tally.f_p_total = Eigen::VectorXd::Zero(n);

  std::vector<int> parent(n), size(n), members(n);
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    for (int v = 0; v < n; ++v) {
      parent[v] = v;
      size[v] = 1;
    }
    auto find = [&](int a) {
      while (parent[a] != a) {
        parent[a] = parent[parent[a]];
        a = parent[a];
      }
      return a;
    };
    double weight = 1.0;
    int edge_count = 0;
    bool acyclic = true;
    for (int idx = 0; idx < m; ++idx) {
      if (!(mask >> idx & 1u)) continue;
      const Edge& e = edges[idx];
      int ru = find(e.u), rv = find(e.v);
      if (ru == rv) {  // a repeated (u,v) pair also lands here
        acyclic = false;
        break;
      }
      parent[ru] = rv;
      size[rv] += size[ru];
      weight *= e.weight;
      ++edge_count;
    }
    if (!acyclic) continue;

    // Each tree contributes one root choice: the subset adds
    // w * prod |V(T)| to f, and w * prod_{T' != T(i)} |V(T')| to every
    // f_ij with i, j in the same tree T(i) (j being that tree's root).
    double rootings = 1.0;
    for (int v = 0; v < n; ++v)
      if (find(v) == v) rootings *= size[v];
    tally.f += weight * rootings;
    tally.f_p_total(edge_count) += weight * rootings;
    if (edge_count == n - 1) tally.t += weight;

    std::vector<int>& tree_of = members;
    for (int v = 0; v < n; ++v) tree_of[v] = find(v);
    for (int root = 0; root < n; ++root) {
      if (tree_of[root] != root) continue;
      const double other_rootings = rootings / size[root];
      const double add = weight * other_rootings;
      for (int i = 0; i < n; ++i) {
        if (tree_of[i] != root) continue;
        for (int j = 0; j < n; ++j) {
          if (tree_of[j] != root) continue;
          tally.f_ij(i, j) += add;
          tally.f_p[edge_count](i, j) += add;
        }
      }
    }
  }
  return tally;
}

ForestCheckReport matrix_forest_check(const WeightedMultigraph& g, double tol) {
  const ForestTally tally = enumerate_rooted_forests(g);
  const int n = g.vertex_count();
  const Matrix q = invert_spd(Matrix::Identity(n, n) + laplacian(g));
  double max_rel = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const double err =
          std::abs(tally.f * q(i, j) - tally.f_ij(i, j)) / std::max(1.0, tally.f_ij(i, j));
      max_rel = std::max(max_rel, err);
    }
  return {max_rel, max_rel <= tol};
}

Matrix resistance_via_forests(const WeightedMultigraph& g) {
  const ForestTally tally = enumerate_rooted_forests(g);
  if (tally.t <= 0.0)
    throw std::invalid_argument("resistance_via_forests requires a connected graph");
  const int n = g.vertex_count();
  const Matrix& fp = tally.f_p[n - 2];
  Matrix d(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      d(i, j) = (fp(i, i) + fp(j, j) - 2.0 * fp(i, j)) / (n * tally.t);
  d.diagonal().setZero();
  return d;
}

}  // namespace forestdist
