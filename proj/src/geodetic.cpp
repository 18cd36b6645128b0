#include "forestdist/geodetic.hpp"

#include <cmath>
#include <numeric>

namespace forestdist {

namespace {

// Connectivity of a single pair, optionally with one vertex removed.
bool connected_avoiding(const WeightedMultigraph& g, int a, int b, int removed) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const Edge& e : g.edges()) {
    if (e.u == removed || e.v == removed) continue;
    parent[find(e.u)] = find(e.v);
  }
  return find(a) == find(b);
}

}  // namespace

bool separates(const WeightedMultigraph& g, int i, int j, int k) {
  const int n = g.vertex_count();
  if (i < 0 || i >= n || j < 0 || j >= n || k < 0 || k >= n)
    throw std::invalid_argument("vertex id out of range");
  if (i == k) throw std::invalid_argument("separates requires i != k");
  if (j == i || j == k) return true;  // every path contains its endpoints
  if (!connected_avoiding(g, i, k, -1)) return true;  // vacuously: no path at all
  return !connected_avoiding(g, i, k, j);
}

double geodetic_tolerance(const Matrix& d) {
  double max_finite = 0.0;
  for (Eigen::Index i = 0; i < d.rows(); ++i)
    for (Eigen::Index j = 0; j < d.cols(); ++j)
      if (std::isfinite(d(i, j)) && d(i, j) > max_finite) max_finite = d(i, j);
  return 1e-9 * (1.0 + max_finite);
}

GeodeticReport verify_geodetic(const WeightedMultigraph& g, const Matrix& d, double tol) {
  const int n = g.vertex_count();
  if (d.rows() != n || d.cols() != n)
    throw std::invalid_argument("distance matrix has the wrong dimension");
  GeodeticReport report;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (i == k || j == i || j == k) continue;
        if (!std::isfinite(d(i, j)) || !std::isfinite(d(j, k)) || !std::isfinite(d(i, k)))
          continue;
        ++report.triples_checked;
        const double residual = std::abs(d(i, j) + d(j, k) - d(i, k));
        const bool equality = residual <= tol;
        const bool separated = separates(g, i, j, k);
        if (equality) report.equality_triples.push_back({i, j, k});
        if (separated) report.separation_triples.push_back({i, j, k});
        if (equality != separated)
          report.mismatches.push_back({{i, j, k}, residual, separated});
      }
  return report;
}

}  // namespace forestdist
