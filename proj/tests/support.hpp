#pragma once

// Shared fixtures: small named graphs and random graph generators.

#include <random>
#include <tuple>
#include <vector>

#include "forestdist/family.hpp"
#include "forestdist/graph.hpp"

namespace testsupport {

using forestdist::Edge;
using forestdist::WeightedMultigraph;

inline WeightedMultigraph make_graph(int n,
                                     const std::vector<std::tuple<int, int, double>>& edges) {
  std::vector<Edge> converted;
  converted.reserve(edges.size());
  for (const auto& [u, v, w] : edges) converted.push_back({u, v, w});
  return WeightedMultigraph(n, std::move(converted));
}

inline WeightedMultigraph k2(double w = 1.0) { return make_graph(2, {{0, 1, w}}); }

inline WeightedMultigraph k3() {
  return make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
}

inline WeightedMultigraph k4() {
  return make_graph(4, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0},
                        {1, 2, 1.0}, {1, 3, 1.0}, {2, 3, 1.0}});
}

inline WeightedMultigraph p3() { return make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}); }

inline WeightedMultigraph p4() {
  return make_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
}

// Star with center 0 and four leaves.
inline WeightedMultigraph s4_star() {
  return make_graph(5, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}});
}

// Triangles {0,1,2} and {2,3,4} sharing the cut vertex 2.
inline WeightedMultigraph two_triangles() {
  return make_graph(5, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0},
                        {2, 3, 1.0}, {3, 4, 1.0}, {2, 4, 1.0}});
}

// w_01 = w_12 = 1, w_02 = 0.25: the two-hop path beats the direct edge.
inline WeightedMultigraph weighted_triangle() {
  return make_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 0.25}});
}

// Single edge (0,1) plus the isolated vertex 2.
inline WeightedMultigraph edge_plus_isolated() { return make_graph(3, {{0, 1, 1.0}}); }

// Random spanning tree plus `extra` random edges; weights uniform in [lo, hi].
inline WeightedMultigraph random_connected(int n, int extra, double lo, double hi,
                                           std::mt19937& rng) {
  std::uniform_real_distribution<double> weight(lo, hi);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> anchor(0, v - 1);
    edges.push_back({v, anchor(rng), weight(rng)});
  }
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int i = 0; i < extra; ++i) {
    const int u = vertex(rng), v = vertex(rng);
    if (u != v) edges.push_back({u, v, weight(rng)});
  }
  return WeightedMultigraph(n, std::move(edges));
}

// Arbitrary multigraph, possibly disconnected, possibly with parallel edges.
inline WeightedMultigraph random_any(int n, int max_edges, double lo, double hi,
                                     std::mt19937& rng) {
  std::uniform_real_distribution<double> weight(lo, hi);
  std::uniform_int_distribution<int> vertex(0, n - 1);
  std::uniform_int_distribution<int> count(0, max_edges);
  std::vector<Edge> edges;
  const int m = count(rng);
  for (int i = 0; i < m; ++i) {
    const int u = vertex(rng), v = vertex(rng);
    if (u != v) edges.push_back({u, v, weight(rng)});
  }
  return WeightedMultigraph(n, std::move(edges));
}

// Random tree on n vertices, unit weights.
inline WeightedMultigraph random_tree(int n, std::mt19937& rng) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> anchor(0, v - 1);
    edges.push_back({v, anchor(rng), 1.0});
  }
  return WeightedMultigraph(n, std::move(edges));
}

// The configuration grid exercised by the property scans.
inline std::vector<forestdist::FamilyConfig> config_grid() {
  using forestdist::FamilyConfig;
  using forestdist::GammaRule;
  using forestdist::HVariant;
  using forestdist::WeightTransform;
  std::vector<FamilyConfig> grid;
  for (auto transform :
       {WeightTransform::LinearScale, WeightTransform::PowerOfAlpha,
        WeightTransform::ExpScaledByAlpha, WeightTransform::PureExponential})
    for (auto variant : {HVariant::Standard, HVariant::AlphaLn})
      for (auto gamma :
           {GammaRule::formula13(), GammaRule::one(), GammaRule::interpolating(1.0)})
        grid.push_back({transform, variant, gamma});
  return grid;
}

inline const std::vector<double>& alpha_grid() {
  static const std::vector<double> grid = {0.01, 0.1, 0.5, 1.0, 2.0, 10.0, 100.0};
  return grid;
}

// Pinned dense weighted graph used for the large-alpha resistance limit.
inline WeightedMultigraph dense5() {
  return make_graph(5, {{4, 2, 1.0496}, {3, 2, 3.7383}, {0, 3, 2.8199},
                        {1, 0, 2.6309}, {3, 2, 3.4476}, {4, 3, 3.5722},
                        {0, 2, 3.189},  {0, 4, 3.5895}, {2, 0, 2.2681}});
}

// Pinned weighted graph used for the unified-family limit checks.
inline WeightedMultigraph unified5() {
  return make_graph(5, {{4, 2, 1.7213}, {3, 2, 1.4002}, {0, 2, 1.5928},
                        {1, 0, 0.5827}, {0, 2, 1.4861}, {2, 1, 1.1489}});
}

}  // namespace testsupport
