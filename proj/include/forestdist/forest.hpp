#pragma once

#include <vector>

#include "forestdist/linalg.hpp"

namespace forestdist {

/// Exact weights of spanning rooted forests from brute-force enumeration.
/// A spanning rooted forest is an acyclic spanning subgraph together with
/// one root per tree; its weight is the product of its edge weights (1 for
/// the edgeless forest).
struct ForestTally {
  double f = 0.0;              // total weight of all spanning rooted forests
  Matrix f_ij;                 // f_ij: forests with i in a tree rooted at j
  std::vector<Matrix> f_p;     // f_p[p]: restriction to forests with p edges
  Eigen::VectorXd f_p_total;   // f^(p): total weight of p-edge rooted forests
  double t = 0.0;              // total weight of spanning trees
};

/// Enumeration cap: subsets of edge records are 2^|E|.
inline constexpr int kMaxOracleEdges = 22;

/// Enumerates all 2^|E| edge subsets. Parallel edges are distinct records;
/// two of them in one subset form a cycle and the subset is rejected.
ForestTally enumerate_rooted_forests(const WeightedMultigraph& g);

struct ForestCheckReport {
  double max_rel_error = 0.0;
  bool passed = false;
};

/// Checks f * (I + L)^-1 == (f_ij) entrywise, relative to max(1, f_ij).
ForestCheckReport matrix_forest_check(const WeightedMultigraph& g, double tol);

/// Resistance distances from the forest ratio
/// (f^(n-2)_ii + f^(n-2)_jj - 2 f^(n-2)_ij) / (n t). Requires g connected.
Matrix resistance_via_forests(const WeightedMultigraph& g);

}  // namespace forestdist
