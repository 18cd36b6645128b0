#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "forestdist/linalg.hpp"

namespace forestdist {

/// True iff every path from i to k passes through j (i != k). Trivially
/// true when j is an endpoint, and (vacuously) when i and k are already
/// disconnected. Implemented as vertex deletion plus a connectivity check.
bool separates(const WeightedMultigraph& g, int i, int j, int k);

struct GeodeticMismatch {
  std::array<int, 3> triple;  // (i, j, k)
  double residual;            // |d_ij + d_jk - d_ik|
  bool separated;             // the separation oracle's verdict
};

/// Classification of all ordered triples (i, j, k) with i != k, j not an
/// endpoint, and all three pairwise distances finite.
struct GeodeticReport {
  std::int64_t triples_checked = 0;
  std::vector<std::array<int, 3>> equality_triples;    // residual <= tol
  std::vector<std::array<int, 3>> separation_triples;  // separates() holds
  std::vector<GeodeticMismatch> mismatches;            // equality XOR separation

  bool passed() const { return mismatches.empty(); }
};

/// Tolerance rule for equality detection: 1e-9 * (1 + max finite entry).
double geodetic_tolerance(const Matrix& d);

/// Verifies the graph-geodetic property of d against the separation oracle.
/// Triples are scanned in lexicographic order.
GeodeticReport verify_geodetic(const WeightedMultigraph& g, const Matrix& d, double tol);

}  // namespace forestdist
