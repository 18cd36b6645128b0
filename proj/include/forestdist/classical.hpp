#pragma once

#include "forestdist/linalg.hpp"

namespace forestdist {

// Distance matrices are symmetric with zero diagonal; entries are +infinity
// exactly for vertex pairs in different connected components.

/// Hop-count distances (edge weights ignored, multi-edges count once).
Matrix shortest_path_matrix(const WeightedMultigraph& g);

/// Weighted shortest path distances: minimum over paths of the summed edge
/// resistances r_e = 1/w_e; parallel edges contribute their smallest r.
Matrix weighted_shortest_path_matrix(const WeightedMultigraph& g);

/// Resistance distances d(i,j) = x_ii + x_jj - 2 x_ij from the Laplacian
/// pseudoinverse, computed per connected component.
Matrix resistance_matrix(const WeightedMultigraph& g);

}  // namespace forestdist
