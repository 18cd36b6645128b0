#pragma once

#include <Eigen/Dense>

#include "forestdist/graph.hpp"

namespace forestdist {

using Matrix = Eigen::MatrixXd;

/// Laplacian of g: l_ij = -w_ij off the diagonal, l_ii = sum_k w_ik.
/// Symmetric with zero row sums; parallel edges contribute their weight sum.
Matrix laplacian(const WeightedMultigraph& g);

/// Symmetric matrix of total edge weights W, zero diagonal.
Matrix total_weight_matrix(const WeightedMultigraph& g);

/// Inverse of a symmetric positive definite matrix via Cholesky
/// (solve per column), symmetrized as (X + X')/2.
/// Throws NumericalError if the factorization fails or the max-norm
/// residual ||m*X - I|| exceeds 1e-6.
Matrix invert_spd(const Matrix& m);

/// Moore-Penrose pseudoinverse of a connected graph's Laplacian,
/// computed as (L + J)^-1 - J with J the all-1/n matrix.
/// Fails for disconnected input (L + J is then singular).
Matrix laplacian_pseudoinverse(const Matrix& l);

/// Entrywise base_factor * ln(m_ij). All entries of m must be positive.
Matrix elementwise_log(const Matrix& m, double base_factor);

/// Residual ceiling used by invert_spd.
inline constexpr double kInverseResidualLimit = 1e-6;

}  // namespace forestdist
