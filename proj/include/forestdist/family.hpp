#pragma once

#include <vector>

#include "forestdist/linalg.hpp"

namespace forestdist {

/// Scaling applied to the elementwise log of the kernel.
enum class HVariant {
  Standard,  // gamma (alpha-1) log_alpha Q_alpha, extended by gamma ln Q_1 at alpha = 1
  AlphaLn,   // gamma alpha ln Q_alpha
};

/// Rule producing the positive scaling factor gamma from alpha and the
/// vertex count.
struct GammaRule {
  enum class Kind { Formula13, One, Interpolating, Constant };

  Kind kind = Kind::Formula13;
  double param = 1.0;  // beta for Interpolating, c for Constant

  static GammaRule formula13() { return {Kind::Formula13, 0.0}; }
  static GammaRule one() { return {Kind::One, 0.0}; }
  static GammaRule interpolating(double beta);
  static GammaRule constant(double c);

  /// gamma(alpha) for an n-vertex graph; always strictly positive.
  double value(double alpha, int n) const;
};

struct FamilyConfig {
  WeightTransform transform = WeightTransform::LinearScale;
  HVariant h_variant = HVariant::Standard;
  GammaRule gamma;
};

/// Family converging to the shortest path distance as alpha -> 0+ and to
/// the resistance distance as alpha -> infinity.
FamilyConfig shortest_path_family();

/// Family converging to the weighted shortest path distance as alpha -> 0+.
FamilyConfig wsp_family();

/// Family converging to the weighted shortest path distance as alpha -> 0+
/// and to the resistance distance as alpha -> infinity.
FamilyConfig unified_family();

/// Q_alpha = (I + L_alpha)^-1, the kernel of the transformed graph.
/// Entries are strictly positive when g is connected.
Matrix kernel_matrix(const WeightedMultigraph& g, const FamilyConfig& cfg, double alpha);

/// H_alpha from the kernel; requires all kernel entries positive.
Matrix h_matrix(const Matrix& q, const FamilyConfig& cfg, double alpha, int n);

/// d_ij = (h_ii + h_jj)/2 - h_ij with an exactly zero diagonal.
Matrix distance_from_h(const Matrix& h);

/// The logarithmic forest distance matrix for the given configuration,
/// computed per connected component; cross-component entries are +infinity.
Matrix log_forest_distance_matrix(const WeightedMultigraph& g, const FamilyConfig& cfg,
                                  double alpha);

/// Forest distance without the logarithmic transform:
/// d(i,j) = (q_ii + q_jj)/2 - q_ij on Q_alpha = (I + alpha L)^-1.
/// Cross-component entries are +infinity.
Matrix ordinary_forest_distance_matrix(const WeightedMultigraph& g, double alpha);

struct ConvergenceRow {
  double alpha;
  double max_error;  // max over finite i != j of |d_alpha(i,j) - target(i,j)|
};

struct ConvergenceReport {
  std::vector<ConvergenceRow> rows;

  /// True when errors decrease along the rows, allowing each row to exceed
  /// the previous one by at most the slack factor.
  bool monotone_decreasing(double slack = 1.0) const;
};

/// Max-error table of the family distance against a target matrix over the
/// given alpha list (ordered toward the intended limit).
ConvergenceReport convergence_report(const WeightedMultigraph& g, const FamilyConfig& cfg,
                                     const std::vector<double>& alphas, const Matrix& target);

/// Default alpha grid for sweeps: logarithmic from 1e-4 to 1e4.
std::vector<double> default_alpha_grid(int points = 9);

const char* h_variant_name(HVariant variant);

}  // namespace forestdist
