#include "forestdist/family.hpp"

#include <cmath>
#include <limits>

namespace forestdist {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

GammaRule GammaRule::interpolating(double beta) {
  if (!(beta > 0.0)) throw std::invalid_argument("interpolating gamma needs beta > 0");
  return {Kind::Interpolating, beta};
}

GammaRule GammaRule::constant(double c) {
  if (!(c > 0.0)) throw std::invalid_argument("constant gamma must be positive");
  return {Kind::Constant, c};
}

double GammaRule::value(double alpha, int n) const {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  double gamma = 0.0;
  switch (kind) {
    case Kind::Formula13:
      gamma = std::log(std::exp(1.0) + std::pow(alpha, 2.0 / n));
      break;
    case Kind::One:
      gamma = 1.0;
      break;
    case Kind::Interpolating:
      gamma = ((2.0 / n) * alpha + param) / (alpha + param);
      break;
    case Kind::Constant:
      gamma = param;
      break;
  }
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw NumericalError("scaling factor gamma is not positive");
  return gamma;
}

FamilyConfig shortest_path_family() {
  return {WeightTransform::LinearScale, HVariant::Standard, GammaRule::formula13()};
}

FamilyConfig wsp_family() {
  return {WeightTransform::PowerOfAlpha, HVariant::Standard, GammaRule::one()};
}

FamilyConfig unified_family() {
  return {WeightTransform::ExpScaledByAlpha, HVariant::AlphaLn, GammaRule::interpolating(1.0)};
}

Matrix kernel_matrix(const WeightedMultigraph& g, const FamilyConfig& cfg, double alpha) {
  const WeightedMultigraph transformed = transform_weights(g, cfg.transform, alpha);
  const int n = g.vertex_count();
  return invert_spd(Matrix::Identity(n, n) + laplacian(transformed));
}

Matrix h_matrix(const Matrix& q, const FamilyConfig& cfg, double alpha, int n) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const double gamma = cfg.gamma.value(alpha, n);
  double factor = 0.0;
  switch (cfg.h_variant) {
    case HVariant::Standard:
      // (alpha-1)/ln(alpha) extends continuously to 1 at alpha = 1; the
      // exact-equality dispatch keeps the quotient away from 0/0.
      factor = alpha == 1.0 ? gamma : gamma * (alpha - 1.0) / std::log(alpha);
      break;
    case HVariant::AlphaLn:
      factor = gamma * alpha;
      break;
  }
  return elementwise_log(q, factor);
}

Matrix distance_from_h(const Matrix& h) {
  const auto n = h.rows();
  Matrix d(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      d(i, j) = 0.5 * (h(i, i) + h(j, j)) - h(i, j);
  d = ((d + d.transpose()) / 2.0).eval();
  d.diagonal().setZero();
  return d;
}

Matrix log_forest_distance_matrix(const WeightedMultigraph& g, const FamilyConfig& cfg,
                                  double alpha) {
  const int n = g.vertex_count();
  Matrix d = Matrix::Constant(n, n, kInf);
  d.diagonal().setZero();
  for (const auto& component : connected_components(g)) {
    if (component.size() < 2) continue;
    const Subgraph sub = induced_subgraph(g, component);
    const int cn = sub.graph.vertex_count();
    const Matrix q = kernel_matrix(sub.graph, cfg, alpha);
    const Matrix block = distance_from_h(h_matrix(q, cfg, alpha, cn));
    for (int a = 0; a < cn; ++a)
      for (int b = 0; b < cn; ++b)
        d(sub.old_ids[a], sub.old_ids[b]) = block(a, b);
  }
  return d;
}

Matrix ordinary_forest_distance_matrix(const WeightedMultigraph& g, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const int n = g.vertex_count();
  Matrix d = Matrix::Constant(n, n, kInf);
  d.diagonal().setZero();
  for (const auto& component : connected_components(g)) {
    if (component.size() < 2) continue;
    const Subgraph sub = induced_subgraph(g, component);
    const int cn = sub.graph.vertex_count();
    const Matrix q =
        invert_spd(Matrix::Identity(cn, cn) + alpha * laplacian(sub.graph));
    for (int a = 0; a < cn; ++a)
      for (int b = 0; b < cn; ++b)
        d(sub.old_ids[a], sub.old_ids[b]) = 0.5 * (q(a, a) + q(b, b)) - q(a, b);
  }
  d.diagonal().setZero();
  return d;
}

bool ConvergenceReport::monotone_decreasing(double slack) const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].max_error > slack * rows[i - 1].max_error) return false;
  return true;
}

ConvergenceReport convergence_report(const WeightedMultigraph& g, const FamilyConfig& cfg,
                                     const std::vector<double>& alphas, const Matrix& target) {
  const int n = g.vertex_count();
  if (target.rows() != n || target.cols() != n)
    throw std::invalid_argument("target matrix has the wrong dimension");
  ConvergenceReport report;
  for (double alpha : alphas) {
    const Matrix d = log_forest_distance_matrix(g, cfg, alpha);
    double max_error = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !std::isfinite(target(i, j)) || !std::isfinite(d(i, j))) continue;
        max_error = std::max(max_error, std::abs(d(i, j) - target(i, j)));
      }
    report.rows.push_back({alpha, max_error});
  }
  return report;
}

std::vector<double> default_alpha_grid(int points) {
  if (points < 2) throw std::invalid_argument("grid needs at least 2 points");
  std::vector<double> grid(points);
  for (int i = 0; i < points; ++i)
    grid[i] = std::pow(10.0, -4.0 + 8.0 * i / (points - 1));
  return grid;
}

const char* h_variant_name(HVariant variant) {
  switch (variant) {
    case HVariant::Standard: return "standard";
    case HVariant::AlphaLn: return "alpha-ln";
  }
  return "?";
}

}  // namespace forestdist
