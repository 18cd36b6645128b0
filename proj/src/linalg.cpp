#include "forestdist/linalg.hpp"

#include <Eigen/Cholesky>

namespace forestdist {

Matrix laplacian(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  Matrix l = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    l(e.u, e.v) -= e.weight;
    l(e.v, e.u) -= e.weight;
    l(e.u, e.u) += e.weight;
    l(e.v, e.v) += e.weight;
  }
  return l;
}

Matrix total_weight_matrix(const WeightedMultigraph& g) {
  const int n = g.vertex_count();
  Matrix w = Matrix::Zero(n, n);
  for (const Edge& e : g.edges()) {
    w(e.u, e.v) += e.weight;
    w(e.v, e.u) += e.weight;
  }
  return w;
}

Matrix invert_spd(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("matrix must be square");
  const auto n = m.rows();
  Eigen::LLT<Matrix> llt(m);
  if (llt.info() != Eigen::Success)
    throw NumericalError("matrix is not positive definite");
  Matrix x = llt.solve(Matrix::Identity(n, n));
  x = ((x + x.transpose()) / 2.0).eval();
  const double residual = (m * x - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
  if (!(residual <= kInverseResidualLimit))
    throw NumericalError("inverse residual " + std::to_string(residual) +
                         " exceeds the conditioning limit");
  return x;
}

Matrix laplacian_pseudoinverse(const Matrix& l) {
  if (l.rows() != l.cols()) throw std::invalid_argument("matrix must be square");
  const auto n = l.rows();
  const Matrix j = Matrix::Constant(n, n, 1.0 / static_cast<double>(n));
  try {
    return invert_spd(l + j) - j;
  } catch (const NumericalError&) {
    throw NumericalError(
        "L + J is not invertible: disconnected input or not a Laplacian");
  }
}

Matrix elementwise_log(const Matrix& m, double base_factor) {
  if ((m.array() <= 0.0).any())
    throw NumericalError("elementwise log of a nonpositive entry");
  return base_factor * m.array().log().matrix();
}

}  // namespace forestdist
