#include <doctest.h>

#include <random>

#include "forestdist/linalg.hpp"
#include "support.hpp"

using namespace forestdist;
using namespace testsupport;

TEST_CASE("invert_spd on hand inverses") {
  Matrix m(2, 2);
  m << 2, -1, -1, 2;
  const Matrix x = invert_spd(m);
  CHECK(x(0, 0) == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(x(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));

  const Matrix id = Matrix::Identity(4, 4);
  CHECK((invert_spd(id) - id).cwiseAbs().maxCoeff() == 0.0);

  // I + L for unit K3 inverts to (1/4)(I + J).
  const Matrix q = invert_spd(Matrix::Identity(3, 3) + laplacian(k3()));
  CHECK(q(0, 0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(q(0, 1) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK((q * (Matrix::Identity(3, 3) + laplacian(k3())) - Matrix::Identity(3, 3))
            .cwiseAbs()
            .maxCoeff() < 1e-12);
}

TEST_CASE("invert_spd rejects bad input") {
  Matrix indefinite(2, 2);
  indefinite << 1, 2, 2, 1;
  CHECK_THROWS_AS(invert_spd(indefinite), NumericalError);
  CHECK_THROWS_AS(invert_spd(Matrix::Zero(2, 3)), std::invalid_argument);
}

TEST_CASE("invert_spd is an involution on random SPD matrices") {
  std::mt19937 rng(19);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int n : {3, 10, 50}) {
    Matrix r(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r(i, j) = gauss(rng);
    const Matrix spd = r.transpose() * r + Matrix::Identity(n, n);
    CHECK((invert_spd(invert_spd(spd)) - spd).cwiseAbs().maxCoeff() < 1e-8);
  }
}

TEST_CASE("kernel entries are strictly positive on connected graphs") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 25; ++trial) {
    const auto g = random_connected(6, 5, 0.1, 10.0, rng);
    const Matrix q = invert_spd(Matrix::Identity(6, 6) + laplacian(g));
    CHECK(q.minCoeff() > 0.0);
  }
}

TEST_CASE("laplacian_pseudoinverse of K2") {
  const Matrix x = laplacian_pseudoinverse(laplacian(k2()));
  CHECK(x(0, 0) == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(x(0, 1) == doctest::Approx(-0.25).epsilon(1e-12));
  // d^r(0,1) = x00 + x11 - 2 x01 = 1.
  CHECK(x(0, 0) + x(1, 1) - 2 * x(0, 1) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("laplacian_pseudoinverse properties") {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_connected(n, 3, 0.5, 5.0, rng);
    const Matrix l = laplacian(g);
    const Matrix x = laplacian_pseudoinverse(l);
    const Matrix j = Matrix::Constant(n, n, 1.0 / n);
    CHECK((x - x.transpose()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((x * Eigen::VectorXd::Ones(n)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((l * x - (Matrix::Identity(n, n) - j)).cwiseAbs().maxCoeff() < 1e-8);
    CHECK((l * x * l - l).cwiseAbs().maxCoeff() < 1e-8);

    // (L + aJ)^-1 - J/a gives the same pseudoinverse for any a != 0.
    for (double a : {0.5, 2.0, static_cast<double>(n)}) {
      const Matrix alt = invert_spd(l + a * j) - j / a;
      CHECK((alt - x).cwiseAbs().maxCoeff() < 1e-8);
    }
  }
}

TEST_CASE("laplacian_pseudoinverse fails on disconnected input") {
  CHECK_THROWS_AS(laplacian_pseudoinverse(laplacian(edge_plus_isolated())), NumericalError);
}

TEST_CASE("elementwise_log") {
  CHECK(elementwise_log(Matrix::Ones(3, 3), 5.0).cwiseAbs().maxCoeff() == 0.0);

  Matrix q(3, 3);
  q.setConstant(0.25);
  q.diagonal().setConstant(0.5);
  const Matrix h = elementwise_log(q, 1.0);
  CHECK(h(0, 0) == doctest::Approx(std::log(0.5)).epsilon(1e-12));
  CHECK(h(0, 1) == doctest::Approx(std::log(0.25)).epsilon(1e-12));

  Matrix bad = Matrix::Ones(2, 2);
  bad(0, 1) = 0.0;
  CHECK_THROWS_AS(elementwise_log(bad, 1.0), NumericalError);
  bad(0, 1) = -3.0;
  CHECK_THROWS_AS(elementwise_log(bad, 1.0), NumericalError);
}
