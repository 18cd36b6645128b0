#include <doctest.h>

#include <cmath>

#include "forestdist/classical.hpp"
#include "forestdist/forest.hpp"
#include "forestdist/geodetic.hpp"
#include "support.hpp"

using namespace forestdist;
using namespace testsupport;

namespace {
const double kInf = std::numeric_limits<double>::infinity();
}

TEST_CASE("hop distances") {
  const Matrix k3d = shortest_path_matrix(k3());
  CHECK(k3d(0, 1) == 1.0);
  CHECK(k3d(1, 2) == 1.0);

  const Matrix p4d = shortest_path_matrix(p4());
  CHECK(p4d(0, 3) == 3.0);

  const Matrix disc = shortest_path_matrix(edge_plus_isolated());
  CHECK(disc(0, 2) == kInf);
  CHECK(disc(0, 1) == 1.0);
}

TEST_CASE("multi-edges count once for hop distances") {
  const auto g = make_graph(3, {{0, 1, 1.0}, {0, 1, 5.0}, {1, 2, 1.0}});
  CHECK(shortest_path_matrix(g)(0, 1) == 1.0);
  CHECK(shortest_path_matrix(g)(0, 2) == 2.0);
}

TEST_CASE("weighted shortest paths use resistances") {
  CHECK(weighted_shortest_path_matrix(k2(4.0))(0, 1) == doctest::Approx(0.25));

  // Direct resistance 4 loses to the 1+1 two-hop path.
  const Matrix tri = weighted_shortest_path_matrix(weighted_triangle());
  CHECK(tri(0, 2) == doctest::Approx(2.0));
  CHECK(tri(0, 1) == doctest::Approx(1.0));

  const Matrix disc = weighted_shortest_path_matrix(edge_plus_isolated());
  CHECK(disc(1, 2) == kInf);
}

TEST_CASE("parallel edges take the smallest resistance") {
  const auto g = make_graph(2, {{0, 1, 1.0}, {0, 1, 4.0}});
  CHECK(weighted_shortest_path_matrix(g)(0, 1) == doctest::Approx(0.25));
}

TEST_CASE("unit weights make both path distances agree") {
  std::mt19937 rng(404);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = random_any(6, 9, 1.0, 1.0, rng);
    const Matrix hops = shortest_path_matrix(g);
    const Matrix wsp = weighted_shortest_path_matrix(g);
    for (int i = 0; i < 6; ++i)
      for (int j = 0; j < 6; ++j) {
        if (std::isfinite(hops(i, j)))
          CHECK(wsp(i, j) == doctest::Approx(hops(i, j)).epsilon(1e-12));
        else
          CHECK(wsp(i, j) == kInf);
      }
  }
}

TEST_CASE("resistance distances on small graphs") {
  CHECK(resistance_matrix(k2())(0, 1) == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(resistance_matrix(k3())(0, 1) == doctest::Approx(2.0 / 3.0).epsilon(1e-10));

  // Series law, and the geodetic "if" direction on the path.
  const Matrix p3d = resistance_matrix(p3());
  CHECK(p3d(0, 2) == doctest::Approx(p3d(0, 1) + p3d(1, 2)).epsilon(1e-10));
  CHECK(p3d(0, 2) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("parallel conductances add for the resistance distance") {
  const auto g = make_graph(2, {{0, 1, 2.5}, {0, 1, 0.5}});
  CHECK(resistance_matrix(g)(0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-10));
}

TEST_CASE("resistance never exceeds the best path resistance") {
  std::mt19937 rng(505);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 4;
    const auto g = random_connected(n, 4, 0.1, 10.0, rng);
    const Matrix r = resistance_matrix(g);
    const Matrix wsp = weighted_shortest_path_matrix(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) CHECK(r(i, j) <= wsp(i, j) + 1e-10);
  }
}

TEST_CASE("distance matrix invariants hold for all three kinds") {
  std::mt19937 rng(606);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = random_any(6, 8, 0.1, 10.0, rng);
    const auto components = connected_components(g);
    std::vector<int> component_of(6);
    for (std::size_t c = 0; c < components.size(); ++c)
      for (int v : components[c]) component_of[v] = static_cast<int>(c);

    for (const Matrix& d : {shortest_path_matrix(g), weighted_shortest_path_matrix(g),
                            resistance_matrix(g)}) {
      double max_finite = 0.0;
      for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j)
          if (std::isfinite(d(i, j))) max_finite = std::max(max_finite, d(i, j));
      const double tol = 1e-9 * (1.0 + max_finite);
      for (int i = 0; i < 6; ++i) {
        CHECK(d(i, i) == 0.0);
        for (int j = 0; j < 6; ++j) {
          CHECK(d(i, j) == d(j, i));
          CHECK((std::isinf(d(i, j)) == (component_of[i] != component_of[j])));
          if (!std::isinf(d(i, j))) CHECK(d(i, j) >= 0.0);
          for (int k = 0; k < 6; ++k) {
            if (std::isfinite(d(i, j)) && std::isfinite(d(j, k)) && std::isfinite(d(i, k)))
              CHECK(d(i, j) + d(j, k) >= d(i, k) - tol);
          }
        }
      }
    }
  }
}

TEST_CASE("separation forces resistance additivity") {
  std::mt19937 rng(707);
  for (int trial = 0; trial < 12; ++trial) {
    const int n = 4 + trial % 4;
    const auto g = random_connected(n, 2, 0.5, 3.0, rng);
    const Matrix r = resistance_matrix(g);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k) {
          if (i == k || j == i || j == k) continue;
          if (separates(g, i, j, k))
            CHECK(std::abs(r(i, j) + r(j, k) - r(i, k)) < 1e-8);
        }
  }
}
