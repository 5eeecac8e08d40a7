#include <numeric>

#include <Eigen/Eigenvalues>

#include "doctest.h"
#include "oracles.hpp"
#include "resistnet/golden.hpp"
#include "resistnet/spectral.hpp"

using namespace resistnet;

namespace {

const std::vector<Rational> kValues{1, 2, Rational(mpz_class(1), mpz_class(3))};

// Same sum over a basis from Eigen's own solver.
double resistance_other_basis(const Network& net, NodeIndex a, NodeIndex b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(assemble_laplacian(net));
  double sum = 0;
  for (Eigen::Index k = 1; k < es.eigenvalues().size(); ++k) {
    const double d = es.eigenvectors()(a, k) - es.eigenvectors()(b, k);
    sum += d * d / es.eigenvalues()(k);
  }
  return sum;
}

}  // namespace

TEST_CASE("4-node network spectrum") {
  const double c1 = 1.0, c2 = 0.5;
  const auto spec = decompose(example1_network(1, 2));
  REQUIRE(spec.zero_mode_count == 1);
  CHECK(spec.eigenvalues(0) == doctest::Approx(0.0).epsilon(1e-12));
  std::vector<double> got(spec.eigenvalues.data() + 1, spec.eigenvalues.data() + 4);
  std::vector<double> want{2 * c1, 2 * (c1 + c2), 4 * c1};
  for (int k = 0; k < 3; ++k) CHECK(got[k] == doctest::Approx(want[k]).epsilon(1e-13));
  // lambda = 4 c1 has eigenvector (1,-1,1,-1)/2 up to sign
  Eigen::Vector4d psi(0.5, -0.5, 0.5, -0.5);
  CHECK(std::abs(spec.eigenvectors.col(3).dot(psi)) == doctest::Approx(1.0).epsilon(1e-13));
  // lambda = 2 c1 has eigenvector (-1,0,1,0)/sqrt 2
  Eigen::Vector4d psi3(-1, 0, 1, 0);
  CHECK(std::abs(spec.eigenvectors.col(1).dot(psi3 / std::sqrt(2.0))) == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("4-node network resistances") {
  const auto spec = decompose(example1_network(1, 2));
  CHECK(two_point_resistance(spec, 0, 2) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(two_point_resistance(spec, 0, 1) == doctest::Approx(example1_r_adjacent(1, 2).to_double()).epsilon(1e-14));
  CHECK(two_point_resistance(spec, 3, 3) == 0.0);
}

TEST_CASE("complete graph eigenvalues") {
  for (std::size_t n = 2; n <= 8; ++n) {
    const auto spec = decompose(complete_graph(n, 2));
    CHECK(spec.zero_mode_count == 1);
    for (Eigen::Index k = 1; k < spec.size(); ++k) {
      CHECK(spec.eigenvalues(k) == doctest::Approx(static_cast<double>(n) / 2.0).epsilon(1e-13));
    }
    CHECK(two_point_resistance(spec, 0, n - 1) == doctest::Approx(4.0 / static_cast<double>(n)).epsilon(1e-13));
  }
}

TEST_CASE("eigenvectors are orthonormal and reconstruct the laplacian") {
  for (const auto& net : oracle::random_networks(11, 40, 2, 12, kValues)) {
    const auto lap = assemble_laplacian(net);
    const auto spec = decompose<double>(lap);
    const auto& v = spec.eigenvectors;
    const auto n = spec.size();
    CHECK((v.transpose() * v - Eigen::MatrixXd::Identity(n, n)).norm() <= 1e-12 * n);
    CHECK((v * spec.eigenvalues.asDiagonal() * v.transpose() - lap).norm() <= 1e-12 * lap.norm());
    CHECK(spec.zero_mode_count == 1);
    // the zero mode is the uniform vector
    CHECK(std::abs(v.col(0).sum()) == doctest::Approx(std::sqrt(double(n))).epsilon(1e-12));
  }
}

TEST_CASE("resistance is basis independent and matches the pseudo-inverse") {
  for (const auto& net : oracle::random_networks(12, 40, 2, 12, kValues)) {
    const auto table = resistance_matrix(decompose(net));
    const auto pinv = oracle::pinv_resistances(net);
    const auto n = static_cast<NodeIndex>(net.n_nodes());
    for (NodeIndex a = 0; a < n; ++a) {
      for (NodeIndex b = a + 1; b < n; ++b) {
        CHECK(table(a, b) == doctest::Approx(pinv(a, b)).epsilon(1e-11));
        CHECK(table(a, b) == doctest::Approx(resistance_other_basis(net, a, b)).epsilon(1e-11));
      }
    }
  }
}

TEST_CASE("relabelling nodes permutes the resistances") {
  for (const auto& net : oracle::random_networks(13, 10, 3, 10, kValues)) {
    const std::size_t n = net.n_nodes();
    std::vector<NodeIndex> perm(n);
    for (std::size_t k = 0; k < n; ++k) perm[k] = (3 * k + 1) % n;
    if (std::gcd(n, std::size_t{3}) != 1) continue;
    std::vector<Edge> edges;
    for (const auto& e : net.edges()) edges.push_back({perm[e.i], perm[e.j], e.resistance});
    const auto before = resistance_matrix(decompose(net));
    const auto after = resistance_matrix(decompose(Network(n, edges)));
    for (NodeIndex a = 0; a < n; ++a)
      for (NodeIndex b = 0; b < n; ++b) CHECK(after(perm[a], perm[b]) == doctest::Approx(before(a, b)).epsilon(1e-11));
  }
}

TEST_CASE("long double spectrum agrees") {
  const auto net = example1_network(1, 2);
  const auto spec = decompose<long double>(net);
  CHECK(static_cast<double>(two_point_resistance(spec, 0, 1)) == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("spectral errors") {
  const Network split(4, {{0, 1, 1}, {2, 3, 1}});
  const auto spec = decompose(split);
  CHECK(spec.zero_mode_count == 2);
  CHECK_FALSE(spec.connected());
  try {
    two_point_resistance(spec, 0, 3);
    FAIL("expected Disconnected");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::Disconnected);
  }
  CHECK_THROWS_AS(two_point_resistance(decompose(example1_network(1, 1)), 0, 9), Error);

  // A conductance far under the zero threshold leaves two numerical zero modes
  // in a formally connected network.
  LaplacianMatrix<double> lap(3, 3);
  const double tiny = 1e-14;
  lap << 1, -1, 0,
        -1, 1 + tiny, -tiny,
         0, -tiny, tiny;
  try {
    decompose<double>(lap);
    FAIL("expected MultipleZeroModes");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MultipleZeroModes);
  }
}
