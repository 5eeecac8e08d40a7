#include <numbers>

#include "doctest.h"
#include "oracles.hpp"
#include "resistnet/identities.hpp"

using namespace resistnet;

namespace {

bool close(double a, double b, double rel) { return std::abs(a - b) <= rel * std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("I1 and I2 closed forms against their defining sums") {
  for (std::size_t N = 1; N <= 64; ++N) {
    for (double lambda : {0.05, 0.3, 1.0, 3.0}) {
      for (long long l = 0; l < static_cast<long long>(2 * N); ++l) {
        const IdentityQuery q{N, l, lambda, 1};
        const double want = oracle::identity_defining(N, l, lambda, 1);
        CHECK(close(i1_closed(q), want, 1e-11));
        CHECK(close(i1_direct(q), want, 1e-11));
      }
      for (long long l = 0; l < static_cast<long long>(N); ++l) {
        const IdentityQuery q{N, l, lambda, 2};
        const double want = oracle::identity_defining(N, l, lambda, 2);
        CHECK(close(i2_closed(q), want, 1e-11));
        CHECK(close(i2_direct(q), want, 1e-11));
      }
    }
  }
}

TEST_CASE("identity spot values") {
  CHECK(std::abs(i1_direct({8, 0, 1.0, 1}) - i1_closed({8, 0, 1.0, 1})) <= 1e-12);
  CHECK(std::abs(i2_direct({12, 5, 0.7, 2}) - i2_closed({12, 5, 0.7, 2})) <= 1e-12);
  for (double lambda : {0.2, 1.0, 4.0}) {
    CHECK(i2_closed({1, 0, lambda, 2}) == doctest::Approx(1.0 / (std::cosh(lambda) - 1.0)).epsilon(1e-13));
  }
}

TEST_CASE("lambda = 0") {
  CHECK(std::isinf(i1_closed({6, 2, 0.0, 1})));
  CHECK(std::isinf(i2_direct({6, 2, 0.0, 2})));
  for (std::size_t N = 1; N <= 32; ++N) {
    for (long long l = 0; l < static_cast<long long>(2 * N); ++l) {
      const IdentityQuery q{N, l, 0.0, 1};
      CHECK(identity_difference_closed(q) == doctest::Approx(f_sum(N, l)).epsilon(1e-12));
      CHECK(identity_difference_direct(q) == doctest::Approx(f_sum(N, l)).epsilon(1e-11));
    }
    for (long long l = 0; l < static_cast<long long>(N); ++l) {
      const IdentityQuery q{N, l, 0.0, 2};
      CHECK(identity_difference_closed(q) == doctest::Approx(g_sum(N, l)).epsilon(1e-12));
      CHECK(identity_difference_direct(q) == doctest::Approx(g_sum(N, l)).epsilon(1e-11));
    }
  }
  // the difference is continuous at lambda = 0
  CHECK(identity_difference_closed({10, 3, 1e-7, 1}) == doctest::Approx(f_sum(10, 3)).epsilon(1e-6));
  CHECK(identity_difference_closed({10, 3, 1e-7, 2}) == doctest::Approx(g_sum(10, 3)).epsilon(1e-6));
}

TEST_CASE("large-N integral limit") {
  const double limit = identity_integral_limit(3, 1.0);
  CHECK(limit == doctest::Approx(std::exp(-3.0) / std::sinh(1.0)).epsilon(1e-15));
  CHECK(std::abs(i2_closed({512, 3, 1.0, 2}) - limit) <= 1e-6);
  // I1 approaches the same limit with an error that halves as N doubles
  double previous = std::abs(i1_closed({64, 3, 1.0, 1}) - limit);
  for (std::size_t N : {128, 256, 512, 1024}) {
    const double err = std::abs(i1_closed({N, 3, 1.0, 1}) - limit);
    CHECK(err / previous == doctest::Approx(0.5).epsilon(0.02));
    previous = err;
  }
}

TEST_CASE("product identities") {
  for (std::size_t N = 1; N <= 64; ++N) {
    for (double lambda : {0.1, 1.0, 5.0}) {
      const auto free = product_identity_free(N, lambda);
      const auto per = product_identity_periodic(N, lambda);
      CHECK(close(free.lhs, free.rhs, 1e-10));
      CHECK(close(per.lhs, per.rhs, 1e-10));
      CHECK(std::abs(free.lhs - oracle::product_defining(N, lambda, 1)) <= 1e-10 * free.rhs);
      CHECK(std::abs(per.lhs - oracle::product_defining(N, lambda, 2)) <= 1e-10 * per.rhs);
    }
  }
  const auto one = product_identity_periodic(1, 1.0);
  CHECK(one.lhs == doctest::Approx(std::cosh(1.0) - 1.0).epsilon(1e-15));
  CHECK(one.rhs == doctest::Approx(2.0 * std::pow(std::sinh(0.5), 2)).epsilon(1e-15));
  const auto f16 = product_identity_free(16, 0.3);
  CHECK(std::abs(f16.lhs - f16.rhs) <= 1e-10 * f16.rhs);
  const auto p9 = product_identity_periodic(9, 2.0);
  CHECK(std::abs(p9.lhs - p9.rhs) <= 1e-10 * p9.rhs);
}

TEST_CASE("identity argument checks") {
  CHECK_THROWS_AS(i1_closed({4, 8, 1.0, 1}), Error);
  CHECK_THROWS_AS(i2_closed({4, 4, 1.0, 2}), Error);
  CHECK_THROWS_AS(i1_closed({4, 1, -1.0, 1}), Error);
  CHECK_THROWS_AS(i1_closed({0, 0, 1.0, 1}), Error);
  CHECK_THROWS_AS(product_identity_free(3, 0.0), Error);
}

TEST_CASE("infinite square lattice") {
  CHECK(r_infinite_2d(0, 0) == 0.0);
  CHECK(std::abs(r_infinite_2d(1, 0) - 0.5) <= 1e-8);
  CHECK(std::abs(r_infinite_2d(0, 1, 3.0, 3.0) - 1.5) <= 1e-8);
  CHECK(std::abs(r_infinite_2d(1, 1) - 2.0 / std::numbers::pi) <= 1e-8);
  CHECK(std::abs(r_infinite_2d(2, 0) - (2.0 - 4.0 / std::numbers::pi)) <= 1e-8);
  CHECK(r_infinite_2d(-2, 3) == doctest::Approx(r_infinite_2d(2, -3)).epsilon(1e-12));
  CHECK(r_infinite_2d(2, 3) == doctest::Approx(r_infinite_2d(3, 2)).epsilon(1e-10));
  // r != s is the x/y swap of s, r
  CHECK(r_infinite_2d(2, 1, 1.0, 3.0) == doctest::Approx(r_infinite_2d(1, 2, 3.0, 1.0)).epsilon(1e-10));
}

TEST_CASE("infinite square lattice against extrapolated tori") {
  auto torus = [](std::size_t L, long long dx, long long dy) {
    const LatticeSpec spec{Boundary::Periodic2D, {L, L}, 1, 1, 1};
    return closed_form_resistance<double>(spec, {0, 0}, {static_cast<std::size_t>(dx), static_cast<std::size_t>(dy)});
  };
  for (auto [dx, dy] : {std::pair{1LL, 1LL}, std::pair{2LL, 1LL}, std::pair{3LL, 0LL}}) {
    const double extrapolated = richardson(torus(128, dx, dy), torus(256, dx, dy), 2.0, 2.0);
    CHECK(std::abs(extrapolated - r_infinite_2d(dx, dy)) <= 1e-6);
  }
}

TEST_CASE("infinite cubic lattice") {
  CHECK(r_infinite_3d(0, 0, 0) == 0.0);
  CHECK(std::abs(r_infinite_3d(1, 0, 0) - 1.0 / 3.0) <= 1e-6);
  CHECK(std::abs(r_infinite_3d(0, 0, 1, 2.0, 2.0, 2.0) - 2.0 / 3.0) <= 1e-6);
  const double extrapolated = richardson(r_3d_periodic(32, 1, 1, 0), r_3d_periodic(64, 1, 1, 0), 2.0, 3.0);
  CHECK(std::abs(r_infinite_3d(1, 1, 0) - extrapolated) <= 1e-4);
  CHECK(std::abs(r_infinite_3d(1, 1, 0) - r_3d_periodic(64, 1, 1, 0)) <= 1e-4);
  CHECK(r_infinite_3d(0, 1, 1) == doctest::Approx(r_infinite_3d(1, 1, 0)).epsilon(1e-7));
}

TEST_CASE("periodic cube is exact for nearest neighbours") {
  // L^3 nodes, 3 L^3 equivalent bonds: (L^3 - 1) / (3 L^3)
  for (std::size_t L : {2, 3, 5, 8}) {
    const double n = static_cast<double>(L * L * L);
    CHECK(r_3d_periodic(L, 1, 0, 0) == doctest::Approx((n - 1.0) / (3.0 * n)).epsilon(1e-12));
  }
}

TEST_CASE("finite lattices converge to the infinite one") {
  const std::vector<std::size_t> sizes{8, 16, 32, 64};
  const auto per = finite_to_infinite_convergence(Boundary::Periodic2D, 1, 0, sizes);
  REQUIRE(per.size() == 4);
  for (std::size_t k = 0; k < per.size(); ++k) {
    CHECK(per[k].infinite == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(per[k].difference < 0.0);
    if (k > 0) CHECK(std::abs(per[k].difference) < std::abs(per[k - 1].difference));
  }
  const std::vector<std::size_t> odd{9, 17, 33, 65};
  for (Boundary bc : {Boundary::Free2D, Boundary::Cylinder}) {
    const auto rows = finite_to_infinite_convergence(bc, 1, 0, odd);
    CHECK(std::abs(rows.back().difference) < std::abs(rows.front().difference));
    CHECK(std::abs(rows.back().difference) < 2e-3);
  }
  const auto diag = finite_to_infinite_convergence(Boundary::Free2D, 1, 1, odd);
  CHECK(std::abs(diag.back().difference) < std::abs(diag.front().difference));
}
