#pragma once

#include <cstddef>
#include <vector>

#include "resistnet/lattice.hpp"

namespace resistnet {

/// Arguments of the lattice-sum identities
///   I_v(l) = (1/N) sum_{n<N} cos(v l n pi/N) / (cosh(lambda) - cos(v n pi/N)),  v in {1, 2}.
/// Valid offsets: 0 <= l < 2N for v = 1, 0 <= l < N for v = 2.
struct IdentityQuery {
  std::size_t N = 1;
  long long ell = 0;
  double lambda = 1.0;
  int variant = 1;

  /// a = e^{-lambda}.
  double damping() const;
  /// Throws OutOfRange.
  void validate() const;
};

// At lambda = 0 the n = 0 term diverges and all four return +infinity.
double i1_closed(const IdentityQuery& q);
double i1_direct(const IdentityQuery& q);
double i2_closed(const IdentityQuery& q);
double i2_direct(const IdentityQuery& q);

/// I_v(0) - I_v(l), finite for every lambda >= 0. At lambda = 0 the closed
/// form takes its series limit, which equals F_N(l) for v = 1 and G_N(l) for v = 2.
double identity_difference_closed(const IdentityQuery& q);
double identity_difference_direct(const IdentityQuery& q);

/// e^{-l lambda} / sinh(lambda), the large-N limit of both identities.
double identity_integral_limit(long long ell, double lambda);

struct ProductIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// prod_{n<N} (cosh l - cos(n pi/N)) against 2^{1-N} sinh(N l) tanh(l/2).
ProductIdentity product_identity_free(std::size_t N, double lambda);
/// prod_{n<N} (cosh l - cos(2 n pi/N)) against 2^{2-N} sinh^2(N l/2).
ProductIdentity product_identity_periodic(std::size_t N, double lambda);

/// Resistance between two nodes of the infinite square lattice, offset (dx, dy).
/// One angle is integrated in closed form; the other by adaptive Gauss-Kronrod.
double r_infinite_2d(long long dx, long long dy, double r = 1.0, double s = 1.0);

/// Infinite simple cubic lattice; nested tanh-sinh over the two remaining angles.
double r_infinite_3d(long long dx, long long dy, long long dz, double r = 1.0, double s = 1.0, double t = 1.0);

/// Periodic size^3 cube, offset (dx, dy, dz): the finite-size family used to
/// cross-check r_infinite_3d. Mode sum over all non-zero wave vectors.
double r_3d_periodic(std::size_t size, long long dx, long long dy, long long dz, double r = 1.0, double s = 1.0,
                     double t = 1.0);

/// Richardson step for values at sizes n and ratio*n whose error falls off as n^-order.
double richardson(double coarse, double fine, double ratio, double order);

struct ConvergenceRow {
  std::size_t size = 0;
  double finite = 0.0;
  double infinite = 0.0;
  double difference = 0.0;  // finite - infinite
};

/// Finite-lattice resistances on size x size lattices for a pair at offset
/// (dx, dy) placed around the lattice centre, against the infinite-lattice value.
std::vector<ConvergenceRow> finite_to_infinite_convergence(Boundary bc, long long dx, long long dy,
                                                           const std::vector<std::size_t>& sizes, double r = 1.0,
                                                           double s = 1.0);

}  // namespace resistnet
