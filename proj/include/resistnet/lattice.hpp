#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdlib>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "resistnet/error.hpp"
#include "resistnet/network.hpp"
#include "resistnet/rational.hpp"
#include "resistnet/summation.hpp"

namespace resistnet {

/// Boundary conditions of a regular lattice. Cylinder wraps the length axis
/// (x, size M) and leaves the width axis (y, size N) free. Moebius joins
/// (M-1, y) to (0, N-1-y). Klein is Moebius plus a periodic width axis.
enum class Boundary { Free1D, Periodic1D, Free2D, Periodic2D, Cylinder, Moebius, Klein, Free3D };

std::string_view to_string(Boundary bc);
std::optional<Boundary> parse_boundary(std::string_view name, std::size_t dimension);
std::size_t dimension(Boundary bc);

/// Lattice coordinate, 0-based. Unused axes stay 0.
struct Site {
  std::size_t x = 0;
  std::size_t y = 0;
  std::size_t z = 0;

  friend bool operator==(const Site&, const Site&) = default;
};

/// Shape, per-axis resistances and boundary condition of a lattice.
/// Node index is x + M*y + M*N*z (x fastest).
struct LatticeSpec {
  Boundary bc = Boundary::Free2D;
  std::vector<std::size_t> dims;
  Rational r{1};
  Rational s{1};
  Rational t{1};

  std::size_t M() const { return dims.empty() ? 1 : dims[0]; }
  std::size_t N() const { return dims.size() > 1 ? dims[1] : 1; }
  std::size_t L() const { return dims.size() > 2 ? dims[2] : 1; }
  std::size_t node_count() const { return M() * N() * L(); }

  NodeIndex index(Site p) const { return p.x + M() * (p.y + N() * p.z); }
  Site site(NodeIndex v) const { return {v % M(), (v / M()) % N(), v / (M() * N())}; }
  bool contains(Site p) const { return p.x < M() && p.y < N() && p.z < L(); }

  /// Throws OutOfRange on a bad shape or NonPositiveResistance.
  void validate() const;
};

/// Explicit resistor network for a lattice. Wrap bonds on a length-1 axis
/// would be self-loops and are dropped; length-2 wraps become parallel edges.
Network make_lattice(const LatticeSpec& spec);

/// One analytic Laplacian eigenmode.
struct Mode {
  std::array<std::size_t, 3> index{};
  int twist = 0;  // Klein parity selector tau; 0 elsewhere
  double eigenvalue = 0.0;
};

/// Analytic eigenvalues of the lattice Laplacian, zero mode included.
std::vector<Mode> mode_spectrum(const LatticeSpec& spec);

namespace modes {

template <typename Scalar>
Scalar free_angle(std::size_t n, std::size_t size) {
  return std::numbers::pi_v<Scalar> * Scalar(n) / Scalar(size);
}

/// (4m + 1 - (-1)^n) pi / (2M): even n runs periodic, odd n antiperiodic.
template <typename Scalar>
Scalar moebius_phase(std::size_t m, std::size_t n, std::size_t M) {
  const std::size_t k = 4 * m + (n % 2 == 0 ? 0 : 2);
  return std::numbers::pi_v<Scalar> * Scalar(k) / Scalar(2 * M);
}

/// Theta_m(tau) = (m + tau/2) pi / M.
template <typename Scalar>
Scalar klein_phase(std::size_t m, int tau, std::size_t M) {
  return std::numbers::pi_v<Scalar> * (Scalar(m) + Scalar(tau) / Scalar(2)) / Scalar(M);
}

/// tau_n: 0 for n <= (N-1)/2, 1 above.
inline int klein_twist(std::size_t n, std::size_t N) { return n <= (N - 1) / 2 ? 0 : 1; }

/// 1 - cos(angle) without cancellation near 0.
template <typename Scalar>
Scalar one_minus_cos(Scalar angle) {
  const Scalar h = std::sin(angle / Scalar(2));
  return Scalar(2) * h * h;
}

}  // namespace modes

/// F_N(l) = |l| - ((l^2 + |l|)/2 - floor(|l|/2)) / N, with l reduced mod 2N.
template <typename Scalar = double>
Scalar f_sum(std::size_t N, long long ell) {
  if (N == 0) throw Error(Errc::OutOfRange, "F_N needs N >= 1");
  const auto period = static_cast<long long>(2 * N);
  const long long a = ((std::llabs(ell) % period) + period) % period;
  const long long bracket = (a * a + a) / 2 - a / 2;
  return Scalar(a) - Scalar(bracket) / Scalar(N);
}

/// G_N(l) = |l| - l^2 / N, with l reduced mod N.
template <typename Scalar = double>
Scalar g_sum(std::size_t N, long long ell) {
  if (N == 0) throw Error(Errc::OutOfRange, "G_N needs N >= 1");
  const auto period = static_cast<long long>(N);
  const long long a = std::llabs(ell) % period;
  return Scalar(a) - Scalar(a * a) / Scalar(N);
}

namespace detail {

inline void require_axis(std::size_t size, std::size_t c1, std::size_t c2, const char* axis) {
  if (size == 0) throw Error(Errc::OutOfRange, std::string("lattice axis ") + axis + " has zero length");
  if (c1 >= size || c2 >= size) {
    throw Error(Errc::OutOfRange, std::string("coordinate outside lattice along ") + axis);
  }
}

template <typename Scalar>
void require_positive(Scalar value) {
  if (!(value > Scalar(0))) throw Error(Errc::NonPositiveResistance, "lattice resistance must be > 0");
}

inline long long diff(std::size_t a, std::size_t b) {
  return static_cast<long long>(a) - static_cast<long long>(b);
}

}  // namespace detail

template <typename Scalar = double>
Scalar r_1d_free(std::size_t N, Scalar r, std::size_t x1, std::size_t x2) {
  detail::require_axis(N, x1, x2, "x");
  detail::require_positive(r);
  return r * Scalar(std::llabs(detail::diff(x1, x2)));
}

template <typename Scalar = double>
Scalar r_1d_periodic(std::size_t N, Scalar r, std::size_t x1, std::size_t x2) {
  detail::require_axis(N, x1, x2, "x");
  detail::require_positive(r);
  return r * g_sum<Scalar>(N, detail::diff(x1, x2));
}

/// Free M x N lattice: the two one-dimensional terms plus the mode sum over
/// m, n >= 1 with product-cosine eigenvectors.
template <typename Scalar = double>
Scalar r_2d_free(std::size_t M, std::size_t N, Scalar r, Scalar s, Site a, Site b) {
  using std::cos;
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_positive(r);
  detail::require_positive(s);
  const Scalar half(0.5);
  ModeAccumulator<Scalar> acc;
  for (std::size_t m = 1; m < M; ++m) {
    const Scalar theta = modes::free_angle<Scalar>(m, M);
    const Scalar cx1 = cos((Scalar(a.x) + half) * theta), cx2 = cos((Scalar(b.x) + half) * theta);
    const Scalar gx = modes::one_minus_cos(theta) / r;
    for (std::size_t n = 1; n < N; ++n) {
      const Scalar phi = modes::free_angle<Scalar>(n, N);
      const Scalar u = cx1 * cos((Scalar(a.y) + half) * phi) - cx2 * cos((Scalar(b.y) + half) * phi);
      const Scalar denom = gx + modes::one_minus_cos(phi) / s;
      acc.add(Scalar(2) * denom, Scalar(2) * u * u / (Scalar(M * N) * denom));
    }
  }
  return r * Scalar(std::llabs(detail::diff(a.x, b.x))) / Scalar(N) +
         s * Scalar(std::llabs(detail::diff(a.y, b.y))) / Scalar(M) + acc.total();
}

/// Torus: G_M and G_N terms plus the doubled-angle mode sum over
/// m = 1..M-1, n = 1..N-1. Depends only on coordinate differences.
template <typename Scalar = double>
Scalar r_2d_periodic(std::size_t M, std::size_t N, Scalar r, Scalar s, Site a, Site b) {
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_positive(r);
  detail::require_positive(s);
  const long long dx = detail::diff(a.x, b.x), dy = detail::diff(a.y, b.y);
  ModeAccumulator<Scalar> acc;
  for (std::size_t m = 1; m < M; ++m) {
    const Scalar theta = modes::free_angle<Scalar>(m, M);
    const Scalar gx = modes::one_minus_cos(Scalar(2) * theta) / r;
    for (std::size_t n = 1; n < N; ++n) {
      const Scalar phi = modes::free_angle<Scalar>(n, N);
      const Scalar denom = gx + modes::one_minus_cos(Scalar(2) * phi) / s;
      const Scalar num = modes::one_minus_cos(Scalar(2 * dx) * theta + Scalar(2 * dy) * phi);
      acc.add(Scalar(2) * denom, num / (Scalar(M * N) * denom));
    }
  }
  return r / Scalar(N) * g_sum<Scalar>(M, dx) + s / Scalar(M) * g_sum<Scalar>(N, dy) + acc.total();
}

/// Cylinder, periodic along x (M) and free along y (N).
template <typename Scalar = double>
Scalar r_2d_cylinder(std::size_t M, std::size_t N, Scalar r, Scalar s, Site a, Site b) {
  using std::cos;
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_positive(r);
  detail::require_positive(s);
  const long long dx = detail::diff(a.x, b.x);
  const Scalar half(0.5);
  ModeAccumulator<Scalar> acc;
  for (std::size_t m = 1; m < M; ++m) {
    const Scalar theta = modes::free_angle<Scalar>(m, M);
    const Scalar gx = modes::one_minus_cos(Scalar(2) * theta) / r;
    const Scalar twist = cos(Scalar(2 * dx) * theta);
    for (std::size_t n = 1; n < N; ++n) {
      const Scalar phi = modes::free_angle<Scalar>(n, N);
      const Scalar c1 = cos((Scalar(a.y) + half) * phi), c2 = cos((Scalar(b.y) + half) * phi);
      const Scalar denom = gx + modes::one_minus_cos(phi) / s;
      acc.add(Scalar(2) * denom, (c1 * c1 + c2 * c2 - Scalar(2) * c1 * c2 * twist) / (Scalar(M * N) * denom));
    }
  }
  return r / Scalar(N) * g_sum<Scalar>(M, dx) + s * Scalar(std::llabs(detail::diff(a.y, b.y))) / Scalar(M) +
         acc.total();
}

/// Moebius strip of length M and width N. Eigenvalues are
/// 2/r (1 - cos k) + 2/s (1 - cos(n pi/N)) with k the Moebius phase.
template <typename Scalar = double>
Scalar r_2d_moebius(std::size_t M, std::size_t N, Scalar r, Scalar s, Site a, Site b) {
  using std::cos;
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_positive(r);
  detail::require_positive(s);
  const long long dx = detail::diff(a.x, b.x);
  const Scalar half(0.5);
  ModeAccumulator<Scalar> acc;
  for (std::size_t n = 1; n < N; ++n) {
    const Scalar phi = modes::free_angle<Scalar>(n, N);
    const Scalar c1 = cos((Scalar(a.y) + half) * phi), c2 = cos((Scalar(b.y) + half) * phi);
    const Scalar gy = modes::one_minus_cos(phi) / s;
    for (std::size_t m = 0; m < M; ++m) {
      const Scalar k = modes::moebius_phase<Scalar>(m, n, M);
      const Scalar denom = modes::one_minus_cos(k) / r + gy;
      acc.add(Scalar(2) * denom,
              (c1 * c1 + c2 * c2 - Scalar(2) * c1 * c2 * cos(Scalar(dx) * k)) / (Scalar(M * N) * denom));
    }
  }
  return r / Scalar(N) * g_sum<Scalar>(M, dx) + acc.total();
}

/// Klein bottle: Moebius twist along x, periodic along y. Width modes pair up
/// as cos((2y+1) n pi/N) with tau = 0 and sin((2y+1) n pi/N) with tau = 1 for
/// n = 1..(N-1)/2; even N adds the alternating mode n = N/2 (the Delta_N term).
template <typename Scalar = double>
Scalar r_2d_klein(std::size_t M, std::size_t N, Scalar r, Scalar s, Site a, Site b) {
  using std::cos;
  using std::sin;
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_positive(r);
  detail::require_positive(s);
  const long long dx = detail::diff(a.x, b.x), dy = detail::diff(a.y, b.y);
  const Scalar pi = std::numbers::pi_v<Scalar>;
  const Scalar weight = Scalar(2) / Scalar(M * N);
  auto eigenvalue = [&](std::size_t m, std::size_t n, int tau) {
    return Scalar(2) * modes::one_minus_cos(Scalar(2) * modes::klein_phase<Scalar>(m, tau, M)) / r +
           Scalar(2) * modes::one_minus_cos(Scalar(2 * n) * pi / Scalar(N)) / s;
  };

  ModeAccumulator<Scalar> acc;
  if (N % 2 == 0) {
    const Scalar parity = (std::llabs(dy) % 2 == 0) ? Scalar(1) : Scalar(-1);
    for (std::size_t m = 0; m < M; ++m) {
      const Scalar lambda = eigenvalue(m, N / 2, 1);
      acc.add(lambda, weight * (Scalar(1) - parity * cos(Scalar(2 * dx) * modes::klein_phase<Scalar>(m, 1, M))) /
                          lambda);
    }
  }
  for (std::size_t n = 1; n <= (N - 1) / 2; ++n) {
    const Scalar w = Scalar(n) * pi / Scalar(N);
    const Scalar c1 = cos(Scalar(2 * a.y + 1) * w), c2 = cos(Scalar(2 * b.y + 1) * w);
    const Scalar s1 = sin(Scalar(2 * a.y + 1) * w), s2 = sin(Scalar(2 * b.y + 1) * w);
    for (std::size_t m = 0; m < M; ++m) {
      const Scalar even = eigenvalue(m, n, 0);
      acc.add(even, weight * (c1 * c1 + c2 * c2 -
                              Scalar(2) * c1 * c2 * cos(Scalar(2 * dx) * modes::klein_phase<Scalar>(m, 0, M))) /
                        even);
      const Scalar odd = eigenvalue(m, n, 1);
      acc.add(odd, weight * (s1 * s1 + s2 * s2 -
                             Scalar(2) * s1 * s2 * cos(Scalar(2 * dx) * modes::klein_phase<Scalar>(m, 1, M))) /
                       odd);
    }
  }
  return r / Scalar(N) * g_sum<Scalar>(M, dx) + acc.total();
}

/// Free M x N x L lattice: triple mode sum over m, n, l >= 1, plus the three
/// face resistances weighted by the missing axis and minus the three edge terms.
template <typename Scalar = double>
Scalar r_3d_free(std::size_t M, std::size_t N, std::size_t L, Scalar r, Scalar s, Scalar t, Site a, Site b) {
  using std::cos;
  detail::require_axis(M, a.x, b.x, "x");
  detail::require_axis(N, a.y, b.y, "y");
  detail::require_axis(L, a.z, b.z, "z");
  detail::require_positive(r);
  detail::require_positive(s);
  detail::require_positive(t);
  const Scalar half(0.5);
  ModeAccumulator<Scalar> acc;
  for (std::size_t m = 1; m < M; ++m) {
    const Scalar theta = modes::free_angle<Scalar>(m, M);
    const Scalar cx1 = cos((Scalar(a.x) + half) * theta), cx2 = cos((Scalar(b.x) + half) * theta);
    const Scalar gx = modes::one_minus_cos(theta) / r;
    for (std::size_t n = 1; n < N; ++n) {
      const Scalar phi = modes::free_angle<Scalar>(n, N);
      const Scalar cy1 = cos((Scalar(a.y) + half) * phi), cy2 = cos((Scalar(b.y) + half) * phi);
      const Scalar gxy = gx + modes::one_minus_cos(phi) / s;
      for (std::size_t l = 1; l < L; ++l) {
        const Scalar alpha = modes::free_angle<Scalar>(l, L);
        const Scalar u =
            cx1 * cy1 * cos((Scalar(a.z) + half) * alpha) - cx2 * cy2 * cos((Scalar(b.z) + half) * alpha);
        const Scalar denom = gxy + modes::one_minus_cos(alpha) / t;
        acc.add(Scalar(2) * denom, Scalar(4) * u * u / (Scalar(M * N * L) * denom));
      }
    }
  }
  const Scalar faces = r_2d_free<Scalar>(M, N, r, s, {a.x, a.y}, {b.x, b.y}) / Scalar(L) +
                       r_2d_free<Scalar>(N, L, s, t, {a.y, a.z}, {b.y, b.z}) / Scalar(M) +
                       r_2d_free<Scalar>(L, M, t, r, {a.z, a.x}, {b.z, b.x}) / Scalar(N);
  const Scalar edges = r_1d_free<Scalar>(M, r, a.x, b.x) / Scalar(N * L) +
                       r_1d_free<Scalar>(N, s, a.y, b.y) / Scalar(M * L) +
                       r_1d_free<Scalar>(L, t, a.z, b.z) / Scalar(M * N);
  return acc.total() + faces - edges;
}

/// Dispatches to the closed form for `spec.bc`.
template <typename Scalar = double>
Scalar closed_form_resistance(const LatticeSpec& spec, Site a, Site b) {
  spec.validate();
  if (!spec.contains(a) || !spec.contains(b)) throw Error(Errc::OutOfRange, "site outside lattice");
  const Scalar r = detail::to_scalar<Scalar>(spec.r);
  const Scalar s = detail::to_scalar<Scalar>(spec.s);
  const Scalar t = detail::to_scalar<Scalar>(spec.t);
  const std::size_t M = spec.M(), N = spec.N(), L = spec.L();
  switch (spec.bc) {
    case Boundary::Free1D: return r_1d_free<Scalar>(M, r, a.x, b.x);
    case Boundary::Periodic1D: return r_1d_periodic<Scalar>(M, r, a.x, b.x);
    case Boundary::Free2D: return r_2d_free<Scalar>(M, N, r, s, a, b);
    case Boundary::Periodic2D: return r_2d_periodic<Scalar>(M, N, r, s, a, b);
    case Boundary::Cylinder: return r_2d_cylinder<Scalar>(M, N, r, s, a, b);
    case Boundary::Moebius: return r_2d_moebius<Scalar>(M, N, r, s, a, b);
    case Boundary::Klein: return r_2d_klein<Scalar>(M, N, r, s, a, b);
    case Boundary::Free3D: return r_3d_free<Scalar>(M, N, L, r, s, t, a, b);
  }
  throw Error(Errc::OutOfRange, "unknown boundary condition");
}

}  // namespace resistnet
