#include "resistnet/identities.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include "resistnet/summation.hpp"

namespace resistnet {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

/// cosh(lambda) - cos(angle), written as a sum of two squares.
double kernel_denominator(double lambda, double angle) {
  const double a = std::sinh(lambda / 2.0), b = std::sin(angle / 2.0);
  return 2.0 * (a * a + b * b);
}

double identity_sum(const IdentityQuery& q, bool subtract_from_zero) {
  const double v = q.variant;
  CompensatedSum<double> sum;
  for (std::size_t n = 0; n < q.N; ++n) {
    const double angle = v * kPi * static_cast<double>(n) / static_cast<double>(q.N);
    const double num = subtract_from_zero ? 2.0 * std::pow(std::sin(static_cast<double>(q.ell) * angle / 2.0), 2)
                                          : std::cos(static_cast<double>(q.ell) * angle);
    if (n == 0 && q.lambda == 0.0) {
      if (subtract_from_zero) continue;  // 0/0 with removable value 0
      return kInf;
    }
    sum.add(num / kernel_denominator(q.lambda, angle));
  }
  return sum.value() / static_cast<double>(q.N);
}

/// (1 - e^{-x}) computed without cancellation.
double one_minus_exp(double x) { return -std::expm1(-x); }

void require_range(bool ok, const char* what) {
  if (!ok) throw Error(Errc::OutOfRange, what);
}

}  // namespace

double IdentityQuery::damping() const { return std::exp(-lambda); }

void IdentityQuery::validate() const {
  require_range(N >= 1, "identity needs N >= 1");
  require_range(variant == 1 || variant == 2, "identity variant must be 1 or 2");
  require_range(std::isfinite(lambda) && lambda >= 0.0, "identity needs finite lambda >= 0");
  const auto limit = static_cast<long long>(variant == 1 ? 2 * N : N);
  require_range(ell >= 0 && ell < limit, "identity offset outside its range");
}

double i1_closed(const IdentityQuery& q) {
  q.validate();
  require_range(q.variant == 1, "i1 needs variant 1");
  if (q.lambda == 0.0) return kInf;
  const double lam = q.lambda, n = static_cast<double>(q.N), l = static_cast<double>(q.ell);
  // cosh((N-l) lam) / sinh(N lam) in decaying exponentials.
  const double ratio = (std::exp(-l * lam) + std::exp(-(2.0 * n - l) * lam)) / one_minus_exp(2.0 * n * lam);
  const double sign = (q.ell % 2 == 0) ? 1.0 : -1.0;
  const double ch = std::cosh(lam / 2.0);
  return ratio / std::sinh(lam) +
         (1.0 / std::pow(std::sinh(lam), 2) + (1.0 - sign) / (4.0 * ch * ch)) / n;
}

double i1_direct(const IdentityQuery& q) {
  q.validate();
  require_range(q.variant == 1, "i1 needs variant 1");
  return identity_sum(q, false);
}

double i2_closed(const IdentityQuery& q) {
  q.validate();
  require_range(q.variant == 2, "i2 needs variant 2");
  if (q.lambda == 0.0) return kInf;
  const double lam = q.lambda, n = static_cast<double>(q.N), l = static_cast<double>(q.ell);
  const double ratio = (std::exp(-l * lam) + std::exp(-(n - l) * lam)) / one_minus_exp(n * lam);
  return ratio / std::sinh(lam);
}

double i2_direct(const IdentityQuery& q) {
  q.validate();
  require_range(q.variant == 2, "i2 needs variant 2");
  return identity_sum(q, false);
}

double identity_difference_closed(const IdentityQuery& q) {
  q.validate();
  const double lam = q.lambda, n = static_cast<double>(q.N), l = static_cast<double>(q.ell);
  if (q.variant == 1) {
    const double odd_term = (q.ell % 2 == 0) ? 0.0 : 2.0;
    if (lam == 0.0) return l * (2.0 * n - l) / (2.0 * n) - odd_term / (4.0 * n);
    // [cosh(N lam) - cosh((N-l) lam)] / (sinh lam sinh N lam)
    //   = 2 sinh((2N-l) lam/2) sinh(l lam/2) / (sinh lam sinh N lam)
    const double head = std::exp(-l * lam / 2.0) * one_minus_exp((2.0 * n - l) * lam) / one_minus_exp(2.0 * n * lam);
    const double ch = std::cosh(lam / 2.0);
    return 2.0 * head * std::sinh(l * lam / 2.0) / std::sinh(lam) - odd_term / (4.0 * n * ch * ch);
  }
  if (lam == 0.0) return l * (n - l) / n;
  const double head = std::exp(-l * lam / 2.0) * one_minus_exp((n - l) * lam) / one_minus_exp(n * lam);
  return 2.0 * head * std::sinh(l * lam / 2.0) / std::sinh(lam);
}

double identity_difference_direct(const IdentityQuery& q) {
  q.validate();
  return identity_sum(q, true);
}

double identity_integral_limit(long long ell, double lambda) {
  require_range(ell >= 0 && lambda > 0.0, "integral limit needs l >= 0 and lambda > 0");
  return std::exp(-static_cast<double>(ell) * lambda) / std::sinh(lambda);
}

ProductIdentity product_identity_free(std::size_t N, double lambda) {
  require_range(N >= 1 && lambda > 0.0 && std::isfinite(lambda), "product identity needs N >= 1, lambda > 0");
  ProductIdentity out{1.0, 0.0};
  for (std::size_t n = 0; n < N; ++n) {
    out.lhs *= kernel_denominator(lambda, kPi * static_cast<double>(n) / static_cast<double>(N));
  }
  out.rhs = std::ldexp(std::sinh(static_cast<double>(N) * lambda) * std::tanh(lambda / 2.0),
                       1 - static_cast<int>(N));
  return out;
}

ProductIdentity product_identity_periodic(std::size_t N, double lambda) {
  require_range(N >= 1 && lambda > 0.0 && std::isfinite(lambda), "product identity needs N >= 1, lambda > 0");
  ProductIdentity out{1.0, 0.0};
  for (std::size_t n = 0; n < N; ++n) {
    out.lhs *= kernel_denominator(lambda, 2.0 * kPi * static_cast<double>(n) / static_cast<double>(N));
  }
  const double sh = std::sinh(static_cast<double>(N) * lambda / 2.0);
  out.rhs = std::ldexp(sh * sh, 2 - static_cast<int>(N));
  return out;
}

namespace {

/// r (1 - e^{-|dx| mu} cos(b)) / sinh(mu): the square-lattice kernel after
/// the x-angle has been integrated out, with sinh(mu/2) = `half_sinh`.
double reduced_kernel(double r, double adx, double b, double half_sinh) {
  const double mu = 2.0 * std::asinh(half_sinh);
  const double sb = std::sin(b / 2.0);
  const double num = one_minus_exp(adx * mu) + std::exp(-adx * mu) * 2.0 * sb * sb;
  return r * num / std::sinh(mu);
}

void require_resistances(std::initializer_list<double> values) {
  for (double v : values) {
    if (!(v > 0.0) || !std::isfinite(v)) throw Error(Errc::NonPositiveResistance, "resistance must be > 0");
  }
}

}  // namespace

double r_infinite_2d(long long dx, long long dy, double r, double s) {
  require_resistances({r, s});
  if (dx == 0 && dy == 0) return 0.0;
  const double adx = static_cast<double>(std::llabs(dx));
  const double ratio = std::sqrt(r / s);
  auto integrand = [&](double phi) {
    return reduced_kernel(r, adx, static_cast<double>(dy) * phi, ratio * std::sin(phi / 2.0));
  };
  double error = 0.0;
  double value = 0.0;
  try {
    value = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(integrand, 0.0, kPi, 20, 1e-13, &error);
  } catch (const std::exception& e) {
    throw Error(Errc::QuadratureFailure, std::string("2D lattice integral failed: ") + e.what());
  }
  value /= kPi;
  error /= kPi;
  if (!std::isfinite(value) || error > 1e-9) {
    throw Error(Errc::QuadratureFailure, "2D lattice integral did not converge");
  }
  return value;
}

double r_infinite_3d(long long dx, long long dy, long long dz, double r, double s, double t) {
  require_resistances({r, s, t});
  if (dx == 0 && dy == 0 && dz == 0) return 0.0;
  const double adx = static_cast<double>(std::llabs(dx));
  const double fy = static_cast<double>(dy), fz = static_cast<double>(dz);
  const double cy = r / s, cz = r / t;

  boost::math::quadrature::tanh_sinh<double> rule(12);
  double max_inner_error = 0.0;
  auto outer = [&](double phi) {
    const double sy = std::sin(phi / 2.0);
    auto inner = [&](double alpha) {
      const double sz = std::sin(alpha / 2.0);
      const double half_sinh = std::sqrt(cy * sy * sy + cz * sz * sz);
      if (half_sinh == 0.0) return r * adx;
      const double mu = 2.0 * std::asinh(half_sinh);
      // 1 - cos(A) cos(B) = 2a + 2b - 4ab with a = sin^2(A/2), b = sin^2(B/2).
      const double a = std::pow(std::sin(fy * phi / 2.0), 2), b = std::pow(std::sin(fz * alpha / 2.0), 2);
      const double num = one_minus_exp(adx * mu) + std::exp(-adx * mu) * (2.0 * a + 2.0 * b - 4.0 * a * b);
      return r * num / std::sinh(mu);
    };
    double err = 0.0;
    const double v = rule.integrate(inner, 0.0, kPi, 1e-12, &err);
    max_inner_error = std::max(max_inner_error, err);
    return v;
  };

  double error = 0.0;
  double value = 0.0;
  try {
    value = rule.integrate(outer, 0.0, kPi, 1e-11, &error);
  } catch (const std::exception& e) {
    throw Error(Errc::QuadratureFailure, std::string("3D lattice integral failed: ") + e.what());
  }
  value /= kPi * kPi;
  const double total_error = (error + kPi * max_inner_error) / (kPi * kPi);
  if (!std::isfinite(value) || total_error > 1e-7) {
    throw Error(Errc::QuadratureFailure, "3D lattice integral did not converge");
  }
  return value;
}

double r_3d_periodic(std::size_t size, long long dx, long long dy, long long dz, double r, double s, double t) {
  require_resistances({r, s, t});
  if (size == 0) throw Error(Errc::OutOfRange, "periodic cube needs size >= 1");
  const double n = static_cast<double>(size);
  std::vector<double> wave(size), drop(size);
  for (std::size_t k = 0; k < size; ++k) {
    wave[k] = 2.0 * kPi * static_cast<double>(k) / n;
    drop[k] = 2.0 * std::pow(std::sin(wave[k] / 2.0), 2);
  }
  ModeAccumulator<double> acc;
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) {
      for (std::size_t k = 0; k < size; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        const double denom = drop[i] / r + drop[j] / s + drop[k] / t;
        const double phase = static_cast<double>(dx) * wave[i] + static_cast<double>(dy) * wave[j] +
                             static_cast<double>(dz) * wave[k];
        acc.add(2.0 * denom, 2.0 * std::pow(std::sin(phase / 2.0), 2) / denom);
      }
    }
  }
  return acc.total() / (n * n * n);
}

double richardson(double coarse, double fine, double ratio, double order) {
  const double factor = std::pow(ratio, order);
  return fine + (fine - coarse) / (factor - 1.0);
}

std::vector<ConvergenceRow> finite_to_infinite_convergence(Boundary bc, long long dx, long long dy,
                                                           const std::vector<std::size_t>& sizes, double r,
                                                           double s) {
  if (dimension(bc) != 2) throw Error(Errc::OutOfRange, "convergence harness covers 2D lattices");
  const double limit = r_infinite_2d(dx, dy, r, s);
  std::vector<ConvergenceRow> rows;
  for (std::size_t size : sizes) {
    const auto half = static_cast<long long>(size / 2);
    const long long x1 = half - dx / 2, y1 = half - dy / 2;
    const long long x2 = x1 + dx, y2 = y1 + dy;
    const auto n = static_cast<long long>(size);
    if (x1 < 0 || y1 < 0 || x2 < 0 || y2 < 0 || x1 >= n || x2 >= n || y1 >= n || y2 >= n) {
      throw Error(Errc::OutOfRange, "lattice size " + std::to_string(size) + " too small for the offset");
    }
    const Site a{static_cast<std::size_t>(x1), static_cast<std::size_t>(y1)};
    const Site b{static_cast<std::size_t>(x2), static_cast<std::size_t>(y2)};
    double value = 0.0;
    switch (bc) {
      case Boundary::Free2D: value = r_2d_free<double>(size, size, r, s, a, b); break;
      case Boundary::Periodic2D: value = r_2d_periodic<double>(size, size, r, s, a, b); break;
      case Boundary::Cylinder: value = r_2d_cylinder<double>(size, size, r, s, a, b); break;
      case Boundary::Moebius: value = r_2d_moebius<double>(size, size, r, s, a, b); break;
      case Boundary::Klein: value = r_2d_klein<double>(size, size, r, s, a, b); break;
      default: break;
    }
    rows.push_back({size, value, limit, value - limit});
  }
  return rows;
}

}  // namespace resistnet
