#include "resistnet/lattice.hpp"

namespace resistnet {

std::string_view to_string(Boundary bc) {
  switch (bc) {
    case Boundary::Free1D: return "free1d";
    case Boundary::Periodic1D: return "periodic1d";
    case Boundary::Free2D: return "free2d";
    case Boundary::Periodic2D: return "periodic2d";
    case Boundary::Cylinder: return "cylinder";
    case Boundary::Moebius: return "moebius";
    case Boundary::Klein: return "klein";
    case Boundary::Free3D: return "free3d";
  }
  return "unknown";
}

std::size_t dimension(Boundary bc) {
  switch (bc) {
    case Boundary::Free1D:
    case Boundary::Periodic1D:
      return 1;
    case Boundary::Free3D:
      return 3;
    default:
      return 2;
  }
}

std::optional<Boundary> parse_boundary(std::string_view name, std::size_t dim) {
  if (name == "free") {
    if (dim == 1) return Boundary::Free1D;
    if (dim == 2) return Boundary::Free2D;
    if (dim == 3) return Boundary::Free3D;
    return std::nullopt;
  }
  if (name == "periodic") {
    if (dim == 1) return Boundary::Periodic1D;
    if (dim == 2) return Boundary::Periodic2D;
    return std::nullopt;
  }
  if (dim != 2) return std::nullopt;
  if (name == "cylinder") return Boundary::Cylinder;
  if (name == "moebius" || name == "mobius") return Boundary::Moebius;
  if (name == "klein") return Boundary::Klein;
  return std::nullopt;
}

void LatticeSpec::validate() const {
  if (dims.size() != dimension(bc)) {
    throw Error(Errc::OutOfRange, std::string(to_string(bc)) + " lattice needs " + std::to_string(dimension(bc)) +
                                      " dimension(s), got " + std::to_string(dims.size()));
  }
  for (auto d : dims) {
    if (d == 0) throw Error(Errc::OutOfRange, "lattice dimensions must be >= 1");
  }
  for (const auto* res : {&r, &s, &t}) {
    if (res->sign() <= 0) throw Error(Errc::NonPositiveResistance, "lattice resistance must be > 0");
  }
}

Network make_lattice(const LatticeSpec& spec) {
  spec.validate();
  const std::size_t M = spec.M(), N = spec.N(), L = spec.L();
  const bool wrap_x = spec.bc == Boundary::Periodic1D || spec.bc == Boundary::Periodic2D ||
                      spec.bc == Boundary::Cylinder;
  const bool twist_x = spec.bc == Boundary::Moebius || spec.bc == Boundary::Klein;
  const bool wrap_y = spec.bc == Boundary::Periodic2D || spec.bc == Boundary::Klein;

  std::vector<Edge> edges;
  auto bond = [&](Site a, Site b, const Rational& res) {
    const auto i = spec.index(a), j = spec.index(b);
    if (i != j) edges.push_back({i, j, res});
  };
  for (std::size_t z = 0; z < L; ++z) {
    for (std::size_t y = 0; y < N; ++y) {
      for (std::size_t x = 0; x + 1 < M; ++x) bond({x, y, z}, {x + 1, y, z}, spec.r);
      if (wrap_x) bond({M - 1, y, z}, {0, y, z}, spec.r);
      if (twist_x) bond({M - 1, y, z}, {0, N - 1 - y, z}, spec.r);
    }
    for (std::size_t x = 0; x < M; ++x) {
      for (std::size_t y = 0; y + 1 < N; ++y) bond({x, y, z}, {x, y + 1, z}, spec.s);
      if (wrap_y) bond({x, N - 1, z}, {x, 0, z}, spec.s);
    }
  }
  for (std::size_t z = 0; z + 1 < L; ++z) {
    for (std::size_t y = 0; y < N; ++y) {
      for (std::size_t x = 0; x < M; ++x) bond({x, y, z}, {x, y, z + 1}, spec.t);
    }
  }
  return Network(spec.node_count(), std::move(edges));
}

std::vector<Mode> mode_spectrum(const LatticeSpec& spec) {
  spec.validate();
  const std::size_t M = spec.M(), N = spec.N(), L = spec.L();
  const double cr = reciprocal(spec.r).to_double();
  const double cs = reciprocal(spec.s).to_double();
  const double ct = reciprocal(spec.t).to_double();
  using modes::free_angle;
  using modes::one_minus_cos;

  std::vector<Mode> out;
  out.reserve(spec.node_count());
  for (std::size_t l = 0; l < L; ++l) {
    for (std::size_t n = 0; n < N; ++n) {
      for (std::size_t m = 0; m < M; ++m) {
        Mode mode;
        mode.index = {m, n, l};
        double x_part = 0.0, y_part = 0.0;
        switch (spec.bc) {
          case Boundary::Free1D:
          case Boundary::Free2D:
          case Boundary::Free3D:
            x_part = one_minus_cos(free_angle<double>(m, M));
            y_part = one_minus_cos(free_angle<double>(n, N));
            break;
          case Boundary::Periodic1D:
          case Boundary::Periodic2D:
            x_part = one_minus_cos(2.0 * free_angle<double>(m, M));
            y_part = one_minus_cos(2.0 * free_angle<double>(n, N));
            break;
          case Boundary::Cylinder:
            x_part = one_minus_cos(2.0 * free_angle<double>(m, M));
            y_part = one_minus_cos(free_angle<double>(n, N));
            break;
          case Boundary::Moebius:
            x_part = one_minus_cos(modes::moebius_phase<double>(m, n, M));
            y_part = one_minus_cos(free_angle<double>(n, N));
            break;
          case Boundary::Klein:
            mode.twist = modes::klein_twist(n, N);
            x_part = one_minus_cos(2.0 * modes::klein_phase<double>(m, mode.twist, M));
            y_part = one_minus_cos(2.0 * free_angle<double>(n, N));
            break;
        }
        const double z_part = one_minus_cos(free_angle<double>(l, L));
        mode.eigenvalue = 2.0 * (cr * x_part + cs * y_part + ct * z_part);
        out.push_back(mode);
      }
    }
  }
  return out;
}

}  // namespace resistnet
