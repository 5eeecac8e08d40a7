#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Jacobi>

#include "resistnet/error.hpp"
#include "resistnet/network.hpp"
#include "resistnet/summation.hpp"

namespace resistnet {

/// Eigen-decomposition of a network Laplacian.
///
/// Eigenvalues ascend; column k of `eigenvectors` is the unit eigenvector for
/// `eigenvalues(k)`. The first `zero_mode_count` modes are the ones flagged as
/// zero (relative threshold 1e-9 of the largest eigenvalue). A connected
/// network has exactly one, at index `zero_mode_index`.
template <typename Scalar>
struct Spectrum {
  using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

  Vector eigenvalues;
  Matrix eigenvectors;
  Eigen::Index zero_mode_index = 0;
  Eigen::Index zero_mode_count = 1;

  Eigen::Index size() const { return eigenvalues.size(); }
  bool connected() const { return zero_mode_count == 1; }
};

inline constexpr double kZeroModeThreshold = 1e-9;

namespace detail {

/// Number of connected components of the off-diagonal sparsity pattern.
template <typename Derived>
Eigen::Index laplacian_components(const Eigen::MatrixBase<Derived>& lap) {
  const Eigen::Index n = lap.rows();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&parent](Eigen::Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  Eigen::Index count = n;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (lap(i, j) != 0) {
        const auto a = find(i), b = find(j);
        if (a != b) {
          parent[std::max(a, b)] = std::min(a, b);
          --count;
        }
      }
    }
  }
  return count;
}

}  // namespace detail

/// Cyclic Jacobi eigensolver for a real symmetric matrix.
///
/// Sweeps rotate every (p, q) pair in row-major order until the off-diagonal
/// Frobenius norm drops below machine epsilon times the matrix norm. The
/// sweep order is fixed, so identical input gives bit-identical output.
template <typename Scalar>
Spectrum<Scalar> jacobi_eigensolve(const Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>& symmetric,
                                   int max_sweeps = 64) {
  using Matrix = typename Spectrum<Scalar>::Matrix;
  const Eigen::Index n = symmetric.rows();
  Matrix a = symmetric;
  Matrix v = Matrix::Identity(n, n);

  const Scalar eps = std::numeric_limits<Scalar>::epsilon();
  const Scalar norm = a.norm();
  auto off_diagonal = [&a, n]() {
    Scalar s(0);
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += a(p, q) * a(p, q);
    return std::sqrt(Scalar(2) * s);
  };

  for (int sweep = 0; sweep < max_sweeps && norm > 0; ++sweep) {
    if (off_diagonal() <= eps * norm) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == Scalar(0)) continue;
        // Entries already negligible next to both diagonals are zeroed outright.
        if (std::abs(a(p, q)) <= eps * eps * (std::abs(a(p, p)) + std::abs(a(q, q)))) {
          a(p, q) = a(q, p) = Scalar(0);
          continue;
        }
        Eigen::JacobiRotation<Scalar> rot;
        rot.makeJacobi(a, p, q);
        a.applyOnTheLeft(p, q, rot.adjoint());
        a.applyOnTheRight(p, q, rot);
        v.applyOnTheRight(p, q, rot);
        a(p, q) = a(q, p) = Scalar(0);
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(),
                   [&a](Eigen::Index x, Eigen::Index y) { return a(x, x) < a(y, y); });

  Spectrum<Scalar> out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[static_cast<std::size_t>(k)];
    out.eigenvalues(k) = a(src, src);
    out.eigenvectors.col(k) = v.col(src);
  }
  return out;
}

/// Spectrum of a Laplacian with its zero modes flagged.
///
/// Throws MultipleZeroModes when more eigenvalues fall under the zero
/// threshold than the Laplacian has connected components.
template <typename Scalar>
Spectrum<Scalar> decompose(const LaplacianMatrix<Scalar>& lap) {
  if (lap.rows() != lap.cols()) throw Error(Errc::OutOfRange, "Laplacian must be square");
  Spectrum<Scalar> spec = jacobi_eigensolve<Scalar>(lap);
  const Eigen::Index n = spec.size();
  const Scalar largest = n > 0 ? spec.eigenvalues.cwiseAbs().maxCoeff() : Scalar(0);
  const Scalar threshold = Scalar(kZeroModeThreshold) * largest;

  Eigen::Index zeros = 0;
  for (Eigen::Index k = 0; k < n; ++k) {
    if (std::abs(spec.eigenvalues(k)) <= threshold) ++zeros;
  }
  const Eigen::Index components = detail::laplacian_components(lap);
  if (zeros > components) {
    throw Error(Errc::MultipleZeroModes, std::to_string(zeros) + " eigenvalues under the zero threshold but only " +
                                             std::to_string(components) + " component(s)");
  }
  spec.zero_mode_index = 0;
  spec.zero_mode_count = zeros;
  return spec;
}

template <typename Scalar = double>
Spectrum<Scalar> decompose(const Network& net) {
  return decompose<Scalar>(assemble_laplacian<Scalar>(net));
}

/// R = sum over non-zero modes of (psi_i(alpha) - psi_i(beta))^2 / lambda_i.
template <typename Scalar>
Scalar two_point_resistance(const Spectrum<Scalar>& spec, NodeIndex alpha, NodeIndex beta) {
  const auto n = static_cast<std::size_t>(spec.size());
  if (alpha >= n || beta >= n) throw Error(Errc::IndexOutOfRange, "node index outside the spectrum");
  if (spec.zero_mode_count != 1) throw Error(Errc::Disconnected, "network is not connected");
  if (alpha == beta) return Scalar(0);
  const auto a = static_cast<Eigen::Index>(alpha), b = static_cast<Eigen::Index>(beta);
  CompensatedSum<Scalar> sum;
  for (Eigen::Index k = spec.size() - 1; k >= spec.zero_mode_count; --k) {
    const Scalar d = spec.eigenvectors(a, k) - spec.eigenvectors(b, k);
    sum.add(d * d / spec.eigenvalues(k));
  }
  return sum.value();
}

/// All-pairs resistance table: symmetric, zero diagonal.
template <typename Scalar>
Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> resistance_matrix(const Spectrum<Scalar>& spec) {
  if (spec.zero_mode_count != 1) throw Error(Errc::Disconnected, "network is not connected");
  const Eigen::Index n = spec.size();
  Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic> table =
      Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>::Zero(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = a + 1; b < n; ++b) {
      table(a, b) = table(b, a) =
          two_point_resistance(spec, static_cast<NodeIndex>(a), static_cast<NodeIndex>(b));
    }
  }
  return table;
}

}  // namespace resistnet
