#pragma once

#include <optional>
#include <vector>

#include "resistnet/network.hpp"
#include "resistnet/rational.hpp"

namespace resistnet {

/// Kirchhoff's equations L V = I for unit current entering at `source` and
/// leaving at `sink`, with the potential of `ground` pinned to zero.
///
/// `reduced` is the Laplacian with the ground row and column removed, row-major.
/// `potential` and `injection` are full-length; potential[ground] == 0.
struct KirchhoffSystem {
  NodeIndex source = 0;
  NodeIndex sink = 0;
  NodeIndex ground = 0;
  std::size_t reduced_size = 0;
  std::vector<Rational> reduced;
  std::vector<Rational> injection;
  std::vector<Rational> potential;

  const Rational& reduced_at(std::size_t row, std::size_t col) const { return reduced[row * reduced_size + col]; }
};

/// Exact Laplacian, row-major n*n.
std::vector<Rational> exact_laplacian(const Network& net);

/// Builds and solves the grounded system by fraction-free elimination.
/// `ground` defaults to the sink.
KirchhoffSystem solve_kirchhoff(const Network& net, NodeIndex source, NodeIndex sink,
                                std::optional<NodeIndex> ground = std::nullopt);

/// Exact two-point resistance R = V_source - V_sink for unit current.
Rational solve_exact(const Network& net, NodeIndex alpha, NodeIndex beta,
                     std::optional<NodeIndex> ground = std::nullopt);

/// Exact all-pairs resistances from one grounded inverse, row-major n*n.
std::vector<Rational> resistance_matrix_exact(const Network& net);

}  // namespace resistnet
