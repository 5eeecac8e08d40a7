#pragma once

#include <cstddef>
#include <type_traits>
#include <vector>

#include <Eigen/Dense>

#include "resistnet/error.hpp"
#include "resistnet/rational.hpp"

namespace resistnet {

using NodeIndex = std::size_t;

/// One resistor between nodes i and j (0-based), resistance in ohms.
struct Edge {
  NodeIndex i = 0;
  NodeIndex j = 0;
  Rational resistance{1};
};

/// Conductance between an unordered node pair after parallel edges are merged.
struct Coupling {
  NodeIndex i = 0;  // i < j
  NodeIndex j = 0;
  Rational conductance;
};

/// Validated undirected resistor multigraph. Immutable once built.
///
/// Parallel edges are kept as given; they are merged by conductance addition
/// when a Laplacian is assembled.
class Network {
 public:
  Network(std::size_t n_nodes, std::vector<Edge> edges);

  std::size_t n_nodes() const { return n_nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  /// Merged pairwise conductances, sorted by (i, j) with i < j.
  const std::vector<Coupling>& couplings() const { return couplings_; }

  /// c_i = sum over neighbours of the merged conductance.
  Rational conductance_sum(NodeIndex node) const;

  /// Number of distinct neighbours (coordination number z).
  std::size_t degree(NodeIndex node) const;

  /// Copy with one extra edge appended.
  Network with_edge(const Edge& edge) const;

 private:
  std::size_t n_nodes_;
  std::vector<Edge> edges_;
  std::vector<Coupling> couplings_;
};

Network build_network(std::size_t n_nodes, std::vector<Edge> edges);

/// Every pair of the n nodes joined by one resistor of resistance r.
Network complete_graph(std::size_t n, const Rational& r);

template <typename Scalar>
using LaplacianMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

namespace detail {
template <typename Scalar>
Scalar to_scalar(const Rational& r) {
  if constexpr (std::is_same_v<Scalar, long double>) {
    return r.to_long_double();
  } else {
    return static_cast<Scalar>(r.to_double());
  }
}
}  // namespace detail

/// Kirchhoff matrix: diagonal c_i, off-diagonal -c_ij.
///
/// Conductances are merged exactly before rounding and each diagonal is summed
/// in node order, so the result does not depend on the edge-list order.
template <typename Scalar = double>
LaplacianMatrix<Scalar> assemble_laplacian(const Network& net) {
  const auto n = static_cast<Eigen::Index>(net.n_nodes());
  LaplacianMatrix<Scalar> lap = LaplacianMatrix<Scalar>::Zero(n, n);
  for (const auto& c : net.couplings()) {
    const Scalar value = detail::to_scalar<Scalar>(c.conductance);
    const auto i = static_cast<Eigen::Index>(c.i);
    const auto j = static_cast<Eigen::Index>(c.j);
    lap(i, j) = -value;
    lap(j, i) = -value;
  }
  for (Eigen::Index i = 0; i < n; ++i) {
    Scalar diag(0);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j != i) diag -= lap(i, j);
    }
    lap(i, i) = diag;
  }
  return lap;
}

/// Connected components; labels are numbered in order of first appearance.
struct Components {
  std::size_t count = 0;
  std::vector<std::size_t> label;

  bool connected(NodeIndex a, NodeIndex b) const { return label.at(a) == label.at(b); }
};

Components connectivity_check(const Network& net);

/// Random-walk reading of a network: hop probabilities c_ij / c_i and the
/// coordination number of every node.
struct RandomWalkView {
  Eigen::MatrixXd hop_probability;
  std::vector<std::size_t> degree;
};

RandomWalkView random_walk_view(const Network& net);

/// Probability that a walker leaving alpha reaches beta before returning,
/// 1 / (c_alpha R_alpha_beta).
double first_passage_probability(const Network& net, NodeIndex alpha, NodeIndex beta,
                                 double resistance);

}  // namespace resistnet
