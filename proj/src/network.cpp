#include "resistnet/network.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

namespace resistnet {

Network::Network(std::size_t n_nodes, std::vector<Edge> edges)
    : n_nodes_(n_nodes), edges_(std::move(edges)) {
  if (n_nodes_ == 0) throw Error(Errc::IndexOutOfRange, "network needs at least one node");
  std::map<std::pair<NodeIndex, NodeIndex>, Rational> merged;
  for (const auto& e : edges_) {
    if (e.i >= n_nodes_ || e.j >= n_nodes_) {
      throw Error(Errc::IndexOutOfRange, "edge (" + std::to_string(e.i) + "," + std::to_string(e.j) +
                                             ") outside 0.." + std::to_string(n_nodes_ - 1));
    }
    if (e.i == e.j) throw Error(Errc::SelfLoop, "self-loop at node " + std::to_string(e.i));
    if (e.resistance.sign() <= 0) {
      throw Error(Errc::NonPositiveResistance, "resistance must be > 0, got " + e.resistance.str());
    }
    merged[std::minmax(e.i, e.j)] += reciprocal(e.resistance);
  }
  couplings_.reserve(merged.size());
  for (auto& [key, c] : merged) couplings_.push_back({key.first, key.second, std::move(c)});
}

Network build_network(std::size_t n_nodes, std::vector<Edge> edges) {
  return Network(n_nodes, std::move(edges));
}

Network complete_graph(std::size_t n, const Rational& r) {
  std::vector<Edge> edges;
  for (NodeIndex i = 0; i < n; ++i)
    for (NodeIndex j = i + 1; j < n; ++j) edges.push_back({i, j, r});
  return Network(n, std::move(edges));
}

Rational Network::conductance_sum(NodeIndex node) const {
  Rational total;
  for (const auto& c : couplings_) {
    if (c.i == node || c.j == node) total += c.conductance;
  }
  return total;
}

std::size_t Network::degree(NodeIndex node) const {
  return static_cast<std::size_t>(std::count_if(
      couplings_.begin(), couplings_.end(), [node](const Coupling& c) { return c.i == node || c.j == node; }));
}

Network Network::with_edge(const Edge& edge) const {
  auto edges = edges_;
  edges.push_back(edge);
  return Network(n_nodes_, std::move(edges));
}

Components connectivity_check(const Network& net) {
  const std::size_t n = net.n_nodes();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&parent](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& c : net.couplings()) {
    const auto a = find(c.i), b = find(c.j);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }

  Components out;
  out.label.assign(n, 0);
  std::map<std::size_t, std::size_t> root_label;
  for (std::size_t v = 0; v < n; ++v) {
    auto [it, inserted] = root_label.try_emplace(find(v), out.count);
    if (inserted) ++out.count;
    out.label[v] = it->second;
  }
  return out;
}

RandomWalkView random_walk_view(const Network& net) {
  const auto n = static_cast<Eigen::Index>(net.n_nodes());
  RandomWalkView view;
  view.hop_probability = Eigen::MatrixXd::Zero(n, n);
  view.degree.assign(net.n_nodes(), 0);
  std::vector<Rational> totals(net.n_nodes());
  for (const auto& c : net.couplings()) {
    totals[c.i] += c.conductance;
    totals[c.j] += c.conductance;
    ++view.degree[c.i];
    ++view.degree[c.j];
  }
  for (const auto& c : net.couplings()) {
    const auto i = static_cast<Eigen::Index>(c.i), j = static_cast<Eigen::Index>(c.j);
    view.hop_probability(i, j) = (c.conductance / totals[c.i]).to_double();
    view.hop_probability(j, i) = (c.conductance / totals[c.j]).to_double();
  }
  return view;
}

double first_passage_probability(const Network& net, NodeIndex alpha, NodeIndex beta, double resistance) {
  if (alpha >= net.n_nodes() || beta >= net.n_nodes()) {
    throw Error(Errc::IndexOutOfRange, "first-passage endpoints outside the network");
  }
  if (alpha == beta) throw Error(Errc::SameNode, "first passage needs two distinct nodes");
  if (!connectivity_check(net).connected(alpha, beta)) {
    throw Error(Errc::Disconnected, "nodes lie in different components");
  }
  if (!(resistance > 0.0)) throw Error(Errc::OutOfRange, "resistance must be positive");
  return 1.0 / (net.conductance_sum(alpha).to_double() * resistance);
}

}  // namespace resistnet
