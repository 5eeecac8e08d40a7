#pragma once

#include <optional>
#include <string>
#include <vector>

#include "resistnet/lattice.hpp"
#include "resistnet/network.hpp"
#include "resistnet/rational.hpp"

namespace resistnet {

/// Square 0-1-2-3 with resistance r1 on each side and r2 on the diagonal 1-3.
Network example1_network(const Rational& r1, const Rational& r2);

/// R between the opposite corners 0 and 2 of example1_network: always r1.
Rational example1_r_opposite(const Rational& r1, const Rational& r2);
/// R between the adjacent corners 0 and 1: r1 (2 r1 + 3 r2) / (4 (r1 + r2)).
Rational example1_r_adjacent(const Rational& r1, const Rational& r2);
/// The reference expression r1 (3 r1 + 2 r2) / (4 (r1 + r2)) kept in the golden table.
/// It differs from the network's value unless r1 == r2.
Rational example1_r_adjacent_quoted(const Rational& r1, const Rational& r2);

/// Corner-to-corner resistance of the free 4x4 lattice with resistances r, s:
/// (r+s)(r^2+5rs+s^2)(3r^2+7rs+3s^2) / (2 (2r^2+4rs+s^2)(r^2+4rs+2s^2)).
Rational example4_corner(const Rational& r, const Rational& s);

struct LatticeQuery {
  LatticeSpec spec;
  Site from;
  Site to;
};

struct GoldenCase {
  std::string name;
  std::string description;
  Network network;
  NodeIndex alpha = 0;
  NodeIndex beta = 0;
  Rational expected;
  std::optional<LatticeQuery> lattice;
};

/// The worked examples with exact published values.
std::vector<GoldenCase> golden_cases();

struct GoldenResult {
  GoldenCase golden;
  Rational computed;
  bool pass = false;
};

/// Solves every golden case with the exact oracle.
std::vector<GoldenResult> solve_exact_all_examples();

}  // namespace resistnet
