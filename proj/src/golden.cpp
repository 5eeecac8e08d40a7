#include "resistnet/golden.hpp"

#include "resistnet/exact.hpp"

namespace resistnet {

namespace {

Rational frac(long p, long q) { return Rational(mpz_class(p), mpz_class(q)); }

Rational big(const char* p, const char* q) { return Rational(mpz_class(p), mpz_class(q)); }

GoldenCase lattice_case(std::string name, std::string description, Boundary bc, std::vector<std::size_t> dims,
                        Site from, Site to, Rational expected) {
  LatticeSpec spec{bc, std::move(dims), 1, 1, 1};
  Network net = make_lattice(spec);
  return GoldenCase{std::move(name), std::move(description), std::move(net), spec.index(from), spec.index(to),
                    std::move(expected), LatticeQuery{spec, from, to}};
}

}  // namespace

Network example1_network(const Rational& r1, const Rational& r2) {
  return build_network(4, {{0, 1, r1}, {1, 2, r1}, {2, 3, r1}, {3, 0, r1}, {1, 3, r2}});
}

Rational example1_r_opposite(const Rational& r1, const Rational&) { return r1; }

Rational example1_r_adjacent(const Rational& r1, const Rational& r2) {
  return r1 * (2 * r1 + 3 * r2) / (4 * (r1 + r2));
}

Rational example1_r_adjacent_quoted(const Rational& r1, const Rational& r2) {
  return r1 * (3 * r1 + 2 * r2) / (4 * (r1 + r2));
}

Rational example4_corner(const Rational& r, const Rational& s) {
  const Rational rr = r * r, rs = r * s, ss = s * s;
  return (r + s) * (rr + 5 * rs + ss) * (3 * rr + 7 * rs + 3 * ss) /
         (2 * (2 * rr + 4 * rs + ss) * (rr + 4 * rs + 2 * ss));
}

std::vector<GoldenCase> golden_cases() {
  std::vector<GoldenCase> cases;
  const Rational r1 = 1, r2 = 2;
  cases.push_back({"Example 1 R13", "4-node network, opposite corners, r1=1 r2=2", example1_network(r1, r2), 0, 2,
                   example1_r_opposite(r1, r2), std::nullopt});
  cases.push_back({"Example 1 R12", "4-node network, adjacent corners, r1=1 r2=2", example1_network(r1, r2), 0, 1,
                   example1_r_adjacent_quoted(r1, r2), std::nullopt});
  cases.push_back({"Example 2", "complete graph on 6 nodes, r=1", complete_graph(6, 1), 0, 5, frac(1, 3),
                   std::nullopt});
  cases.push_back(lattice_case("Example 3", "free 5x4, (0,0)-(3,3)", Boundary::Free2D, {5, 4}, {0, 0}, {3, 3},
                               frac(3, 4) + frac(3, 5) + frac(9877231, 27600540)));
  {
    LatticeSpec spec{Boundary::Free2D, {4, 4}, 1, 2, 1};
    cases.push_back({"Example 4", "free 4x4, r=1 s=2, (0,0)-(3,3)", make_lattice(spec), spec.index({0, 0}),
                     spec.index({3, 3}), example4_corner(1, 2), LatticeQuery{spec, {0, 0}, {3, 3}}});
  }
  const Rational ex6 = frac(3, 10) + frac(3, 20) + frac(1799, 7790);
  cases.push_back(lattice_case("Example 6", "periodic 5x4, (0,0)-(3,3)", Boundary::Periodic2D, {5, 4}, {0, 0},
                               {3, 3}, ex6));
  cases.push_back(lattice_case("Example 6 shifted", "periodic 5x4, (0,0)-(2,1)", Boundary::Periodic2D, {5, 4},
                               {0, 0}, {2, 1}, ex6));
  cases.push_back(lattice_case("Example 7", "cylinder 5x4, (0,0)-(3,3)", Boundary::Cylinder, {5, 4}, {0, 0}, {3, 3},
                               frac(3, 10) + frac(3, 5) + frac(5023, 8835)));
  cases.push_back(lattice_case("Example 8", "Moebius 2x2, (0,0)-(1,1)", Boundary::Moebius, {2, 2}, {0, 0}, {1, 1},
                               frac(1, 2)));
  cases.push_back(lattice_case("Example 9", "Moebius 5x4, (0,0)-(3,3)", Boundary::Moebius, {5, 4}, {0, 0}, {3, 3},
                               frac(3, 10) + frac(1609, 2698)));
  cases.push_back(lattice_case("Example 10", "Klein 5x4, (0,0)-(3,3)", Boundary::Klein, {5, 4}, {0, 0}, {3, 3},
                               frac(3, 10) + frac(5, 58) + frac(56, 209)));
  cases.push_back(lattice_case("Example 11", "free 5x5x4, (0,0,0)-(3,3,3)", Boundary::Free3D, {5, 5, 4}, {0, 0, 0},
                               {3, 3, 3}, big("327687658482872", "352468567489225")));
  return cases;
}

std::vector<GoldenResult> solve_exact_all_examples() {
  std::vector<GoldenResult> results;
  for (auto& c : golden_cases()) {
    Rational value = solve_exact(c.network, c.alpha, c.beta);
    const bool pass = value == c.expected;
    results.push_back({std::move(c), std::move(value), pass});
  }
  return results;
}

}  // namespace resistnet
