#include "resistnet/exact.hpp"

#include <string>

#include "resistnet/error.hpp"

namespace resistnet {

namespace {

/// Integer matrix with `rows` rows and `cols` columns, row-major.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<mpz_class> data;

  mpz_class& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
};

/// Fraction-free Gauss-Jordan (Bareiss) on [A | B]. Every intermediate entry
/// is a minor of the input, so each division is exact. On return the left
/// block is det(A) times the identity and the right block is det(A) A^{-1} B.
/// Returns det(A) up to the sign of the row swaps.
mpz_class bareiss_gauss_jordan(IntMatrix& m, std::size_t n) {
  mpz_class prev = 1;
  mpz_class tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot_row = k;
    while (pivot_row < n && m.at(pivot_row, k) == 0) ++pivot_row;
    if (pivot_row == n) throw Error(Errc::SingularReducedSystem, "grounded Laplacian is singular");
    if (pivot_row != k) {
      for (std::size_t c = 0; c < m.cols; ++c) swap(m.at(k, c), m.at(pivot_row, c));
    }
    const mpz_class& pivot = m.at(k, k);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k) continue;
      mpz_class factor = m.at(i, k);
      for (std::size_t c = k + 1; c < m.cols; ++c) {
        mpz_class& entry = m.at(i, c);
        mpz_mul(entry.get_mpz_t(), entry.get_mpz_t(), pivot.get_mpz_t());
        mpz_submul(entry.get_mpz_t(), factor.get_mpz_t(), m.at(k, c).get_mpz_t());
        mpz_divexact(entry.get_mpz_t(), entry.get_mpz_t(), prev.get_mpz_t());
      }
      m.at(i, k) = 0;
    }
    // Earlier pivot rows keep their scaled diagonal implicitly: it equals the
    // current pivot, which is what the final division uses.
    prev = pivot;
  }
  return prev;
}

/// Common denominator of all merged conductances.
mpz_class conductance_denominator(const Network& net) {
  mpz_class lcm_den = 1;
  for (const auto& c : net.couplings()) {
    mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.conductance.denominator().get_mpz_t());
  }
  return lcm_den;
}

/// D * L with row/column `ground` removed, as integers.
IntMatrix scaled_reduced_laplacian(const Network& net, NodeIndex ground, std::size_t extra_cols) {
  const std::size_t n = net.n_nodes() - 1;
  const mpz_class scale = conductance_denominator(net);
  IntMatrix m{n, n + extra_cols, std::vector<mpz_class>(n * (n + extra_cols))};
  auto reduced_index = [ground](NodeIndex v) { return v < ground ? v : v - 1; };
  for (const auto& c : net.couplings()) {
    const mpz_class value = scale / c.conductance.denominator() * c.conductance.numerator();
    const bool i_live = c.i != ground, j_live = c.j != ground;
    if (i_live) m.at(reduced_index(c.i), reduced_index(c.i)) += value;
    if (j_live) m.at(reduced_index(c.j), reduced_index(c.j)) += value;
    if (i_live && j_live) {
      m.at(reduced_index(c.i), reduced_index(c.j)) -= value;
      m.at(reduced_index(c.j), reduced_index(c.i)) -= value;
    }
  }
  return m;
}

}  // namespace

std::vector<Rational> exact_laplacian(const Network& net) {
  const std::size_t n = net.n_nodes();
  std::vector<Rational> lap(n * n);
  for (const auto& c : net.couplings()) {
    lap[c.i * n + c.j] -= c.conductance;
    lap[c.j * n + c.i] -= c.conductance;
    lap[c.i * n + c.i] += c.conductance;
    lap[c.j * n + c.j] += c.conductance;
  }
  return lap;
}

KirchhoffSystem solve_kirchhoff(const Network& net, NodeIndex source, NodeIndex sink,
                                std::optional<NodeIndex> ground) {
  const std::size_t n = net.n_nodes();
  const NodeIndex g = ground.value_or(sink);
  if (source >= n || sink >= n || g >= n) throw Error(Errc::IndexOutOfRange, "node index outside the network");
  if (source == sink) throw Error(Errc::SameNode, "source and sink coincide");
  if (connectivity_check(net).count != 1) {
    throw Error(Errc::Disconnected, "Kirchhoff system needs a connected network");
  }

  KirchhoffSystem sys;
  sys.source = source;
  sys.sink = sink;
  sys.ground = g;
  sys.reduced_size = n - 1;
  sys.injection.assign(n, Rational(0));
  sys.injection[source] = Rational(1);
  sys.injection[sink] = Rational(-1);

  const auto full = exact_laplacian(net);
  sys.reduced.reserve((n - 1) * (n - 1));
  for (std::size_t r = 0; r < n; ++r) {
    if (r == g) continue;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != g) sys.reduced.push_back(full[r * n + c]);
    }
  }

  sys.potential.assign(n, Rational(0));
  if (n == 1) return sys;

  IntMatrix m = scaled_reduced_laplacian(net, g, 1);
  const mpz_class scale = conductance_denominator(net);
  std::size_t row = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    if (v == g) continue;
    // Integer right-hand side: D * I.
    m.at(row, n - 1) = scale * sys.injection[v].numerator();
    ++row;
  }
  const mpz_class det = bareiss_gauss_jordan(m, n - 1);
  row = 0;
  for (NodeIndex v = 0; v < n; ++v) {
    if (v == g) continue;
    sys.potential[v] = Rational(m.at(row, n - 1), det);
    ++row;
  }
  return sys;
}

Rational solve_exact(const Network& net, NodeIndex alpha, NodeIndex beta, std::optional<NodeIndex> ground) {
  if (alpha == beta && alpha < net.n_nodes()) return Rational(0);
  const auto sys = solve_kirchhoff(net, alpha, beta, ground);
  return sys.potential[alpha] - sys.potential[beta];
}

std::vector<Rational> resistance_matrix_exact(const Network& net) {
  const std::size_t n = net.n_nodes();
  if (connectivity_check(net).count != 1) throw Error(Errc::Disconnected, "network is not connected");
  std::vector<Rational> table(n * n);
  if (n == 1) return table;

  // Ground the last node; G = (D L')^{-1} D gives potentials for unit
  // injections, and R_ab = G_aa + G_bb - 2 G_ab with G_ground = 0.
  const std::size_t k = n - 1;
  IntMatrix m = scaled_reduced_laplacian(net, k, k);
  for (std::size_t i = 0; i < k; ++i) m.at(i, k + i) = 1;
  const mpz_class det = bareiss_gauss_jordan(m, k);
  const mpz_class scale = conductance_denominator(net);

  // Entries of det * (D L')^{-1}; the common factor scale / det is applied last.
  auto g = [&m, k](std::size_t a, std::size_t b) -> mpz_class {
    if (a == k || b == k) return 0;
    return m.at(a, k + b);
  };
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const mpz_class num = (g(a, a) + g(b, b) - 2 * g(a, b)) * scale;
      table[a * n + b] = table[b * n + a] = Rational(num, det);
    }
  }
  return table;
}

}  // namespace resistnet
