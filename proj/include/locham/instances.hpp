#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "locham/pauli.hpp"

namespace locham {

using Edge = std::pair<std::uint32_t, std::uint32_t>;

struct LatticeSpec {
  enum class Kind { Cycle, Grid2d, Triangular };

  Kind kind = Kind::Cycle;
  std::uint32_t width = 0;   // cycle length for Cycle
  std::uint32_t height = 1;  // ignored for Cycle
  bool periodic = true;

  std::uint32_t n_sites() const noexcept;
  /// Sorted edges (u < v) without duplicates. Triangular lattices are square
  /// grids plus the (x, y)-(x+1, y+1) diagonal. Throws std::invalid_argument
  /// on empty dimensions.
  std::vector<Edge> edges() const;
};

/// Sum over lattice edges of X_iX_j + Y_iY_j + Z_iZ_j.
Hamiltonian heisenberg_afm(const LatticeSpec& lattice);

/// Simple r-regular graph on n vertices from the pairing (configuration)
/// model: stubs are paired at random, a pairing that would create a loop or
/// repeat an edge is redrawn, and the whole pairing restarts if it gets
/// stuck. Throws ResourceLimitError when `max_restarts` is exhausted and
/// std::invalid_argument unless n*r is even and r < n.
std::vector<Edge> random_regular_graph(std::uint32_t n, std::uint32_t r, std::uint64_t seed,
                                       std::size_t max_restarts = 1000);

/// Z_iZ_j with uniform random +-1 weights on a random r-regular graph. The
/// seeded stream draws the graph first, then one sign per edge in sorted
/// edge order.
Hamiltonian random_signed_regular_zz(std::uint32_t n, std::uint32_t r, std::uint64_t seed);

/// Sum_{i<j} Z_i Z_j.
Hamiltonian complete_zz(std::uint32_t n);

enum class CoefDistribution { PlusMinusOne, Uniform };

/// m distinct Pauli strings, each uniform over all strings of weight 1..k on
/// n qubits, with seeded coefficients (+-1, or uniform on [-1, 1]).
Hamiltonian random_klocal(std::uint32_t n, std::size_t m, std::uint32_t k, std::uint64_t seed,
                          CoefDistribution dist = CoefDistribution::Uniform);

/// Number of Pauli strings on n qubits with weight in [1, k].
double count_pauli_strings(std::uint32_t n, std::uint32_t k);

}  // namespace locham
