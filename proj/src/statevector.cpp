#include "locham/statevector.hpp"

#include <bit>
#include <complex>
#include <string>

namespace locham {

namespace {

struct TermMasks {
  std::uint64_t flip = 0;   // X or Y
  std::uint64_t phase = 0;  // Z or Y
  std::complex<double> scale;
};

TermMasks masks_for(const PauliString& s, double coef) {
  TermMasks m;
  int n_y = 0;
  for (const auto& [q, p] : s.factors()) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (p == Pauli::X || p == Pauli::Y) m.flip |= bit;
    if (p == Pauli::Z || p == Pauli::Y) m.phase |= bit;
    if (p == Pauli::Y) ++n_y;
  }
  static constexpr std::complex<double> kIPow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  m.scale = coef * kIPow[n_y % 4];
  return m;
}

}  // namespace

void apply_hamiltonian(const Hamiltonian& h, const StateVector& v, StateVector& out) {
  const std::uint32_t n = h.n_qubits();
  if (n >= 63 || v.size() != (Eigen::Index{1} << n)) {
    throw std::invalid_argument("state vector of size " + std::to_string(v.size()) +
                                " does not match " + std::to_string(n) + " qubits");
  }
  out = h.offset() * v;
  const auto dim = static_cast<std::uint64_t>(v.size());
  for (const auto& [s, c] : h.terms()) {
    const TermMasks m = masks_for(s, c);
    for (std::uint64_t b = 0; b < dim; ++b) {
      const bool odd = std::popcount(b & m.phase) & 1;
      out[static_cast<Eigen::Index>(b ^ m.flip)] += (odd ? -m.scale : m.scale) * v[static_cast<Eigen::Index>(b)];
    }
  }
}

StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& v) {
  StateVector out;
  apply_hamiltonian(h, v, out);
  return out;
}

}  // namespace locham
