#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "locham/pauli.hpp"
#include "locham/poly.hpp"
#include "locham/statevector.hpp"

namespace locham {

/// One of the four tetrahedral (SIC) qubit states, labelled by (x1, x2):
///   psi_{++} = (sqrt(3+sqrt3)|0> + e^{i pi/4} sqrt(3-sqrt3)|1>) / sqrt6
///   psi_{-+} = Z psi_{++},  psi_{+-} = X psi_{++},  psi_{--} = Y psi_{++}
/// Its Bloch vector is (x1, x1*x2, x2) / sqrt3.
struct TetrahedronState {
  int x1 = 1;
  int x2 = 1;
  Eigen::Vector2cd amplitudes;

  static TetrahedronState from_label(int x1, int x2);
  Eigen::Vector3d bloch_vector() const;
};

/// Tensor product of tetrahedron states; factor i is labelled by variables
/// (2i, 2i+1) of the source assignment.
struct ProductState {
  Assignment source;
  std::vector<TetrahedronState> factors;

  std::size_t n_qubits() const noexcept { return factors.size(); }
  /// Dense 2^n vector, qubit i on bit i.
  StateVector to_vector() const;
};

/// <psi_x| s |psi_x> for the tetrahedron state labelled (x1, x2):
/// I -> 1, X -> x1/sqrt3, Y -> x1 x2/sqrt3, Z -> x2/sqrt3.
double chi(Pauli s, int x1, int x2);

/// Variables touched by letter `p` on qubit `q`: X -> {2q}, Z -> {2q+1},
/// Y -> {2q, 2q+1}.
Monomial variables_for(std::uint32_t q, Pauli p);

/// f_H over 2n variables: each term s becomes one monomial with coefficient
/// coef * 3^{-|s|/2}; the identity offset becomes the constant.
BooleanPolynomial hamiltonian_to_poly(const Hamiltonian& h);

/// Throws std::invalid_argument on odd length.
ProductState assignment_to_state(const Assignment& x);

/// <psi_x|H|psi_x> through an explicit 2^n state vector, independent of the
/// polynomial route. Throws ResourceLimitError above `max_qubits`, and
/// std::logic_error if the imaginary part exceeds 1e-9.
double expectation_oracle(const Hamiltonian& h, const Assignment& x,
                          std::uint32_t max_qubits = kStateVectorLimit);

nlohmann::json to_json(const ProductState& psi);

}  // namespace locham
