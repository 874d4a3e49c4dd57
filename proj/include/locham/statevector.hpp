#pragma once

#include <cstdint>

#include <Eigen/Dense>

#include "locham/pauli.hpp"

namespace locham {

/// Dense state on n qubits; qubit i is bit i of the basis index.
using StateVector = Eigen::VectorXcd;

/// Default largest n for which 2^n state vectors are built.
inline constexpr std::uint32_t kStateVectorLimit = 20;

/// out = H v, term by term without forming a matrix. X flips bit i, Z
/// multiplies by (-1)^bit, Y|0> = i|1>, Y|1> = -i|0>. Throws
/// std::invalid_argument when v.size() != 2^n. `out` must not alias `v`.
void apply_hamiltonian(const Hamiltonian& h, const StateVector& v, StateVector& out);
StateVector apply_hamiltonian(const Hamiltonian& h, const StateVector& v);

}  // namespace locham
