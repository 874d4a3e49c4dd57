#pragma once

#include <cstddef>
#include <cstdint>

#include <nlohmann/json.hpp>

#include "locham/pauli.hpp"
#include "locham/poly.hpp"
#include "locham/statevector.hpp"

namespace locham {

struct SpectrumResult {
  double lambda_min = 0.0;
  double lambda_max = 0.0;
  std::size_t iterations = 0;  // operator applications, both ends
  double residual_min = 0.0;   // ||H v - lambda v|| at the returned pair
  double residual_max = 0.0;

  double norm() const noexcept;
};

struct EigenOptions {
  double tol = 1e-8;                     // residual tolerance relative to l1
  std::uint32_t max_qubits = kStateVectorLimit;
  std::size_t max_restarts = 200;
  std::uint64_t seed = 0x5eed;           // start vector
};

/// Extremal eigenvalues by restarted Lanczos with full reorthogonalization,
/// applied to H for the top end and to (c I - H), c = l1 + |offset|, for the
/// bottom end. Each returned pair satisfies ||H v - lambda v|| <= tol * l1.
/// Throws ResourceLimitError above max_qubits and ConvergenceError when the
/// restart budget runs out.
SpectrumResult extremal_eigs(const Hamiltonian& h, const EigenOptions& options = {});

struct ProductExtremes {
  double min_value = 0.0;
  double max_value = 0.0;
  Assignment argmin;
  Assignment argmax;
};

inline constexpr std::uint32_t kProductSearchLimit = 12;

/// Exhaustive scan of f_H over {+1,-1}^{2n} in lexicographic order (+1 before
/// -1); the first extremizer wins.
ProductExtremes brute_force_product(const Hamiltonian& h, std::uint32_t max_qubits = kProductSearchLimit);

struct DiagonalExtremes {
  double min_value = 0.0;
  double max_value = 0.0;
  std::uint64_t argmin = 0;  // basis index, qubit i on bit i
  std::uint64_t argmax = 0;

  double norm() const noexcept;
};

inline constexpr std::uint32_t kDiagonalLimit = 24;

/// Extremes of a Z-only Hamiltonian over the computational basis by
/// Gray-code enumeration. Throws std::invalid_argument on any X or Y factor.
DiagonalExtremes brute_force_diagonal(const Hamiltonian& h, std::uint32_t max_qubits = kDiagonalLimit);

nlohmann::json to_json(const SpectrumResult& r);
nlohmann::json to_json(const ProductExtremes& r);
nlohmann::json to_json(const DiagonalExtremes& r);

}  // namespace locham
