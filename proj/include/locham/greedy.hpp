#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "locham/pauli.hpp"
#include "locham/poly.hpp"
#include "locham/qc_map.hpp"

namespace locham {

/// Slack allowed on every audited inequality.
inline constexpr double kAuditTolerance = 1e-9;

/// Audit record of one substitution round.
struct GreedyRound {
  std::size_t index = 0;        // 1-based
  Monomial chosen;              // S
  double max_coeff = 0.0;       // M_j = |fhat_{j-1}(S)|
  std::vector<int> sub_assignment;  // values for the variables of S, same order
  double local_value = 0.0;     // f_S(y) = sum_{T subset of S} fhat(T) y_T
  double constant_before = 0.0;
  double constant_after = 0.0;
  double weight_before = 0.0;   // W(f_{j-1})
  double weight_after = 0.0;    // W(f_j)
  std::size_t terms_before = 0;  // non-empty monomials
  std::size_t terms_after = 0;
};

/// Result of maximizing a polynomial by greedy substitution.
struct BoundCertificate {
  double bound = 0.0;             // f_end, the value at the witness
  double floor = 0.0;             // c + W / (2 d ell_c), or c for constants
  Assignment witness;
  std::size_t degree = 0;         // d of the input
  std::size_t variable_degree = 0;  // ell_c of the input
  double initial_weight = 0.0;    // W of the input
  double initial_constant = 0.0;
  std::vector<GreedyRound> rounds;
};

/// Repeatedly picks the largest-|coefficient| monomial S, substitutes the
/// best of the 2^|S| values for its variables, and stops when the polynomial
/// is constant. Variables never substituted are set to +1. The final value
/// satisfies f_end >= fhat(empty) + W / (2 d ell_c).
BoundCertificate greedy_maximize(const BooleanPolynomial& f);

/// Checks every round and the final guarantee against the original
/// polynomial; returns a description of the first violation.
std::optional<std::string> audit_certificate(const BooleanPolynomial& f, const BoundCertificate& cert);

enum class Direction { Min, Max };

/// Energy bound for H with a product-state witness. For Min the greedy runs on
/// -f_H and `energy` >= lambda_min(H); for Max on f_H and `energy` <=
/// lambda_max(H). `guarantee` is the computed floor translated to energy
/// units (an upper bound on energy for Min, a lower bound for Max). Offsets
/// are added back to every reported energy.
struct EnergyCertificate {
  Direction direction = Direction::Min;
  double energy = 0.0;
  double guarantee = 0.0;
  double offset = 0.0;
  HamiltonianStats stats;
  /// -l1/(24 ell_q) (or +l1/(24 ell_q) for Max) plus offset; only for k <= 2.
  std::optional<double> two_local_floor;
  bool two_local_floor_holds = true;
  ProductState state;
  BoundCertificate greedy;  // on the traceless, possibly negated, polynomial
};

EnergyCertificate energy_bound(const Hamiltonian& h, Direction direction);
inline EnergyCertificate min_energy_bound(const Hamiltonian& h) { return energy_bound(h, Direction::Min); }
inline EnergyCertificate max_energy_bound(const Hamiltonian& h) { return energy_bound(h, Direction::Max); }

nlohmann::json to_json(const GreedyRound& r);
nlohmann::json to_json(const BoundCertificate& c);
nlohmann::json to_json(const EnergyCertificate& c);

}  // namespace locham
