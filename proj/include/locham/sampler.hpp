#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <nlohmann/json.hpp>

#include "locham/pauli.hpp"
#include "locham/poly.hpp"

namespace locham {

/// Best-of-N random tetrahedron product states.
struct SampleReport {
  std::size_t n_samples = 0;
  std::uint64_t seed = 0;
  Assignment best_assignment;
  std::size_t best_index = 0;
  double best_value = 0.0;  // signed <psi|H|psi> at the best sample
  double best_abs = 0.0;    // certified lower bound on ||H||
  double threshold = 0.0;   // sqrt(Var(f_H))
  double fraction_above = 0.0;
  double mean = 0.0;        // of f_H - offset over the samples
  double mean_square = 0.0;
  double variance = 0.0;    // Var(f_H) from coefficients
  double i_max = 0.0;
};

/// 3^k * 1000.
std::size_t default_sample_count(const Hamiltonian& h);

/// Draws n_samples uniform points of {+1,-1}^{2n}; sample i uses the
/// substream (seed, i), so the report does not depend on `workers`.
/// Throws std::invalid_argument if n_samples == 0.
SampleReport sample_norm_bound(const Hamiltonian& h, std::size_t n_samples, std::uint64_t seed,
                               unsigned workers = 1);

/// Sample i of a (seed) run, as drawn by sample_norm_bound.
Assignment sample_assignment(std::size_t n_vars, std::uint64_t seed, std::uint64_t index);

struct InfluenceReport {
  std::vector<double> influences;  // Inf_j(f_H), j < 2n
  double i_max = 0.0;
};

InfluenceReport influence_report(const Hamiltonian& h);

nlohmann::json to_json(const SampleReport& r);
nlohmann::json to_json(const InfluenceReport& r);

}  // namespace locham
