#include "locham/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include "locham/qc_map.hpp"
#include "locham/rng.hpp"

namespace locham {

std::size_t default_sample_count(const Hamiltonian& h) {
  std::size_t n = 1000;
  for (std::size_t i = 0; i < h.stats().k; ++i) n *= 3;
  return n;
}

Assignment sample_assignment(std::size_t n_vars, std::uint64_t seed, std::uint64_t index) {
  SplitMix64 rng = SplitMix64::substream(seed, index);
  std::vector<int> values(n_vars);
  std::uint64_t word = 0;
  for (std::size_t i = 0; i < n_vars; ++i) {
    if (i % 64 == 0) word = rng();
    values[i] = (word >> (i % 64) & 1) ? -1 : 1;
  }
  return Assignment(std::move(values));
}

SampleReport sample_norm_bound(const Hamiltonian& h, std::size_t n_samples, std::uint64_t seed,
                               unsigned workers) {
  if (n_samples == 0) throw std::invalid_argument("need at least one sample");
  const BooleanPolynomial f = hamiltonian_to_poly(h);
  const std::size_t n_vars = f.n_vars();

  std::vector<double> values(n_samples);
  auto run = [&](std::size_t begin, std::size_t end) {
    if (n_vars <= 64) {
      const PackedPolynomial packed(f);
      for (std::size_t i = begin; i < end; ++i) values[i] = packed(pack(sample_assignment(n_vars, seed, i)));
    } else {
      for (std::size_t i = begin; i < end; ++i) values[i] = evaluate(f, sample_assignment(n_vars, seed, i));
    }
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(n_samples)));
  if (workers == 1) {
    run(0, n_samples);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (n_samples + workers - 1) / workers;
    for (std::size_t begin = 0; begin < n_samples; begin += chunk) {
      pool.emplace_back(run, begin, std::min(n_samples, begin + chunk));
    }
  }

  SampleReport r;
  r.n_samples = n_samples;
  r.seed = seed;
  r.variance = variance(f);
  r.threshold = std::sqrt(r.variance);
  r.i_max = influence_report(h).i_max;
  std::size_t above = 0;
  for (std::size_t i = 0; i < n_samples; ++i) {
    const double centred = values[i] - h.offset();
    r.mean += centred;
    r.mean_square += centred * centred;
    // relative slack so exact two-valued cases (|f| == threshold) count
    if (std::abs(centred) >= r.threshold * (1.0 - 1e-12)) ++above;
    if (std::abs(values[i]) > r.best_abs || i == 0) {
      r.best_abs = std::abs(values[i]);
      r.best_value = values[i];
      r.best_index = i;
    }
  }
  r.mean /= static_cast<double>(n_samples);
  r.mean_square /= static_cast<double>(n_samples);
  r.fraction_above = static_cast<double>(above) / static_cast<double>(n_samples);
  r.best_assignment = sample_assignment(n_vars, seed, r.best_index);
  return r;
}

InfluenceReport influence_report(const Hamiltonian& h) {
  InfluenceReport r;
  r.influences = influences(hamiltonian_to_poly(h));
  if (!r.influences.empty()) r.i_max = *std::max_element(r.influences.begin(), r.influences.end());
  return r;
}

nlohmann::json to_json(const SampleReport& r) {
  return {{"n_samples", r.n_samples},
          {"seed", r.seed},
          {"best_index", r.best_index},
          {"best_value", r.best_value},
          {"best_abs", r.best_abs},
          {"best_assignment", r.best_assignment.values()},
          {"product_state", to_json(assignment_to_state(r.best_assignment))},
          {"threshold", r.threshold},
          {"fraction_above", r.fraction_above},
          {"mean", r.mean},
          {"mean_square", r.mean_square},
          {"variance", r.variance},
          {"i_max", r.i_max}};
}

nlohmann::json to_json(const InfluenceReport& r) {
  return {{"influences", r.influences}, {"i_max", r.i_max}};
}

}  // namespace locham
