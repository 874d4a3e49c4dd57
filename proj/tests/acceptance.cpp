#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "locham/exact.hpp"
#include "locham/greedy.hpp"
#include "locham/instances.hpp"
#include "locham/poly.hpp"
#include "locham/qc_map.hpp"
#include "locham/rng.hpp"
#include "locham/sampler.hpp"
#include "verify.hpp"

using namespace locham;

namespace {

struct Named {
  std::string name;
  Hamiltonian h;
};

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

Assignment random_assignment(SplitMix64& rng, std::size_t n_vars) {
  std::vector<int> x(n_vars);
  for (auto& v : x) v = rng.sign();
  return Assignment(std::move(x));
}

// weight <= k strings on n qubits, capped to keep random_klocal feasible
std::size_t feasible_m(std::uint32_t n, std::uint32_t k, std::size_t m) {
  const auto avail = static_cast<std::size_t>(count_pauli_strings(n, k));
  return std::min(m, avail / 2 + 1);
}

Hamiltonian small_random(std::uint64_t seed) {
  const std::uint32_t n = 1 + seed % 6;
  const std::uint32_t k = std::min<std::uint32_t>(1 + (seed / 6) % 3, n);
  const std::size_t m = feasible_m(n, k, 1 + (seed * 7) % 30);
  const auto dist = seed % 2 ? CoefDistribution::Uniform : CoefDistribution::PlusMinusOne;
  return random_klocal(n, m, k, 1000 + seed, dist);
}

std::vector<Named> named_instances() {
  std::vector<Named> out;
  out.push_back({"single-edge", heisenberg_afm({LatticeSpec::Kind::Cycle, 2, 1, false})});
  out.push_back({"cycle-4", heisenberg_afm({LatticeSpec::Kind::Cycle, 4})});
  out.push_back({"cycle-10", heisenberg_afm({LatticeSpec::Kind::Cycle, 10})});
  out.push_back({"grid-4x4", heisenberg_afm({LatticeSpec::Kind::Grid2d, 4, 4})});
  out.push_back({"grid-3x3-open", heisenberg_afm({LatticeSpec::Kind::Grid2d, 3, 3, false})});
  out.push_back({"triangular-4x3", heisenberg_afm({LatticeSpec::Kind::Triangular, 4, 3})});
  for (std::uint32_t n : {3u, 4u, 6u, 8u}) out.push_back({"complete-zz-" + std::to_string(n), complete_zz(n)});
  for (std::uint32_t r : {4u, 6u}) {
    out.push_back({"signed-regular-20-" + std::to_string(r), random_signed_regular_zz(20, r, 1)});
  }
  out.push_back({"signed-regular-10-3", random_signed_regular_zz(10, 3, 7)});
  out.push_back({"random-8-2", random_klocal(8, 16, 2, 1, CoefDistribution::PlusMinusOne)});
  out.push_back({"random-9-3", random_klocal(9, 25, 3, 2)});
  out.push_back({"random-10-2", random_klocal(10, 30, 2, 3)});
  out.push_back({"offset-mix", parse_hamiltonian("qubits 3\n1.5 I\n0.7 X0 Y1\n-0.4 Z2\n0.9 Y0 Y1 Y2\n")});
  return out;
}

std::vector<Named> all_instances() {
  auto out = named_instances();
  for (std::uint64_t s = 0; s < 200; ++s) out.push_back({"random#" + std::to_string(s), small_random(s)});
  return out;
}

Outcome correspondence() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 100; ++s) {
    const Hamiltonian h = small_random(s);
    const BooleanPolynomial f = hamiltonian_to_poly(h);
    SplitMix64 rng(77 + s);
    for (int t = 0; t < 50; ++t) {
      const Assignment x = random_assignment(rng, 2 * h.n_qubits());
      worst = std::max(worst, std::abs(evaluate(f, x) - expectation_oracle(h, x)));
    }
  }
  return {worst <= 1e-9, "max deviation " + sci(worst)};
}

Outcome variance_identity() {
  double worst = 0.0;
  for (std::uint64_t s = 0; s < 20; ++s) {
    const std::uint32_t n = 1 + s % 5;
    const std::uint32_t k = std::min<std::uint32_t>(3, n);
    const Hamiltonian h = random_klocal(n, feasible_m(n, k, 4 + s), k, 500 + s);
    double coef_side = 0.0;
    for (const auto& [p, c] : h.terms()) coef_side += c * c * std::pow(3.0, -static_cast<double>(p.weight()));
    const BooleanPolynomial f = hamiltonian_to_poly(h);
    const std::size_t nv = 2 * n;
    double sum = 0.0, sumsq = 0.0;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << nv); ++bits) {
      std::vector<int> x(nv);
      for (std::size_t j = 0; j < nv; ++j) x[j] = (bits >> j) & 1 ? -1 : 1;
      const double v = evaluate(f, Assignment(std::move(x)));
      sum += v;
      sumsq += v * v;
    }
    const double points = std::ldexp(1.0, static_cast<int>(nv));
    const double mean = sum / points;
    const double enumerated = sumsq / points - mean * mean;
    worst = std::max({worst, std::abs(enumerated - coef_side), std::abs(variance(f) - coef_side)});
  }
  return {worst <= 1e-9, "max deviation " + sci(worst)};
}

Outcome greedy_guarantee(const std::vector<Named>& pool) {
  std::size_t certificates = 0;
  for (const auto& [name, h] : pool) {
    const BooleanPolynomial fh = hamiltonian_to_poly(h.traceless_part());
    for (Direction d : {Direction::Min, Direction::Max}) {
      const EnergyCertificate cert = energy_bound(h, d);
      const BooleanPolynomial f = d == Direction::Min ? -fh : fh;
      if (cert.greedy.bound < cert.greedy.floor - kAuditTolerance) return {false, name + ": bound below floor"};
      if (auto err = audit_certificate(f, cert.greedy)) return {false, name + ": " + *err};
      ++certificates;
    }
  }
  return {true, std::to_string(certificates) + " certificates audited"};
}

Outcome two_local_floor(const std::vector<Named>& pool) {
  std::size_t checked = 0;
  for (const auto& [name, h] : pool) {
    const HamiltonianStats st = h.stats();
    if (st.m == 0 || st.k > 2) continue;
    const EnergyCertificate cert = min_energy_bound(h);
    const double floor = -st.l1 / (24.0 * static_cast<double>(st.ell_q)) + h.offset();
    if (cert.energy > floor + 1e-9) {
      std::ostringstream os;
      os << name << ": energy " << cert.energy << " above " << floor;
      return {false, os.str()};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " 2-local instances"};
}

Outcome heisenberg_per_site() {
  const std::vector<std::pair<std::string, LatticeSpec>> lattices = {
      {"cycle-4", {LatticeSpec::Kind::Cycle, 4}},
      {"grid-4x4", {LatticeSpec::Kind::Grid2d, 4, 4}},
      {"triangular-4x3", {LatticeSpec::Kind::Triangular, 4, 3}},
  };
  std::ostringstream os;
  bool pass = true;
  for (const auto& [name, lat] : lattices) {
    const double per_site = min_energy_bound(heisenberg_afm(lat)).energy / lat.n_sites();
    pass = pass && per_site <= -1.0 / 48.0;
    os << name << "=" << per_site << " ";
  }
  return {pass, os.str()};
}

Outcome sandwich(const std::vector<Named>& pool) {
  std::size_t checked = 0;
  for (const auto& [name, h] : pool) {
    if (h.n_qubits() > 10) continue;
    const SpectrumResult spec = extremal_eigs(h);
    const double lo = min_energy_bound(h).energy;
    const double hi = max_energy_bound(h).energy;
    if (h.terms().empty()) continue;
    const SampleReport sr = sample_norm_bound(h, 1000, 31 + checked);
    std::ostringstream os;
    os << name << ": ";
    if (spec.lambda_min - 1e-6 > lo) {
      os << "lambda_min " << spec.lambda_min << " > greedy min " << lo;
      return {false, os.str()};
    }
    if (hi > spec.lambda_max + 1e-6) {
      os << "greedy max " << hi << " > lambda_max " << spec.lambda_max;
      return {false, os.str()};
    }
    if (sr.best_abs > spec.norm() + 1e-6) {
      os << "sampler " << sr.best_abs << " > norm " << spec.norm();
      return {false, os.str()};
    }
    ++checked;
  }
  return {true, std::to_string(checked) + " instances with n <= 10"};
}

Outcome complete_graph() {
  std::ostringstream os;
  bool pass = true;
  for (std::uint32_t n : {4u, 6u, 8u}) {
    const Hamiltonian h = complete_zz(n);
    const double target = -static_cast<double>(n) / 2.0;
    const double diag = brute_force_diagonal(h).min_value;
    const double lanczos = extremal_eigs(h).lambda_min;
    pass = pass && std::abs(diag - target) <= 1e-8 && std::abs(lanczos - target) <= 1e-8;
    os << "n=" << n << ":" << diag << "/" << lanczos << " ";
  }
  return {pass, os.str()};
}

Outcome regular_envelope() {
  constexpr double kEnvelope = 4.0;
  double worst_ratio = 0.0;
  for (std::uint32_t r : {4u, 6u}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Hamiltonian h = random_signed_regular_zz(20, r, seed);
      const double norm = brute_force_diagonal(h).norm();
      const double scale = 20.0 * std::sqrt(static_cast<double>(r));
      worst_ratio = std::max(worst_ratio, norm / scale);
      if (norm > kEnvelope * scale) return {false, "r=" + std::to_string(r) + " seed=" + std::to_string(seed)};
      const SampleReport sr = sample_norm_bound(h, default_sample_count(h), seed, 4);
      if (sr.best_abs > norm + 1e-6) return {false, "sampler above norm at seed " + std::to_string(seed)};
    }
  }
  return {true, "max norm/(n sqrt r) " + std::to_string(worst_ratio)};
}

Outcome concentration() {
  double worst = 1.0;
  for (std::size_t m : {8u, 16u, 32u}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      const Hamiltonian h = random_klocal(8, m, 2, seed, CoefDistribution::PlusMinusOne);
      worst = std::min(worst, sample_norm_bound(h, 10000, 900 + seed, 4).fraction_above);
    }
  }
  return {worst >= 0.005, "min fraction " + std::to_string(worst)};
}

Outcome constants_documented() {
  const auto report = cli::verify_instance(heisenberg_afm({LatticeSpec::Kind::Cycle, 4}), {.seed = 1});
  const bool noted = std::any_of(report.notes.begin(), report.notes.end(), [](const std::string& s) {
    return s.find("not computed") != std::string::npos && s.find("floor") != std::string::npos;
  });
  return {noted && report.passed(), noted ? "substitution noted in verify report" : "note missing"};
}

}  // namespace

int main() {
  const std::vector<Named> pool = all_instances();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"correspondence", correspondence},
      {"variance-identity", variance_identity},
      {"greedy-guarantee", [&] { return greedy_guarantee(pool); }},
      {"two-local-floor", [&] { return two_local_floor(pool); }},
      {"heisenberg-per-site", heisenberg_per_site},
      {"exact-sandwich", [&] { return sandwich(pool); }},
      {"complete-graph-tightness", complete_graph},
      {"regular-envelope", regular_envelope},
      {"sampling-concentration", concentration},
      {"constants-substituted", constants_documented},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %2zu %-26s %.2fs  %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                o.detail.c_str());
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
