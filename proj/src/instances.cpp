#include "locham/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "locham/errors.hpp"
#include "locham/rng.hpp"

namespace locham {

std::uint32_t LatticeSpec::n_sites() const noexcept {
  return kind == Kind::Cycle ? width : width * height;
}

std::vector<Edge> LatticeSpec::edges() const {
  if (width == 0 || (kind != Kind::Cycle && height == 0)) {
    throw std::invalid_argument("lattice dimensions must be positive");
  }
  std::set<Edge> out;
  auto add = [&out](std::uint32_t a, std::uint32_t b) {
    if (a != b) out.emplace(std::min(a, b), std::max(a, b));
  };
  if (kind == Kind::Cycle) {
    for (std::uint32_t i = 0; i + 1 < width; ++i) add(i, i + 1);
    if (periodic && width > 2) add(width - 1, 0);
    return {out.begin(), out.end()};
  }
  auto site = [this](std::uint32_t x, std::uint32_t y) { return y * width + x; };
  for (std::uint32_t y = 0; y < height; ++y) {
    for (std::uint32_t x = 0; x < width; ++x) {
      const bool has_right = x + 1 < width || (periodic && width > 2);
      const bool has_down = y + 1 < height || (periodic && height > 2);
      if (has_right) add(site(x, y), site((x + 1) % width, y));
      if (has_down) add(site(x, y), site(x, (y + 1) % height));
      if (kind == Kind::Triangular && has_right && has_down) {
        add(site(x, y), site((x + 1) % width, (y + 1) % height));
      }
    }
  }
  return {out.begin(), out.end()};
}

Hamiltonian heisenberg_afm(const LatticeSpec& lattice) {
  std::vector<Hamiltonian::Term> terms;
  for (const auto& [i, j] : lattice.edges()) {
    for (Pauli p : {Pauli::X, Pauli::Y, Pauli::Z}) {
      terms.emplace_back(PauliString({{i, p}, {j, p}}), 1.0);
    }
  }
  return Hamiltonian(lattice.n_sites(), 0.0, terms);
}

namespace {

bool try_pairing(std::uint32_t n, std::uint32_t r, SplitMix64& rng, std::vector<Edge>& edges) {
  std::vector<std::uint32_t> stubs;
  stubs.reserve(std::size_t{n} * r);
  for (std::uint32_t v = 0; v < n; ++v) stubs.insert(stubs.end(), r, v);
  std::set<Edge> seen;
  edges.clear();
  while (!stubs.empty()) {
    bool paired = false;
    // a few redraws before declaring the partial pairing stuck
    for (int attempt = 0; attempt < 64 && !paired; ++attempt) {
      const auto a = static_cast<std::size_t>(rng.below(stubs.size()));
      const auto b = static_cast<std::size_t>(rng.below(stubs.size()));
      const std::uint32_t u = stubs[a], v = stubs[b];
      if (a == b || u == v) continue;
      const Edge e{std::min(u, v), std::max(u, v)};
      if (seen.contains(e)) continue;
      seen.insert(e);
      edges.push_back(e);
      // remove the larger position first so the smaller stays valid
      for (auto pos : {std::max(a, b), std::min(a, b)}) {
        stubs[pos] = stubs.back();
        stubs.pop_back();
      }
      paired = true;
    }
    if (!paired) return false;
  }
  return true;
}

}  // namespace

namespace {

std::vector<Edge> regular_graph_from(std::uint32_t n, std::uint32_t r, SplitMix64& rng,
                                     std::size_t max_restarts) {
  if (r >= n) throw std::invalid_argument("regular degree must be below the vertex count");
  if ((std::uint64_t{n} * r) % 2 != 0) throw std::invalid_argument("n * r must be even");
  std::vector<Edge> edges;
  for (std::size_t attempt = 0; attempt <= max_restarts; ++attempt) {
    if (try_pairing(n, r, rng, edges)) {
      std::sort(edges.begin(), edges.end());
      return edges;
    }
  }
  throw ResourceLimitError("no simple " + std::to_string(r) + "-regular graph on " +
                           std::to_string(n) + " vertices after " + std::to_string(max_restarts) +
                           " restarts");
}

}  // namespace

std::vector<Edge> random_regular_graph(std::uint32_t n, std::uint32_t r, std::uint64_t seed,
                                       std::size_t max_restarts) {
  SplitMix64 rng(seed);
  return regular_graph_from(n, r, rng, max_restarts);
}

Hamiltonian random_signed_regular_zz(std::uint32_t n, std::uint32_t r, std::uint64_t seed) {
  SplitMix64 rng(seed);
  const auto edges = regular_graph_from(n, r, rng, 1000);
  std::vector<Hamiltonian::Term> terms;
  terms.reserve(edges.size());
  for (const auto& [i, j] : edges) {
    terms.emplace_back(PauliString({{i, Pauli::Z}, {j, Pauli::Z}}), static_cast<double>(rng.sign()));
  }
  return Hamiltonian(n, 0.0, terms);
}

Hamiltonian complete_zz(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("complete_zz needs at least 2 qubits");
  std::vector<Hamiltonian::Term> terms;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = i + 1; j < n; ++j) {
      terms.emplace_back(PauliString({{i, Pauli::Z}, {j, Pauli::Z}}), 1.0);
    }
  }
  return Hamiltonian(n, 0.0, terms);
}

double count_pauli_strings(std::uint32_t n, std::uint32_t k) {
  double total = 0.0;
  double binom = 1.0;  // C(n, w)
  double pow3 = 1.0;
  for (std::uint32_t w = 1; w <= std::min(n, k); ++w) {
    binom = binom * (n - w + 1) / w;
    pow3 *= 3.0;
    total += binom * pow3;
  }
  return total;
}

Hamiltonian random_klocal(std::uint32_t n, std::size_t m, std::uint32_t k, std::uint64_t seed,
                          CoefDistribution dist) {
  const double available = count_pauli_strings(n, k);
  if (static_cast<double>(m) > available) {
    throw std::invalid_argument("cannot draw " + std::to_string(m) + " distinct strings of weight <= " +
                                std::to_string(k) + " on " + std::to_string(n) + " qubits");
  }
  // P(weight = w) proportional to C(n, w) 3^w makes the string uniform.
  std::vector<double> cumulative;
  double binom = 1.0, pow3 = 1.0, acc = 0.0;
  for (std::uint32_t w = 1; w <= std::min(n, k); ++w) {
    binom = binom * (n - w + 1) / w;
    pow3 *= 3.0;
    acc += binom * pow3;
    cumulative.push_back(acc / available);
  }

  SplitMix64 rng(seed);
  std::set<PauliString> chosen;
  std::vector<Hamiltonian::Term> terms;
  std::vector<std::uint32_t> qubits(n);
  while (terms.size() < m) {
    const double u = rng.uniform01();
    const auto w = static_cast<std::uint32_t>(
        std::upper_bound(cumulative.begin(), cumulative.end() - 1, u) - cumulative.begin() + 1);
    for (std::uint32_t q = 0; q < n; ++q) qubits[q] = q;
    std::vector<PauliString::Factor> factors;
    for (std::uint32_t i = 0; i < w; ++i) {
      const auto pick = i + static_cast<std::uint32_t>(rng.below(n - i));
      std::swap(qubits[i], qubits[pick]);
      factors.emplace_back(qubits[i], static_cast<Pauli>(1 + rng.below(3)));
    }
    PauliString s(std::move(factors));
    if (chosen.contains(s)) continue;
    double coef = 0.0;
    if (dist == CoefDistribution::PlusMinusOne) {
      coef = rng.sign();
    } else {
      do {
        coef = 2.0 * rng.uniform01() - 1.0;
      } while (std::abs(coef) < kZeroTolerance);
    }
    chosen.insert(s);
    terms.emplace_back(std::move(s), coef);
  }
  return Hamiltonian(n, 0.0, terms);
}

}  // namespace locham
