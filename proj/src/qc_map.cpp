#include "locham/qc_map.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "locham/errors.hpp"

namespace locham {

namespace {

constexpr double kInvSqrt3 = 1.0 / std::numbers::sqrt3;

const Eigen::Vector2cd& base_state() {
  static const Eigen::Vector2cd psi = [] {
    const double s3 = std::numbers::sqrt3;
    const double norm = std::sqrt(6.0);
    Eigen::Vector2cd v;
    v[0] = std::sqrt(3.0 + s3) / norm;
    v[1] = std::polar(std::sqrt(3.0 - s3) / norm, std::numbers::pi / 4.0);
    return v;
  }();
  return psi;
}

}  // namespace

TetrahedronState TetrahedronState::from_label(int x1, int x2) {
  if ((x1 != 1 && x1 != -1) || (x2 != 1 && x2 != -1)) {
    throw std::invalid_argument("tetrahedron label entries must be +1 or -1");
  }
  const Eigen::Vector2cd& a = base_state();
  const std::complex<double> i(0.0, 1.0);
  TetrahedronState t{x1, x2, a};
  if (x1 == -1 && x2 == 1) {  // Z
    t.amplitudes = {a[0], -a[1]};
  } else if (x1 == 1 && x2 == -1) {  // X
    t.amplitudes = {a[1], a[0]};
  } else if (x1 == -1 && x2 == -1) {  // Y
    t.amplitudes = {-i * a[1], i * a[0]};
  }
  return t;
}

Eigen::Vector3d TetrahedronState::bloch_vector() const {
  const std::complex<double> coh = std::conj(amplitudes[0]) * amplitudes[1];
  return {2.0 * coh.real(), 2.0 * coh.imag(), std::norm(amplitudes[0]) - std::norm(amplitudes[1])};
}

StateVector ProductState::to_vector() const {
  const auto n = static_cast<std::uint32_t>(factors.size());
  StateVector v = StateVector::Ones(1);
  for (std::uint32_t q = 0; q < n; ++q) {
    const Eigen::Index half = v.size();
    StateVector next(2 * half);
    next.head(half) = factors[q].amplitudes[0] * v;
    next.tail(half) = factors[q].amplitudes[1] * v;
    v = std::move(next);
  }
  return v;
}

double chi(Pauli s, int x1, int x2) {
  switch (s) {
    case Pauli::I: return 1.0;
    case Pauli::X: return x1 * kInvSqrt3;
    case Pauli::Y: return x1 * x2 * kInvSqrt3;
    case Pauli::Z: return x2 * kInvSqrt3;
  }
  return 0.0;
}

Monomial variables_for(std::uint32_t q, Pauli p) {
  switch (p) {
    case Pauli::X: return {2 * q};
    case Pauli::Y: return {2 * q, 2 * q + 1};
    case Pauli::Z: return {2 * q + 1};
    case Pauli::I: break;
  }
  return {};
}

BooleanPolynomial hamiltonian_to_poly(const Hamiltonian& h) {
  std::vector<std::pair<Monomial, double>> terms;
  terms.reserve(h.terms().size());
  for (const auto& [s, c] : h.terms()) {
    Monomial mono;
    for (const auto& [q, p] : s.factors()) {
      const Monomial vars = variables_for(q, p);
      mono.insert(mono.end(), vars.begin(), vars.end());
    }
    terms.emplace_back(std::move(mono), c * std::pow(3.0, -0.5 * static_cast<double>(s.weight())));
  }
  return BooleanPolynomial(2 * std::size_t{h.n_qubits()}, h.offset(), terms);
}

ProductState assignment_to_state(const Assignment& x) {
  if (x.size() % 2 != 0) {
    throw std::invalid_argument("assignment length " + std::to_string(x.size()) +
                                " is odd; product states need two variables per qubit");
  }
  ProductState psi{x, {}};
  psi.factors.reserve(x.size() / 2);
  for (std::size_t q = 0; q < x.size() / 2; ++q) {
    psi.factors.push_back(TetrahedronState::from_label(x[2 * q], x[2 * q + 1]));
  }
  return psi;
}

double expectation_oracle(const Hamiltonian& h, const Assignment& x, std::uint32_t max_qubits) {
  if (h.n_qubits() > max_qubits) {
    throw ResourceLimitError("expectation oracle limited to " + std::to_string(max_qubits) +
                             " qubits, got " + std::to_string(h.n_qubits()));
  }
  if (x.size() != 2 * std::size_t{h.n_qubits()}) {
    throw std::invalid_argument("assignment length does not match 2n");
  }
  const StateVector psi = assignment_to_state(x).to_vector();
  const std::complex<double> value = psi.dot(apply_hamiltonian(h, psi));
  if (std::abs(value.imag()) > 1e-9) {
    throw std::logic_error("expectation has imaginary part " + std::to_string(value.imag()));
  }
  return value.real();
}

nlohmann::json to_json(const ProductState& psi) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& t : psi.factors) {
    factors.push_back({{"label", {t.x1, t.x2}},
                       {"amplitudes",
                        {{t.amplitudes[0].real(), t.amplitudes[0].imag()},
                         {t.amplitudes[1].real(), t.amplitudes[1].imag()}}}});
  }
  return {{"assignment", psi.source.values()}, {"factors", std::move(factors)}};
}

}  // namespace locham
