#pragma once

// Reference computations used only by tests. They take deliberately
// different routes from the library: dense Kronecker-product matrices
// instead of bit-twiddled Pauli action, and full 2^N sweeps instead of
// coefficient sums.

#include <cmath>
#include <complex>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "locham/pauli.hpp"
#include "locham/poly.hpp"
#include "locham/rng.hpp"

namespace locham::testing {

inline Eigen::Matrix2cd pauli_matrix(Pauli p) {
  const std::complex<double> i(0.0, 1.0);
  Eigen::Matrix2cd m;
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r) {
    for (Eigen::Index c = 0; c < a.cols(); ++c) {
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    }
  }
  return out;
}

/// Dense 2^n x 2^n matrix; qubit i is bit i of the basis index, so qubit
/// n-1 is the leftmost Kronecker factor.
inline Eigen::MatrixXcd dense_matrix(const Hamiltonian& h) {
  const std::uint32_t n = h.n_qubits();
  const Eigen::Index dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd m = h.offset() * Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& [s, c] : h.terms()) {
    Eigen::MatrixXcd term = Eigen::MatrixXcd::Identity(1, 1);
    for (std::uint32_t q = n; q-- > 0;) term = kron(term, pauli_matrix(s.at(q)));
    m += c * term;
  }
  return m;
}

inline Eigen::VectorXd dense_spectrum(const Hamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense_matrix(h), Eigen::EigenvaluesOnly);
  return solver.eigenvalues();
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
};

/// E[f] and E[f^2] - E[f]^2 over all 2^N points by direct evaluation.
inline Moments exhaustive_moments(const BooleanPolynomial& f) {
  const std::size_t n = f.n_vars();
  const std::uint64_t count = std::uint64_t{1} << n;
  double sum = 0.0, sum_sq = 0.0;
  std::vector<int> x(n);
  for (std::uint64_t t = 0; t < count; ++t) {
    for (std::size_t i = 0; i < n; ++i) x[i] = (t >> i & 1) ? -1 : 1;
    double v = f.constant();
    for (const auto& [s, c] : f.terms()) {
      double prod = c;
      for (auto var : s) prod *= x[var];
      v += prod;
    }
    sum += v;
    sum_sq += v * v;
  }
  const double mean = sum / static_cast<double>(count);
  return {mean, sum_sq / static_cast<double>(count) - mean * mean};
}

/// Random polynomial with `n_terms` monomials of size 1..max_degree and
/// coefficients uniform on [-1, 1].
inline BooleanPolynomial random_polynomial(SplitMix64& rng, std::size_t n_vars, std::size_t n_terms,
                                           std::size_t max_degree, double constant = 0.0) {
  std::vector<std::pair<Monomial, double>> terms;
  for (std::size_t t = 0; t < n_terms; ++t) {
    const std::size_t deg = 1 + rng.below(std::min(max_degree, n_vars));
    std::vector<std::uint32_t> pool(n_vars);
    for (std::uint32_t i = 0; i < n_vars; ++i) pool[i] = i;
    Monomial s;
    for (std::size_t j = 0; j < deg; ++j) {
      const auto pick = j + rng.below(n_vars - j);
      std::swap(pool[j], pool[pick]);
      s.push_back(pool[j]);
    }
    terms.emplace_back(std::move(s), 2.0 * rng.uniform01() - 1.0);
  }
  return BooleanPolynomial(n_vars, constant, terms);
}

inline Assignment random_assignment(SplitMix64& rng, std::size_t n) {
  std::vector<int> x(n);
  for (auto& v : x) v = rng.sign();
  return Assignment(std::move(x));
}

}  // namespace locham::testing
