#include "locham/exact.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "locham/errors.hpp"
#include "locham/qc_map.hpp"
#include "locham/rng.hpp"

namespace locham {

double SpectrumResult::norm() const noexcept {
  return std::max(std::abs(lambda_min), std::abs(lambda_max));
}

double DiagonalExtremes::norm() const noexcept {
  return std::max(std::abs(min_value), std::abs(max_value));
}

namespace {

using Operator = std::function<void(const StateVector&, StateVector&)>;

struct Eigenpair {
  double value = 0.0;
  double residual = 0.0;
  std::size_t applications = 0;
};

StateVector start_vector(Eigen::Index dim, std::uint64_t seed) {
  SplitMix64 rng(seed);
  StateVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i] = {rng.uniform01() - 0.5, rng.uniform01() - 0.5};
  return v.normalized();
}

// Keeps the Krylov basis under ~512 MiB.
Eigen::Index basis_limit(Eigen::Index dim) {
  const Eigen::Index budget = Eigen::Index{1} << 25;
  return std::clamp<Eigen::Index>(budget / dim, 8, 120);
}

// Largest eigenvalue of a Hermitian operator.
Eigenpair lanczos_top(const Operator& op, Eigen::Index dim, double residual_tol,
                      const EigenOptions& options) {
  const Eigen::Index max_basis = std::min(dim, basis_limit(dim));
  Eigenpair out;
  StateVector x = start_vector(dim, options.seed);
  StateVector w(dim);
  std::vector<StateVector> basis;
  for (std::size_t restart = 0; restart <= options.max_restarts; ++restart) {
    basis.assign(1, x);
    std::vector<double> alpha;
    std::vector<double> beta;
    for (Eigen::Index j = 0; j < max_basis; ++j) {
      op(basis[j], w);
      ++out.applications;
      alpha.push_back(basis[j].dot(w).real());
      // two passes of Gram-Schmidt against the whole basis
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& v : basis) w -= v.dot(w) * v;
      }
      const double b = w.norm();
      if (j + 1 == max_basis || b <= 1e-13 * std::max(1.0, std::abs(alpha.back()))) break;
      beta.push_back(b);
      basis.push_back(w / b);
    }

    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> tri;
    tri.computeFromTridiagonal(Eigen::Map<Eigen::VectorXd>(alpha.data(), m),
                               Eigen::Map<Eigen::VectorXd>(beta.data(), m - 1));
    const Eigen::VectorXd y = tri.eigenvectors().col(m - 1);
    x.setZero();
    for (Eigen::Index i = 0; i < m; ++i) x += y[i] * basis[i];
    x.normalize();

    op(x, w);
    ++out.applications;
    out.value = x.dot(w).real();
    out.residual = (w - out.value * x).norm();
    if (out.residual <= residual_tol) return out;
  }
  throw ConvergenceError("Lanczos did not reach residual " + std::to_string(residual_tol) +
                         " after " + std::to_string(options.max_restarts) + " restarts (last " +
                         std::to_string(out.residual) + ")");
}

}  // namespace

SpectrumResult extremal_eigs(const Hamiltonian& h, const EigenOptions& options) {
  if (h.n_qubits() > options.max_qubits) {
    throw ResourceLimitError("exact eigensolver limited to " + std::to_string(options.max_qubits) +
                             " qubits, got " + std::to_string(h.n_qubits()));
  }
  SpectrumResult r;
  const double l1 = h.stats().l1;
  if (h.empty()) {
    r.lambda_min = r.lambda_max = h.offset();
    return r;
  }
  const Eigen::Index dim = Eigen::Index{1} << h.n_qubits();
  const double residual_tol = options.tol * l1;

  const Operator forward = [&h](const StateVector& v, StateVector& out) { apply_hamiltonian(h, v, out); };
  const double shift = l1 + std::abs(h.offset());
  const Operator shifted = [&h, shift](const StateVector& v, StateVector& out) {
    apply_hamiltonian(h, v, out);
    out = shift * v - out;
  };

  const Eigenpair top = lanczos_top(forward, dim, residual_tol, options);
  const Eigenpair bottom = lanczos_top(shifted, dim, residual_tol, options);
  r.lambda_max = top.value;
  r.residual_max = top.residual;
  r.lambda_min = shift - bottom.value;
  r.residual_min = bottom.residual;
  r.iterations = top.applications + bottom.applications;
  return r;
}

ProductExtremes brute_force_product(const Hamiltonian& h, std::uint32_t max_qubits) {
  if (h.n_qubits() > max_qubits) {
    throw ResourceLimitError("product-state search limited to " + std::to_string(max_qubits) +
                             " qubits, got " + std::to_string(h.n_qubits()));
  }
  const BooleanPolynomial f = hamiltonian_to_poly(h);
  const auto n_vars = static_cast<std::uint32_t>(f.n_vars());

  // Mirror variable j to bit n_vars-1-j so that counting upwards walks the
  // assignments in lexicographic order.
  std::vector<std::pair<Monomial, double>> mirrored;
  for (const auto& [s, c] : f.terms()) {
    Monomial t;
    for (auto v : s) t.push_back(n_vars - 1 - v);
    mirrored.emplace_back(std::move(t), c);
  }
  const PackedPolynomial g(BooleanPolynomial(n_vars, f.constant(), mirrored));

  std::uint64_t arg_lo = 0, arg_hi = 0;
  double lo = g(0), hi = lo;
  const std::uint64_t count = std::uint64_t{1} << n_vars;
  for (std::uint64_t t = 1; t < count; ++t) {
    const double v = g(t);
    if (v < lo) {
      lo = v;
      arg_lo = t;
    }
    if (v > hi) {
      hi = v;
      arg_hi = t;
    }
  }
  auto to_assignment = [n_vars](std::uint64_t t) {
    std::vector<int> x(n_vars);
    for (std::uint32_t j = 0; j < n_vars; ++j) x[j] = (t >> (n_vars - 1 - j) & 1) ? -1 : 1;
    return Assignment(std::move(x));
  };
  return {lo, hi, to_assignment(arg_lo), to_assignment(arg_hi)};
}

DiagonalExtremes brute_force_diagonal(const Hamiltonian& h, std::uint32_t max_qubits) {
  if (!h.is_diagonal()) throw std::invalid_argument("non-diagonal term present");
  const std::uint32_t n = h.n_qubits();
  if (n > max_qubits) {
    throw ResourceLimitError("diagonal enumeration limited to " + std::to_string(max_qubits) +
                             " qubits, got " + std::to_string(n));
  }
  std::vector<double> coef;
  std::vector<std::vector<std::size_t>> touching(n);
  double value = h.offset();
  for (const auto& [s, c] : h.terms()) {
    for (const auto& f : s.factors()) touching[f.first].push_back(coef.size());
    coef.push_back(c);
    value += c;
  }
  // Current contribution of each term is coef[t] * sign[t].
  std::vector<double> sign(coef.size(), 1.0);

  DiagonalExtremes r{value, value, 0, 0};
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < count; ++step) {
    const auto bit = static_cast<std::uint32_t>(std::countr_zero(step));
    gray ^= std::uint64_t{1} << bit;
    for (auto t : touching[bit]) {
      value -= 2.0 * coef[t] * sign[t];
      sign[t] = -sign[t];
    }
    if (value < r.min_value) {
      r.min_value = value;
      r.argmin = gray;
    }
    if (value > r.max_value) {
      r.max_value = value;
      r.argmax = gray;
    }
  }
  return r;
}

nlohmann::json to_json(const SpectrumResult& r) {
  return {{"lambda_min", r.lambda_min}, {"lambda_max", r.lambda_max}, {"norm", r.norm()},
          {"iterations", r.iterations},  {"residual_min", r.residual_min},
          {"residual_max", r.residual_max}};
}

nlohmann::json to_json(const ProductExtremes& r) {
  return {{"min", r.min_value},
          {"max", r.max_value},
          {"argmin", r.argmin.values()},
          {"argmax", r.argmax.values()}};
}

nlohmann::json to_json(const DiagonalExtremes& r) {
  return {{"min", r.min_value}, {"max", r.max_value}, {"norm", r.norm()},
          {"argmin", r.argmin},  {"argmax", r.argmax}};
}

}  // namespace locham
