#include "locham/poly.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "locham/pauli.hpp"

namespace locham {

Assignment::Assignment(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 1 && v != -1) throw std::invalid_argument("assignment entries must be +1 or -1");
  }
}

BooleanPolynomial::BooleanPolynomial(std::size_t n_vars, double constant,
                                     const std::vector<std::pair<Monomial, double>>& terms)
    : n_vars_(n_vars), constant_(constant) {
  for (auto [s, c] : terms) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) {
      throw std::invalid_argument("monomial repeats a variable");
    }
    if (!s.empty() && s.back() >= n_vars_) {
      throw std::invalid_argument("monomial variable " + std::to_string(s.back()) +
                                  " out of range");
    }
    if (s.empty()) {
      constant_ += c;
    } else {
      terms_[std::move(s)] += c;
    }
  }
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kZeroTolerance; });
}

double BooleanPolynomial::coefficient(const Monomial& s) const {
  if (s.empty()) return constant_;
  auto it = terms_.find(s);
  return it == terms_.end() ? 0.0 : it->second;
}

std::size_t BooleanPolynomial::degree() const noexcept {
  std::size_t d = 0;
  for (const auto& [s, c] : terms_) d = std::max(d, s.size());
  return d;
}

std::size_t BooleanPolynomial::max_variable_degree() const {
  std::vector<std::size_t> count(n_vars_, 0);
  for (const auto& [s, c] : terms_) {
    for (auto v : s) ++count[v];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

BooleanPolynomial BooleanPolynomial::operator-() const {
  BooleanPolynomial out = *this;
  out.constant_ = 0.0 - out.constant_;
  for (auto& [s, c] : out.terms_) c = -c;
  return out;
}

double evaluate(const BooleanPolynomial& f, const Assignment& x) {
  if (x.size() != f.n_vars()) {
    throw std::invalid_argument("assignment has " + std::to_string(x.size()) +
                                " entries, polynomial has " + std::to_string(f.n_vars()) +
                                " variables");
  }
  double total = f.constant();
  for (const auto& [s, c] : f.terms()) {
    int sign = 1;
    for (auto v : s) sign *= x[v];
    total += sign * c;
  }
  return total;
}

BooleanPolynomial restrict(const BooleanPolynomial& f, const PartialAssignment& partial) {
  // 0 = free, otherwise the assigned sign
  std::vector<int> value(f.n_vars(), 0);
  for (const auto& [var, v] : partial) {
    if (var >= f.n_vars()) throw std::invalid_argument("restricted variable out of range");
    if (v != 1 && v != -1) throw std::invalid_argument("restricted value must be +1 or -1");
    if (value[var] != 0) {
      throw std::invalid_argument("variable " + std::to_string(var) + " assigned twice");
    }
    value[var] = v;
  }

  std::vector<std::pair<Monomial, double>> terms;
  terms.reserve(f.terms().size());
  for (const auto& [s, c] : f.terms()) {
    Monomial rest;
    int sign = 1;
    for (auto var : s) {
      if (value[var] == 0) {
        rest.push_back(var);
      } else {
        sign *= value[var];
      }
    }
    terms.emplace_back(std::move(rest), sign * c);
  }
  return BooleanPolynomial(f.n_vars(), f.constant(), terms);
}

double variance(const BooleanPolynomial& f) {
  double total = 0.0;
  for (const auto& [s, c] : f.terms()) total += c * c;
  return total;
}

double influence(const BooleanPolynomial& f, std::uint32_t var) {
  double total = 0.0;
  for (const auto& [s, c] : f.terms()) {
    if (std::binary_search(s.begin(), s.end(), var)) total += c * c;
  }
  return total;
}

std::vector<double> influences(const BooleanPolynomial& f) {
  std::vector<double> out(f.n_vars(), 0.0);
  for (const auto& [s, c] : f.terms()) {
    for (auto v : s) out[v] += c * c;
  }
  return out;
}

double total_weight(const BooleanPolynomial& f) {
  double total = 0.0;
  for (const auto& [s, c] : f.terms()) total += std::abs(c);
  return total;
}

std::pair<Monomial, double> max_abs_coeff(const BooleanPolynomial& f) {
  if (f.is_constant()) throw ConstantPolynomialError();
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (std::abs(it->second) > std::abs(best->second)) best = it;
  }
  return *best;
}

PackedPolynomial::PackedPolynomial(const BooleanPolynomial& f)
    : n_vars_(f.n_vars()), constant_(f.constant()) {
  if (n_vars_ > 64) throw std::invalid_argument("packed polynomials support at most 64 variables");
  masks_.reserve(f.terms().size());
  coeffs_.reserve(f.terms().size());
  for (const auto& [s, c] : f.terms()) {
    std::uint64_t mask = 0;
    for (auto v : s) mask |= std::uint64_t{1} << v;
    masks_.push_back(mask);
    coeffs_.push_back(c);
  }
}

double PackedPolynomial::operator()(std::uint64_t minus_bits) const noexcept {
  double total = constant_;
  for (std::size_t t = 0; t < masks_.size(); ++t) {
    total += (std::popcount(masks_[t] & minus_bits) & 1) ? -coeffs_[t] : coeffs_[t];
  }
  return total;
}

std::uint64_t pack(const Assignment& x) {
  if (x.size() > 64) throw std::invalid_argument("cannot pack more than 64 variables");
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == -1) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

Assignment unpack(std::uint64_t minus_bits, std::size_t n_vars) {
  std::vector<int> values(n_vars);
  for (std::size_t i = 0; i < n_vars; ++i) values[i] = (minus_bits >> i & 1) ? -1 : 1;
  return Assignment(std::move(values));
}

nlohmann::json to_json(const BooleanPolynomial& f) {
  nlohmann::json terms = nlohmann::json::array();
  if (f.constant() != 0.0) terms.push_back({{"vars", nlohmann::json::array()}, {"coef", f.constant()}});
  for (const auto& [s, c] : f.terms()) terms.push_back({{"vars", s}, {"coef", c}});
  return {{"n_vars", f.n_vars()}, {"terms", std::move(terms)}};
}

}  // namespace locham
