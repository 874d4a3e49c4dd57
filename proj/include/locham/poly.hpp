#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace locham {

/// Sorted, duplicate-free set of variable indices. Ordering is lexicographic
/// on the index list, which is also the tie-break order used by the
/// optimizers.
using Monomial = std::vector<std::uint32_t>;

/// Point of {+1,-1}^N.
class Assignment {
 public:
  Assignment() = default;
  /// Throws std::invalid_argument unless every entry is +1 or -1.
  explicit Assignment(std::vector<int> values);
  static Assignment all_plus(std::size_t n) { return Assignment(std::vector<int>(n, 1)); }

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const noexcept { return values_[i]; }
  const std::vector<int>& values() const noexcept { return values_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<int> values_;
};

/// Partial assignment: (variable, +1/-1) pairs.
using PartialAssignment = std::vector<std::pair<std::uint32_t, int>>;

/// Sparse multilinear polynomial over {+1,-1}^N,
///   f(x) = c + sum_S fhat(S) prod_{i in S} x_i.
/// The constant c is kept apart from the non-empty monomials. Non-empty
/// coefficients below kZeroTolerance are pruned on construction.
class BooleanPolynomial {
 public:
  using TermMap = std::map<Monomial, double>;

  BooleanPolynomial() = default;
  explicit BooleanPolynomial(std::size_t n_vars) : n_vars_(n_vars) {}

  /// Accumulates duplicate monomials. Unsorted monomials are sorted; repeated
  /// or out-of-range variables throw std::invalid_argument.
  BooleanPolynomial(std::size_t n_vars, double constant,
                    const std::vector<std::pair<Monomial, double>>& terms);

  std::size_t n_vars() const noexcept { return n_vars_; }
  double constant() const noexcept { return constant_; }
  /// Non-empty monomials only.
  const TermMap& terms() const noexcept { return terms_; }
  bool is_constant() const noexcept { return terms_.empty(); }
  /// Coefficient of a monomial; the empty monomial returns the constant.
  double coefficient(const Monomial& s) const;

  std::size_t degree() const noexcept;
  /// Max over variables of the number of monomials containing it.
  std::size_t max_variable_degree() const;

  BooleanPolynomial operator-() const;

 private:
  std::size_t n_vars_ = 0;
  double constant_ = 0.0;
  TermMap terms_;
};

double evaluate(const BooleanPolynomial& f, const Assignment& x);

/// Substitutes the given variables. The result lives over the same N
/// variables; assigned variables no longer occur in any monomial. Throws
/// std::invalid_argument if a variable is assigned twice, is out of range,
/// or gets a value other than +1/-1.
BooleanPolynomial restrict(const BooleanPolynomial& f, const PartialAssignment& partial);

double variance(const BooleanPolynomial& f);
double influence(const BooleanPolynomial& f, std::uint32_t var);
std::vector<double> influences(const BooleanPolynomial& f);
/// W(f) = sum over non-empty S of |fhat(S)|.
double total_weight(const BooleanPolynomial& f);

class ConstantPolynomialError : public std::logic_error {
 public:
  ConstantPolynomialError() : std::logic_error("polynomial is already constant") {}
};

/// Non-empty monomial of largest |coefficient|, ties to the lexicographically
/// smallest monomial. Throws ConstantPolynomialError on a constant.
std::pair<Monomial, double> max_abs_coeff(const BooleanPolynomial& f);

/// Bitmask form of a polynomial over at most 64 variables for tight
/// evaluation loops. A point is a word whose bit i is set iff x_i = -1.
class PackedPolynomial {
 public:
  /// Throws std::invalid_argument when f has more than 64 variables.
  explicit PackedPolynomial(const BooleanPolynomial& f);

  double operator()(std::uint64_t minus_bits) const noexcept;
  std::size_t n_vars() const noexcept { return n_vars_; }

 private:
  std::size_t n_vars_;
  double constant_;
  std::vector<std::uint64_t> masks_;
  std::vector<double> coeffs_;
};

/// Packs an assignment (N <= 64) into the PackedPolynomial point encoding.
std::uint64_t pack(const Assignment& x);
Assignment unpack(std::uint64_t minus_bits, std::size_t n_vars);

nlohmann::json to_json(const BooleanPolynomial& f);

}  // namespace locham
