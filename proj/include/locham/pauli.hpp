#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace locham {

/// Coefficients with magnitude below this are treated as exact zeros.
inline constexpr double kZeroTolerance = 1e-12;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char to_char(Pauli p) noexcept;
Pauli pauli_from_char(char c);

/// Tensor product of single-qubit Paulis, stored sparsely as (qubit, letter)
/// pairs sorted by qubit. Letters are never I; an empty string is the
/// identity.
class PauliString {
 public:
  using Factor = std::pair<std::uint32_t, Pauli>;

  PauliString() = default;

  /// Throws std::invalid_argument if a qubit repeats. I factors are dropped.
  explicit PauliString(std::vector<Factor> factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  std::size_t weight() const noexcept { return factors_.size(); }
  bool is_identity() const noexcept { return factors_.empty(); }
  bool is_diagonal() const noexcept;

  /// Letter acting on `qubit` (I when absent).
  Pauli at(std::uint32_t qubit) const noexcept;
  /// One past the highest qubit index, 0 for the identity.
  std::uint32_t span() const noexcept;

  std::string to_string() const;

  friend auto operator<=>(const PauliString&, const PauliString&) = default;
  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::vector<Factor> factors_;
};

struct HamiltonianStats {
  std::size_t m = 0;        // number of non-identity terms
  std::size_t k = 0;        // locality (max weight)
  std::size_t ell_q = 0;    // max number of terms acting on one qubit
  double l1 = 0.0;          // sum of |coef|
  double l2sq = 0.0;        // sum of coef^2
};

/// Weighted Pauli sum plus an identity offset on an explicit number of
/// qubits. Canonical on construction: duplicate strings merged, near-zero
/// coefficients removed, terms ordered by string. Immutable afterwards.
class Hamiltonian {
 public:
  using Term = std::pair<PauliString, double>;
  using TermMap = std::map<PauliString, double>;

  Hamiltonian() = default;

  /// Identity strings in `terms` are folded into the offset. Throws
  /// std::invalid_argument when a term acts on a qubit >= n.
  Hamiltonian(std::uint32_t n, double offset, const std::vector<Term>& terms);

  std::uint32_t n_qubits() const noexcept { return n_; }
  double offset() const noexcept { return offset_; }
  const TermMap& terms() const noexcept { return terms_; }
  bool is_traceless() const noexcept { return offset_ == 0.0; }
  bool empty() const noexcept { return terms_.empty(); }
  bool is_diagonal() const noexcept;

  HamiltonianStats stats() const;

  /// Copy with the offset removed.
  Hamiltonian traceless_part() const;

 private:
  std::uint32_t n_ = 0;
  double offset_ = 0.0;
  TermMap terms_;
};

/// factor * H, offset included. factor = 0 yields an empty Hamiltonian.
Hamiltonian scale_negate(const Hamiltonian& h, double factor);

/// Coefficient-wise a*h1 + b*h2 on max(n1, n2) qubits.
Hamiltonian linear_combination(double a, const Hamiltonian& h1, double b, const Hamiltonian& h2);

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  /// 1-based line number, 0 when not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Line format:
///   qubits <n>            optional header
///   <coef> <P><q> ...     e.g. "0.5 X0 Z3", P in {X,Y,Z}
///   <coef> I              identity term
/// '#' starts a comment; LF or CRLF line endings.
Hamiltonian parse_hamiltonian(std::string_view text);

/// Writes the text format with a `qubits` header and 17 significant digits.
std::string serialize_hamiltonian(const Hamiltonian& h);

nlohmann::json to_json(const Hamiltonian& h);
Hamiltonian hamiltonian_from_json(const nlohmann::json& j);

}  // namespace locham
