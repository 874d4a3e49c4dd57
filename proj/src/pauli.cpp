#include "locham/pauli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace locham {

char to_char(Pauli p) noexcept {
  switch (p) {
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
    case Pauli::I: break;
  }
  return 'I';
}

Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: break;
  }
  throw std::invalid_argument(std::string("unknown Pauli letter '") + c + "'");
}

PauliString::PauliString(std::vector<Factor> factors) {
  std::erase_if(factors, [](const Factor& f) { return f.second == Pauli::I; });
  std::sort(factors.begin(), factors.end());
  for (std::size_t i = 1; i < factors.size(); ++i) {
    if (factors[i].first == factors[i - 1].first) {
      throw std::invalid_argument("qubit " + std::to_string(factors[i].first) +
                                  " appears twice in one Pauli string");
    }
  }
  factors_ = std::move(factors);
}

bool PauliString::is_diagonal() const noexcept {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const Factor& f) { return f.second == Pauli::Z; });
}

Pauli PauliString::at(std::uint32_t qubit) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), qubit,
                             [](const Factor& f, std::uint32_t q) { return f.first < q; });
  return (it != factors_.end() && it->first == qubit) ? it->second : Pauli::I;
}

std::uint32_t PauliString::span() const noexcept {
  return factors_.empty() ? 0 : factors_.back().first + 1;
}

std::string PauliString::to_string() const {
  if (factors_.empty()) return "I";
  std::string out;
  for (const auto& [q, p] : factors_) {
    if (!out.empty()) out += ' ';
    out += to_char(p);
    out += std::to_string(q);
  }
  return out;
}

Hamiltonian::Hamiltonian(std::uint32_t n, double offset, const std::vector<Term>& terms)
    : n_(n), offset_(offset) {
  for (const auto& [s, c] : terms) {
    if (s.is_identity()) {
      offset_ += c;
      continue;
    }
    if (s.span() > n_) {
      throw std::invalid_argument("term " + s.to_string() + " acts outside " +
                                  std::to_string(n_) + " qubits");
    }
    terms_[s] += c;
  }
  std::erase_if(terms_, [](const auto& kv) { return std::abs(kv.second) < kZeroTolerance; });
  if (std::abs(offset_) < kZeroTolerance) offset_ = 0.0;
}

bool Hamiltonian::is_diagonal() const noexcept {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.first.is_diagonal(); });
}

HamiltonianStats Hamiltonian::stats() const {
  HamiltonianStats st;
  std::vector<std::size_t> degree(n_, 0);
  for (const auto& [s, c] : terms_) {
    ++st.m;
    st.k = std::max(st.k, s.weight());
    st.l1 += std::abs(c);
    st.l2sq += c * c;
    for (const auto& f : s.factors()) ++degree[f.first];
  }
  if (!degree.empty()) st.ell_q = *std::max_element(degree.begin(), degree.end());
  return st;
}

Hamiltonian Hamiltonian::traceless_part() const {
  Hamiltonian out = *this;
  out.offset_ = 0.0;
  return out;
}

Hamiltonian scale_negate(const Hamiltonian& h, double factor) {
  std::vector<Hamiltonian::Term> terms;
  terms.reserve(h.terms().size());
  for (const auto& [s, c] : h.terms()) terms.emplace_back(s, factor * c);
  return Hamiltonian(h.n_qubits(), factor * h.offset(), terms);
}

Hamiltonian linear_combination(double a, const Hamiltonian& h1, double b, const Hamiltonian& h2) {
  std::vector<Hamiltonian::Term> terms;
  for (const auto& [s, c] : h1.terms()) terms.emplace_back(s, a * c);
  for (const auto& [s, c] : h2.terms()) terms.emplace_back(s, b * c);
  return Hamiltonian(std::max(h1.n_qubits(), h2.n_qubits()), a * h1.offset() + b * h2.offset(),
                     terms);
}

// ---------------------------------------------------------------------------
// Text format

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_coef(std::string_view tok, std::size_t line) {
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc() || ptr != body.data() + body.size() || !std::isfinite(value)) {
    throw ParseError(line, "invalid coefficient '" + std::string(tok) + "'");
  }
  return value;
}

std::uint32_t parse_index(std::string_view digits, std::size_t line, std::string_view tok) {
  std::uint32_t q = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), q);
  if (digits.empty() || ec != std::errc() || ptr != digits.data() + digits.size()) {
    throw ParseError(line, "invalid qubit index in '" + std::string(tok) + "'");
  }
  return q;
}

}  // namespace

Hamiltonian parse_hamiltonian(std::string_view text) {
  struct RawTerm {
    PauliString s;
    double coef;
    std::size_t line;
  };
  std::vector<RawTerm> raw;
  std::optional<std::uint32_t> declared_n;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const auto toks = split_ws(line);
    if (toks.empty()) continue;

    if (toks[0] == "qubits") {
      if (toks.size() != 2) throw ParseError(line_no, "expected 'qubits <n>'");
      if (declared_n) throw ParseError(line_no, "duplicate 'qubits' header");
      declared_n = parse_index(toks[1], line_no, toks[1]);
      continue;
    }

    const double coef = parse_coef(toks[0], line_no);
    if (toks.size() < 2) throw ParseError(line_no, "term has no Pauli factors");
    if (toks.size() == 2 && toks[1] == "I") {
      raw.push_back({PauliString{}, coef, line_no});
      continue;
    }
    std::vector<PauliString::Factor> factors;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      const auto tok = toks[t];
      Pauli p;
      try {
        p = pauli_from_char(tok[0]);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line_no, e.what());
      }
      if (p == Pauli::I) throw ParseError(line_no, "identity factor 'I' must stand alone");
      factors.emplace_back(parse_index(tok.substr(1), line_no, tok), p);
    }
    try {
      raw.push_back({PauliString(std::move(factors)), coef, line_no});
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
  }
  if (raw.empty()) throw ParseError(0, "empty term list");

  std::uint32_t n = 0;
  for (const auto& r : raw) n = std::max(n, r.s.span());
  if (declared_n) {
    for (const auto& r : raw) {
      if (r.s.span() > *declared_n) {
        throw ParseError(r.line, "qubit index " + std::to_string(r.s.span() - 1) +
                                     " >= declared qubits " + std::to_string(*declared_n));
      }
    }
    n = *declared_n;
  }
  std::vector<Hamiltonian::Term> terms;
  terms.reserve(raw.size());
  for (auto& r : raw) terms.emplace_back(std::move(r.s), r.coef);
  return Hamiltonian(n, 0.0, terms);
}

namespace {
std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}
}  // namespace

std::string serialize_hamiltonian(const Hamiltonian& h) {
  std::ostringstream out;
  out << "qubits " << h.n_qubits() << '\n';
  if (h.offset() != 0.0) out << fmt17(h.offset()) << " I\n";
  for (const auto& [s, c] : h.terms()) out << fmt17(c) << ' ' << s.to_string() << '\n';
  return out.str();
}

nlohmann::json to_json(const Hamiltonian& h) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [s, c] : h.terms()) {
    nlohmann::json paulis = nlohmann::json::array();
    for (const auto& [q, p] : s.factors()) paulis.push_back({std::string(1, to_char(p)), q});
    terms.push_back({{"coef", c}, {"paulis", std::move(paulis)}});
  }
  return {{"n", h.n_qubits()}, {"offset", h.offset()}, {"terms", std::move(terms)}};
}

Hamiltonian hamiltonian_from_json(const nlohmann::json& j) {
  std::vector<Hamiltonian::Term> terms;
  for (const auto& t : j.at("terms")) {
    std::vector<PauliString::Factor> factors;
    for (const auto& pq : t.at("paulis")) {
      const auto letter = pq.at(0).get<std::string>();
      if (letter.size() != 1) throw std::invalid_argument("bad Pauli letter '" + letter + "'");
      factors.emplace_back(pq.at(1).get<std::uint32_t>(), pauli_from_char(letter[0]));
    }
    terms.emplace_back(PauliString(std::move(factors)), t.at("coef").get<double>());
  }
  return Hamiltonian(j.at("n").get<std::uint32_t>(), j.value("offset", 0.0), terms);
}

}  // namespace locham
