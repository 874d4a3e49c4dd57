#include "locham/greedy.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <string>

namespace locham {

namespace {

// Sub-monomials T of S present in g, encoded as bitmasks over positions in S
// (position 0 is the most significant bit, matching the y enumeration order).
std::vector<std::pair<std::uint32_t, double>> sub_terms(const BooleanPolynomial& g, const Monomial& s) {
  const auto k = static_cast<std::uint32_t>(s.size());
  std::vector<std::pair<std::uint32_t, double>> out;
  for (std::uint32_t sub = 1; sub < (1u << k); ++sub) {
    Monomial t;
    for (std::uint32_t j = 0; j < k; ++j) {
      if (sub >> (k - 1 - j) & 1u) t.push_back(s[j]);
    }
    if (const double c = g.coefficient(t); c != 0.0) out.emplace_back(sub, c);
  }
  return out;
}

}  // namespace

BoundCertificate greedy_maximize(const BooleanPolynomial& f) {
  BoundCertificate cert;
  cert.degree = f.degree();
  cert.variable_degree = f.max_variable_degree();
  cert.initial_weight = total_weight(f);
  cert.initial_constant = f.constant();
  cert.floor = f.constant();
  if (!f.is_constant()) {
    cert.floor += cert.initial_weight /
                  (2.0 * static_cast<double>(cert.degree) * static_cast<double>(cert.variable_degree));
  }

  std::vector<int> x(f.n_vars(), 0);
  BooleanPolynomial g = f;
  while (!g.is_constant()) {
    GreedyRound round;
    round.index = cert.rounds.size() + 1;
    auto [s, coef] = max_abs_coeff(g);
    round.max_coeff = std::abs(coef);
    round.constant_before = g.constant();
    round.weight_before = total_weight(g);
    round.terms_before = g.terms().size();

    // y ranges over {+1,-1}^|S| in lexicographic order with +1 first; bit
    // set means -1. The first maximizer wins.
    const auto k = static_cast<std::uint32_t>(s.size());
    const auto subs = sub_terms(g, s);
    std::uint32_t best_mask = 0;
    double best = -std::numeric_limits<double>::infinity();
    for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
      double value = g.constant();
      for (const auto& [sub, c] : subs) value += (std::popcount(sub & mask) & 1) ? -c : c;
      if (value > best) {
        best = value;
        best_mask = mask;
      }
    }

    PartialAssignment partial;
    partial.reserve(k);
    for (std::uint32_t j = 0; j < k; ++j) {
      const int v = (best_mask >> (k - 1 - j) & 1u) ? -1 : 1;
      partial.emplace_back(s[j], v);
      round.sub_assignment.push_back(v);
      x[s[j]] = v;
    }
    round.local_value = best;
    round.chosen = std::move(s);
    g = restrict(g, partial);
    round.constant_after = g.constant();
    round.weight_after = total_weight(g);
    round.terms_after = g.terms().size();
    cert.rounds.push_back(std::move(round));
  }

  for (int& v : x) {
    if (v == 0) v = 1;
  }
  cert.bound = g.constant();
  cert.witness = Assignment(std::move(x));
  return cert;
}

std::optional<std::string> audit_certificate(const BooleanPolynomial& f, const BoundCertificate& cert) {
  const double slope =
      2.0 * static_cast<double>(cert.degree) * static_cast<double>(cert.variable_degree);
  for (const auto& r : cert.rounds) {
    const std::string where = "round " + std::to_string(r.index) + ": ";
    if (r.constant_after < r.constant_before + r.max_coeff - kAuditTolerance) {
      return where + "constant rose by " + std::to_string(r.constant_after - r.constant_before) +
             " < M_j = " + std::to_string(r.max_coeff);
    }
    if (r.weight_after < r.weight_before - slope * r.max_coeff - kAuditTolerance) {
      return where + "W dropped by " + std::to_string(r.weight_before - r.weight_after) +
             " > 2 d ell_c M_j = " + std::to_string(slope * r.max_coeff);
    }
    if (r.local_value < r.constant_before + r.max_coeff - 1e-12) {
      return where + "chosen sub-assignment does not reach fhat(empty) + M_j";
    }
    if (r.terms_after >= r.terms_before) return where + "monomial count did not decrease";
  }
  if (cert.bound < cert.floor - kAuditTolerance) {
    return "bound " + std::to_string(cert.bound) + " below guaranteed floor " +
           std::to_string(cert.floor);
  }
  if (std::abs(evaluate(f, cert.witness) - cert.bound) > kAuditTolerance) {
    return "witness value " + std::to_string(evaluate(f, cert.witness)) + " differs from bound " +
           std::to_string(cert.bound);
  }
  return std::nullopt;
}

EnergyCertificate energy_bound(const Hamiltonian& h, Direction direction) {
  const bool minimize = direction == Direction::Min;
  const BooleanPolynomial fh = hamiltonian_to_poly(h.traceless_part());

  EnergyCertificate out;
  out.direction = direction;
  out.offset = h.offset();
  out.stats = h.stats();
  out.greedy = greedy_maximize(minimize ? -fh : fh);
  const double sign = minimize ? -1.0 : 1.0;
  out.energy = sign * out.greedy.bound + out.offset;
  out.guarantee = sign * out.greedy.floor + out.offset;
  if (out.stats.m > 0 && out.stats.k <= 2) {
    const double floor = sign * out.stats.l1 / (24.0 * static_cast<double>(out.stats.ell_q)) + out.offset;
    out.two_local_floor = floor;
    out.two_local_floor_holds =
        minimize ? out.energy <= floor + kAuditTolerance : out.energy >= floor - kAuditTolerance;
  }
  out.state = assignment_to_state(out.greedy.witness);
  return out;
}

nlohmann::json to_json(const GreedyRound& r) {
  return {{"round", r.index},
          {"monomial", r.chosen},
          {"max_coeff", r.max_coeff},
          {"sub_assignment", r.sub_assignment},
          {"local_value", r.local_value},
          {"constant_before", r.constant_before},
          {"constant_after", r.constant_after},
          {"weight_before", r.weight_before},
          {"weight_after", r.weight_after},
          {"terms_before", r.terms_before},
          {"terms_after", r.terms_after}};
}

nlohmann::json to_json(const BoundCertificate& c) {
  nlohmann::json rounds = nlohmann::json::array();
  for (const auto& r : c.rounds) rounds.push_back(to_json(r));
  return {{"bound", c.bound},
          {"floor", c.floor},
          {"degree", c.degree},
          {"variable_degree", c.variable_degree},
          {"initial_weight", c.initial_weight},
          {"initial_constant", c.initial_constant},
          {"witness", c.witness.values()},
          {"rounds", std::move(rounds)}};
}

nlohmann::json to_json(const EnergyCertificate& c) {
  return {{"direction", c.direction == Direction::Min ? "min" : "max"},
          {"energy", c.energy},
          {"guarantee", c.guarantee},
          {"offset", c.offset},
          {"stats",
           {{"m", c.stats.m}, {"k", c.stats.k}, {"ell_q", c.stats.ell_q}, {"l1", c.stats.l1}, {"l2sq", c.stats.l2sq}}},
          {"two_local_floor", c.two_local_floor ? nlohmann::json(*c.two_local_floor) : nlohmann::json(nullptr)},
          {"two_local_floor_holds", c.two_local_floor_holds},
          {"witness", c.greedy.witness.values()},
          {"product_state", to_json(c.state)},
          {"certificate", to_json(c.greedy)}};
}

}  // namespace locham
