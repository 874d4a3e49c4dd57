#include <doctest.h>

#include <algorithm>
#include <set>

#include "locham/errors.hpp"
#include "locham/exact.hpp"
#include "locham/instances.hpp"

using namespace locham;

namespace {
std::vector<std::size_t> degrees(std::uint32_t n, const std::vector<Edge>& edges) {
  std::vector<std::size_t> d(n, 0);
  for (const auto& [u, v] : edges) {
    ++d[u];
    ++d[v];
  }
  return d;
}
}  // namespace

TEST_CASE("heisenberg lattices") {
  SUBCASE("4-cycle") {
    const Hamiltonian h = heisenberg_afm({LatticeSpec::Kind::Cycle, 4, 1, true});
    CHECK(h.terms().size() == 12);
    CHECK(h.stats().ell_q == 6);
  }
  SUBCASE("4x4 periodic grid") {
    const Hamiltonian h = heisenberg_afm({LatticeSpec::Kind::Grid2d, 4, 4, true});
    CHECK(h.n_qubits() == 16);
    CHECK(h.terms().size() == 96);
    CHECK(h.stats().l1 == 96.0);
    CHECK(h.stats().ell_q == 12);
  }
  SUBCASE("single edge") {
    const Hamiltonian h = heisenberg_afm({LatticeSpec::Kind::Cycle, 2, 1, false});
    CHECK(h.terms().size() == 3);
    CHECK(extremal_eigs(h).lambda_min == doctest::Approx(-3.0));
  }
  SUBCASE("periodic lattices are regular") {
    for (const LatticeSpec spec : {LatticeSpec{LatticeSpec::Kind::Cycle, 7, 1, true},
                                   LatticeSpec{LatticeSpec::Kind::Grid2d, 3, 5, true},
                                   LatticeSpec{LatticeSpec::Kind::Triangular, 4, 3, true}}) {
      const auto edges = spec.edges();
      const auto d = degrees(spec.n_sites(), edges);
      const std::size_t expected = spec.kind == LatticeSpec::Kind::Cycle ? 2
                                   : spec.kind == LatticeSpec::Kind::Grid2d ? 4 : 6;
      CHECK(std::all_of(d.begin(), d.end(), [&](std::size_t v) { return v == expected; }));
      CHECK(heisenberg_afm(spec).stats().l1 == 3.0 * static_cast<double>(edges.size()));
      CHECK(heisenberg_afm(spec).stats().ell_q == 3 * expected);
    }
  }
  SUBCASE("open grid") {
    const auto edges = LatticeSpec{LatticeSpec::Kind::Grid2d, 3, 2, false}.edges();
    CHECK(edges.size() == 7);
  }
  CHECK_THROWS_AS(LatticeSpec({LatticeSpec::Kind::Grid2d, 0, 3, true}).edges(), std::invalid_argument);
}

TEST_CASE("random signed regular graphs") {
  SUBCASE("n=4, r=3 is K4") {
    const Hamiltonian h = random_signed_regular_zz(4, 3, 1);
    CHECK(h.terms().size() == 6);
    for (const auto& [s, c] : h.terms()) CHECK(std::abs(c) == 1.0);
  }
  SUBCASE("regularity audit") {
    for (std::uint32_t r : {3u, 4u, 6u}) {
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const std::uint32_t n = 20;
        const auto edges = random_regular_graph(n, r, seed);
        CHECK(edges.size() == n * r / 2);
        const std::set<Edge> unique(edges.begin(), edges.end());
        CHECK(unique.size() == edges.size());
        for (const auto& [u, v] : edges) CHECK(u < v);
        const auto d = degrees(n, edges);
        CHECK(std::all_of(d.begin(), d.end(), [r](std::size_t v) { return v == r; }));
        const Hamiltonian h = random_signed_regular_zz(n, r, seed);
        CHECK(h.stats().m == n * r / 2);
        CHECK(h.stats().ell_q == r);
        CHECK(h.is_diagonal());
      }
    }
  }
  SUBCASE("seeded determinism") {
    CHECK(serialize_hamiltonian(random_signed_regular_zz(20, 4, 7)) ==
          serialize_hamiltonian(random_signed_regular_zz(20, 4, 7)));
    CHECK(serialize_hamiltonian(random_signed_regular_zz(20, 4, 7)) !=
          serialize_hamiltonian(random_signed_regular_zz(20, 4, 8)));
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(random_regular_graph(5, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(random_regular_graph(4, 4, 1), std::invalid_argument);
    // without restarts, a dense pairing gets stuck for some seeds
    int stuck = 0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      try {
        random_regular_graph(12, 10, seed, 0);
      } catch (const ResourceLimitError&) {
        ++stuck;
      }
    }
    CHECK(stuck > 0);
    CHECK(random_regular_graph(12, 10, 0).size() == 60);
  }
}

TEST_CASE("complete_zz") {
  CHECK(complete_zz(4).terms().size() == 6);
  CHECK(complete_zz(7).stats().ell_q == 6);
  CHECK_THROWS_AS(complete_zz(1), std::invalid_argument);
  for (std::uint32_t n = 2; n <= 10; ++n) {
    const double lo = brute_force_diagonal(complete_zz(n)).min_value;
    CHECK(lo >= -static_cast<double>(n) / 2.0);
    CHECK(lo == (n % 2 ? -static_cast<double>(n - 1) / 2.0 : -static_cast<double>(n) / 2.0));
  }
}

TEST_CASE("random_klocal") {
  const Hamiltonian h = random_klocal(5, 10, 3, 42);
  CHECK(h.terms().size() == 10);
  CHECK(h.stats().k <= 3);
  CHECK(serialize_hamiltonian(h) == serialize_hamiltonian(random_klocal(5, 10, 3, 42)));
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Hamiltonian r = random_klocal(6, 1 + seed % 30, 3, seed,
                                        seed % 2 ? CoefDistribution::PlusMinusOne : CoefDistribution::Uniform);
    CHECK(r.stats().k <= 3);
    CHECK(r.stats().m == 1 + seed % 30);
    CHECK(parse_hamiltonian(serialize_hamiltonian(r)).terms() == r.terms());
    if (seed % 2) {
      for (const auto& [s, c] : r.terms()) CHECK(std::abs(c) == 1.0);
    }
  }
  // every string of weight <= 1 on 2 qubits
  CHECK(count_pauli_strings(2, 1) == 6.0);
  CHECK(random_klocal(2, 6, 1, 3).terms().size() == 6);
  CHECK_THROWS_AS(random_klocal(2, 7, 1, 3), std::invalid_argument);
}
