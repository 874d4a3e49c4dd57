#include <doctest.h>

#include <cmath>

#include "locham/instances.hpp"
#include "locham/qc_map.hpp"
#include "locham/sampler.hpp"
#include "oracles.hpp"

using namespace locham;
using locham::testing::dense_spectrum;

TEST_CASE("Z0 is two-valued") {
  const SampleReport r = sample_norm_bound(parse_hamiltonian("1 Z0"), 50, 1);
  CHECK(r.best_abs == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.threshold == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.fraction_above == 1.0);
  CHECK(r.best_index == 0);
}

TEST_CASE("ZZ has Var 1/9") {
  const SampleReport r = sample_norm_bound(parse_hamiltonian("1 Z0 Z1"), 100, 2);
  CHECK(r.variance == doctest::Approx(1.0 / 9.0).epsilon(1e-14));
  CHECK(r.threshold == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  CHECK(r.fraction_above == 1.0);
  CHECK(r.best_abs == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("empty Hamiltonian") {
  const SampleReport r = sample_norm_bound(parse_hamiltonian("1 X0\n-1 X0"), 10, 3);
  CHECK(r.best_abs == 0.0);
  CHECK_THROWS_AS(sample_norm_bound(complete_zz(3), 0, 3), std::invalid_argument);
}

TEST_CASE("best sample is a genuine witness") {
  const Hamiltonian h = random_klocal(6, 20, 3, 12);
  const SampleReport r = sample_norm_bound(h, 500, 99);
  CHECK(std::abs(expectation_oracle(h, r.best_assignment)) == doctest::Approx(r.best_abs).epsilon(1e-9));
  CHECK(r.best_assignment == sample_assignment(12, 99, r.best_index));
  for (std::size_t i = 0; i < 500; ++i) {
    CHECK(std::abs(evaluate(hamiltonian_to_poly(h), sample_assignment(12, 99, i))) <= r.best_abs);
  }
  CHECK(r.fraction_above >= 0.0);
  CHECK(r.fraction_above <= 1.0);
}

TEST_CASE("report does not depend on the worker partition") {
  const Hamiltonian h = random_klocal(10, 40, 2, 5);
  const auto one = to_json(sample_norm_bound(h, 3001, 17, 1)).dump();
  for (unsigned w : {2u, 3u, 7u}) CHECK(to_json(sample_norm_bound(h, 3001, 17, w)).dump() == one);
  CHECK(to_json(sample_norm_bound(h, 3001, 18, 1)).dump() != one);
}

TEST_CASE("sample moments concentrate") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const Hamiltonian h = random_klocal(8, 30, 2, seed);
    const std::size_t n = 20000;
    const SampleReport r = sample_norm_bound(h, n, 1000 + seed);
    const double root_n = std::sqrt(static_cast<double>(n));
    CHECK(std::abs(r.mean) <= 5.0 / root_n * r.threshold);
    CHECK(std::abs(r.mean_square - r.variance) <= 10.0 / root_n * r.variance);
  }
}

TEST_CASE("best |f_H| never exceeds the operator norm") {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Hamiltonian h = random_klocal(5, 15, 3, seed);
    const auto spectrum = dense_spectrum(h);
    const double norm = std::max(std::abs(spectrum[0]), std::abs(spectrum[spectrum.size() - 1]));
    CHECK(sample_norm_bound(h, 2000, seed).best_abs <= norm + 1e-9);
  }
}

TEST_CASE("influence report") {
  SUBCASE("X0") {
    const InfluenceReport r = influence_report(parse_hamiltonian("1 X0"));
    CHECK(r.influences[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.influences[1] == 0.0);
  }
  SUBCASE("Y0") {
    const InfluenceReport r = influence_report(parse_hamiltonian("1 Y0"));
    CHECK(r.influences[0] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.influences[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    CHECK(r.i_max == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
  }
  SUBCASE("Z0 Z1") {
    const InfluenceReport r = influence_report(parse_hamiltonian("1 Z0 Z1"));
    double total = 0.0;
    for (double v : r.influences) total += v;
    CHECK(total == doctest::Approx(2.0 / 9.0).epsilon(1e-14));
  }
}

TEST_CASE("default sample count is 3^k * 1000") {
  CHECK(default_sample_count(complete_zz(4)) == 9000);
  CHECK(default_sample_count(parse_hamiltonian("1 X0 Y1 Z2")) == 27000);
}
