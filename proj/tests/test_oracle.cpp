#include <cmath>
#include <limits>

#include "doctest.h"
#include "maxent/detector.hpp"
#include "maxent/errors.hpp"
#include "maxent/oracle.hpp"
#include "maxent/random.hpp"
#include "support.hpp"

using namespace maxent;
using oracle::ComplexMatrix;
using oracle::RealMatrix;

TEST_CASE("Jacobi on small symmetric matrices") {
  const auto e = oracle::jacobi_eigenvalues(RealMatrix({{2, 1}, {1, 2}}));
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(e[1] == doctest::Approx(1.0).epsilon(1e-12));

  const auto diag = oracle::jacobi_eigenvalues(RealMatrix({{1, 0, 0}, {0, 5, 0}, {0, 0, -2}}));
  CHECK(diag == std::vector<double>{5, 1, -2});

  CHECK_THROWS_AS(oracle::jacobi_eigenvalues(RealMatrix({{1, 2}, {0, 1}})), DomainError);
  CHECK_THROWS_AS(oracle::jacobi_eigenvalues(RealMatrix({{1, std::nan("")}, {std::nan(""), 1}})), DomainError);
}

TEST_CASE("Jacobi preserves trace and Frobenius norm") {
  Lcg64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = rng.next() % 8 + 1;
    RealMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = static_cast<double>(rng.bits(10)) / 100.0 - 5.0;
    double trace = 0.0, frob = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += m(i, i);
    for (double x : m.data()) frob += x * x;
    const auto e = oracle::jacobi_eigenvalues(m);
    double etrace = 0.0, esq = 0.0;
    for (double x : e) {
      etrace += x;
      esq += x * x;
    }
    CHECK(etrace == doctest::Approx(trace).epsilon(1e-9));
    CHECK(esq == doctest::Approx(frob).epsilon(1e-9));
    CHECK(std::is_sorted(e.rbegin(), e.rend()));
  }
}

TEST_CASE("Hermitian embedding reports each eigenvalue once") {
  using C = std::complex<double>;
  // [[2, i], [-i, 2]] has eigenvalues 3 and 1.
  const auto e = oracle::hermitian_eigenvalues(ComplexMatrix({{C(2, 0), C(0, 1)}, {C(0, -1), C(2, 0)}}));
  REQUIRE(e.size() == 2);
  CHECK(e[0] == doctest::Approx(3.0));
  CHECK(e[1] == doctest::Approx(1.0));
}

TEST_CASE("Bell and product spectra") {
  const auto bell = oracle::schmidt_spectrum(testing::load_state("bell_phi_minus.state"));
  CHECK(bell.lambdas[0] == doctest::Approx(0.5));
  CHECK(bell.lambdas[1] == doctest::Approx(0.5));
  CHECK(bell.schmidt[0] == doctest::Approx(std::sqrt(0.5)));
  CHECK(bell.trace_scale == doctest::Approx(2.0));
  const auto er = oracle::entropy_report(bell);
  CHECK(er.von_neumann == doctest::Approx(std::log(2.0)));
  CHECK(er.normalized == doctest::Approx(1.0));
  CHECK(er.linear_entropy == doctest::Approx(0.5));

  const auto prod = oracle::schmidt_spectrum(testing::load_state("product.state"));
  CHECK(prod.lambdas[0] == doctest::Approx(1.0));
  CHECK(prod.lambdas[1] == doctest::Approx(0.0));
  CHECK(oracle::entropy_report(prod).von_neumann == doctest::Approx(0.0));

  CHECK_THROWS_AS(oracle::schmidt_spectrum(testing::load_state("five_p.state")), ModeError);
}

TEST_CASE("oracle matches exact sequences on random states") {
  Lcg64 rng(1234);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t da = rng.next() % 5 + 2, db = rng.next() % 5 + 2;
    const BipartiteState s = random_state(rng, da, db, 12);
    const Verdict v = is_maximally_entangled(s);
    const auto spec = oracle::schmidt_spectrum(s);
    const std::size_t d = v.d_used;
    for (std::size_t q = 1; q <= d; ++q) {
      const double exact = v.sequence[q - 1].to_double();
      const double approx = oracle::numeric_subdiscriminant(spec, q, spec.trace_scale);
      // D_1 loses relative precision on clustered spectra; the higher ones
      // are well conditioned.
      if (q + 1 >= d) {
        CHECK(approx == doctest::Approx(exact).epsilon(1e-8));
      }
    }
    if (oracle::min_cluster_gap(spec.lambdas) > 1e-3) {
      CHECK(oracle::distinct_count(spec.lambdas) == v.degeneracy);
    }
  }
}

TEST_CASE("oracle on the five-level state at fixed p") {
  const auto state = testing::load_state("five_p.state").specialize(BigRational(2));
  const auto spec = oracle::schmidt_spectrum(state);
  double sum = 0.0;
  for (double l : spec.lambdas) sum += l;
  CHECK(sum == doctest::Approx(1.0));
  CHECK(spec.trace_scale == doctest::Approx(23.0));
  // D_4 at p = 2: 2 * (2*16 - 14*4 + 197) = 346.
  CHECK(oracle::numeric_subdiscriminant(spec, 4, spec.trace_scale) == doctest::Approx(346.0).epsilon(1e-10));
}

TEST_CASE("clustering helpers") {
  CHECK(oracle::distinct_count({0.5, 0.5 + 1e-12, 0.0}) == 2);
  CHECK(oracle::distinct_count({}) == 0);
  CHECK(oracle::min_cluster_gap({0.1, 0.4, 0.5}) == doctest::Approx(0.1));
  CHECK(oracle::min_cluster_gap({0.5, 0.5}) == std::numeric_limits<double>::infinity());
  oracle::SchmidtSpectrum big;
  big.lambdas.assign(13, 1.0 / 13);
  CHECK_THROWS_AS(oracle::numeric_subdiscriminant(big, 1, 1.0), DomainError);
}
