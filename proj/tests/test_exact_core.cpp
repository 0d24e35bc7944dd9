#include <string>
#include <vector>

#include "doctest.h"
#include "maxent/errors.hpp"
#include "maxent/matrix.hpp"
#include "maxent/polynomial.hpp"
#include "maxent/random.hpp"
#include "maxent/rational.hpp"
#include "maxent/roots.hpp"
#include "support.hpp"

using namespace maxent;

namespace {

BigRational q(long n, long d = 1) { return BigRational(mpz_class(n), mpz_class(d)); }

RationalPoly poly(std::vector<long> ascending, const std::string& var = "x") {
  std::vector<BigRational> c;
  for (long v : ascending) c.emplace_back(v);
  return RationalPoly(std::move(c), var);
}

BigRational small_rational(Lcg64& rng) {
  const long num = static_cast<long>(rng.next() % 41) - 20;
  const long den = static_cast<long>(rng.next() % 9) + 1;
  return q(num, den);
}

}  // namespace

TEST_CASE("BigRational is stored in lowest terms") {
  const BigRational a = q(6, -4);
  CHECK(a.numerator() == -3);
  CHECK(a.denominator() == 2);
  CHECK(a == q(-3, 2));
  CHECK(a.to_string() == "-3/2");
  CHECK((q(1, 3) + q(1, 6)) == q(1, 2));
  CHECK(q(4, 2).is_integer());
  CHECK_THROWS_AS(q(1, 0), DomainError);
  CHECK_THROWS_AS(q(1) / q(0), DomainError);
}

TEST_CASE("rational text grammar") {
  CHECK(BigRational::parse("-12/8") == q(-3, 2));
  CHECK(BigRational::parse("7") == q(7));
  for (const char* bad : {"", "-", "1/", "/2", "1.5", "--1", "+1", "1/0", "a"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(BigRational::parse(bad), ParseError);
  }
}

TEST_CASE("Gaussian scalar grammar round-trips canonical text byte for byte") {
  for (const char* text : {"0", "3", "-3/2", "1i", "-1i", "-3/2i", "1/2+3/4i", "-5-2i", "7/3-1/9i"}) {
    CAPTURE(text);
    CHECK(GaussianRational::parse(text).to_string() == text);
  }
  CHECK(GaussianRational::parse("2-1i") == GaussianRational(q(2), q(-1)));
  CHECK(GaussianRational::parse("4/2+0i") == GaussianRational(q(2)));
  for (const char* bad : {"i", "2-i", "1+-2i", "1+2", "1i+2", "1++2i", "3/0i"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(GaussianRational::parse(bad), ParseError);
  }

  Lcg64 rng(11);
  for (int k = 0; k < 500; ++k) {
    const GaussianRational z = random_gaussian(rng, 20);
    const GaussianRational real_only(z.re());
    const GaussianRational imag_only(q(0), z.im());
    for (const auto& w : {z, real_only, imag_only}) {
      CHECK(GaussianRational::parse(w.to_string()) == w);
    }
  }
}

TEST_CASE("field identities hold exactly on random triples") {
  Lcg64 rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const BigRational a = random_rational(rng, 24);
    const BigRational b = random_rational(rng, 24);
    const BigRational c = random_rational(rng, 24);
    REQUIRE(((a + b) * c) == (a * c + b * c));
    REQUIRE(((a / b) * b) == a);

    const GaussianRational x = random_gaussian(rng, 24);
    const GaussianRational y = random_gaussian(rng, 24);
    const GaussianRational z = random_gaussian(rng, 24);
    REQUIRE(((x + y) * z) == (x * z + y * z));
    REQUIRE(((x / y) * y) == x);
    REQUIRE(x.conj().conj() == x);
    const GaussianRational n = x * x.conj();
    REQUIRE(n.is_real());
    REQUIRE(n.re().sign() >= 0);
    REQUIRE(n.re() == x.norm());
  }
}

TEST_CASE("polynomial arithmetic and formatting") {
  const RationalPoly f = poly({-2, 0, 1});
  const RationalPoly g = poly({1, 1});
  CHECK((f * g).degree() == 3);
  CHECK(to_string(f) == "x^2 - 2");
  CHECK(to_string(poly({197, 0, -14, 0, 2}, "p")) == "2p^4 - 14p^2 + 197");
  CHECK(to_string(poly({0, -1})) == "-x");
  CHECK(to_string(RationalPoly()) == "0");
  CHECK(poly({1, 2, 0, 0}).degree() == 1);

  const auto [quo, rem] = divmod(poly({-1, 0, 0, 1}), poly({-1, 1}));
  CHECK(quo == poly({1, 1, 1}));
  CHECK(rem.is_zero());
  CHECK(gcd(poly({-1, 0, 1}), poly({1, 2, 1})) == poly({1, 1}));
  CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({1, 1})), DomainError);

  const UniPoly<GaussianRational> complex_coeff({GaussianRational(q(1), q(2)), GaussianRational(q(0), q(-3))}, "p");
  CHECK(to_string(complex_coeff) == "-3ip + (1+2i)");

  Lcg64 rng(5);
  for (int k = 0; k < 200; ++k) {
    std::vector<BigRational> a(rng.next() % 6 + 1), b(rng.next() % 6 + 1);
    for (auto& x : a) x = small_rational(rng);
    for (auto& x : b) x = small_rational(rng);
    const RationalPoly fa(a), fb(b);
    if (fa.is_zero() || fb.is_zero()) continue;
    REQUIRE((fa * fb).degree() == fa.degree() + fb.degree());
  }
}

TEST_CASE("bareiss_det examples") {
  CHECK(bareiss_det(Matrix<BigRational>({{1, 2}, {3, 4}})) == q(-2));
  CHECK(bareiss_det(Matrix<BigRational>::identity(5)) == q(1));
  CHECK(bareiss_det(Matrix<BigRational>({{0, 1}, {1, 0}})) == q(-1));
  CHECK(bareiss_det(Matrix<BigRational>({{0, 1}, {0, 2}})) == q(0));
  CHECK_THROWS_AS(bareiss_det(Matrix<BigRational>()), DomainError);

  // Power sums of the five-level reduced density at p = 1, by direct
  // integer multiplication.
  const long rho[5][5] = {{5, 1, 1, 1, 1}, {1, 1, 1, 1, 1}, {1, 1, 2, 1, 1}, {1, 1, 1, 10, 1}, {1, 1, 1, 1, 2}};
  long s1 = 0, s2 = 0;
  for (int i = 0; i < 5; ++i) {
    s1 += rho[i][i];
    for (int k = 0; k < 5; ++k) s2 += rho[i][k] * rho[k][i];
  }
  REQUIRE(s1 == 20);
  REQUIRE(s2 == 154);
  CHECK(5 * s2 - s1 * s1 == 370);
  CHECK(bareiss_det(Matrix<BigRational>({{5, 20}, {20, 154}})) == q(370));
}

TEST_CASE("bareiss_det agrees with cofactor expansion") {
  Lcg64 rng(99);
  for (int k = 0; k < 300; ++k) {
    const std::size_t n = 3 + k % 2;
    // Small range so that zero pivots and singular matrices occur.
    const auto m = testing::random_integer_matrix(rng, n, k % 3 == 0 ? 1 : 9);
    REQUIRE(bareiss_det(m) == testing::cofactor_det(m));
  }
}

TEST_CASE("bareiss_det is multiplicative on rational matrices") {
  Lcg64 rng(7);
  for (int k = 0; k < 100; ++k) {
    Matrix<BigRational> a(4, 4), b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) {
        a(i, j) = small_rational(rng);
        b(i, j) = small_rational(rng);
      }
    REQUIRE(bareiss_det(a * b) == bareiss_det(a) * bareiss_det(b));
  }
}

TEST_CASE("bareiss_det over polynomial entries") {
  Lcg64 rng(3);
  for (int k = 0; k < 30; ++k) {
    Matrix<UniPoly<GaussianRational>> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        std::vector<GaussianRational> c(rng.next() % 3 + 1);
        for (auto& x : c) x = GaussianRational(small_rational(rng), small_rational(rng));
        m(i, j) = UniPoly<GaussianRational>(c, "p");
      }
    REQUIRE(bareiss_det(m) == testing::cofactor_det(m));
  }
}

TEST_CASE("sturm_sequence counts distinct roots in (a, b]") {
  CHECK(count_real_roots(sturm_sequence(poly({-2, 0, 1})), q(-2), q(2)) == 2);
  CHECK(count_real_roots(sturm_sequence(poly({1, 0, 1})), q(-10), q(10)) == 0);
  const RationalPoly quartic = poly({197, 0, -14, 0, 2}, "p");
  const BigRational b = cauchy_bound(quartic);
  CHECK(count_real_roots(sturm_sequence(quartic), -b, b) == 0);
  // Half-open: root at b counted, root at a not.
  CHECK(count_real_roots(sturm_sequence(poly({-1, 1})), q(0), q(1)) == 1);
  CHECK(count_real_roots(sturm_sequence(poly({-1, 1})), q(1), q(2)) == 0);
  // Repeated roots are counted once.
  CHECK(count_real_roots(sturm_sequence(poly({9, -6, 1})), q(0), q(5)) == 1);
  CHECK_THROWS_WITH_AS(sturm_sequence(RationalPoly()), "undefined Sturm chain", DomainError);
}

TEST_CASE("isolate_real_roots examples") {
  const auto roots2 = isolate_real_roots(poly({-2, 0, 1}));
  REQUIRE(roots2.size() == 2);
  // Oracle: f changes sign on the integer grid exactly between -2,-1 and 1,2.
  const RationalPoly f = poly({-2, 0, 1});
  int grid_changes = 0;
  for (long x = -3; x < 3; ++x) {
    if (f.evaluate(q(x)).sign() * f.evaluate(q(x + 1)).sign() < 0) ++grid_changes;
  }
  CHECK(grid_changes == 2);
  for (const auto& iv : roots2) {
    CHECK_FALSE(iv.exact.has_value());
    CHECK(f.evaluate(iv.lo).sign() * f.evaluate(iv.hi).sign() < 0);
  }
  CHECK(roots2[0].hi < roots2[1].lo);
  CHECK(roots2[0].lo >= q(-2));
  CHECK(roots2[1].hi <= q(2));

  const auto double_root = isolate_real_roots(poly({9, -6, 1}));
  REQUIRE(double_root.size() == 1);
  REQUIRE(double_root[0].exact.has_value());
  CHECK(*double_root[0].exact == q(3));
  CHECK(double_root[0].lo == q(3));

  CHECK(isolate_real_roots(poly({197, 0, -14, 0, 2}, "p")).empty());
  CHECK(isolate_real_roots(poly({5})).empty());
  CHECK_THROWS_AS(isolate_real_roots(RationalPoly()), DomainError);
}

TEST_CASE("isolate_real_roots recovers planted rational roots exactly") {
  Lcg64 rng(17);
  for (int trial = 0; trial < 150; ++trial) {
    const int count = static_cast<int>(rng.next() % 5) + 1;
    std::vector<BigRational> planted;
    RationalPoly f = poly({1});
    for (int k = 0; k < count; ++k) {
      const long num = static_cast<long>(rng.next() % 21) - 10;
      const long den = static_cast<long>(rng.next() % 6) + 1;
      const BigRational r = q(num, den);
      // (den x - num), possibly repeated
      f = f * RationalPoly({BigRational(-num), BigRational(den)});
      if (std::find(planted.begin(), planted.end(), r) == planted.end()) planted.push_back(r);
    }
    if (trial % 2 == 0) f = f * poly({1, 0, 1});   // no real roots
    if (trial % 3 == 0) f = f * poly({-3, 0, 1});  // two irrational roots
    std::sort(planted.begin(), planted.end());

    const auto roots = isolate_real_roots(f);
    std::vector<BigRational> exact;
    int irrational = 0;
    for (const auto& iv : roots) {
      REQUIRE(iv.lo <= iv.hi);
      if (iv.exact) {
        REQUIRE(f.evaluate(*iv.exact).is_zero());
        exact.push_back(*iv.exact);
      } else {
        ++irrational;
      }
    }
    CHECK(exact == planted);
    CHECK(irrational == (trial % 3 == 0 ? 2 : 0));
    for (std::size_t k = 1; k < roots.size(); ++k) REQUIRE(roots[k - 1].hi < roots[k].lo);
  }
}

TEST_CASE("Sturm total equals the number of isolating intervals") {
  Lcg64 rng(23);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<BigRational> c(rng.next() % 7 + 2);
    for (auto& x : c) x = BigRational(static_cast<long>(rng.next() % 21) - 10);
    RationalPoly f(c);
    if (f.degree() < 1) continue;
    const RationalPoly g = gcd(f, f.derivative());
    if (g.degree() > 0) f = exact_div(f, g);
    const BigRational b = cauchy_bound(f);
    CHECK(count_real_roots(sturm_sequence(f), -b, b) == static_cast<int>(isolate_real_roots(f).size()));
  }
}

TEST_CASE("nonnegative_roots drops negative roots and clips straddling intervals") {
  // (x + 2)(x^2 - 2)(x - 1/3)
  const RationalPoly f = poly({2, 1}) * poly({-2, 0, 1}) * poly({-1, 3});
  const auto kept = nonnegative_roots(f, isolate_real_roots(f));
  REQUIRE(kept.size() == 2);
  CHECK(*kept[0].exact == q(1, 3));
  CHECK(kept[1].lo > q(1));

  // x^2 - 1/100 straddles zero before refinement.
  const RationalPoly g({q(-1, 100), q(0), q(1)});
  const std::vector<IsolatingInterval> coarse = {{q(-1), q(1, 2), std::nullopt}};
  const auto clipped = nonnegative_roots(g, coarse);
  CHECK(clipped.empty());
  const std::vector<IsolatingInterval> coarse_pos = {{q(-1, 50), q(1), std::nullopt}};
  const auto clipped_pos = nonnegative_roots(g, coarse_pos);
  REQUIRE(clipped_pos.size() == 1);
  CHECK(clipped_pos[0].lo == q(0));
}

TEST_CASE("primitive_part normalizes content and sign") {
  CHECK(primitive_part(poly({394, 0, -28, 0, 4}, "p")) == poly({197, 0, -14, 0, 2}));
  const PrimitiveForm form = primitive_form(poly({394, 0, -28, 0, 4}, "p"));
  CHECK(form.content == q(2));
  CHECK(primitive_part(poly({6, -3})) == poly({-2, 1}));
  CHECK(primitive_form(poly({6, -3})).content == q(-3));
  CHECK(primitive_part(RationalPoly({q(7, 3)})) == poly({1}));
  CHECK(primitive_part(RationalPoly({q(1, 2), q(1, 3)})) == poly({3, 2}));

  const UniPoly<GaussianRational> real_gauss({GaussianRational(q(4)), GaussianRational(q(-6))});
  CHECK(primitive_part(real_gauss) == poly({-2, 3}));
  const UniPoly<GaussianRational> complex({GaussianRational(q(1), q(1)), GaussianRational(q(1))});
  CHECK_THROWS_WITH_AS(primitive_part(complex), "cannot normalize complex polynomial", DomainError);
}
