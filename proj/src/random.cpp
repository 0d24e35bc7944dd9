#include "maxent/random.hpp"

namespace maxent {

namespace {

mpz_class to_mpz(std::uint64_t v) {
  mpz_class out;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return out;
}

}  // namespace

BigRational random_rational(Lcg64& rng, unsigned bits) {
  const bool negative = (rng.next() >> 63) != 0;
  std::uint64_t num = rng.bits(bits);
  std::uint64_t den = rng.bits(bits);
  if (num == 0) num = 1;
  if (den == 0) den = 1;
  mpz_class n = to_mpz(num);
  if (negative) n = -n;
  return BigRational(n, to_mpz(den));
}

GaussianRational random_gaussian(Lcg64& rng, unsigned bits) {
  BigRational re = random_rational(rng, bits);
  BigRational im = random_rational(rng, bits);
  return {std::move(re), std::move(im)};
}

BipartiteState random_state(Lcg64& rng, std::size_t dim_a, std::size_t dim_b, unsigned bits) {
  Matrix<GaussianRational> c(dim_a, dim_b);
  for (std::size_t i = 0; i < dim_a; ++i)
    for (std::size_t j = 0; j < dim_b; ++j) c(i, j) = random_gaussian(rng, bits);
  return BipartiteState::from_scalars(c);
}

}  // namespace maxent
