#include "maxent/roots.hpp"

#include <algorithm>

namespace maxent {

namespace {

BigRational ceil_integer(const BigRational& x) {
  mpz_class q;
  mpz_cdiv_q(q.get_mpz_t(), x.raw().get_num_mpz_t(), x.raw().get_den_mpz_t());
  return BigRational(q);
}

int sign_of(const RationalPoly& f, const BigRational& x) { return f.evaluate(x).sign(); }

RationalPoly squarefree_primitive(const RationalPoly& f) {
  const RationalPoly g = gcd(f, f.derivative());
  return primitive_part(g.degree() > 0 ? exact_div(f, g) : f);
}

class Isolator {
 public:
  explicit Isolator(RationalPoly g)
      : g_(std::move(g)), chain_(sturm_sequence(g_)), lead_(g_.leading().abs()) {}

  std::vector<IsolatingInterval> run() {
    if (g_.degree() < 1) return {};
    const BigRational bound = ceil_integer(cauchy_bound(g_));
    const BigRational lo = -bound;
    split(lo, bound, count_real_roots(chain_, lo, bound));
    return std::move(out_);
  }

 private:
  void split(const BigRational& lo, const BigRational& hi, int count) {
    if (count == 0) return;
    if (count == 1) {
      out_.push_back(refine(lo, hi));
      return;
    }
    const BigRational mid = (lo + hi) / BigRational(2);
    const int left = count_real_roots(chain_, lo, mid);
    split(lo, mid, left);
    split(mid, hi, count - left);
  }

  // Root is the unique one in (lo, hi].
  IsolatingInterval refine(BigRational lo, BigRational hi) {
    const BigRational two(2);
    for (;;) {
      if (sign_of(g_, hi) == 0) return {hi, hi, hi};
      // A rational root p/q of a primitive integer polynomial has q | lead,
      // so lead * root is an integer. Once the interval is shorter than
      // 1/lead it holds at most one such candidate.
      if ((hi - lo) * lead_ < BigRational(1) && sign_of(g_, lo) != 0) {
        const BigRational k = ceil_integer(lo * lead_);
        if (k <= hi * lead_) {
          const BigRational r = k / lead_;
          if (sign_of(g_, r) == 0) return {r, r, r};
        }
        return {lo, hi, std::nullopt};
      }
      const BigRational mid = (lo + hi) / two;
      if (count_real_roots(chain_, lo, mid) == 1) {
        hi = mid;
      } else {
        lo = mid;
      }
    }
  }

  RationalPoly g_;
  SturmChain chain_;
  BigRational lead_;
  std::vector<IsolatingInterval> out_;
};

}  // namespace

PrimitiveForm primitive_form(const UniPoly<GaussianRational>& f) {
  return primitive_form(real_part_poly(f));
}

RationalPoly real_part_poly(const UniPoly<GaussianRational>& f) {
  std::vector<BigRational> c;
  c.reserve(f.coefficients().size());
  for (const auto& z : f.coefficients()) {
    if (!z.is_real()) throw DomainError("cannot normalize complex polynomial");
    c.push_back(z.re());
  }
  return RationalPoly(std::move(c), f.var());
}

PrimitiveForm primitive_form(const RationalPoly& f) {
  if (f.is_zero()) return {BigRational(0), f};
  mpz_class den_lcm = 1;
  for (const auto& c : f.coefficients()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.raw().get_den_mpz_t());
  }
  mpz_class num_gcd = 0;
  for (const auto& c : f.coefficients()) {
    const mpz_class scaled = c.numerator() * (den_lcm / c.denominator());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), scaled.get_mpz_t());
  }
  BigRational content(num_gcd, den_lcm);
  if (f.leading().sign() < 0) content = -content;
  return {content, f.scaled(content.inverse())};
}

RationalPoly primitive_part(const UniPoly<GaussianRational>& f) { return primitive_form(f).primitive; }
RationalPoly primitive_part(const RationalPoly& f) { return primitive_form(f).primitive; }

SturmChain sturm_sequence(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("undefined Sturm chain");
  SturmChain chain{f};
  RationalPoly next = f.derivative();
  while (!next.is_zero()) {
    chain.push_back(next);
    const auto& a = chain[chain.size() - 2];
    next = -divmod(a, chain.back()).second;
  }
  return chain;
}

int sign_variations(const SturmChain& chain, const BigRational& x) {
  int variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sign_of(p, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

int count_real_roots(const SturmChain& chain, const BigRational& a, const BigRational& b) {
  if (b < a) throw DomainError("empty interval");
  return sign_variations(chain, a) - sign_variations(chain, b);
}

BigRational cauchy_bound(const RationalPoly& f) {
  if (f.degree() < 1) return BigRational(1);
  const BigRational lead = f.leading().abs();
  BigRational best(0);
  for (int k = 0; k < f.degree(); ++k) {
    best = std::max(best, f.coefficients()[static_cast<std::size_t>(k)].abs() / lead);
  }
  return BigRational(1) + best;
}

std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f) {
  if (f.is_zero()) throw DomainError("cannot isolate roots of the zero polynomial");
  return Isolator(squarefree_primitive(f)).run();
}

std::vector<IsolatingInterval> nonnegative_roots(const RationalPoly& f,
                                                 const std::vector<IsolatingInterval>& roots) {
  const BigRational zero(0);
  std::vector<IsolatingInterval> kept;
  SturmChain chain;
  for (const auto& iv : roots) {
    if (iv.exact) {
      if (iv.exact->sign() >= 0) kept.push_back(iv);
      continue;
    }
    if (iv.lo >= zero) {
      kept.push_back(iv);
      continue;
    }
    if (iv.hi <= zero) continue;
    // Straddles zero; zero itself is not a root (it would have been exact).
    if (chain.empty()) chain = sturm_sequence(squarefree_primitive(f));
    if (count_real_roots(chain, iv.lo, zero) == 0) kept.push_back({zero, iv.hi, std::nullopt});
  }
  return kept;
}

std::string to_string(const IsolatingInterval& iv) {
  if (iv.exact) return iv.exact->to_string();
  return "[" + iv.lo.to_string() + ", " + iv.hi.to_string() + "]";
}

}  // namespace maxent
