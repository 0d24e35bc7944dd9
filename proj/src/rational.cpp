#include "maxent/rational.hpp"

#include <cctype>

#include "maxent/errors.hpp"

namespace maxent {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

BigRational::BigRational(const mpz_class& num, const mpz_class& den) : q_(num, den) {
  if (den == 0) throw DomainError("zero denominator");
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw ParseError("malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return BigRational(n, d);
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  return BigRational(mpq_class(1 / q_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DomainError("division by zero");
  q_ /= o.q_;
  return *this;
}

BigRational BigRational::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return BigRational(n, d);
}

BigRational conj(const BigRational& x) { return x; }
bool is_zero(const BigRational& x) { return x.is_zero(); }
BigRational exact_div(const BigRational& a, const BigRational& b) { return a / b; }

}  // namespace maxent
