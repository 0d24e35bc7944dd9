#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace maxent {

/// Arbitrary-precision rational number, always stored in lowest terms with a
/// positive denominator, so structural equality is value equality.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(const mpz_class& num) : q_(num) {}  // NOLINT
  BigRational(const mpz_class& num, const mpz_class& den);
  explicit BigRational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Parses RATIONAL := ['-'] DIGITS ['/' DIGITS]. Throws ParseError.
  static BigRational parse(std::string_view text);

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }
  double to_double() const { return q_.get_d(); }
  std::string to_string() const { return q_.get_str(); }

  BigRational operator-() const { return BigRational(mpq_class(-q_)); }
  BigRational abs() const { return sign() < 0 ? -*this : *this; }
  /// Throws DomainError on zero.
  BigRational inverse() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Integer power, negative exponents allowed for nonzero values.
  BigRational pow(long e) const;

 private:
  mpq_class q_;
};

BigRational conj(const BigRational& x);
bool is_zero(const BigRational& x);
BigRational exact_div(const BigRational& a, const BigRational& b);

}  // namespace maxent
