#pragma once

#include <complex>
#include <string>
#include <string_view>

#include "maxent/rational.hpp"

namespace maxent {

/// Exact complex scalar re + im*i over BigRational.
class GaussianRational {
 public:
  GaussianRational() = default;
  GaussianRational(int v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(BigRational re) : re_(std::move(re)) {}  // NOLINT
  GaussianRational(BigRational re, BigRational im) : re_(std::move(re)), im_(std::move(im)) {}

  /// Parses the scalar grammar
  ///   GAUSS := RATIONAL | [RATIONAL ('+'|'-')] RATIONAL 'i'
  /// Throws ParseError.
  static GaussianRational parse(std::string_view text);

  /// Canonical text; parse(to_string()) == *this and the text of a canonical
  /// input is reproduced byte for byte.
  std::string to_string() const;

  const BigRational& re() const { return re_; }
  const BigRational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }

  GaussianRational conj() const { return {re_, -im_}; }
  /// |z|^2
  BigRational norm() const { return re_ * re_ + im_ * im_; }
  std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  /// Throws DomainError on zero divisor.
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational&, const GaussianRational&) = default;

 private:
  BigRational re_;
  BigRational im_;
};

inline GaussianRational conj(const GaussianRational& z) { return z.conj(); }
inline bool is_zero(const GaussianRational& z) { return z.is_zero(); }
inline GaussianRational exact_div(const GaussianRational& a, const GaussianRational& b) {
  return a / b;
}

}  // namespace maxent
