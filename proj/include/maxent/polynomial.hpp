#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "maxent/errors.hpp"
#include "maxent/gaussian.hpp"
#include "maxent/rational.hpp"

namespace maxent {

template <class R>
class UniPoly;
template <class R>
bool is_zero(const UniPoly<R>& f);
template <class R>
UniPoly<R> conj(const UniPoly<R>& f);

/// Dense univariate polynomial over an exact ring R. Coefficient k multiplies
/// var^k. Trailing zeros are stripped on every mutation, so the zero
/// polynomial has no coefficients and degree -1.
///
/// R must be default-constructible to zero, constructible from int, and
/// provide +, -, *, unary -, ==, is_zero(R) and conj(R).
template <class R>
class UniPoly {
 public:
  using coefficient_type = R;

  UniPoly() = default;
  explicit UniPoly(std::string var) : var_(std::move(var)) {}
  UniPoly(std::vector<R> coeffs, std::string var = "x") : coeffs_(std::move(coeffs)), var_(std::move(var)) {
    normalize();
  }
  /// Constant polynomial; implicit so that scalars promote in mixed arithmetic.
  UniPoly(R c) : var_("x") {  // NOLINT(google-explicit-constructor)
    if (!maxent::is_zero(c)) coeffs_.push_back(std::move(c));
  }
  UniPoly(int c) : UniPoly(R(c)) {}  // NOLINT(google-explicit-constructor)

  /// c * var^k
  static UniPoly monomial(R c, std::size_t k, std::string var) {
    std::vector<R> v(k + 1);
    v[k] = std::move(c);
    return UniPoly(std::move(v), std::move(var));
  }

  const std::string& var() const { return var_; }
  UniPoly with_var(std::string v) const {
    UniPoly out = *this;
    out.var_ = std::move(v);
    return out;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<R>& coefficients() const { return coeffs_; }
  /// Coefficient of var^k; zero beyond the degree.
  R coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : R{}; }
  const R& leading() const {
    if (coeffs_.empty()) throw DomainError("leading coefficient of zero polynomial");
    return coeffs_.back();
  }

  template <class X>
  X evaluate(const X& at) const {
    X acc{};
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      acc = acc * at + X(coeffs_[k]);
    }
    return acc;
  }

  UniPoly derivative() const {
    std::vector<R> d;
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      d.push_back(coeffs_[k] * R(static_cast<int>(k)));
    }
    return UniPoly(std::move(d), var_);
  }

  UniPoly conjugate() const {
    std::vector<R> c;
    c.reserve(coeffs_.size());
    for (const auto& a : coeffs_) c.push_back(conj(a));
    return UniPoly(std::move(c), var_);
  }

  UniPoly operator-() const {
    UniPoly out = *this;
    for (auto& a : out.coeffs_) a = -a;
    return out;
  }

  UniPoly& operator+=(const UniPoly& o) {
    adopt_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }
  UniPoly& operator-=(const UniPoly& o) {
    adopt_var(o);
    if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }
  UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly out(a.var_ == "x" && b.var_ != "x" ? b.var_ : a.var_);
    if (a.is_zero() || b.is_zero()) return out;
    std::vector<R> c(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (maxent::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        c[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.coeffs_ = std::move(c);
    out.normalize();
    return out;
  }
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Every coefficient multiplied by a scalar of the coefficient ring.
  UniPoly scaled(const R& c) const {
    UniPoly out = *this;
    for (auto& a : out.coeffs_) a *= c;
    out.normalize();
    return out;
  }

  /// f(var) -> f(var^2) inverse: keeps the even part as a polynomial in var^2.
  /// Caller must have checked is_even().
  UniPoly even_to_square_variable(std::string var) const {
    std::vector<R> c;
    for (std::size_t k = 0; k < coeffs_.size(); k += 2) c.push_back(coeffs_[k]);
    return UniPoly(std::move(c), std::move(var));
  }
  bool is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2) {
      if (!maxent::is_zero(coeffs_[k])) return false;
    }
    return true;
  }

 private:
  void normalize() {
    while (!coeffs_.empty() && maxent::is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  // Constants built from scalars carry the placeholder name "x"; the first
  // named operand wins.
  void adopt_var(const UniPoly& o) {
    if (var_ == "x" && o.var_ != "x" && is_constant()) var_ = o.var_;
  }

  std::vector<R> coeffs_;
  std::string var_ = "x";
};

template <class R>
bool is_zero(const UniPoly<R>& f) {
  return f.is_zero();
}

template <class R>
UniPoly<R> conj(const UniPoly<R>& f) {
  return f.conjugate();
}

/// Quotient and remainder of a by b over a coefficient field.
template <class F>
std::pair<UniPoly<F>, UniPoly<F>> divmod(const UniPoly<F>& a, const UniPoly<F>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const int db = b.degree();
  std::vector<F> rem = a.coefficients();
  std::vector<F> quo(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  const F lead = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const auto ku = static_cast<std::size_t>(k);
    if (is_zero(rem[ku])) continue;
    F factor = rem[ku] / lead;
    for (int j = 0; j <= db; ++j) {
      rem[ku - static_cast<std::size_t>(db - j)] -= factor * b.coefficients()[static_cast<std::size_t>(j)];
    }
    quo[static_cast<std::size_t>(k - db)] = std::move(factor);
  }
  return {UniPoly<F>(std::move(quo), a.var()), UniPoly<F>(std::move(rem), a.var())};
}

/// a / b where b is known to divide a exactly over a coefficient field.
/// Throws DomainError if the division leaves a remainder.
template <class F>
UniPoly<F> exact_div(const UniPoly<F>& a, const UniPoly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw DomainError("inexact polynomial division");
  return q;
}

/// Monic gcd over a coefficient field.
template <class F>
UniPoly<F> gcd(UniPoly<F> a, UniPoly<F> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(F(1) / a.leading());
}

// ---- text formatting ----

struct CoefficientText {
  bool negative = false;   // printed with a leading minus / " - " separator
  bool unit = false;       // magnitude is exactly one
  bool compound = false;   // needs parentheses before a power of the variable
  std::string body;        // magnitude text
};

CoefficientText coefficient_text(const BigRational& c);
CoefficientText coefficient_text(const GaussianRational& c);

template <class R>
std::string to_string(const UniPoly<R>& f);

template <class R>
CoefficientText coefficient_text(const UniPoly<R>& c) {
  if (c.is_constant()) return coefficient_text(c.coeff(0));
  CoefficientText t;
  const CoefficientText lead = coefficient_text(c.leading());
  t.negative = lead.negative;
  t.body = to_string(t.negative ? -c : c);
  t.compound = true;
  return t;
}

/// Human-readable form, e.g. "2p^4 - 14p^2 + 197" or "x^2 - (p^2 + 19)x".
template <class R>
std::string to_string(const UniPoly<R>& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = f.coefficients().size(); k-- > 0;) {
    const R& c = f.coefficients()[k];
    if (is_zero(c)) continue;
    const CoefficientText t = coefficient_text(c);
    if (first) {
      if (t.negative) out += '-';
    } else {
      out += t.negative ? " - " : " + ";
    }
    first = false;
    if (k == 0) {
      out += t.compound ? "(" + t.body + ")" : t.body;
      continue;
    }
    if (!t.unit) out += t.compound ? "(" + t.body + ")" : t.body;
    out += f.var();
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace maxent
