#include "maxent/polynomial.hpp"

namespace maxent {

CoefficientText coefficient_text(const BigRational& c) {
  CoefficientText t;
  t.negative = c.sign() < 0;
  const BigRational mag = c.abs();
  t.unit = mag == BigRational(1);
  t.body = mag.to_string();
  t.compound = false;
  return t;
}

CoefficientText coefficient_text(const GaussianRational& c) {
  if (c.is_real()) return coefficient_text(c.re());
  if (c.re().is_zero()) {
    CoefficientText t = coefficient_text(c.im());
    t.unit = false;
    t.body += "i";
    return t;
  }
  CoefficientText t;
  t.body = c.to_string();
  t.compound = true;
  return t;
}

}  // namespace maxent
