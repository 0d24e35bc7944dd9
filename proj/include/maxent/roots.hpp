#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxent/gaussian.hpp"
#include "maxent/polynomial.hpp"
#include "maxent/rational.hpp"

namespace maxent {

using RationalPoly = UniPoly<BigRational>;
using SturmChain = std::vector<RationalPoly>;

/// A closed rational interval holding exactly one real root of the polynomial
/// it was computed for. Rational roots are reported exactly with lo == hi.
struct IsolatingInterval {
  BigRational lo;
  BigRational hi;
  std::optional<BigRational> exact;

  bool operator==(const IsolatingInterval&) const = default;
};

/// f = content * primitive, primitive has coprime integer coefficients and a
/// positive leading coefficient.
struct PrimitiveForm {
  BigRational content;
  RationalPoly primitive;
};

/// Throws DomainError("cannot normalize complex polynomial") when a
/// coefficient has a nonzero imaginary part.
PrimitiveForm primitive_form(const UniPoly<GaussianRational>& f);
PrimitiveForm primitive_form(const RationalPoly& f);

RationalPoly primitive_part(const UniPoly<GaussianRational>& f);
RationalPoly primitive_part(const RationalPoly& f);

/// Real-coefficient view of a polynomial whose coefficients are all real.
RationalPoly real_part_poly(const UniPoly<GaussianRational>& f);

/// f, f', then negated remainders down to the last nonzero one.
/// Throws DomainError("undefined Sturm chain") on the zero polynomial.
SturmChain sturm_sequence(const RationalPoly& f);

/// Sign variations of the chain evaluated at x (zeros skipped).
int sign_variations(const SturmChain& chain, const BigRational& x);

/// Number of distinct real roots of chain[0] in the half-open interval (a, b].
int count_real_roots(const SturmChain& chain, const BigRational& a, const BigRational& b);

/// 1 + max |a_k / a_n|; every complex root has modulus strictly below it.
BigRational cauchy_bound(const RationalPoly& f);

/// Isolates every distinct real root of f in ascending order. Works on the
/// squarefree part; rational roots are detected exactly. Throws DomainError on
/// the zero polynomial.
std::vector<IsolatingInterval> isolate_real_roots(const RationalPoly& f);

/// Keeps only roots >= 0, tightening any interval that straddles zero.
std::vector<IsolatingInterval> nonnegative_roots(const RationalPoly& f,
                                                 const std::vector<IsolatingInterval>& roots);

std::string to_string(const IsolatingInterval& iv);

}  // namespace maxent
