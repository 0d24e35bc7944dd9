#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "maxent/matrix.hpp"
#include "maxent/polynomial.hpp"
#include "maxent/rational.hpp"
#include "maxent/roots.hpp"
#include "maxent/state.hpp"

namespace maxent {

/// det(x I - rho), monic in x, coefficients polynomial in the state parameter.
using CharPoly = UniPoly<ParamPoly>;

/// Characteristic polynomial by the Faddeev-LeVerrier recurrence.
CharPoly characteristic_polynomial(const ReducedDensity& rho);

/// Same polynomial from Newton's identities on the power sums s_1..s_d.
CharPoly characteristic_polynomial_from_power_sums(const PowerSums& sums, std::size_t dim);

/// D_1..D_d with D_q = det H_{d-q+1}, H_k(i, j) = s_{i+j}. D_1 is the
/// discriminant, D_{d-1} = sum_{i<j} (l_i - l_j)^2, D_d = d.
class SubdiscriminantSequence {
 public:
  SubdiscriminantSequence(std::vector<ParamPoly> values) : values_(std::move(values)) {}  // NOLINT

  std::size_t dim() const { return values_.size(); }
  /// D_q for 1 <= q <= d.
  const ParamPoly& at(std::size_t q) const;
  const std::vector<ParamPoly>& values() const { return values_; }
  bool is_parametric() const;
  /// Exact rational values; throws ModeError when parametric.
  std::vector<BigRational> scalar_values() const;

 private:
  std::vector<ParamPoly> values_;
};

/// Needs s_0..s_{2d-2}; the dimension is taken from s_0.
SubdiscriminantSequence subdiscriminant_sequence(const PowerSums& sums);

/// Sequence of the density the detector keeps, for constant or parametric
/// states. Magnitude states are validated first.
SubdiscriminantSequence state_subdiscriminants(const BipartiteState& state);

/// Number of distinct eigenvalues: the largest k with det H_k != 0.
/// Throws ModeError on a parametric sequence.
std::size_t degeneracy_profile(const SubdiscriminantSequence& seq);
std::size_t degeneracy_profile(const std::vector<BigRational>& values);

struct Verdict {
  bool maximal = false;
  std::size_t d_used = 0;
  Subsystem kept = Subsystem::kB;
  BigRational d_last_but_one;
  std::size_t degeneracy = 0;
  /// D_1..D_d.
  std::vector<BigRational> sequence;
  /// Flags such as "product-state" or "trivial-subsystem".
  std::vector<std::string> notes;
};

/// Exact sequence of a constant Hermitian density (any scale). Clears
/// denominators before the power sums and rescales the minors afterwards.
std::vector<BigRational> density_subdiscriminants(const Matrix<GaussianRational>& rho);

/// Verdict for a constant reduced density.
Verdict verdict_from_density(const Matrix<GaussianRational>& rho, Subsystem kept);

/// Keeps the smaller subsystem (B on a tie) and tests D_{d-1} == 0.
/// Throws ModeError("use parametric_analysis") on parametric states.
Verdict is_maximally_entangled(const BipartiteState& state);

struct ParametricRoot {
  IsolatingInterval where;
  /// Rational roots only: the specialized state was re-run through the
  /// exact detector and certified maximal.
  bool verified = false;
};

struct ParametricVerdict {
  ParameterKind mode = ParameterKind::kReal;
  /// Name of the condition polynomial's variable ("p" or "t" = |p|^2).
  std::string variable;
  std::string parameter;
  std::size_t d_used = 0;
  Subsystem kept = Subsystem::kB;
  /// D_{d-1} in the parameter, before normalization.
  ParamPoly raw;
  /// raw = content * polynomial (in t for magnitude mode).
  BigRational content;
  RationalPoly polynomial;
  std::optional<bool> even_check;
  std::vector<ParametricRoot> roots;
  bool identically_maximal = false;
  bool achievable = false;
  std::vector<std::string> notes;
};

/// Single-parameter analysis: D_{d-1} as a polynomial, its real roots (or
/// nonnegative roots in t = |p|^2 for magnitude mode), and re-verification
/// of each rational root. Throws ModeError for constant states or when
/// `mode` contradicts an explicit declaration, MagnitudeModeError when the
/// |p|^2 substitution is invalid, DomainError if D is not even in
/// magnitude mode.
ParametricVerdict parametric_analysis(const BipartiteState& state, ParameterKind mode);

}  // namespace maxent
