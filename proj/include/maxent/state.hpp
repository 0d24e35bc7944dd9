#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "maxent/gaussian.hpp"
#include "maxent/matrix.hpp"
#include "maxent/polynomial.hpp"

namespace maxent {

/// Polynomial in the single free parameter of a state, Gaussian-rational
/// coefficients. Degree-0 values behave as plain scalars.
using ParamPoly = UniPoly<GaussianRational>;

enum class ParameterKind { kNone, kReal, kMagnitude };
enum class Subsystem { kA, kB };

std::string to_string(ParameterKind kind);
std::string to_string(Subsystem side);

/// Pure state sum_ij C(i, j) |i>_A |j>_B, unnormalized. Ket |i j> is row i,
/// column j of C; the flattened index is i * d_B + j.
class BipartiteState {
 public:
  /// Validates the invariants: at least one nonzero entry, kind == kNone
  /// exactly when every entry is constant, at most one parameter name.
  BipartiteState(Matrix<ParamPoly> coeffs, ParameterKind kind, std::string param_name = {},
                 bool kind_declared = false);

  static BipartiteState from_scalars(const Matrix<GaussianRational>& coeffs);

  std::size_t dim_a() const { return coeffs_.rows(); }
  std::size_t dim_b() const { return coeffs_.cols(); }
  const Matrix<ParamPoly>& coeffs() const { return coeffs_; }
  ParameterKind kind() const { return kind_; }
  bool is_parametric() const { return kind_ != ParameterKind::kNone; }
  /// Whether the parameter kind came from an explicit `param` line.
  bool kind_declared() const { return kind_declared_; }
  const std::string& param_name() const { return param_name_; }

  BipartiteState with_kind(ParameterKind kind) const;
  BipartiteState scaled(const GaussianRational& c) const;
  /// Constant coefficient matrix; throws ModeError for parametric states.
  Matrix<GaussianRational> scalar_coeffs() const;
  /// Substitutes a real rational value for the parameter.
  BipartiteState specialize(const BigRational& value) const;
  /// sum |C(i,j)|^2 as a polynomial (|p|^2 written p^2).
  ParamPoly squared_norm() const;

 private:
  Matrix<ParamPoly> coeffs_;
  ParameterKind kind_;
  std::string param_name_;
  bool kind_declared_;
};

/// Parses the line-oriented state format:
///   dims <d_A> <d_B>
///   param real|magnitude        (optional)
///   term <i> <j> <coeff>        (coeff: scalar, <scalar>*<name>, <name>, -<name>)
/// '#' starts a comment. Throws ParseError.
BipartiteState parse_state(std::string_view text);

struct ReducedDensity {
  Subsystem side;  // the subsystem that is kept
  Matrix<ParamPoly> entries;

  std::size_t dim() const { return entries.rows(); }
};

struct MagnitudeCheck {
  bool ok = false;
  std::string reason;
};

/// Whether |p|^2 substitution is valid when tracing out `traced`: the one
/// parameter-carrying entry must be alone in its row (tracing A) or column
/// (tracing B).
MagnitudeCheck validate_magnitude_mode(const BipartiteState& state, Subsystem traced);

/// rho_B = C^dagger C (keep B), rho_A = C C^dagger (keep A). For magnitude
/// states, p^2 in the result stands for |p|^2; throws MagnitudeModeError if
/// the structural check fails.
ReducedDensity reduced_density(const BipartiteState& state, Subsystem keep);

/// The subsystem the detector keeps: the smaller one, B on a tie.
Subsystem kept_subsystem(const BipartiteState& state);

struct PowerSums {
  /// s[k] = Tr(rho^k), s[0] = dim.
  std::vector<ParamPoly> s;
};

/// s_0..s_m. Throws DomainError for m < 1.
PowerSums power_sums(const ReducedDensity& rho, std::size_t m);

/// Power sums over any exact ring; exposed for the constant fast path.
template <class R>
std::vector<R> matrix_power_sums(const Matrix<R>& rho, std::size_t m) {
  const std::size_t n = rho.rows();
  std::vector<R> s(m + 1);
  s[0] = R(static_cast<int>(n));
  if (m == 0) return s;
  // Powers up to h = ceil(m/2); higher traces as Tr(P_a P_b) without
  // forming the product.
  const std::size_t h = (m + 1) / 2;
  std::vector<Matrix<R>> powers{Matrix<R>::identity(n), rho};
  for (std::size_t k = 2; k <= h; ++k) powers.push_back(powers.back() * rho);
  for (std::size_t k = 1; k <= m; ++k) {
    if (k <= h) {
      s[k] = powers[k].trace();
      continue;
    }
    const Matrix<R>& a = powers[h];
    const Matrix<R>& b = powers[k - h];
    R acc{};
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) acc += a(i, j) * b(j, i);
    s[k] = std::move(acc);
  }
  return s;
}

}  // namespace maxent
