#include "maxent/detector.hpp"

#include "maxent/errors.hpp"

namespace maxent {

namespace {

ParamPoly divided_by(const ParamPoly& f, long k) {
  return f.scaled(GaussianRational(BigRational(mpz_class(1), mpz_class(k))));
}

bool is_perfect_square(const BigRational& r, BigRational* root) {
  if (r.sign() < 0) return false;
  if (mpz_perfect_square_p(r.raw().get_num_mpz_t()) == 0) return false;
  if (mpz_perfect_square_p(r.raw().get_den_mpz_t()) == 0) return false;
  mpz_class n, d;
  mpz_sqrt(n.get_mpz_t(), r.raw().get_num_mpz_t());
  mpz_sqrt(d.get_mpz_t(), r.raw().get_den_mpz_t());
  *root = BigRational(n, d);
  return true;
}

// p^2 -> t on every entry of a density computed in magnitude mode.
Matrix<GaussianRational> density_at_magnitude(const ReducedDensity& rho, const BigRational& t) {
  return rho.entries.map([&](const ParamPoly& f) {
    return f.even_to_square_variable("t").evaluate(GaussianRational(t));
  });
}

}  // namespace

CharPoly characteristic_polynomial(const ReducedDensity& rho) {
  const std::size_t n = rho.dim();
  const Matrix<ParamPoly>& a = rho.entries;
  std::vector<ParamPoly> c(n + 1);
  c[n] = ParamPoly(1);
  // M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -Tr(A M_k) / k
  Matrix<ParamPoly> am(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<ParamPoly> m = am;
    for (std::size_t i = 0; i < n; ++i) m(i, i) += c[n - k + 1];
    am = a * m;
    c[n - k] = divided_by(-am.trace(), static_cast<long>(k));
  }
  return CharPoly(std::move(c), "x");
}

CharPoly characteristic_polynomial_from_power_sums(const PowerSums& sums, std::size_t dim) {
  if (sums.s.size() < dim + 1) throw DomainError("not enough power sums");
  // k e_k = sum_{i=1..k} (-1)^{i-1} e_{k-i} s_i
  std::vector<ParamPoly> e(dim + 1);
  e[0] = ParamPoly(1);
  for (std::size_t k = 1; k <= dim; ++k) {
    ParamPoly acc;
    for (std::size_t i = 1; i <= k; ++i) {
      const ParamPoly term = e[k - i] * sums.s[i];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    e[k] = divided_by(acc, static_cast<long>(k));
  }
  std::vector<ParamPoly> c(dim + 1);
  for (std::size_t k = 0; k <= dim; ++k) c[dim - k] = k % 2 == 0 ? e[k] : -e[k];
  return CharPoly(std::move(c), "x");
}

const ParamPoly& SubdiscriminantSequence::at(std::size_t q) const {
  if (q < 1 || q > values_.size()) throw DomainError("subdiscriminant index out of range");
  return values_[q - 1];
}

bool SubdiscriminantSequence::is_parametric() const {
  for (const auto& v : values_) {
    if (v.degree() > 0) return true;
  }
  return false;
}

std::vector<BigRational> SubdiscriminantSequence::scalar_values() const {
  if (is_parametric()) throw ModeError("subdiscriminant sequence depends on the parameter");
  std::vector<BigRational> out;
  out.reserve(values_.size());
  for (const auto& v : values_) {
    const GaussianRational z = v.coeff(0);
    if (!z.is_real()) throw DomainError("non-real subdiscriminant");
    out.push_back(z.re());
  }
  return out;
}

SubdiscriminantSequence subdiscriminant_sequence(const PowerSums& sums) {
  if (sums.s.empty()) throw DomainError("empty power sums");
  const GaussianRational s0 = sums.s[0].coeff(0);
  const auto d = static_cast<std::size_t>(s0.re().numerator().get_ui());
  if (d == 0 || sums.s.size() < 2 * d - 1) throw DomainError("need power sums s_0..s_{2d-2}");
  std::vector<ParamPoly> values(d);
  for (std::size_t q = 1; q <= d; ++q) {
    values[q - 1] = bareiss_det(hankel(sums.s, d - q + 1));
  }
  return {std::move(values)};
}

SubdiscriminantSequence state_subdiscriminants(const BipartiteState& state) {
  const ReducedDensity rho = reduced_density(state, kept_subsystem(state));
  const std::size_t d = rho.dim();
  if (!state.is_parametric()) {
    const auto values = density_subdiscriminants(
        rho.entries.map([](const ParamPoly& f) { return f.coeff(0); }));
    std::vector<ParamPoly> out;
    out.reserve(values.size());
    for (const auto& v : values) out.emplace_back(GaussianRational(v));
    return {std::move(out)};
  }
  if (d == 1) return {std::vector<ParamPoly>{ParamPoly(1)}};
  return subdiscriminant_sequence(power_sums(rho, 2 * d - 2));
}

std::size_t degeneracy_profile(const std::vector<BigRational>& values) {
  const std::size_t d = values.size();
  for (std::size_t k = d; k >= 1; --k) {
    if (!values[d - k].is_zero()) return k;
  }
  return 0;
}

std::size_t degeneracy_profile(const SubdiscriminantSequence& seq) {
  return degeneracy_profile(seq.scalar_values());
}

std::vector<BigRational> density_subdiscriminants(const Matrix<GaussianRational>& rho) {
  const std::size_t d = rho.rows();
  mpz_class lcm = 1;
  for (const auto& z : rho.data()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re().raw().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.im().raw().get_den_mpz_t());
  }
  const GaussianRational scale{BigRational(lcm)};
  const Matrix<GaussianRational> integral = rho.map([&](const GaussianRational& z) { return z * scale; });

  const std::vector<GaussianRational> sums = matrix_power_sums(integral, 2 * d - 2);
  std::vector<BigRational> real_sums;
  real_sums.reserve(sums.size());
  for (const auto& s : sums) {
    if (!s.is_real()) throw DomainError("density is not Hermitian");
    real_sums.push_back(s.re());
  }
  // Eigenvalues of the integral density are lcm times the originals, so the
  // k x k Hankel minor carries lcm^{k(k-1)}.
  std::vector<BigRational> values(d);
  const BigRational base(lcm);
  for (std::size_t q = 1; q <= d; ++q) {
    const std::size_t k = d - q + 1;
    const BigRational minor = bareiss_det(hankel(real_sums, k));
    values[q - 1] = minor / base.pow(static_cast<long>(k * (k - 1)));
  }
  return values;
}

Verdict verdict_from_density(const Matrix<GaussianRational>& rho, Subsystem kept) {
  Verdict v;
  v.kept = kept;
  v.d_used = rho.rows();
  const GaussianRational s1 = rho.trace();
  const GaussianRational s2 = matrix_power_sums(rho, 2)[2];
  if (s1 * s1 == s2) v.notes.push_back("product-state");
  if (v.d_used == 1) {
    v.maximal = true;
    v.d_last_but_one = BigRational(0);
    v.degeneracy = 1;
    v.sequence = {BigRational(1)};
    v.notes.push_back("trivial-subsystem");
    return v;
  }
  v.sequence = density_subdiscriminants(rho);
  v.d_last_but_one = v.sequence[v.d_used - 2];
  v.maximal = v.d_last_but_one.is_zero();
  v.degeneracy = degeneracy_profile(v.sequence);
  return v;
}

Verdict is_maximally_entangled(const BipartiteState& state) {
  if (state.is_parametric()) throw ModeError("state has a free parameter; use parametric_analysis");
  const Subsystem keep = kept_subsystem(state);
  const ReducedDensity rho = reduced_density(state, keep);
  return verdict_from_density(rho.entries.map([](const ParamPoly& f) { return f.coeff(0); }), keep);
}

ParametricVerdict parametric_analysis(const BipartiteState& input, ParameterKind mode) {
  if (!input.is_parametric()) throw ModeError("state has no free parameter; use detect");
  if (mode == ParameterKind::kNone) throw ModeError("parametric mode must be real or magnitude");
  if (input.kind_declared() && input.kind() != mode) {
    throw ModeError("mode " + to_string(mode) + " conflicts with the declared parameter kind " +
                    to_string(input.kind()));
  }
  const BipartiteState state = input.with_kind(mode);
  const bool magnitude = mode == ParameterKind::kMagnitude;

  ParametricVerdict out;
  out.mode = mode;
  out.parameter = state.param_name();
  out.variable = magnitude ? "t" : state.param_name();
  out.kept = kept_subsystem(state);

  const ReducedDensity rho = reduced_density(state, out.kept);
  const std::size_t d = rho.dim();
  out.d_used = d;
  if (d >= 2) {
    const SubdiscriminantSequence seq = subdiscriminant_sequence(power_sums(rho, 2 * d - 2));
    out.raw = seq.at(d - 1);
  }

  const ParamPoly norm = state.squared_norm();
  // Constant density at a parameter value (t in magnitude mode).
  auto density_at = [&](const BigRational& value) {
    if (magnitude) return density_at_magnitude(rho, value);
    return rho.entries.map([&](const ParamPoly& f) { return f.evaluate(GaussianRational(value)); });
  };
  auto norm_at = [&](const BigRational& value) {
    const ParamPoly n = magnitude ? norm.even_to_square_variable("t") : norm;
    return n.evaluate(GaussianRational(value));
  };

  if (out.raw.is_zero()) {
    // Spot-check three parameter values where the state does not vanish.
    int checked = 0;
    for (long v = 1; checked < 3; ++v) {
      const BigRational value(v);
      if (norm_at(value).is_zero()) continue;
      if (!verdict_from_density(density_at(value), out.kept).maximal) {
        throw DomainError("condition polynomial vanishes identically but a sample is not maximal");
      }
      ++checked;
    }
    out.identically_maximal = true;
    out.achievable = true;
    out.content = BigRational(0);
    out.polynomial = RationalPoly(out.variable);
    out.notes.push_back("maximal for all parameter values");
    return out;
  }

  ParamPoly condition = out.raw;
  if (magnitude) {
    out.even_check = condition.is_even();
    if (!*out.even_check) throw DomainError("condition polynomial is not even in the parameter");
    condition = condition.even_to_square_variable("t");
  }
  const PrimitiveForm form = primitive_form(condition);
  out.content = form.content;
  out.polynomial = form.primitive.with_var(out.variable);

  std::vector<IsolatingInterval> found = isolate_real_roots(out.polynomial);
  if (magnitude) found = nonnegative_roots(out.polynomial, found);

  for (auto& iv : found) {
    ParametricRoot root{iv, false};
    if (iv.exact) {
      const BigRational& value = *iv.exact;
      if (norm_at(value).is_zero()) {
        out.notes.push_back("state vanishes at root " + value.to_string() + "; discarded");
        continue;
      }
      BigRational p;
      if (!magnitude) {
        root.verified = is_maximally_entangled(state.specialize(value)).maximal;
      } else if (is_perfect_square(value, &p)) {
        root.verified = is_maximally_entangled(state.specialize(p)).maximal;
      } else {
        root.verified = verdict_from_density(density_at(value), out.kept).maximal;
      }
      if (!root.verified) {
        throw DomainError("root " + value.to_string() + " failed re-verification");
      }
    } else {
      out.notes.push_back("irrational root isolated in " + to_string(iv));
    }
    out.roots.push_back(std::move(root));
  }
  out.achievable = !out.roots.empty();
  return out;
}

}  // namespace maxent
