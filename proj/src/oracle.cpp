#include "maxent/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "maxent/errors.hpp"

namespace maxent::oracle {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kTolerance = 1e-12;

double frobenius(const RealMatrix& m) {
  double acc = 0.0;
  for (double x : m.data()) acc += x * x;
  return std::sqrt(acc);
}

double off_diagonal(const RealMatrix& m) {
  double acc = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j) acc += m(i, j) * m(i, j);
  return std::sqrt(acc);
}

std::complex<double> to_complex(const ParamPoly& f) { return f.coeff(0).to_complex(); }

}  // namespace

std::vector<double> jacobi_eigenvalues(RealMatrix a) {
  if (!a.is_square()) throw DomainError("jacobi_eigenvalues needs a square matrix");
  const std::size_t n = a.rows();
  for (double x : a.data()) {
    if (!std::isfinite(x)) throw DomainError("non-finite matrix entry");
  }
  const double scale = std::max(1.0, frobenius(a));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(a(i, j) - a(j, i)) > kTolerance * scale) throw DomainError("matrix is not symmetric");

  int sweep = 0;
  while (off_diagonal(a) >= kTolerance * scale) {
    if (++sweep > kMaxSweeps) throw DomainError("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = a(i, i);
  std::sort(eig.begin(), eig.end(), std::greater<>());
  return eig;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h) {
  const std::size_t n = h.rows();
  RealMatrix embed(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::complex<double> z = h(i, j);
      embed(i, j) = z.real();
      embed(n + i, n + j) = z.real();
      embed(i, n + j) = -z.imag();
      embed(n + i, j) = z.imag();
    }
  }
  const std::vector<double> doubled = jacobi_eigenvalues(std::move(embed));
  std::vector<double> eig(n);
  for (std::size_t i = 0; i < n; ++i) eig[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return eig;
}

ComplexMatrix reduced_density(const BipartiteState& state, Subsystem keep) {
  if (state.is_parametric()) throw ModeError("oracle needs a state without free parameter");
  const std::size_t da = state.dim_a();
  const std::size_t db = state.dim_b();
  ComplexMatrix c(da, db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) c(i, j) = to_complex(state.coeffs()(i, j));

  const std::size_t n = keep == Subsystem::kB ? db : da;
  ComplexMatrix rho(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t s = 0; s < n; ++s) {
      std::complex<double> acc = 0.0;
      if (keep == Subsystem::kB) {
        for (std::size_t i = 0; i < da; ++i) acc += std::conj(c(i, r)) * c(i, s);
      } else {
        for (std::size_t j = 0; j < db; ++j) acc += c(r, j) * std::conj(c(s, j));
      }
      rho(r, s) = acc;
    }
  }
  return rho;
}

SchmidtSpectrum schmidt_spectrum(const ComplexMatrix& density) {
  const std::size_t n = density.rows();
  double trace = 0.0;
  for (std::size_t i = 0; i < n; ++i) trace += density(i, i).real();
  if (!(trace > 0.0)) throw DomainError("density has non-positive trace");
  ComplexMatrix normalized = density;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) normalized(i, j) /= trace;

  SchmidtSpectrum spec;
  spec.trace_scale = trace;
  spec.lambdas = hermitian_eigenvalues(normalized);
  spec.schmidt.reserve(n);
  for (double l : spec.lambdas) spec.schmidt.push_back(std::sqrt(std::max(l, 0.0)));
  return spec;
}

SchmidtSpectrum schmidt_spectrum(const BipartiteState& state) {
  return schmidt_spectrum(oracle::reduced_density(state, kept_subsystem(state)));
}

EntropyReport entropy_report(const SchmidtSpectrum& spec) {
  EntropyReport r;
  double purity = 0.0;
  for (double l : spec.lambdas) {
    if (l > 0.0) r.von_neumann -= l * std::log(l);
    purity += l * l;
  }
  r.linear_entropy = 1.0 - purity;
  const double max_entropy = std::log(static_cast<double>(spec.lambdas.size()));
  r.normalized = max_entropy > 0.0 ? r.von_neumann / max_entropy : 1.0;
  return r;
}

double numeric_subdiscriminant(const SchmidtSpectrum& spec, std::size_t q, double trace_scale) {
  const std::size_t d = spec.lambdas.size();
  if (d > 12) throw DomainError("oracle is brute force; d must be at most 12");
  if (q < 1 || q > d) throw DomainError("subdiscriminant index out of range");
  const std::size_t k = d - q + 1;
  std::vector<double> l(spec.lambdas);
  for (double& x : l) x *= trace_scale;

  double total = 0.0;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
    double prod = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
      if (!(mask & (1u << i))) continue;
      for (std::size_t j = i + 1; j < d; ++j) {
        if (!(mask & (1u << j))) continue;
        const double diff = l[i] - l[j];
        prod *= diff * diff;
      }
    }
    total += prod;
  }
  return total;
}

std::size_t distinct_count(const std::vector<double>& lambdas, double tol) {
  if (lambdas.empty()) return 0;
  std::vector<double> sorted(lambdas);
  std::sort(sorted.begin(), sorted.end());
  std::size_t clusters = 1;
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    if (sorted[i] - sorted[i - 1] > tol) ++clusters;
  }
  return clusters;
}

double min_cluster_gap(const std::vector<double>& lambdas, double tol) {
  std::vector<double> sorted(lambdas);
  std::sort(sorted.begin(), sorted.end());
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    const double g = sorted[i] - sorted[i - 1];
    if (g > tol) gap = std::min(gap, g);
  }
  return gap;
}

}  // namespace maxent::oracle
