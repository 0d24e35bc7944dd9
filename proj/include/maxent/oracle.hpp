#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "maxent/matrix.hpp"
#include "maxent/state.hpp"

// Floating-point cross-check route. Nothing in here feeds the exact pipeline.

namespace maxent::oracle {

using ComplexMatrix = Matrix<std::complex<double>>;
using RealMatrix = Matrix<double>;

struct SchmidtSpectrum {
  /// Eigenvalues of the trace-normalized reduced density, descending.
  std::vector<double> lambdas;
  /// sqrt(max(lambda, 0)).
  std::vector<double> schmidt;
  /// Trace of the unnormalized density; multiply lambdas by it to recover
  /// the unnormalized eigenvalues.
  double trace_scale = 1.0;
};

struct EntropyReport {
  double von_neumann = 0.0;  // natural log
  double normalized = 0.0;   // von_neumann / ln d
  double linear_entropy = 0.0;
};

/// Cyclic Jacobi on a real symmetric matrix. Eigenvalues descending.
/// Throws DomainError on asymmetric (> 1e-12 relative) or non-finite input,
/// or when 100 sweeps do not bring the off-diagonal norm under 1e-12 (relative
/// to the Frobenius norm).
std::vector<double> jacobi_eigenvalues(RealMatrix m);

/// Eigenvalues of a Hermitian matrix via the 2n x 2n real embedding
/// [[Re, -Im], [Im, Re]]; each eigenvalue appears twice there and is
/// reported once.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// Reduced density computed directly in double precision.
ComplexMatrix reduced_density(const BipartiteState& state, Subsystem keep);

/// Spectrum of the density kept by the detector (smaller side, B on ties).
/// Throws ModeError on parametric states.
SchmidtSpectrum schmidt_spectrum(const BipartiteState& state);
SchmidtSpectrum schmidt_spectrum(const ComplexMatrix& density);

EntropyReport entropy_report(const SchmidtSpectrum& spec);

/// Brute-force D_q = sum over (d-q+1)-subsets of prod (l_i - l_j)^2 with the
/// eigenvalues rescaled by trace_scale. Throws DomainError for d > 12.
double numeric_subdiscriminant(const SchmidtSpectrum& spec, std::size_t q, double trace_scale);

/// Eigenvalue clusters under an absolute tolerance on the normalized spectrum.
std::size_t distinct_count(const std::vector<double>& lambdas, double tol = 1e-9);

/// Smallest gap between consecutive distinct clusters; +inf for one cluster.
double min_cluster_gap(const std::vector<double>& lambdas, double tol = 1e-9);

}  // namespace maxent::oracle
