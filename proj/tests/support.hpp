#pragma once

// Test-only helpers and independent oracles. Nothing here calls the
// determinant, power-sum or density code it is used to check.

#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "maxent/gaussian.hpp"
#include "maxent/matrix.hpp"
#include "maxent/random.hpp"
#include "maxent/state.hpp"

namespace maxent::testing {

inline std::string data_path(const std::string& name) { return std::string(MAXENT_DATA_DIR) + "/" + name; }

inline std::string read_data(const std::string& name) {
  std::ifstream in(data_path(name));
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline BipartiteState load_state(const std::string& name) { return parse_state(read_data(name)); }

/// Laplace expansion along the first row.
template <class R>
R cofactor_det(const Matrix<R>& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  R total{};
  for (std::size_t col = 0; col < n; ++col) {
    Matrix<R> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t jj = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == col) continue;
        minor(i - 1, jj++) = m(i, j);
      }
    }
    const R term = m(0, col) * cofactor_det(minor);
    if (col % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

/// Partial trace of the full d_A d_B x d_A d_B projector |psi><psi|,
/// flattened index i * d_B + j.
inline Matrix<GaussianRational> brute_force_partial_trace(const Matrix<GaussianRational>& c, Subsystem keep) {
  const std::size_t da = c.rows();
  const std::size_t db = c.cols();
  const std::size_t n = da * db;
  std::vector<GaussianRational> psi(n);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < db; ++j) psi[i * db + j] = c(i, j);
  Matrix<GaussianRational> rho(n, n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) rho(x, y) = psi[x] * psi[y].conj();

  if (keep == Subsystem::kB) {
    Matrix<GaussianRational> out(db, db);
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k)
        for (std::size_t i = 0; i < da; ++i) out(j, k) += rho(i * db + j, i * db + k);
    return out;
  }
  Matrix<GaussianRational> out(da, da);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t k = 0; k < da; ++k)
      for (std::size_t j = 0; j < db; ++j) out(i, k) += rho(i * db + j, k * db + j);
  return out;
}

/// Random integer matrix with entries in [-range, range].
inline Matrix<BigRational> random_integer_matrix(Lcg64& rng, std::size_t n, long range) {
  Matrix<BigRational> m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = BigRational(static_cast<long>(rng.next() % static_cast<std::uint64_t>(2 * range + 1)) - range);
  return m;
}

/// State with diagonal amplitudes sum_i c_i |ii>.
inline BipartiteState diagonal_state(const std::vector<GaussianRational>& c) {
  Matrix<GaussianRational> m(c.size(), c.size());
  for (std::size_t i = 0; i < c.size(); ++i) m(i, i) = c[i];
  return BipartiteState::from_scalars(m);
}

inline Matrix<GaussianRational> constant_entries(const ReducedDensity& rho) {
  return rho.entries.map([](const ParamPoly& f) { return f.coeff(0); });
}

/// Two-qubit state p|00> + q|11> + r|10> + s|01>.
inline BipartiteState qubit_state(const BigRational& p, const BigRational& q, const BigRational& r,
                                  const BigRational& s) {
  Matrix<GaussianRational> c(2, 2);
  c(0, 0) = p;
  c(1, 1) = q;
  c(1, 0) = r;
  c(0, 1) = s;
  return BipartiteState::from_scalars(c);
}

}  // namespace maxent::testing
