#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "isobound/hermitian.hpp"

namespace isobound {

/// Eigenvalues ascending; eigenvector k occupies vectors[k*dim .. k*dim+dim).
struct Eigensystem {
  int dim = 0;
  std::vector<double> values;
  std::vector<Complex> vectors;
  int sweeps = 0;

  std::span<const Complex> vector(int k) const {
    return std::span<const Complex>(vectors).subspan(static_cast<std::size_t>(k) * dim, dim);
  }
};

struct JacobiOptions {
  /// Converged when off-diagonal Frobenius norm < tolerance * (1 + ||M||_F).
  double tolerance = 1e-12;
  int max_sweeps = 100;
};

/// Cyclic Jacobi. Real input is rotated in real arithmetic. Throws
/// NumericalFailure carrying the remaining off-diagonal norm when the sweep
/// limit is exhausted.
Eigensystem eigh(const HermitianMatrix &m, const JacobiOptions &opts = {});
std::vector<double> eigenvalues_hermitian(const HermitianMatrix &m,
                                          const JacobiOptions &opts = {});

struct Inertia {
  int n_plus = 0;
  int n_zero = 0;
  int n_minus = 0;
  /// Eigenvalues with |lambda| <= tol count as zero.
  double tol = 0.0;

  int dim() const { return n_plus + n_zero + n_minus; }
  int rank() const { return n_plus + n_minus; }
  /// n0 + min(n+, n-): dimension of a maximal totally isotropic subspace.
  int isotropic_dimension() const { return n_zero + std::min(n_plus, n_minus); }

  bool same_counts(const Inertia &o) const {
    return n_plus == o.n_plus && n_zero == o.n_zero && n_minus == o.n_minus;
  }
};

constexpr double kDefaultZeroScale = 1e-8;

/// tol = zero_scale * max(1, max |lambda|).
Inertia classify_inertia(std::span<const double> eigenvalues,
                         double zero_scale = kDefaultZeroScale);
Inertia inertia(const HermitianMatrix &m, double zero_scale = kDefaultZeroScale);

} // namespace isobound
