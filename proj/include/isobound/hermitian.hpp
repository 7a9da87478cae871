#pragma once

#include <complex>
#include <span>
#include <vector>

#include "isobound/graph.hpp"

namespace isobound {

using Complex = std::complex<double>;

/// Dense square complex matrix with conjugate symmetry. Construction checks
/// |m_ij - conj(m_ji)| <= 1e-12 and then stores (M + M*)/2, so the diagonal
/// is exactly real.
class HermitianMatrix {
public:
  static constexpr double kHermitianTolerance = 1e-12;

  /// Row-major entries; throws DimensionMismatch / InvalidInput.
  HermitianMatrix(int dim, std::vector<Complex> entries);
  HermitianMatrix(int dim, const std::vector<double> &real_entries);

  static HermitianMatrix zeros(int dim);
  static HermitianMatrix identity(int dim);

  int dim() const { return dim_; }
  Complex operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  }
  std::span<const Complex> entries() const { return entries_; }

  bool is_real() const;
  double frobenius_norm() const;
  Complex trace() const;

  friend bool operator==(const HermitianMatrix &, const HermitianMatrix &) = default;

private:
  HermitianMatrix(int dim, std::vector<Complex> entries, bool trusted);

  int dim_;
  std::vector<Complex> entries_;
};

HermitianMatrix adjacency_matrix(const Graph &g);
/// D - A.
HermitianMatrix laplacian(const Graph &g);
/// m (x) I_d; row index of |u> (x) |a> is u * d + a.
HermitianMatrix tensor_with_identity(const HermitianMatrix &m, int d);

/// Plain dense complex products used by verification code.
using DenseMatrix = std::vector<Complex>;
DenseMatrix multiply(int dim, std::span<const Complex> a, std::span<const Complex> b);
DenseMatrix conjugate_transpose(int dim, std::span<const Complex> a);
/// S* M S for square S of matching dimension.
HermitianMatrix congruence(const HermitianMatrix &m, std::span<const Complex> s);

/// tr(X^dagger Y).
Complex trace_inner(const HermitianMatrix &x, const HermitianMatrix &y);

} // namespace isobound
