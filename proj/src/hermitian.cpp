#include "isobound/hermitian.hpp"

#include <cmath>

#include "isobound/error.hpp"

namespace isobound {

HermitianMatrix::HermitianMatrix(int dim, std::vector<Complex> entries, bool trusted)
    : dim_(dim), entries_(std::move(entries)) {
  if (dim < 1)
    throw InvalidInput("matrix dimension must be positive");
  if (entries_.size() != static_cast<std::size_t>(dim) * dim)
    throw DimensionMismatch("expected " + std::to_string(dim * dim) + " entries, got " +
                            std::to_string(entries_.size()));
  auto at = [&](int i, int j) -> Complex & {
    return entries_[static_cast<std::size_t>(i) * dim_ + j];
  };
  for (int i = 0; i < dim; ++i) {
    if (!trusted && std::abs(at(i, i).imag()) > kHermitianTolerance)
      throw InvalidInput("diagonal entry " + std::to_string(i) + " is not real");
    at(i, i) = at(i, i).real();
    for (int j = i + 1; j < dim; ++j) {
      const Complex a = at(i, j), b = std::conj(at(j, i));
      if (!trusted && std::abs(a - b) > kHermitianTolerance)
        throw InvalidInput("matrix is not Hermitian at (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
      const Complex avg = 0.5 * (a + b);
      at(i, j) = avg;
      at(j, i) = std::conj(avg);
    }
  }
}

HermitianMatrix::HermitianMatrix(int dim, std::vector<Complex> entries)
    : HermitianMatrix(dim, std::move(entries), false) {}

HermitianMatrix::HermitianMatrix(int dim, const std::vector<double> &real_entries)
    : HermitianMatrix(dim, std::vector<Complex>(real_entries.begin(), real_entries.end()),
                      false) {}

HermitianMatrix HermitianMatrix::zeros(int dim) {
  return HermitianMatrix(dim, std::vector<Complex>(static_cast<std::size_t>(dim) * dim), true);
}

HermitianMatrix HermitianMatrix::identity(int dim) {
  std::vector<Complex> e(static_cast<std::size_t>(dim) * dim);
  for (int i = 0; i < dim; ++i)
    e[static_cast<std::size_t>(i) * dim + i] = 1.0;
  return HermitianMatrix(dim, std::move(e), true);
}

bool HermitianMatrix::is_real() const {
  for (const auto &z : entries_)
    if (z.imag() != 0.0)
      return false;
  return true;
}

double HermitianMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const auto &z : entries_)
    s += std::norm(z);
  return std::sqrt(s);
}

Complex HermitianMatrix::trace() const {
  Complex t = 0.0;
  for (int i = 0; i < dim_; ++i)
    t += (*this)(i, i);
  return t;
}

HermitianMatrix adjacency_matrix(const Graph &g) {
  const int n = g.order();
  std::vector<Complex> e(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u)
    for (int v : g.neighbors(u))
      e[static_cast<std::size_t>(u) * n + v] = 1.0;
  return HermitianMatrix(n, std::move(e));
}

HermitianMatrix laplacian(const Graph &g) {
  const int n = g.order();
  std::vector<Complex> e(static_cast<std::size_t>(n) * n);
  for (int u = 0; u < n; ++u) {
    e[static_cast<std::size_t>(u) * n + u] = g.degree(u);
    for (int v : g.neighbors(u))
      e[static_cast<std::size_t>(u) * n + v] = -1.0;
  }
  return HermitianMatrix(n, std::move(e));
}

HermitianMatrix tensor_with_identity(const HermitianMatrix &m, int d) {
  if (d < 1)
    throw InvalidInput("tensor factor dimension must be at least 1");
  const int n = m.dim();
  const int big = n * d;
  std::vector<Complex> e(static_cast<std::size_t>(big) * big);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int a = 0; a < d; ++a)
        e[static_cast<std::size_t>(i * d + a) * big + (j * d + a)] = m(i, j);
  return HermitianMatrix(big, std::move(e));
}

DenseMatrix multiply(int dim, std::span<const Complex> a, std::span<const Complex> b) {
  const auto n = static_cast<std::size_t>(dim);
  if (a.size() != n * n || b.size() != n * n)
    throw DimensionMismatch("multiply: operand size does not match dimension");
  DenseMatrix c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Complex aik = a[i * n + k];
      if (aik == Complex{})
        continue;
      for (std::size_t j = 0; j < n; ++j)
        c[i * n + j] += aik * b[k * n + j];
    }
  return c;
}

DenseMatrix conjugate_transpose(int dim, std::span<const Complex> a) {
  const auto n = static_cast<std::size_t>(dim);
  DenseMatrix out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out[j * n + i] = std::conj(a[i * n + j]);
  return out;
}

HermitianMatrix congruence(const HermitianMatrix &m, std::span<const Complex> s) {
  const int n = m.dim();
  const auto sh = conjugate_transpose(n, s);
  const auto ms = multiply(n, m.entries(), s);
  auto out = multiply(n, sh, ms);
  // Rounding breaks exact symmetry; rescale the tolerance check to the size
  // of the product before handing it to the validating constructor.
  double scale = 0.0;
  for (const auto &z : out)
    scale = std::max(scale, std::abs(z));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      const auto ij = static_cast<std::size_t>(i) * n + j;
      const auto ji = static_cast<std::size_t>(j) * n + i;
      if (std::abs(out[ij] - std::conj(out[ji])) > 1e-10 * (1.0 + scale))
        throw NumericalFailure("congruence lost Hermitian symmetry",
                               std::abs(out[ij] - std::conj(out[ji])));
      const Complex avg = 0.5 * (out[ij] + std::conj(out[ji]));
      out[ij] = avg;
      out[ji] = std::conj(avg);
    }
  return HermitianMatrix(n, std::move(out));
}

Complex trace_inner(const HermitianMatrix &x, const HermitianMatrix &y) {
  if (x.dim() != y.dim())
    throw DimensionMismatch("trace inner product of matrices with different dimensions");
  // tr(X^dagger Y) = sum_ij conj(X_ij) Y_ij.
  Complex s = 0.0;
  const auto xe = x.entries(), ye = y.entries();
  for (std::size_t k = 0; k < xe.size(); ++k)
    s += std::conj(xe[k]) * ye[k];
  return s;
}

} // namespace isobound
