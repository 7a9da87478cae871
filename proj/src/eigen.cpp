#include "isobound/eigen.hpp"

#include <cmath>
#include <numeric>

#include "isobound/error.hpp"

namespace isobound {

namespace {

inline double conj_of(double x) { return x; }
inline Complex conj_of(const Complex &x) { return std::conj(x); }
inline double abs2(double x) { return x * x; }
inline double abs2(const Complex &x) { return std::norm(x); }

template <class T>
Eigensystem jacobi(int n, std::vector<T> a, bool want_vectors, const JacobiOptions &opts,
                   double frobenius) {
  const auto N = static_cast<std::size_t>(n);
  auto at = [&](std::size_t i, std::size_t j) -> T & { return a[i * N + j]; };
  std::vector<T> v;
  if (want_vectors) {
    v.assign(N * N, T{});
    for (std::size_t i = 0; i < N; ++i)
      v[i * N + i] = T{1};
  }

  const double threshold = opts.tolerance * (1.0 + frobenius);
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t j = 0; j < N; ++j)
        if (i != j)
          s += abs2(at(i, j));
    return std::sqrt(s);
  };

  int sweep = 0;
  double off = off_norm();
  while (off >= threshold) {
    if (sweep == opts.max_sweeps)
      throw NumericalFailure("Jacobi eigensolver did not converge in " +
                                 std::to_string(opts.max_sweeps) + " sweeps",
                             off);
    ++sweep;
    for (std::size_t p = 0; p + 1 < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) {
        const T apq = at(p, q);
        const double r = std::sqrt(abs2(apq));
        if (r == 0.0)
          continue;
        // J = diag(1, conj(phase)) * [[c, s], [-s, c]] zeroes (p, q).
        const T phase = apq / r;
        const T phase_c = conj_of(phase);
        const double app = std::real(at(p, p)), aqq = std::real(at(q, q));
        const double theta = 0.5 * std::atan2(2.0 * r, aqq - app);
        const double c = std::cos(theta), s = std::sin(theta);
        const T jqp = -s * phase_c;
        const T jqq = c * phase_c;
        // A <- A J (columns p, q).
        for (std::size_t k = 0; k < N; ++k) {
          const T akp = at(k, p), akq = at(k, q);
          at(k, p) = akp * c + akq * jqp;
          at(k, q) = akp * s + akq * jqq;
        }
        // A <- J^H A (rows p, q).
        const T jqp_c = conj_of(jqp), jqq_c = conj_of(jqq);
        for (std::size_t k = 0; k < N; ++k) {
          const T apk = at(p, k), aqk = at(q, k);
          at(p, k) = c * apk + jqp_c * aqk;
          at(q, k) = s * apk + jqq_c * aqk;
        }
        at(p, q) = T{};
        at(q, p) = T{};
        at(p, p) = std::real(at(p, p));
        at(q, q) = std::real(at(q, q));
        if (want_vectors)
          for (std::size_t k = 0; k < N; ++k) {
            const T vkp = v[k * N + p], vkq = v[k * N + q];
            v[k * N + p] = vkp * c + vkq * jqp;
            v[k * N + q] = vkp * s + vkq * jqq;
          }
      }
    off = off_norm();
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
    return std::real(at(i, i)) < std::real(at(j, j));
  });

  Eigensystem out;
  out.dim = n;
  out.sweeps = sweep;
  out.values.reserve(N);
  for (int k : order)
    out.values.push_back(std::real(at(k, k)));
  if (want_vectors) {
    out.vectors.resize(N * N);
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i)
        out.vectors[k * N + i] = Complex(v[i * N + order[k]]);
  }
  return out;
}

Eigensystem solve(const HermitianMatrix &m, bool want_vectors, const JacobiOptions &opts) {
  const auto e = m.entries();
  if (m.is_real()) {
    std::vector<double> a(e.size());
    for (std::size_t k = 0; k < e.size(); ++k)
      a[k] = e[k].real();
    return jacobi<double>(m.dim(), std::move(a), want_vectors, opts, m.frobenius_norm());
  }
  return jacobi<Complex>(m.dim(), std::vector<Complex>(e.begin(), e.end()), want_vectors, opts,
                         m.frobenius_norm());
}

} // namespace

Eigensystem eigh(const HermitianMatrix &m, const JacobiOptions &opts) {
  return solve(m, true, opts);
}

std::vector<double> eigenvalues_hermitian(const HermitianMatrix &m, const JacobiOptions &opts) {
  return solve(m, false, opts).values;
}

Inertia classify_inertia(std::span<const double> eigenvalues, double zero_scale) {
  double radius = 0.0;
  for (double x : eigenvalues)
    radius = std::max(radius, std::abs(x));
  Inertia in;
  in.tol = zero_scale * std::max(1.0, radius);
  for (double x : eigenvalues) {
    if (x > in.tol)
      ++in.n_plus;
    else if (x < -in.tol)
      ++in.n_minus;
    else
      ++in.n_zero;
  }
  return in;
}

Inertia inertia(const HermitianMatrix &m, double zero_scale) {
  const auto values = eigenvalues_hermitian(m);
  return classify_inertia(values, zero_scale);
}

} // namespace isobound
