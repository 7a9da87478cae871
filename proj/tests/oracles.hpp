#pragma once

// Independent reference computations for the unit and acceptance suites.
// Nothing here calls into the code paths it is used to check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "isobound/graph.hpp"
#include "isobound/hermitian.hpp"

namespace oracle {

using isobound::Complex;
using isobound::Graph;

/// A maximum independent set by enumerating every vertex subset (n <= 20).
inline std::vector<int> brute_force_mis(const Graph &g) {
  const int n = g.order();
  std::vector<std::uint32_t> nbr(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (g.adjacent(u, v))
        nbr[u] |= 1u << v;
  std::uint32_t best = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (__builtin_popcount(s) <= __builtin_popcount(best))
      continue;
    bool ok = true;
    for (int u = 0; u < n && ok; ++u)
      if ((s >> u & 1u) && (nbr[u] & s))
        ok = false;
    if (ok)
      best = s;
  }
  std::vector<int> out;
  for (int u = 0; u < n; ++u)
    if (best >> u & 1u)
      out.push_back(u);
  return out;
}

inline int brute_force_alpha(const Graph &g) {
  return static_cast<int>(brute_force_mis(g).size());
}

/// Largest matching by enumerating edge subsets (few edges only).
inline int brute_force_matching(const Graph &g) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  int best = 0;
  for (std::uint32_t s = 0; s < (1u << m); ++s) {
    std::vector<int> used(g.order(), 0);
    bool ok = true;
    for (int e = 0; e < m && ok; ++e)
      if (s >> e & 1u) {
        if (used[edges[e].first]++ || used[edges[e].second]++)
          ok = false;
      }
    if (ok)
      best = std::max(best, __builtin_popcount(s));
  }
  return best;
}

inline Graph random_graph(std::mt19937_64 &rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<isobound::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

/// Random graph with random order in [lo, hi] and edge density in [0.15, 0.85].
inline Graph random_graph(std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.15, 0.85);
  const int n = order(rng);
  return random_graph(rng, n, density(rng));
}

inline Graph random_bipartite(std::mt19937_64 &rng, int lo, int hi) {
  std::uniform_int_distribution<int> order(lo, hi);
  std::uniform_real_distribution<double> density(0.1, 0.7);
  const int n = order(rng);
  const double p = density(rng);
  std::bernoulli_distribution side(0.5), coin(p);
  std::vector<int> part(n);
  for (auto &s : part)
    s = side(rng);
  std::vector<isobound::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (part[u] != part[v] && coin(rng))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline std::vector<Complex> random_complex_matrix(std::mt19937_64 &rng, int n) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> m(static_cast<std::size_t>(n) * n);
  for (auto &z : m)
    z = {gauss(rng), gauss(rng)};
  return m;
}

inline isobound::HermitianMatrix random_hermitian(std::mt19937_64 &rng, int n) {
  auto a = random_complex_matrix(rng, n);
  std::vector<Complex> h(a.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      h[i * n + j] = 0.5 * (a[i * n + j] + std::conj(a[j * n + i]));
  return isobound::HermitianMatrix(n, h);
}

/// Columns of a random unitary via modified Gram-Schmidt.
inline std::vector<std::vector<Complex>> random_unitary_columns(std::mt19937_64 &rng, int n) {
  const auto a = random_complex_matrix(rng, n);
  std::vector<std::vector<Complex>> q;
  for (int c = 0; c < n; ++c) {
    std::vector<Complex> v(n);
    for (int i = 0; i < n; ++i)
      v[i] = a[i * n + c];
    for (const auto &u : q) {
      Complex dot = 0.0;
      for (int i = 0; i < n; ++i)
        dot += std::conj(u[i]) * v[i];
      for (int i = 0; i < n; ++i)
        v[i] -= dot * u[i];
    }
    double norm = 0.0;
    for (const auto &z : v)
      norm += std::norm(z);
    norm = std::sqrt(norm);
    for (auto &z : v)
      z /= norm;
    q.push_back(std::move(v));
  }
  return q;
}

/// sum_k |v_k><v_k| over the given columns.
inline isobound::HermitianMatrix projector_onto(const std::vector<std::vector<Complex>> &cols,
                                                int d) {
  std::vector<Complex> p(static_cast<std::size_t>(d) * d);
  for (const auto &v : cols)
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j)
        p[i * d + j] += v[i] * std::conj(v[j]);
  return isobound::HermitianMatrix(d, p);
}

/// U diag(values) U* for a random unitary U: known spectrum, and hence
/// known inertia.
inline isobound::HermitianMatrix with_spectrum(std::mt19937_64 &rng,
                                               const std::vector<double> &values) {
  const int n = static_cast<int>(values.size());
  const auto u = random_unitary_columns(rng, n);
  std::vector<Complex> m(static_cast<std::size_t>(n) * n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i * n + j] += values[k] * u[k][i] * std::conj(u[k][j]);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const Complex avg = 0.5 * (m[i * n + j] + std::conj(m[j * n + i]));
      m[i * n + j] = avg;
      m[j * n + i] = std::conj(avg);
    }
  for (int i = 0; i < n; ++i)
    m[i * n + i] = m[i * n + i].real();
  return isobound::HermitianMatrix(n, m);
}

/// Random valid weight matrix: complex Gaussian weights on edges only.
inline isobound::HermitianMatrix random_weights(std::mt19937_64 &rng, const Graph &g,
                                                bool complex_weights = true) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const int n = g.order();
  std::vector<Complex> m(static_cast<std::size_t>(n) * n);
  for (auto [u, v] : g.edges()) {
    const Complex z = complex_weights ? Complex(gauss(rng), gauss(rng)) : Complex(gauss(rng));
    m[u * n + v] = z;
    m[v * n + u] = std::conj(z);
  }
  return isobound::HermitianMatrix(n, m);
}

/// Inertia counts from a known spectrum.
struct Counts {
  int plus = 0, zero = 0, minus = 0;
};
inline Counts count_signs(const std::vector<double> &values) {
  Counts c;
  for (double x : values)
    (x > 0 ? c.plus : x < 0 ? c.minus : c.zero)++;
  return c;
}

} // namespace oracle
