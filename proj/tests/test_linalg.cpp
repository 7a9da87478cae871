#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "isobound/catalog.hpp"
#include "isobound/eigen.hpp"
#include "isobound/error.hpp"
#include "isobound/hermitian.hpp"
#include "oracles.hpp"

using namespace isobound;

namespace {

void check_spectrum(const std::vector<double> &got, std::vector<double> want, double tol) {
  std::sort(want.begin(), want.end());
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i)
    CHECK(std::abs(got[i] - want[i]) < tol);
}

bool counts_equal(const Inertia &i, int plus, int zero, int minus) {
  return i.n_plus == plus && i.n_zero == zero && i.n_minus == minus;
}

} // namespace

TEST_CASE("construction enforces conjugate symmetry") {
  CHECK_THROWS_AS(HermitianMatrix(2, std::vector<double>{0, 1, 2, 0}), InvalidInput);
  CHECK_THROWS_AS(HermitianMatrix(2, std::vector<Complex>{{0, 1}, 0, 0, 0}), InvalidInput);
  CHECK_THROWS_AS(HermitianMatrix(2, std::vector<double>{0, 1, 1}), DimensionMismatch);
  CHECK_THROWS_AS(HermitianMatrix(0, std::vector<double>{}), InvalidInput);
  // Within tolerance: stored as the exact average.
  HermitianMatrix m(2, std::vector<Complex>{0, {1, 1e-13}, {1, 0}, 0});
  CHECK(m(0, 1) == std::conj(m(1, 0)));
}

TEST_CASE("eigenvalue examples") {
  check_spectrum(eigenvalues_hermitian(HermitianMatrix::zeros(4)), {0, 0, 0, 0}, 1e-15);
  check_spectrum(eigenvalues_hermitian(adjacency_matrix(make_complete(2))), {-1, 1}, 1e-12);
  std::vector<double> clebsch(16, 1.0);
  std::fill_n(clebsch.begin(), 5, -3.0);
  clebsch.back() = 5.0;
  check_spectrum(eigenvalues_hermitian(adjacency_matrix(catalog_graph("clebsch"))), clebsch,
                 1e-8);
}

TEST_CASE("inertia examples") {
  CHECK(counts_equal(inertia(adjacency_matrix(catalog_graph("clebsch"))), 11, 0, 5));
  CHECK(counts_equal(inertia(HermitianMatrix::zeros(7)), 0, 7, 0));
  CHECK(counts_equal(inertia(adjacency_matrix(make_paley(17))), 9, 0, 8));
  auto i = inertia(adjacency_matrix(catalog_graph("clebsch")));
  CHECK(i.tol == doctest::Approx(5e-8));
  CHECK(inertia(HermitianMatrix::zeros(3)).tol == 1e-8);
}

TEST_CASE("relative zero threshold is scale invariant") {
  auto a = adjacency_matrix(make_path(5)); // eigenvalue 0 once
  std::vector<Complex> scaled(a.entries().begin(), a.entries().end());
  for (auto &z : scaled)
    z *= 1e6;
  auto big = inertia(HermitianMatrix(5, scaled));
  CHECK(counts_equal(big, 2, 1, 2));
  CHECK(counts_equal(inertia(a), 2, 1, 2));
}

TEST_CASE("petersen spectrum matches kneser construction") {
  check_spectrum(eigenvalues_hermitian(adjacency_matrix(make_kneser(5, 2))),
                 {3, 1, 1, 1, 1, 1, -2, -2, -2, -2}, 1e-10);
}

TEST_CASE("paley 17 conference spectrum") {
  const double r = (-1 + std::sqrt(17.0)) / 2, s = (-1 - std::sqrt(17.0)) / 2;
  std::vector<double> want{8};
  for (int k = 0; k < 8; ++k) {
    want.push_back(r);
    want.push_back(s);
  }
  check_spectrum(eigenvalues_hermitian(adjacency_matrix(make_paley(17))), want, 1e-9);
}

TEST_CASE("cycle spectra match the closed form") {
  for (int n = 3; n <= 12; ++n) {
    std::vector<double> want;
    for (int j = 0; j < n; ++j)
      want.push_back(2 * std::cos(2 * std::numbers::pi * j / n));
    check_spectrum(eigenvalues_hermitian(adjacency_matrix(make_cycle(n))), want, 1e-8);
  }
}

TEST_CASE("laplacian") {
  check_spectrum(eigenvalues_hermitian(laplacian(make_complete(2))), {0, 2}, 1e-12);
  check_spectrum(eigenvalues_hermitian(laplacian(make_cycle(4))), {0, 2, 2, 4}, 1e-12);
  auto l = laplacian(make_kneser(5, 2));
  for (int i = 0; i < 10; ++i) {
    Complex row = 0.0;
    for (int j = 0; j < 10; ++j)
      row += l(i, j);
    CHECK(std::abs(row) == 0.0);
  }
}

TEST_CASE("tensor with identity") {
  auto c5 = adjacency_matrix(make_cycle(5));
  CHECK(tensor_with_identity(c5, 1) == c5);
  CHECK(counts_equal(inertia(tensor_with_identity(adjacency_matrix(make_complete(2)), 3)), 3, 0,
                     3));
  CHECK(counts_equal(inertia(c5), 3, 0, 2));
  CHECK(counts_equal(inertia(tensor_with_identity(c5, 2)), 6, 0, 4));
  CHECK_THROWS_AS(tensor_with_identity(c5, 0), InvalidInput);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<int> dim(1, 8);
    const int n = dim(rng);
    auto m = oracle::random_hermitian(rng, n);
    auto base = inertia(m);
    for (int d = 1; d <= 3; ++d) {
      auto t = inertia(tensor_with_identity(m, d));
      CHECK(counts_equal(t, d * base.n_plus, d * base.n_zero, d * base.n_minus));
    }
  }
}

TEST_CASE("trace and Frobenius identities") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    std::uniform_int_distribution<int> dim(1, 12);
    const int n = dim(rng);
    auto m = oracle::random_hermitian(rng, n);
    auto ev = eigenvalues_hermitian(m);
    double sum = 0, sq = 0;
    for (double x : ev) {
      sum += x;
      sq += x * x;
    }
    CHECK(std::abs(sum - m.trace().real()) < 1e-8 * n);
    const double f = m.frobenius_norm();
    CHECK(std::abs(sq - f * f) < 1e-8 * n);
    CHECK(std::is_sorted(ev.begin(), ev.end()));
  }
}

TEST_CASE("eigenvectors satisfy M v = lambda v and are orthonormal") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 2 + trial % 9;
    auto m = oracle::random_hermitian(rng, n);
    auto es = eigh(m);
    for (int k = 0; k < n; ++k) {
      auto v = es.vector(k);
      double res = 0;
      for (int i = 0; i < n; ++i) {
        Complex s = 0;
        for (int j = 0; j < n; ++j)
          s += m(i, j) * v[j];
        res += std::norm(s - es.values[k] * v[i]);
      }
      CHECK(std::sqrt(res) < 1e-9 * (1 + m.frobenius_norm()));
      for (int l = 0; l < n; ++l) {
        Complex dot = 0;
        auto w = es.vector(l);
        for (int i = 0; i < n; ++i)
          dot += std::conj(v[i]) * w[i];
        CHECK(std::abs(dot - (k == l ? 1.0 : 0.0)) < 1e-10);
      }
    }
  }
}

TEST_CASE("non-convergence reports a residual") {
  std::mt19937_64 rng(9);
  auto m = oracle::random_hermitian(rng, 8);
  try {
    eigh(m, JacobiOptions{1e-12, 1});
    FAIL("one sweep should not converge");
  } catch (const NumericalFailure &e) {
    CHECK(e.residual() > 0);
  }
}

TEST_CASE("Sylvester's law of inertia") {
  std::mt19937_64 rng(2718);
  std::uniform_int_distribution<int> dim(1, 10);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = dim(rng);
    // Prescribed spectrum with exact zeros, so n0 is exercised too.
    std::uniform_int_distribution<int> sign(-1, 1);
    std::uniform_real_distribution<double> mag(0.5, 3.0);
    std::vector<double> values(n);
    for (auto &x : values)
      x = sign(rng) * mag(rng);
    auto m = oracle::with_spectrum(rng, values);
    auto want = oracle::count_signs(values);
    auto before = inertia(m);
    CHECK(counts_equal(before, want.plus, want.zero, want.minus));
    // S = I + 0.3 G keeps the condition number moderate.
    auto s = oracle::random_complex_matrix(rng, n);
    for (auto &z : s)
      z *= 0.3;
    for (int i = 0; i < n; ++i)
      s[i * n + i] += 1.0;
    auto after = inertia(congruence(m, s));
    CHECK(after.same_counts(before));
  }
}

TEST_CASE("trace inner product") {
  auto a = adjacency_matrix(make_cycle(4));
  CHECK(trace_inner(a, a).real() == doctest::Approx(8.0));
  CHECK(trace_inner(a, HermitianMatrix::identity(4)) == Complex(0.0));
  CHECK_THROWS_AS(trace_inner(a, HermitianMatrix::identity(3)), DimensionMismatch);
}

TEST_CASE("eigenvalues agree with an independent solver") {
  std::mt19937_64 rng(1618);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 1 + trial % 24;
    auto m = oracle::random_hermitian(rng, n);
    Eigen::MatrixXcd e(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        e(i, j) = m(i, j);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> ref(e, Eigen::EigenvaluesOnly);
    auto got = eigenvalues_hermitian(m);
    for (int i = 0; i < n; ++i)
      CHECK(std::abs(got[i] - ref.eigenvalues()[i]) < 1e-9 * (1 + m.frobenius_norm()));
  }
}
