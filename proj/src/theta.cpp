#include "isobound/theta.hpp"

#include <cmath>
#include <limits>

#include "isobound/eigen.hpp"
#include "isobound/error.hpp"

namespace isobound {

HermitianMatrix theta_dual_matrix(const Graph &g, std::span<const double> edge_values) {
  const auto edges = g.edges();
  if (edge_values.size() != edges.size())
    throw DimensionMismatch("expected one value per edge");
  const int n = g.order();
  std::vector<double> b(static_cast<std::size_t>(n) * n, 1.0);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    b[static_cast<std::size_t>(u) * n + v] = edge_values[e];
    b[static_cast<std::size_t>(v) * n + u] = edge_values[e];
  }
  return HermitianMatrix(n, b);
}

bool is_theta_dual_feasible(const Graph &g, const HermitianMatrix &m, double tol) {
  if (m.dim() != g.order() || !m.is_real())
    return false;
  for (int u = 0; u < g.order(); ++u)
    for (int v = 0; v < g.order(); ++v)
      if ((u == v || !g.adjacent(u, v)) && std::abs(m(u, v) - 1.0) > tol)
        return false;
  return true;
}

ThetaResult lovasz_theta(const Graph &g, const ThetaOptions &opts) {
  const int n = g.order();
  if (n > kThetaOrderLimit)
    throw SizeLimitError("theta limited to " + std::to_string(kThetaOrderLimit) +
                         " vertices, got " + std::to_string(n));
  const auto edges = g.edges();
  std::vector<double> x(edges.size(), 0.0);

  ThetaResult result;
  if (edges.empty()) {
    // All-ones matrix: lambda_max = n.
    result.value = n;
    result.certificate_matrix = theta_dual_matrix(g, x);
    if (opts.keep_history)
      result.history.push_back(result.value);
    return result;
  }

  // Smoothed objective f_mu(x) = mu log sum_i exp(lambda_i / mu), an upper
  // bound on lambda_max within mu log n, minimised by accelerated gradient
  // steps while mu shrinks. Its gradient averages v v* over the near-top
  // spectrum with softmax weights, which copes with the multiple top
  // eigenvalues typical at the optimum.
  const std::size_t m = edges.size();
  double best = std::numeric_limits<double>::infinity();
  double reference = best;
  int stall = 0;
  std::vector<double> best_x = x, prev = x, y = x, grad(m), weights(n);
  std::vector<double> trace;
  double momentum = 1.0;
  double gain = 1.0, last_f = std::numeric_limits<double>::infinity();
  double mu = -1.0;
  double stage_start = std::numeric_limits<double>::infinity();
  int stage_iters = 0;

  for (int k = 1; k <= opts.max_iters; ++k) {
    result.iterations = k;
    const auto es = eigh(theta_dual_matrix(g, y));
    const double lmax = es.values.back();
    if (mu < 0)
      mu = opts.smoothing * std::max(1.0, std::abs(lmax));
    if (lmax < best) {
      best = lmax;
      best_x = y;
    }
    trace.push_back(best);
    // Stalling only counts once the smoothing is finer than the tolerance;
    // before that a slow stage says little about the optimum.
    if (best < reference - opts.tol) {
      reference = best;
      stall = 0;
    } else if (mu <= opts.tol && ++stall >= opts.stall_window) {
      break;
    }

    double z = 0.0;
    for (int i = 0; i < n; ++i)
      z += weights[i] = std::exp((es.values[i] - lmax) / mu);
    const double f = lmax + mu * std::log(z);
    std::fill(grad.begin(), grad.end(), 0.0);
    for (int i = 0; i < n; ++i) {
      const double wi = weights[i] / z;
      if (wi < 1e-14)
        continue;
      const auto vec = es.vector(i);
      // d lambda_i / d x_uv = 2 Re(v_u conj(v_v)).
      for (std::size_t e = 0; e < m; ++e)
        grad[e] += 2.0 * wi * std::real(vec[edges[e].first] * std::conj(vec[edges[e].second]));
    }

    // The gradient of f_mu is (2 / mu)-Lipschitz in the edge variables, but
    // that is a worst case: grow the step while the smoothed value keeps
    // falling and back off, dropping momentum, when it rises.
    const bool rose = f > last_f;
    gain = rose ? std::max(1.0, gain * 0.5) : std::min(opts.max_gain, gain * 1.05);
    last_f = f;
    const double step = opts.step_scale * gain * mu / 2.0;
    std::vector<double> next(m);
    double restart = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
      next[e] = y[e] - step * grad[e];
      restart += (y[e] - next[e]) * (next[e] - prev[e]);
    }
    double t_next = 0.5 * (1.0 + std::sqrt(1.0 + 4.0 * momentum * momentum));
    if (restart > 0.0 || rose) {
      momentum = 1.0;
      t_next = 1.0;
    }
    const double beta = (momentum - 1.0) / t_next;
    for (std::size_t e = 0; e < m; ++e)
      y[e] = next[e] + beta * (next[e] - prev[e]);
    prev.swap(next);
    momentum = t_next;

    // Shrink mu once the current smoothed problem stops making progress.
    if (++stage_iters >= opts.stage_min_iters) {
      if (stage_start - f < opts.stage_progress * mu) {
        mu = std::max(mu * 0.5, opts.min_smoothing);
        last_f = std::numeric_limits<double>::infinity();
        momentum = 1.0;
        y = prev;
        stage_start = std::numeric_limits<double>::infinity();
        stage_iters = 0;
        continue;
      }
      stage_start = f;
      stage_iters = 0;
    } else if (stage_iters == 1) {
      stage_start = f;
    }
  }

  result.certificate_matrix = theta_dual_matrix(g, best_x);
  // Report the eigenvalue of the stored certificate itself.
  result.value = eigenvalues_hermitian(result.certificate_matrix).back();
  const std::size_t window = std::min<std::size_t>(trace.size() - 1, opts.stall_window);
  result.residual = trace[trace.size() - 1 - window] - trace.back();
  if (opts.keep_history)
    result.history = std::move(trace);
  return result;
}

BoundValue theta_regular_cap(const Graph &g) {
  BoundValue b = hoffman_bound(g);
  b.name = "theta_regular_cap";
  return b;
}

TopEigenpair power_iteration_top(const HermitianMatrix &m, double tol, int max_iters) {
  const int n = m.dim();
  double shift = 0.0;
  for (int i = 0; i < n; ++i) {
    double row = 0.0;
    for (int j = 0; j < n; ++j)
      row += std::abs(m(i, j));
    shift = std::max(shift, row);
  }
  shift += 1.0;

  // Deterministic start with a small spread so it is not orthogonal to the
  // top eigenspace of structured matrices.
  std::vector<Complex> v(n), w(n);
  for (int i = 0; i < n; ++i)
    v[i] = 1.0 + 0.01 * i;
  auto normalize = [](std::vector<Complex> &z) {
    double s = 0.0;
    for (const auto &c : z)
      s += std::norm(c);
    s = std::sqrt(s);
    for (auto &c : z)
      c /= s;
  };
  normalize(v);

  TopEigenpair out;
  double lambda = 0.0;
  for (int it = 1; it <= max_iters; ++it) {
    out.iterations = it;
    for (int i = 0; i < n; ++i) {
      Complex s = shift * v[i];
      for (int j = 0; j < n; ++j)
        s += m(i, j) * v[j];
      w[i] = s;
    }
    Complex rayleigh = 0.0;
    for (int i = 0; i < n; ++i)
      rayleigh += std::conj(v[i]) * w[i];
    const double next = rayleigh.real() - shift;
    normalize(w);
    double diff = 0.0;
    for (int i = 0; i < n; ++i)
      diff += std::norm(w[i] - v[i]);
    v.swap(w);
    const bool settled = std::abs(next - lambda) <= tol * std::max(1.0, std::abs(next)) &&
                         std::sqrt(diff) <= std::sqrt(tol);
    lambda = next;
    if (settled)
      break;
  }
  out.value = lambda;
  out.vector = std::move(v);
  return out;
}

} // namespace isobound
