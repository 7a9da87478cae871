#pragma once

#include <span>
#include <vector>

#include "isobound/bounds.hpp"
#include "isobound/graph.hpp"
#include "isobound/hermitian.hpp"

namespace isobound {

constexpr int kThetaOrderLimit = 32;

struct ThetaOptions {
  int max_iters = 5000;
  /// Stop once the best value improves by less than tol over stall_window
  /// consecutive iterations.
  double tol = 1e-4;
  int stall_window = 200;
  /// Step c * mu / 2, the inverse Lipschitz constant of the smoothed
  /// objective times c.
  double step_scale = 1.0;
  /// Cap on the adaptive step multiplier.
  double max_gain = 16.0;
  /// Initial smoothing mu relative to max(1, |lambda_max|) at the start.
  double smoothing = 0.05;
  double min_smoothing = 1e-7;
  /// mu halves when the smoothed value drops by less than stage_progress * mu
  /// over stage_min_iters iterations.
  int stage_min_iters = 20;
  double stage_progress = 1e-3;
  bool keep_history = true;
};

struct ThetaResult {
  /// lambda_max(certificate_matrix), an upper estimate of theta(G).
  double value = 0.0;
  int iterations = 0;
  /// Improvement of the best value over the final stall window.
  double residual = 0.0;
  /// Real symmetric, 1 on the diagonal and on non-edges.
  HermitianMatrix certificate_matrix = HermitianMatrix::zeros(1);
  /// Best-so-far value after each iteration.
  std::vector<double> history;
};

/// Lovasz theta from the dual side: minimise lambda_max(B) over symmetric B
/// fixed to 1 on the diagonal and on non-edges, free on edges, by accelerated
/// descent on a log-sum-exp smoothing of lambda_max. Every iterate is feasible, so the returned value is
/// an upper bound on theta up to eigensolver error. Throws SizeLimitError for
/// n > 32.
ThetaResult lovasz_theta(const Graph &g, const ThetaOptions &opts = {});

/// The matrix with the fixed entries of the dual program and the given values
/// on edges (in Graph::edges() order).
HermitianMatrix theta_dual_matrix(const Graph &g, std::span<const double> edge_values);

/// True when m has 1 on the diagonal and at every non-edge of g (within tol).
bool is_theta_dual_feasible(const Graph &g, const HermitianMatrix &m, double tol = 1e-12);

/// Hoffman's ratio for regular graphs, which also bounds theta from above.
BoundValue theta_regular_cap(const Graph &g);

struct TopEigenpair {
  double value = 0.0;
  std::vector<Complex> vector;
  int iterations = 0;
};

/// Power iteration on m + shift * I with shift = 1 + max absolute row sum.
TopEigenpair power_iteration_top(const HermitianMatrix &m, double tol = 1e-10,
                                 int max_iters = 10000);

} // namespace isobound
