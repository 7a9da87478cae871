#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isobound/eigen.hpp"
#include "isobound/graph.hpp"
#include "isobound/hermitian.hpp"

namespace isobound {

constexpr double kFloorEpsilon = 1e-9;

struct BoundValue {
  std::string name;
  double value = 0.0;
  /// floor(value + 1e-9); empty when not applicable.
  std::optional<int> integer_cap;
  bool applicable = false;
  std::string reason;

  static BoundValue make(std::string name, double value, std::string reason = {});
  static BoundValue inapplicable(std::string name, std::string reason);
};

/// n0(W) + min(n+(W), n-(W)).
int inertia_bound(const HermitianMatrix &w, double zero_scale = kDefaultZeroScale);

struct WeightViolation {
  Vertex u = 0;
  Vertex v = 0;
  Complex value;
};

struct WeightCheck {
  std::vector<WeightViolation> violations;
  bool ok() const { return violations.empty(); }
};

constexpr double kWeightSupportTolerance = 1e-12;

/// A valid weight matrix vanishes on the diagonal and on non-edges. Throws
/// DimensionMismatch when w.dim() != g.order().
WeightCheck validate_weight_matrix(const Graph &g, const HermitianMatrix &w);

/// n |lambda_min| / (Delta + |lambda_min|) for Delta-regular graphs, Delta >= 1.
BoundValue hoffman_bound(const Graph &g);
/// n (mu - delta) / mu with mu the Laplacian spectral radius.
BoundValue golubev_bound(const Graph &g);
/// rank(A) = n+ + n-, an upper bound on the (quantum) clique number.
BoundValue rank_bound_clique(const Graph &g, double zero_scale = kDefaultZeroScale);
/// rank of the complement's adjacency matrix, an upper bound on alpha_q(G).
BoundValue rank_complement_bound(const Graph &g, double zero_scale = kDefaultZeroScale);

struct ComplementInertia {
  bool holds = false;
  int n_minus = 0;            // of A
  int n_minus_complement = 0; // of the complement's adjacency
  int required = 0;           // n - 1
};

/// n - 1 <= n-(A) + n-(complement A).
ComplementInertia complement_inertia_check(const Graph &g,
                                           double zero_scale = kDefaultZeroScale);

} // namespace isobound
