#include "isobound/bounds.hpp"

#include <cmath>

#include "isobound/error.hpp"

namespace isobound {

BoundValue BoundValue::make(std::string name, double value, std::string reason) {
  BoundValue b;
  b.name = std::move(name);
  b.value = value;
  b.integer_cap = static_cast<int>(std::floor(value + kFloorEpsilon));
  b.applicable = true;
  b.reason = std::move(reason);
  return b;
}

BoundValue BoundValue::inapplicable(std::string name, std::string reason) {
  BoundValue b;
  b.name = std::move(name);
  b.reason = std::move(reason);
  return b;
}

int inertia_bound(const HermitianMatrix &w, double zero_scale) {
  return inertia(w, zero_scale).isotropic_dimension();
}

WeightCheck validate_weight_matrix(const Graph &g, const HermitianMatrix &w) {
  if (w.dim() != g.order())
    throw DimensionMismatch("weight matrix dimension " + std::to_string(w.dim()) +
                            " does not match graph order " + std::to_string(g.order()));
  WeightCheck check;
  for (int u = 0; u < g.order(); ++u)
    for (int v = u; v < g.order(); ++v) {
      if (u != v && g.adjacent(u, v))
        continue;
      if (std::abs(w(u, v)) > kWeightSupportTolerance)
        check.violations.push_back({u, v, w(u, v)});
    }
  return check;
}

BoundValue hoffman_bound(const Graph &g) {
  const auto delta = is_regular(g);
  if (!delta)
    return BoundValue::inapplicable("hoffman", "graph is not regular");
  if (*delta == 0)
    return BoundValue::inapplicable("hoffman", "graph has no edges");
  const auto values = eigenvalues_hermitian(adjacency_matrix(g));
  const double lmin = std::abs(values.front());
  return BoundValue::make("hoffman", g.order() * lmin / (*delta + lmin));
}

BoundValue golubev_bound(const Graph &g) {
  if (g.size() == 0)
    return BoundValue::inapplicable("golubev", "graph has no edges");
  const auto values = eigenvalues_hermitian(laplacian(g));
  const double mu = values.back();
  const double delta = min_degree(g);
  return BoundValue::make("golubev", g.order() * (mu - delta) / mu);
}

BoundValue rank_bound_clique(const Graph &g, double zero_scale) {
  if (g.size() == 0)
    return BoundValue::inapplicable("rank", "graph has no edges");
  return BoundValue::make("rank", inertia(adjacency_matrix(g), zero_scale).rank());
}

BoundValue rank_complement_bound(const Graph &g, double zero_scale) {
  const Graph co = complement(g);
  if (co.size() == 0)
    return BoundValue::inapplicable("rank_complement", "complement has no edges");
  return BoundValue::make("rank_complement", inertia(adjacency_matrix(co), zero_scale).rank());
}

ComplementInertia complement_inertia_check(const Graph &g, double zero_scale) {
  ComplementInertia out;
  out.n_minus = inertia(adjacency_matrix(g), zero_scale).n_minus;
  out.n_minus_complement = inertia(adjacency_matrix(complement(g)), zero_scale).n_minus;
  out.required = g.order() - 1;
  out.holds = out.n_minus + out.n_minus_complement >= out.required;
  return out;
}

} // namespace isobound
