#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isobound/bounds.hpp"
#include "isobound/eigen.hpp"
#include "isobound/graph.hpp"
#include "isobound/theta.hpp"
#include "isobound/weight_search.hpp"

namespace isobound {

/// Why alpha_q(G) = alpha(G) is known to hold, cheapest reason first.
enum class Certification { InertiaTight, HoffmanFloorTight, ThetaFloorTight, Unknown };

std::string to_string(Certification c);

constexpr double kThetaSlack = 5e-3;

struct ReportOptions {
  double zero_scale = kDefaultZeroScale;
  bool include_theta = true;
  ThetaOptions theta;
  /// Weight search when the unweighted inertia bound is not tight; 0 disables.
  long search_budget = 0;
  WeightMode mode = WeightMode::Real;
  std::uint64_t seed = 0;
  int restarts = 1;
  /// Caller-supplied weight matrix; must be valid for the graph.
  std::optional<HermitianMatrix> weights;
};

struct WeightSummary {
  std::string source; // "supplied", "matching", "search"
  WeightMode mode = WeightMode::Real;
  std::uint64_t seed = 0;
  long budget = 0;
  long evaluations = 0;
  int best_bound = 0;
  bool reached_target = false;
};

struct ThetaSummary {
  int iterations = 0;
  double residual = 0.0;
};

struct BoundReport {
  std::string graph;
  int n = 0;
  int m = 0;
  int alpha = 0;
  std::vector<Vertex> alpha_witness;
  Inertia inertia;
  /// inertia, inertia_weighted (when searched or supplied), hoffman, golubev,
  /// theta, rank_complement.
  std::vector<BoundValue> bounds;
  Certification certification = Certification::Unknown;
  std::string certification_reason;
  std::optional<WeightSummary> weights;
  std::optional<ThetaSummary> theta;
  double zero_scale = kDefaultZeroScale;
  double theta_slack = kThetaSlack;
  double floor_epsilon = kFloorEpsilon;
  double theta_tol = 0.0;

  const BoundValue *find(const std::string &name) const;
};

/// Exact alpha, the bound chain and the certification verdict. Throws
/// SizeLimitError beyond 64 vertices; theta is skipped with a reason beyond
/// 32. Throws std::logic_error if alpha exceeds any applicable integer cap.
BoundReport certify_alpha_q(const Graph &g, const ReportOptions &opts = {});

/// Stable field order; deterministic for fixed inputs and seeds.
std::string report_to_json(const BoundReport &report, int indent = 2);
std::string report_to_table(const BoundReport &report);

} // namespace isobound
