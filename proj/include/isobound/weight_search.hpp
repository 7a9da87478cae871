#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "isobound/eigen.hpp"
#include "isobound/graph.hpp"
#include "isobound/hermitian.hpp"

namespace isobound {

enum class WeightMode { Real, Hermitian };

std::string to_string(WeightMode mode);
/// "real" / "hermitian"; throws InvalidInput otherwise.
WeightMode parse_weight_mode(const std::string &text);

struct SearchTraceRecord {
  std::uint64_t seed = 0;
  long step = 0;
  int bound = 0;
  double margin = 0.0;
  double temperature = 0.0;
  int best_bound = 0;
};

struct SearchOptions {
  double zero_scale = kDefaultZeroScale;
  double initial_sigma = 0.5;
  double initial_temperature = 0.25;
  double cooling = 0.995;
  /// Below this temperature the chain restarts from the best state at the
  /// initial temperature.
  double reheat_below = 1e-3;
  double weight_clamp = 10.0;
  /// Called after every evaluation when set.
  std::function<void(const SearchTraceRecord &)> trace;
};

struct WeightSearchResult {
  HermitianMatrix best_matrix = HermitianMatrix::zeros(1);
  int best_bound = 0;
  /// Smallest |lambda| of the minority sign class relative to the spectral
  /// radius, at the best matrix.
  double best_margin = 0.0;
  int target = 0;
  bool reached_target = false;
  long evaluations = 0;
  std::uint64_t seed = 0;
  WeightMode mode = WeightMode::Real;
};

struct WeightScore {
  int bound = 0;
  double margin = 0.0;
  Inertia inertia;
};

/// Bound and minority-sign margin of a candidate weight matrix.
WeightScore score_weights(const HermitianMatrix &w, double zero_scale = kDefaultZeroScale);

/// Simulated annealing over edge weights, starting from the adjacency matrix.
/// Minimises (inertia bound, margin) lexicographically and stops early once
/// the bound reaches target. Deterministic for a given seed.
WeightSearchResult search_weights(const Graph &g, int target, WeightMode mode, long budget,
                                  std::uint64_t seed, const SearchOptions &opts = {});

/// Independent chains for seeds first_seed .. first_seed + restarts - 1,
/// run concurrently. The best result (lowest bound, then lowest seed) comes
/// first; the remaining results follow in seed order.
std::vector<WeightSearchResult> search_weights_restarts(const Graph &g, int target,
                                                        WeightMode mode, long budget,
                                                        std::uint64_t first_seed, int restarts,
                                                        const SearchOptions &opts = {});

/// Weight 1 on the edges of a maximum matching, 0 elsewhere. Its inertia is
/// (mu, n - 2 mu, mu), so the inertia bound is n - mu = alpha. Throws
/// InvalidInput for non-bipartite graphs.
HermitianMatrix bipartite_tight_weights(const Graph &g);

} // namespace isobound
