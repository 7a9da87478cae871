#include "isobound/weight_search.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <future>
#include <numbers>
#include <random>

#include "isobound/bounds.hpp"
#include "isobound/error.hpp"
#include "isobound/exact.hpp"

namespace isobound {

std::string to_string(WeightMode mode) {
  return mode == WeightMode::Real ? "real" : "hermitian";
}

WeightMode parse_weight_mode(const std::string &text) {
  if (text == "real")
    return WeightMode::Real;
  if (text == "hermitian")
    return WeightMode::Hermitian;
  throw InvalidInput("unknown weight mode '" + text + "' (expected real or hermitian)");
}

WeightScore score_weights(const HermitianMatrix &w, double zero_scale) {
  const auto values = eigenvalues_hermitian(w);
  WeightScore s;
  s.inertia = classify_inertia(values, zero_scale);
  s.bound = s.inertia.isotropic_dimension();
  const double radius = std::max(std::abs(values.front()), std::abs(values.back()));
  if (s.inertia.rank() == 0 || radius == 0.0)
    return s;
  // A minority-sign eigenvalue crossing zero lowers min(n+, n-).
  const bool pos = s.inertia.n_plus <= s.inertia.n_minus;
  const bool neg = s.inertia.n_minus <= s.inertia.n_plus;
  double margin = radius;
  for (double x : values) {
    if ((pos && x > s.inertia.tol) || (neg && x < -s.inertia.tol))
      margin = std::min(margin, std::abs(x));
  }
  s.margin = margin / radius;
  return s;
}

namespace {

class WeightState {
public:
  WeightState(const Graph &g, WeightMode mode)
      : n_(g.order()), edges_(g.edges()), mode_(mode), modulus_(edges_.size(), 1.0),
        phase_(edges_.size(), 0.0) {}

  std::size_t edge_count() const { return edges_.size(); }

  void perturb(std::size_t e, double dm, double dphi, double clamp) {
    if (mode_ == WeightMode::Real) {
      modulus_[e] = std::clamp(modulus_[e] + dm, -clamp, clamp);
      return;
    }
    double r = modulus_[e] + dm;
    double phi = phase_[e] + dphi;
    if (r < 0.0) {
      r = -r;
      phi += std::numbers::pi;
    }
    modulus_[e] = std::min(r, clamp);
    phase_[e] = std::remainder(phi, 2.0 * std::numbers::pi);
  }

  HermitianMatrix matrix() const {
    const auto N = static_cast<std::size_t>(n_);
    std::vector<Complex> m(N * N);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      auto [u, v] = edges_[e];
      const Complex z = mode_ == WeightMode::Real ? Complex(modulus_[e])
                                                  : std::polar(modulus_[e], phase_[e]);
      m[u * N + v] = z;
      m[v * N + u] = std::conj(z);
    }
    return HermitianMatrix(n_, std::move(m));
  }

private:
  int n_;
  std::vector<Edge> edges_;
  WeightMode mode_;
  std::vector<double> modulus_;
  std::vector<double> phase_;
};

double energy(const WeightScore &s) { return s.bound + 0.5 * s.margin; }

bool better(const WeightScore &a, const WeightScore &b) {
  return a.bound < b.bound || (a.bound == b.bound && a.margin < b.margin);
}

} // namespace

WeightSearchResult search_weights(const Graph &g, int target, WeightMode mode, long budget,
                                  std::uint64_t seed, const SearchOptions &opts) {
  if (budget < 1)
    throw InvalidInput("search budget must be at least 1, got " + std::to_string(budget));

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  WeightState current(g, mode);
  HermitianMatrix current_matrix = current.matrix();
  assert(validate_weight_matrix(g, current_matrix).ok());
  WeightScore current_score = score_weights(current_matrix, opts.zero_scale);

  WeightSearchResult result;
  result.target = target;
  result.seed = seed;
  result.mode = mode;
  result.evaluations = 1;
  result.best_matrix = current_matrix;
  result.best_bound = current_score.bound;
  result.best_margin = current_score.margin;
  WeightState best_state = current;
  WeightScore best_score = current_score;

  double temperature = opts.initial_temperature;
  double sigma = opts.initial_sigma;
  int window_accepts = 0, window_total = 0;

  if (opts.trace)
    opts.trace({seed, 0, current_score.bound, current_score.margin, temperature, best_score.bound});

  while (best_score.bound > target && result.evaluations < budget &&
         current.edge_count() > 0) {
    WeightState proposal = current;
    const auto e = static_cast<std::size_t>(rng() % proposal.edge_count());
    const double dm = sigma * gauss(rng);
    const double dphi = mode == WeightMode::Hermitian ? sigma * gauss(rng) : 0.0;
    proposal.perturb(e, dm, dphi, opts.weight_clamp);

    HermitianMatrix matrix = proposal.matrix();
    assert(validate_weight_matrix(g, matrix).ok());
    const WeightScore score = score_weights(matrix, opts.zero_scale);
    ++result.evaluations;

    const double delta = energy(score) - energy(current_score);
    const bool accept = delta <= 0.0 || unit(rng) < std::exp(-delta / temperature);
    ++window_total;
    if (accept) {
      ++window_accepts;
      current = std::move(proposal);
      current_score = score;
      if (better(score, best_score)) {
        best_score = score;
        best_state = current;
        result.best_matrix = std::move(matrix);
        result.best_bound = score.bound;
        result.best_margin = score.margin;
      }
    }

    if (window_total == 50) {
      const double rate = static_cast<double>(window_accepts) / window_total;
      if (rate > 0.4)
        sigma *= 1.2;
      else if (rate < 0.2)
        sigma *= 0.8;
      sigma = std::clamp(sigma, 1e-3, 5.0);
      window_accepts = window_total = 0;
    }

    temperature *= opts.cooling;
    if (temperature < opts.reheat_below) {
      temperature = opts.initial_temperature;
      current = best_state;
      current_score = best_score;
    }

    if (opts.trace)
      opts.trace({seed, result.evaluations - 1, score.bound, score.margin, temperature,
                  best_score.bound});
  }

  result.reached_target = result.best_bound <= target;
  return result;
}

std::vector<WeightSearchResult> search_weights_restarts(const Graph &g, int target,
                                                        WeightMode mode, long budget,
                                                        std::uint64_t first_seed, int restarts,
                                                        const SearchOptions &opts) {
  if (restarts < 1)
    throw InvalidInput("restarts must be at least 1");
  std::vector<WeightSearchResult> results;
  // Traced runs stay sequential so records do not interleave.
  if (opts.trace || restarts == 1) {
    for (int r = 0; r < restarts; ++r)
      results.push_back(search_weights(g, target, mode, budget, first_seed + r, opts));
  } else {
    std::vector<std::future<WeightSearchResult>> jobs;
    for (int r = 0; r < restarts; ++r)
      jobs.push_back(std::async(std::launch::async, [&, r] {
        return search_weights(g, target, mode, budget, first_seed + r, opts);
      }));
    for (auto &job : jobs)
      results.push_back(job.get());
  }

  auto best = std::min_element(results.begin(), results.end(), [](const auto &a, const auto &b) {
    return a.best_bound < b.best_bound || (a.best_bound == b.best_bound && a.seed < b.seed);
  });
  std::rotate(results.begin(), best, best + 1);
  return results;
}

HermitianMatrix bipartite_tight_weights(const Graph &g) {
  const auto check = is_bipartite(g);
  if (!check.bipartite)
    throw InvalidInput("graph is not bipartite");
  const auto matching = maximum_matching_bipartite(g, check.side);
  const int n = g.order();
  std::vector<double> w(static_cast<std::size_t>(n) * n, 0.0);
  for (auto [u, v] : matching) {
    w[static_cast<std::size_t>(u) * n + v] = 1.0;
    w[static_cast<std::size_t>(v) * n + u] = 1.0;
  }
  return HermitianMatrix(n, w);
}

} // namespace isobound
