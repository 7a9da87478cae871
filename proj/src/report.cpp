#include "isobound/report.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

#include "isobound/error.hpp"
#include "isobound/exact.hpp"

namespace isobound {

std::string to_string(Certification c) {
  switch (c) {
  case Certification::InertiaTight:
    return "INERTIA_TIGHT";
  case Certification::HoffmanFloorTight:
    return "HOFFMAN_FLOOR_TIGHT";
  case Certification::ThetaFloorTight:
    return "THETA_FLOOR_TIGHT";
  case Certification::Unknown:
    break;
  }
  return "UNKNOWN";
}

const BoundValue *BoundReport::find(const std::string &name) const {
  for (const auto &b : bounds)
    if (b.name == name)
      return &b;
  return nullptr;
}

namespace {

BoundValue weighted_bound(const Graph &g, const ReportOptions &opts, int alpha, int unweighted,
                          std::optional<WeightSummary> &summary) {
  if (opts.weights) {
    if (!validate_weight_matrix(g, *opts.weights).ok())
      throw InvalidInput("supplied weight matrix is not supported on the edges of the graph");
    const int b = inertia_bound(*opts.weights, opts.zero_scale);
    summary = WeightSummary{"supplied", WeightMode::Real, 0, 0, 1, b, b <= alpha};
    if (!opts.weights->is_real())
      summary->mode = WeightMode::Hermitian;
    return BoundValue::make("inertia_weighted", b, "supplied weight matrix");
  }
  if (unweighted <= alpha || opts.search_budget <= 0)
    return {};
  if (is_bipartite(g).bipartite) {
    const int b = inertia_bound(bipartite_tight_weights(g), opts.zero_scale);
    summary = WeightSummary{"matching", WeightMode::Real, 0, 0, 1, b, b <= alpha};
    return BoundValue::make("inertia_weighted", b, "maximum matching weights");
  }
  SearchOptions so;
  so.zero_scale = opts.zero_scale;
  const auto runs = search_weights_restarts(g, alpha, opts.mode, opts.search_budget, opts.seed,
                                            opts.restarts, so);
  const auto &best = runs.front();
  long evaluations = 0;
  for (const auto &r : runs)
    evaluations += r.evaluations;
  summary = WeightSummary{"search",        opts.mode,      best.seed,         opts.search_budget,
                          evaluations,     best.best_bound, best.reached_target};
  return BoundValue::make("inertia_weighted", best.best_bound,
                          "annealed " + to_string(opts.mode) + " weights, seed " +
                              std::to_string(best.seed));
}

} // namespace

BoundReport certify_alpha_q(const Graph &g, const ReportOptions &opts) {
  BoundReport r;
  r.graph = g.label().empty() ? "graph" : g.label();
  r.n = g.order();
  r.m = g.size();
  r.zero_scale = opts.zero_scale;
  r.theta_tol = opts.theta.tol;

  const auto witness = independence_number(g);
  r.alpha = witness.size;
  r.alpha_witness = witness.vertices;

  r.inertia = inertia(adjacency_matrix(g), opts.zero_scale);
  const int unweighted = r.inertia.isotropic_dimension();
  r.bounds.push_back(BoundValue::make("inertia", unweighted, "unweighted adjacency"));

  BoundValue weighted = weighted_bound(g, opts, r.alpha, unweighted, r.weights);
  if (!weighted.name.empty())
    r.bounds.push_back(weighted);

  const BoundValue hoffman = hoffman_bound(g);
  const BoundValue golubev = golubev_bound(g);
  r.bounds.push_back(hoffman);
  r.bounds.push_back(golubev);

  std::optional<double> theta_value;
  if (!opts.include_theta) {
    r.bounds.push_back(BoundValue::inapplicable("theta", "not requested"));
  } else if (g.order() > kThetaOrderLimit) {
    r.bounds.push_back(BoundValue::inapplicable(
        "theta", "order " + std::to_string(g.order()) + " exceeds " +
                     std::to_string(kThetaOrderLimit)));
  } else {
    ThetaOptions to = opts.theta;
    to.keep_history = false;
    const auto th = lovasz_theta(g, to);
    theta_value = th.value;
    r.theta = ThetaSummary{th.iterations, th.residual};
    r.bounds.push_back(BoundValue::make("theta", th.value, "dual eigenvalue estimate"));
  }

  r.bounds.push_back(rank_complement_bound(g, opts.zero_scale));

  for (const auto &b : r.bounds)
    if (b.applicable && b.integer_cap && r.alpha > *b.integer_cap)
      throw std::logic_error("soundness violated: alpha = " + std::to_string(r.alpha) +
                             " exceeds " + b.name + " cap " + std::to_string(*b.integer_cap));

  if (r.alpha == unweighted) {
    r.certification = Certification::InertiaTight;
    r.certification_reason = "unweighted inertia bound equals alpha";
  } else if (!weighted.name.empty() && r.alpha == *weighted.integer_cap) {
    r.certification = Certification::InertiaTight;
    r.certification_reason = "weighted inertia bound equals alpha (" + weighted.reason + ")";
  } else if (hoffman.applicable && r.alpha == *hoffman.integer_cap) {
    r.certification = Certification::HoffmanFloorTight;
    r.certification_reason = "floor of the Hoffman ratio equals alpha";
  } else if (golubev.applicable && r.alpha == *golubev.integer_cap) {
    r.certification = Certification::HoffmanFloorTight;
    r.certification_reason = "floor of the Golubev bound equals alpha";
  } else if (theta_value &&
             r.alpha == static_cast<int>(std::floor(*theta_value + kThetaSlack))) {
    r.certification = Certification::ThetaFloorTight;
    r.certification_reason = "floor of theta (with slack " + std::to_string(kThetaSlack) +
                             ") equals alpha";
  } else {
    r.certification = Certification::Unknown;
    r.certification_reason = "no bound in the chain meets alpha";
  }
  return r;
}

std::string report_to_json(const BoundReport &report, int indent) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["graph"] = report.graph;
  doc["n"] = report.n;
  doc["m"] = report.m;
  doc["alpha"] = report.alpha;
  doc["alpha_witness"] = report.alpha_witness;
  doc["inertia"] = {{"n_plus", report.inertia.n_plus},
                    {"n_zero", report.inertia.n_zero},
                    {"n_minus", report.inertia.n_minus},
                    {"tol", report.inertia.tol}};
  ordered_json bounds = ordered_json::array();
  for (const auto &b : report.bounds) {
    ordered_json j;
    j["name"] = b.name;
    j["applicable"] = b.applicable;
    j["value"] = b.applicable ? ordered_json(b.value) : ordered_json(nullptr);
    j["integer_cap"] = b.integer_cap ? ordered_json(*b.integer_cap) : ordered_json(nullptr);
    j["reason"] = b.reason;
    bounds.push_back(j);
  }
  doc["bounds"] = bounds;
  doc["certification"] = to_string(report.certification);
  doc["certification_reason"] = report.certification_reason;
  if (report.weights) {
    const auto &w = *report.weights;
    doc["weights"] = {{"source", w.source},          {"mode", to_string(w.mode)},
                      {"seed", w.seed},              {"budget", w.budget},
                      {"evaluations", w.evaluations}, {"best_bound", w.best_bound},
                      {"reached_target", w.reached_target}};
  } else {
    doc["weights"] = nullptr;
  }
  if (report.theta)
    doc["theta"] = {{"iterations", report.theta->iterations},
                    {"residual", report.theta->residual}};
  else
    doc["theta"] = nullptr;
  doc["tolerances"] = {{"zero_scale", report.zero_scale},
                       {"floor_epsilon", report.floor_epsilon},
                       {"theta_slack", report.theta_slack},
                       {"theta_tol", report.theta_tol}};
  return doc.dump(indent);
}

std::string report_to_table(const BoundReport &report) {
  std::ostringstream out;
  out << report.graph << ": n=" << report.n << " m=" << report.m << " alpha=" << report.alpha
      << "\n";
  out << "inertia (n+, n0, n-) = (" << report.inertia.n_plus << ", " << report.inertia.n_zero
      << ", " << report.inertia.n_minus << "), tol " << report.inertia.tol << "\n";
  out << std::left << std::setw(18) << "bound" << std::setw(14) << "value" << std::setw(6)
      << "cap"
      << "note\n";
  for (const auto &b : report.bounds) {
    out << std::setw(18) << b.name;
    if (b.applicable) {
      std::ostringstream v;
      v << std::setprecision(10) << b.value;
      out << std::setw(14) << v.str() << std::setw(6) << *b.integer_cap;
    } else {
      out << std::setw(14) << "-" << std::setw(6) << "-";
    }
    out << b.reason << "\n";
  }
  out << "certification: " << to_string(report.certification) << " ("
      << report.certification_reason << ")\n";
  return out.str();
}

} // namespace isobound
