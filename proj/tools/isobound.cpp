// Command-line front end: bound chains, weight search, theta, certification
// and certificate verification for named or file-backed graphs.

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "isobound/bounds.hpp"
#include "isobound/catalog.hpp"
#include "isobound/certificates.hpp"
#include "isobound/error.hpp"
#include "isobound/exact.hpp"
#include "isobound/report.hpp"
#include "isobound/theta.hpp"
#include "isobound/weight_search.hpp"

using namespace isobound;
using nlohmann::ordered_json;

namespace {

constexpr int kExitComputation = 1;
constexpr int kExitUsage = 2;

struct GlobalFlags {
  bool json = false;
  double zero_scale = kDefaultZeroScale;
  std::uint64_t seed = 0;
};

std::string read_text_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw IoError("cannot open file '" + path + "': file not found");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

ordered_json matrix_json(const HermitianMatrix &m) {
  ordered_json re = ordered_json::array(), im = ordered_json::array();
  for (int i = 0; i < m.dim(); ++i) {
    ordered_json rr = ordered_json::array(), ii = ordered_json::array();
    for (int j = 0; j < m.dim(); ++j) {
      rr.push_back(m(i, j).real());
      ii.push_back(m(i, j).imag());
    }
    re.push_back(rr);
    im.push_back(ii);
  }
  return {{"re", re}, {"im", im}};
}

int cmd_catalog(const GlobalFlags &flags) {
  if (flags.json) {
    ordered_json list = ordered_json::array();
    for (const auto &e : catalog_entries()) {
      const Graph g = catalog_graph(e.id);
      list.push_back({{"id", e.id}, {"description", e.description}, {"n", g.order()},
                      {"m", g.size()}});
    }
    std::cout << list.dump(2) << "\n";
    return 0;
  }
  for (const auto &e : catalog_entries()) {
    const Graph g = catalog_graph(e.id);
    std::cout << std::left << std::setw(12) << e.id << " n=" << std::setw(4) << g.order()
              << " m=" << std::setw(6) << g.size() << e.description << "\n";
  }
  return 0;
}

struct ReportFlags {
  std::string graph;
  int theta_iters = 5000;
  double theta_tol = 1e-4;
  bool no_theta = false;
  long search_budget = 0;
  std::string mode = "real";
  int restarts = 1;
};

int cmd_report(const GlobalFlags &flags, const ReportFlags &rf, bool certify_only) {
  const Graph g = resolve_graph(rf.graph);
  ReportOptions opts;
  opts.zero_scale = flags.zero_scale;
  opts.include_theta = !rf.no_theta;
  opts.theta.max_iters = rf.theta_iters;
  opts.theta.tol = rf.theta_tol;
  opts.search_budget = rf.search_budget;
  opts.mode = parse_weight_mode(rf.mode);
  opts.seed = flags.seed;
  opts.restarts = rf.restarts;
  const BoundReport report = certify_alpha_q(g, opts);
  if (flags.json)
    std::cout << report_to_json(report) << "\n";
  else if (certify_only)
    std::cout << to_string(report.certification) << "\n"
              << report.graph << ": alpha = " << report.alpha << ", "
              << report.certification_reason << "\n";
  else
    std::cout << report_to_table(report);
  return 0;
}

struct SearchFlags {
  std::string graph;
  std::string mode = "real";
  long budget = 5000;
  int restarts = 1;
  int target = -1;
  std::string trace_path;
};

int cmd_search(const GlobalFlags &flags, const SearchFlags &sf) {
  const Graph g = resolve_graph(sf.graph);
  const WeightMode mode = parse_weight_mode(sf.mode);
  const int alpha = independence_number(g).size;
  const int target = sf.target >= 0 ? sf.target : alpha;

  SearchOptions opts;
  opts.zero_scale = flags.zero_scale;
  std::ofstream trace_file;
  if (!sf.trace_path.empty()) {
    trace_file.open(sf.trace_path);
    if (!trace_file)
      throw IoError("cannot open trace file '" + sf.trace_path + "'");
    opts.trace = [&trace_file](const SearchTraceRecord &r) {
      ordered_json line = {{"seed", r.seed},       {"step", r.step},
                           {"bound", r.bound},     {"margin", r.margin},
                           {"temperature", r.temperature}, {"best_bound", r.best_bound}};
      trace_file << line.dump() << "\n";
    };
  }

  const auto runs =
      search_weights_restarts(g, target, mode, sf.budget, flags.seed, sf.restarts, opts);
  const auto &best = runs.front();
  const int unweighted = inertia_bound(adjacency_matrix(g), flags.zero_scale);

  if (flags.json) {
    ordered_json doc;
    doc["graph"] = g.label();
    doc["n"] = g.order();
    doc["alpha"] = alpha;
    doc["target"] = target;
    doc["mode"] = to_string(mode);
    doc["unweighted_bound"] = unweighted;
    doc["best_bound"] = best.best_bound;
    doc["best_margin"] = best.best_margin;
    doc["reached_target"] = best.reached_target;
    doc["best_seed"] = best.seed;
    ordered_json seeds = ordered_json::array();
    std::vector<WeightSearchResult> ordered(runs.begin(), runs.end());
    std::sort(ordered.begin(), ordered.end(),
              [](const auto &a, const auto &b) { return a.seed < b.seed; });
    for (const auto &r : ordered)
      seeds.push_back({{"seed", r.seed},
                       {"best_bound", r.best_bound},
                       {"reached_target", r.reached_target},
                       {"evaluations", r.evaluations}});
    doc["runs"] = seeds;
    doc["best_matrix"] = matrix_json(best.best_matrix);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << g.label() << ": alpha=" << alpha << " target=" << target
              << " unweighted bound=" << unweighted << "\n";
    std::cout << "best bound " << best.best_bound << " (seed " << best.seed << ", "
              << to_string(mode) << " mode), target "
              << (best.reached_target ? "reached" : "not reached") << "\n";
    for (const auto &r : runs)
      std::cout << "  seed " << r.seed << ": bound " << r.best_bound << " after "
                << r.evaluations << " evaluations\n";
  }
  return 0;
}

struct ThetaFlags {
  std::string graph;
  int iters = 5000;
  double tol = 1e-4;
};

int cmd_theta(const GlobalFlags &flags, const ThetaFlags &tf) {
  const Graph g = resolve_graph(tf.graph);
  ThetaOptions opts;
  opts.max_iters = tf.iters;
  opts.tol = tf.tol;
  opts.keep_history = false;
  const auto th = lovasz_theta(g, opts);
  const auto cap = theta_regular_cap(g);
  if (flags.json) {
    ordered_json doc;
    doc["graph"] = g.label();
    doc["n"] = g.order();
    doc["theta"] = th.value;
    doc["iterations"] = th.iterations;
    doc["residual"] = th.residual;
    doc["regular_cap"] = cap.applicable ? ordered_json(cap.value) : ordered_json(nullptr);
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << g.label() << ": theta <= " << std::setprecision(10) << th.value << " ("
              << th.iterations << " iterations, residual " << th.residual << ")\n";
    if (cap.applicable)
      std::cout << "regular-graph cap: " << cap.value << "\n";
  }
  return 0;
}

struct VerifyFlags {
  std::string graph;
  std::string family;
  bool packing = false;
  bool quantum = false;
  int t = -1;
};

int cmd_verify(const GlobalFlags &flags, const VerifyFlags &vf) {
  const Graph g = resolve_graph(vf.graph);
  const ProjectorFamily fam = parse_projector_family(read_text_file(vf.family));
  if (vf.quantum && vf.packing)
    throw InvalidInput("choose one of --packing and --quantum");
  const bool quantum = vf.quantum;
  if (quantum && vf.t < 0)
    throw InvalidInput("--quantum requires --t");
  const CertificateVerdict verdict =
      quantum ? verify_quantum_certificate(g, vf.t, fam) : verify_projective_packing(g, fam);
  if (flags.json) {
    ordered_json doc;
    doc["graph"] = g.label();
    doc["kind"] = quantum ? "quantum" : "packing";
    doc["d"] = fam.d();
    doc["valid"] = verdict.valid;
    doc["value"] = verdict.value;
    ordered_json v = ordered_json::array();
    for (const auto &x : verdict.violations)
      v.push_back({{"condition", x.condition},
                   {"first", to_string(x.first)},
                   {"second", to_string(x.second)},
                   {"residual", x.residual}});
    doc["violations"] = v;
    std::cout << doc.dump(2) << "\n";
  } else {
    std::cout << (verdict.valid ? "VALID" : "INVALID") << " " << (quantum ? "quantum" : "packing")
              << " certificate, value " << verdict.value << "\n";
    for (const auto &x : verdict.violations)
      std::cout << "  " << x.condition << " at " << to_string(x.first) << " / "
                << to_string(x.second) << ", residual " << x.residual << "\n";
  }
  return verdict.valid ? 0 : kExitComputation;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Spectral upper bounds and quantum-independence certificates for graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalFlags flags;
  app.add_flag("--json", flags.json, "Emit JSON");
  app.add_option("--tol-zero", flags.zero_scale,
                 "Relative zero threshold for inertia (tau = scale * max(1, |lambda|max))")
      ->check(CLI::PositiveNumber);
  app.add_option("--seed", flags.seed, "Base random seed");

  auto *catalog = app.add_subcommand("catalog", "Named graphs");
  auto *catalog_list = catalog->add_subcommand("list", "List named graphs");
  catalog->require_subcommand(1);

  ReportFlags bounds_flags;
  auto *bounds = app.add_subcommand("bounds", "Bound chain for a graph");
  ReportFlags certify_flags;
  certify_flags.search_budget = 2000;
  auto *certify = app.add_subcommand("certify", "Decide whether alpha_q = alpha is certified");
  for (auto [cmd, rf] : {std::pair{bounds, &bounds_flags}, std::pair{certify, &certify_flags}}) {
    cmd->add_option("graph", rf->graph, "Catalog id, @file.g6 or @file.dimacs")->required();
    cmd->add_option("--theta-iters", rf->theta_iters, "Theta iteration limit")->capture_default_str();
    cmd->add_option("--theta-tol", rf->theta_tol, "Theta stall tolerance")->capture_default_str();
    cmd->add_flag("--no-theta", rf->no_theta, "Skip theta");
    cmd->add_option("--search-budget", rf->search_budget,
                    "Weight-search evaluations when the unweighted bound is not tight")->capture_default_str();
    cmd->add_option("--mode", rf->mode, "Weight mode: real or hermitian")->capture_default_str();
    cmd->add_option("--restarts", rf->restarts, "Independent search chains")->capture_default_str();
  }

  SearchFlags search_flags;
  auto *search = app.add_subcommand("search-weights", "Anneal edge weights to tighten the bound");
  search->add_option("graph", search_flags.graph, "Catalog id, @file.g6 or @file.dimacs")
      ->required();
  search->add_option("--mode", search_flags.mode, "real or hermitian")->capture_default_str();
  search->add_option("--budget", search_flags.budget, "Evaluations per chain")->capture_default_str();
  search->add_option("--restarts", search_flags.restarts, "Chains with seeds seed..seed+R-1")
                     ->capture_default_str();
  search->add_option("--target", search_flags.target, "Target bound (default: exact alpha)");
  search->add_option("--trace", search_flags.trace_path, "Write JSON-lines trace to this file");

  ThetaFlags theta_flags;
  auto *theta = app.add_subcommand("theta", "Lovasz theta upper estimate");
  theta->add_option("graph", theta_flags.graph, "Catalog id, @file.g6 or @file.dimacs")
      ->required();
  theta->add_option("--iters", theta_flags.iters, "Iteration limit")->capture_default_str();
  theta->add_option("--tol", theta_flags.tol, "Stall tolerance")->capture_default_str();

  VerifyFlags verify_flags;
  auto *verify = app.add_subcommand("verify-certificate", "Check a projector family");
  verify->add_option("graph", verify_flags.graph, "Catalog id, @file.g6 or @file.dimacs")
      ->required();
  verify->add_option("family", verify_flags.family, "Projector family JSON")->required();
  verify->add_flag("--packing", verify_flags.packing, "Verify a projective packing (default)");
  verify->add_flag("--quantum", verify_flags.quantum, "Verify a quantum independence certificate");
  verify->add_option("--t", verify_flags.t, "Certificate size for --quantum");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success &e) {
    return app.exit(e);
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (catalog_list->parsed())
      return cmd_catalog(flags);
    if (bounds->parsed())
      return cmd_report(flags, bounds_flags, false);
    if (certify->parsed())
      return cmd_report(flags, certify_flags, true);
    if (search->parsed())
      return cmd_search(flags, search_flags);
    if (theta->parsed())
      return cmd_theta(flags, theta_flags);
    if (verify->parsed())
      return cmd_verify(flags, verify_flags);
  } catch (const IoError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const SizeLimitError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
  return kExitUsage;
}
