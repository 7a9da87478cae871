#include <cmath>
#include <random>

#include "doctest.h"
#include "isobound/catalog.hpp"
#include "isobound/error.hpp"
#include "isobound/report.hpp"
#include "json.hpp"
#include "oracles.hpp"

using namespace isobound;

namespace {

// Every field present with the expected type, every number finite.
void check_schema(const std::string &text) {
  const auto doc = nlohmann::json::parse(text);
  for (const char *key : {"graph", "n", "m", "alpha", "alpha_witness", "inertia", "bounds",
                          "certification", "certification_reason", "weights", "theta",
                          "tolerances"})
    REQUIRE_MESSAGE(doc.contains(key), key);
  CHECK(doc["graph"].is_string());
  CHECK(doc["alpha"].is_number_integer());
  CHECK(doc["alpha_witness"].size() == doc["alpha"].get<std::size_t>());
  for (const char *key : {"n_plus", "n_zero", "n_minus", "tol"})
    CHECK(doc["inertia"].contains(key));
  CHECK(doc["bounds"].is_array());
  for (const auto &b : doc["bounds"]) {
    for (const char *key : {"name", "applicable", "value", "integer_cap", "reason"})
      CHECK(b.contains(key));
    if (b["applicable"].get<bool>()) {
      CHECK(std::isfinite(b["value"].get<double>()));
      CHECK(b["integer_cap"].is_number_integer());
    } else {
      CHECK(b["value"].is_null());
      CHECK(!b["reason"].get<std::string>().empty());
    }
  }
  for (const char *key : {"zero_scale", "floor_epsilon", "theta_slack", "theta_tol"})
    CHECK(std::isfinite(doc["tolerances"][key].get<double>()));
  if (!doc["theta"].is_null())
    CHECK(std::isfinite(doc["theta"]["residual"].get<double>()));
}

// The verdict is backed by the bound it names.
void check_verdict(const BoundReport &r) {
  for (const auto &b : r.bounds)
    if (b.applicable)
      CHECK(r.alpha <= *b.integer_cap);
  switch (r.certification) {
  case Certification::InertiaTight: {
    const auto *w = r.find("inertia_weighted");
    CHECK((r.find("inertia")->value == r.alpha || (w && w->value == r.alpha)));
    break;
  }
  case Certification::HoffmanFloorTight: {
    const auto *h = r.find("hoffman");
    const auto *g = r.find("golubev");
    CHECK(((h->applicable && *h->integer_cap == r.alpha) ||
           (g->applicable && *g->integer_cap == r.alpha)));
    break;
  }
  case Certification::ThetaFloorTight:
    CHECK(std::floor(r.find("theta")->value + kThetaSlack) == r.alpha);
    break;
  case Certification::Unknown:
    CHECK(r.find("inertia")->value > r.alpha);
    break;
  }
}

} // namespace

TEST_CASE("clebsch report") {
  auto r = certify_alpha_q(catalog_graph("clebsch"));
  CHECK(r.alpha == 5);
  CHECK(r.n == 16);
  CHECK(r.m == 40);
  CHECK(r.find("inertia")->value == 5);
  CHECK(r.find("hoffman")->value == doctest::Approx(6.0));
  CHECK(r.find("golubev")->value == doctest::Approx(6.0));
  CHECK(std::abs(r.find("theta")->value - 6.0) < 5e-3);
  CHECK(r.certification == Certification::InertiaTight);
  CHECK(to_string(r.certification) == "INERTIA_TIGHT");
  check_verdict(r);
  check_schema(report_to_json(r));
}

TEST_CASE("certification examples") {
  CHECK(certify_alpha_q(catalog_graph("petersen")).certification ==
        Certification::InertiaTight);

  ReportOptions search;
  search.search_budget = 2000;
  auto c6 = certify_alpha_q(make_cycle(6), search);
  CHECK(c6.alpha == 3);
  CHECK(c6.certification == Certification::InertiaTight);

  // Complement of Clebsch: inertia 6 but Hoffman 16 * 2 / 12 floors to 2.
  auto co = certify_alpha_q(catalog_graph("co-clebsch"));
  CHECK(co.alpha == 2);
  CHECK(co.find("inertia")->value == 6);
  CHECK(co.certification == Certification::HoffmanFloorTight);
  check_verdict(co);
}

TEST_CASE("loose bipartite inertia is repaired by matching weights") {
  // Random bipartite graphs whose plain adjacency bound is loose.
  std::mt19937_64 rng(8);
  int repaired = 0;
  for (int trial = 0; trial < 300 && repaired < 5; ++trial) {
    auto g = oracle::random_bipartite(rng, 4, 12);
    ReportOptions opts;
    opts.search_budget = 10;
    opts.include_theta = false;
    auto r = certify_alpha_q(g, opts);
    if (r.find("inertia")->value == r.alpha)
      continue;
    ++repaired;
    REQUIRE(r.weights.has_value());
    CHECK(r.weights->source == "matching");
    CHECK(r.find("inertia_weighted")->value == r.alpha);
    CHECK(r.certification == Certification::InertiaTight);
  }
  CHECK(repaired == 5);
}

TEST_CASE("supplied weights") {
  auto c5 = make_cycle(5);
  ReportOptions opts;
  opts.weights = adjacency_matrix(c5);
  auto r = certify_alpha_q(c5, opts);
  REQUIRE(r.weights.has_value());
  CHECK(r.weights->source == "supplied");
  opts.weights = HermitianMatrix::identity(5);
  CHECK_THROWS_AS(certify_alpha_q(c5, opts), InvalidInput);
}

TEST_CASE("theta is skipped beyond its limit") {
  auto r = certify_alpha_q(catalog_graph("co-folded7"));
  CHECK(r.n == 64);
  CHECK(r.alpha == 2);
  const auto *t = r.find("theta");
  REQUIRE(t);
  CHECK_FALSE(t->applicable);
  CHECK(t->reason.find("exceeds") != std::string::npos);
  CHECK_FALSE(r.theta.has_value());
  check_schema(report_to_json(r));
  CHECK_THROWS_AS(certify_alpha_q(make_cycle(65)), SizeLimitError);
}

TEST_CASE("soundness on the catalog and random graphs") {
  for (const auto &g : catalog_graphs()) {
    CAPTURE(g.label());
    ReportOptions opts;
    opts.theta.max_iters = 1500;
    auto r = certify_alpha_q(g, opts);
    check_verdict(r);
    check_schema(report_to_json(r));
  }
  std::mt19937_64 rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    auto g = oracle::random_graph(rng, 1, 14);
    ReportOptions opts;
    opts.search_budget = 200;
    opts.seed = trial;
    opts.theta.max_iters = 800;
    auto r = certify_alpha_q(g, opts);
    CHECK(r.alpha == oracle::brute_force_alpha(g));
    check_verdict(r);
    check_schema(report_to_json(r));
  }
}

TEST_CASE("json output is deterministic") {
  ReportOptions opts;
  opts.search_budget = 500;
  opts.seed = 42;
  opts.restarts = 3;
  for (const char *id : {"paley13", "c7", "line-rook3"}) {
    auto g = catalog_graph(id);
    CHECK(report_to_json(certify_alpha_q(g, opts)) == report_to_json(certify_alpha_q(g, opts)));
  }
}

TEST_CASE("table rendering") {
  auto t = report_to_table(certify_alpha_q(catalog_graph("c5")));
  CHECK(t.rfind("c5: n=5 m=5 alpha=2", 0) == 0);
  CHECK(t.find("golubev") != std::string::npos);
  CHECK(t.find("certification:") != std::string::npos);
}
