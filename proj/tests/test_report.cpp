#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_maxwell/rng.hpp"
#include "dirac_maxwell/serialize.hpp"
#include "dirac_maxwell/suites.hpp"

#include <cmath>
#include <limits>
#include <sstream>

using namespace dm;

TEST_CASE("make_check verdicts") {
  auto c = make_check("x", "r", 1.0, 1.0 + 1e-13, {0.0, 1e-12});
  CHECK(c.verdict == Verdict::pass);
  c = make_check("x", "r", 1.0, 1.1, {0.0, 1e-12});
  CHECK(c.verdict == Verdict::fail);
  CHECK(c.abs_err == doctest::Approx(0.1));
  // Either bound suffices.
  CHECK(make_check("x", "r", 0.0, 1e-14, {1e-12, 0.0}).verdict == Verdict::pass);
  CHECK(make_ledgered("x", "r", 1.0, 2.0, "n").verdict == Verdict::ledgered);
  CHECK(make_ledgered("x", "r", 1.0, 2.0, "n").passed());
  CHECK(make_predicate("p", "r", false).verdict == Verdict::fail);
  CHECK(make_predicate("p", "r", true).computed == Complexd(1.0));
  const auto d = make_discrepancy("rel", 2.0, 1.0, "n");
  REQUIRE(d.ratio.has_value());
  CHECK(*d.ratio == 0.5);
  CHECK_FALSE(make_discrepancy("rel", 0.0, 1.0, "n").ratio.has_value());
}

TEST_CASE("format_double round-trips") {
  CHECK(format_double(0.5) == "0.5");
  CHECK(format_double(1e-300) == "1e-300");
  auto rng = SplitMix64(1);
  for (int i = 0; i < 1000; ++i) {
    const double x = std::ldexp(rng.uniform(-1, 1), static_cast<int>(rng.uniform(-60, 60)));
    CHECK(std::stod(format_double(x)) == x);
  }
}

TEST_CASE("SplitMix64 reference output") {
  auto rng = SplitMix64(0);
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  auto a = SplitMix64(99);
  auto b = SplitMix64(99);
  for (int i = 0; i < 10; ++i) CHECK(a.next() == b.next());
  for (int i = 0; i < 1000; ++i) {
    const double u = a.uniform(-2, 3);
    CHECK(u >= -2);
    CHECK(u < 3);
  }
}

TEST_CASE("json values") {
  CHECK(to_json(Complexd(1.5, 0.0)).is_number());
  CHECK(to_json(Complexd(1.5, -2.0)) == nlohmann::json::array({1.5, -2.0}));
  CHECK(dump(complex_pair(Complexd(-0.0, 0.0))) == "[\n  0.0,\n  0.0\n]\n");
  const auto m = to_json(canonical_alpha_set()[2]);
  CHECK(m[0][3] == nlohmann::json::array({0.0, -1.0}));
}

TEST_CASE("config validation") {
  RunConfig cfg;
  CHECK_FALSE(cfg.validate().has_value());
  cfg.zeta = 0.0;
  CHECK(cfg.validate().has_value());
  cfg = {};
  cfg.samples = 0;
  CHECK(cfg.validate().has_value());
  cfg = {};
  cfg.quadrature_points = 10;
  CHECK(cfg.validate().has_value());
  cfg = {};
  cfg.tol_rel = -1;
  CHECK(cfg.validate().has_value());
  CHECK(parse_suite("torus") == Suite::torus);
  CHECK_FALSE(parse_suite("nope").has_value());
  CHECK(all_suites().size() == 6);
}

TEST_CASE("suite results are sorted and deterministic") {
  RunConfig cfg;
  cfg.samples = 50;
  const auto a = run_suites({Suite::torus, Suite::algebra, Suite::torus}, cfg);
  REQUIRE(a.size() == 2);
  CHECK(a[0].suite == Suite::algebra);
  for (const auto& r : a) {
    CHECK(r.passed());
    for (std::size_t i = 1; i < r.checks.size(); ++i) CHECK(r.checks[i - 1].id < r.checks[i].id);
  }
  CHECK(a[1].ledger.entries.size() == 4);
  const auto b = run_suites({Suite::algebra, Suite::torus}, cfg);
  CHECK(render_report(a, cfg, OutputFormat::json) == render_report(b, cfg, OutputFormat::json));
}

TEST_CASE("zero tolerance makes a run fail") {
  RunConfig cfg;
  cfg.samples = 20;
  cfg.tol_abs = 0.0;
  cfg.tol_rel = 0.0;
  CHECK_FALSE(run_suite(Suite::torus, cfg).passed());
}

TEST_CASE("report formats") {
  RunConfig cfg;
  cfg.samples = 20;
  const auto results = run_suites({Suite::algebra}, cfg);
  const auto j = nlohmann::json::parse(render_report(results, cfg, OutputFormat::json));
  CHECK(j["meta"]["version"] == "1.0.0");
  CHECK(j["meta"]["config"]["samples"] == 20);
  CHECK(j["checks"].size() == results[0].checks.size());
  CHECK(j["ledger"].size() == results[0].ledger.entries.size());

  const auto csv = render_report(results, cfg, OutputFormat::csv);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "id,verdict,claimed_re,claimed_im,computed_re,computed_im,abs_err,rel_err,tol_abs,tol_rel,ref,notes");
  std::size_t rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows >= results[0].checks.size());

  const auto text = render_report(results, cfg, OutputFormat::text);
  CHECK(text.find(" fail") != std::string::npos);
  CHECK(csv_field("a,b") == "\"a,b\"");
  CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
  CHECK(csv_field("plain") == "plain");
}
