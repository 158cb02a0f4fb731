#pragma once

// Verification suites: each runs a family of checks against independent
// oracles and collects the discrepancy ledger entries it encounters.

#include "dirac_maxwell/report.hpp"
#include "dirac_maxwell/units.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace dm {

enum class OutputFormat { json, csv, text };

std::string_view to_string(OutputFormat f);

struct RunConfig {
  UnitMode units = UnitMode::natural;
  double zeta = 1.0;
  double tol_abs = 1e-12;
  double tol_rel = 1e-12;
  int samples = 1000;
  std::uint64_t seed = 42;
  OutputFormat format = OutputFormat::json;
  int quadrature_points = 64;

  UnitSystem unit_system() const;
  Tolerance tolerance() const { return {tol_abs, tol_rel}; }
  /// Empty if valid, otherwise a message.
  std::optional<std::string> validate() const;
};

enum class Suite { algebra, bilinear, fierz, torus, planewave, dynamics };

std::string_view to_string(Suite s);
std::optional<Suite> parse_suite(std::string_view name);
std::vector<Suite> all_suites();

struct SuiteResult {
  Suite suite = Suite::algebra;
  std::vector<CheckReport> checks;  ///< sorted by id
  Ledger ledger;

  bool passed() const;
};

SuiteResult run_suite(Suite suite, const RunConfig& config);
std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, const RunConfig& config);

}  // namespace dm
