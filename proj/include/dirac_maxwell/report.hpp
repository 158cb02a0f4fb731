#pragma once

// Structured verification results: one CheckReport per comparison and a
// discrepancy ledger for places where a stated closed form and the evaluation
// of its own printed ingredients disagree. Ledgered entries never fail a run.

#include "dirac_maxwell/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace dm {

enum class Verdict { pass, fail, ledgered };

std::string_view to_string(Verdict v);

struct CheckReport {
  std::string id;
  std::string ref;  ///< human-readable description of the claim being checked
  Complexd claimed{};
  Complexd computed{};
  double abs_err = 0.0;
  double rel_err = 0.0;
  double tol_abs = 0.0;
  double tol_rel = 0.0;
  Verdict verdict = Verdict::pass;
  std::string notes;

  bool passed() const { return verdict != Verdict::fail; }
};

/// Compare computed against claimed; pass iff abs_err <= tol.abs or rel_err <= tol.rel.
CheckReport make_check(std::string id, std::string ref, Complexd claimed, Complexd computed,
                       Tolerance tol, std::string notes = {});

/// A check whose outcome is a known inconsistency of the source material.
CheckReport make_ledgered(std::string id, std::string ref, Complexd claimed, Complexd computed,
                          std::string notes);

/// Boolean check: claimed 1 (true), computed 1 or 0.
CheckReport make_predicate(std::string id, std::string ref, bool holds, std::string notes = {});

struct DiscrepancyEntry {
  std::string relation;  ///< which stated relation disagrees
  Complexd stated{};
  Complexd computed{};
  std::optional<double> ratio;  ///< |computed/stated| when defined
  std::string notes;
};

DiscrepancyEntry make_discrepancy(std::string relation, Complexd stated, Complexd computed,
                                  std::string notes);

struct Ledger {
  std::vector<DiscrepancyEntry> entries;

  void add(DiscrepancyEntry e) { entries.push_back(std::move(e)); }
  void append(const Ledger& other) {
    entries.insert(entries.end(), other.entries.begin(), other.entries.end());
  }
};

/// Shortest decimal text that parses back to exactly the same double.
std::string format_double(double x);

}  // namespace dm
