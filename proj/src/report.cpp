#include "dirac_maxwell/report.hpp"

#include <array>
#include <charconv>
#include <cmath>

namespace dm {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::ledgered: return "ledgered";
  }
  return "fail";
}

namespace {

double rel_err_of(Complexd computed, Complexd claimed) {
  const double scale = std::max(std::abs(computed), std::abs(claimed));
  if (scale == 0.0) return 0.0;
  return std::abs(computed - claimed) / scale;
}

}  // namespace

CheckReport make_check(std::string id, std::string ref, Complexd claimed, Complexd computed,
                       Tolerance tol, std::string notes) {
  CheckReport r;
  r.id = std::move(id);
  r.ref = std::move(ref);
  r.claimed = claimed;
  r.computed = computed;
  r.abs_err = std::abs(computed - claimed);
  r.rel_err = rel_err_of(computed, claimed);
  r.tol_abs = tol.abs;
  r.tol_rel = tol.rel;
  const bool finite = std::isfinite(r.abs_err) && std::isfinite(r.rel_err);
  r.verdict = finite && tol.accepts(r.abs_err, r.rel_err) ? Verdict::pass : Verdict::fail;
  r.notes = std::move(notes);
  return r;
}

CheckReport make_ledgered(std::string id, std::string ref, Complexd claimed, Complexd computed,
                          std::string notes) {
  CheckReport r;
  r.id = std::move(id);
  r.ref = std::move(ref);
  r.claimed = claimed;
  r.computed = computed;
  r.abs_err = std::abs(computed - claimed);
  r.rel_err = rel_err_of(computed, claimed);
  r.verdict = Verdict::ledgered;
  r.notes = std::move(notes);
  return r;
}

CheckReport make_predicate(std::string id, std::string ref, bool holds, std::string notes) {
  return make_check(std::move(id), std::move(ref), 1.0, holds ? 1.0 : 0.0, Tolerance{0.0, 0.0},
                    std::move(notes));
}

DiscrepancyEntry make_discrepancy(std::string relation, Complexd stated, Complexd computed,
                                  std::string notes) {
  DiscrepancyEntry e;
  e.relation = std::move(relation);
  e.stated = stated;
  e.computed = computed;
  if (std::abs(stated) > 0.0) e.ratio = std::abs(computed) / std::abs(stated);
  e.notes = std::move(notes);
  return e;
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf.data(), end);
}

}  // namespace dm
