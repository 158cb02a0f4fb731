#include "dirac_maxwell/serialize.hpp"

#include <sstream>

namespace dm {

using nlohmann::json;

namespace {

// Adding +0.0 turns -0.0 into 0.0.
double unsigned_zero(double x) { return x + 0.0; }

}  // namespace

json to_json(Complexd z) {
  if (z.imag() == 0.0) return unsigned_zero(z.real());
  return complex_pair(z);
}

json complex_pair(Complexd z) { return json::array({unsigned_zero(z.real()), unsigned_zero(z.imag())}); }

json to_json(const CheckReport& c) {
  return {{"id", c.id},
          {"ref", c.ref},
          {"claimed", to_json(c.claimed)},
          {"computed", to_json(c.computed)},
          {"abs_err", c.abs_err},
          {"rel_err", c.rel_err},
          {"tol_abs", c.tol_abs},
          {"tol_rel", c.tol_rel},
          {"verdict", to_string(c.verdict)},
          {"notes", c.notes}};
}

json to_json(const DiscrepancyEntry& d) {
  json j = {{"relation", d.relation},
            {"stated", to_json(d.stated)},
            {"computed", to_json(d.computed)},
            {"ratio", nullptr},
            {"notes", d.notes}};
  if (d.ratio) j["ratio"] = *d.ratio;
  return j;
}

json to_json(const RunConfig& cfg) {
  return {{"units", to_string(cfg.units)},
          {"zeta", cfg.zeta},
          {"tol_abs", cfg.tol_abs},
          {"tol_rel", cfg.tol_rel},
          {"samples", cfg.samples},
          {"seed", cfg.seed},
          {"format", to_string(cfg.format)},
          {"quadrature_points", cfg.quadrature_points}};
}

json to_json(const Matrix4cd& m) {
  json rows = json::array();
  for (int r = 0; r < 4; ++r) {
    json row = json::array();
    for (int c = 0; c < 4; ++c) row.push_back(complex_pair(m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const AlphaSet& set) {
  json j = {{"label", set.label}};
  for (int k = 0; k < 6; ++k) j["a" + std::to_string(k)] = to_json(set[k]);
  return j;
}

json report_json(const std::vector<SuiteResult>& results, const RunConfig& cfg) {
  json checks = json::array();
  json ledger = json::array();
  for (const auto& r : results) {
    for (const auto& c : r.checks) checks.push_back(to_json(c));
    for (const auto& e : r.ledger.entries) ledger.push_back(to_json(e));
  }
  return {{"meta", {{"version", kReportVersion}, {"config", to_json(cfg)}}},
          {"checks", checks},
          {"ledger", ledger}};
}

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string render_csv(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  out << "id,verdict,claimed_re,claimed_im,computed_re,computed_im,abs_err,rel_err,tol_abs,tol_rel,ref,notes\n";
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      out << csv_field(c.id) << ',' << to_string(c.verdict) << ',' << format_double(c.claimed.real()) << ','
          << format_double(c.claimed.imag()) << ',' << format_double(c.computed.real()) << ','
          << format_double(c.computed.imag()) << ',' << format_double(c.abs_err) << ','
          << format_double(c.rel_err) << ',' << format_double(c.tol_abs) << ',' << format_double(c.tol_rel)
          << ',' << csv_field(c.ref) << ',' << csv_field(c.notes) << '\n';
    }
  }
  return out.str();
}

std::string render_text(const std::vector<SuiteResult>& results) {
  std::ostringstream out;
  int pass = 0;
  int fail = 0;
  int ledgered = 0;
  for (const auto& r : results) {
    for (const auto& c : r.checks) {
      out << to_string(c.verdict) << ' ' << c.id << "  abs_err=" << format_double(c.abs_err)
          << " rel_err=" << format_double(c.rel_err) << "  " << c.ref << '\n';
      pass += c.verdict == Verdict::pass;
      fail += c.verdict == Verdict::fail;
      ledgered += c.verdict == Verdict::ledgered;
    }
  }
  out << "ledger:\n";
  for (const auto& r : results) {
    for (const auto& e : r.ledger.entries) {
      out << "  " << e.relation << ": stated " << format_double(e.stated.real());
      if (e.stated.imag() != 0.0) out << (e.stated.imag() < 0 ? "" : "+") << format_double(e.stated.imag()) << 'i';
      out << ", computed " << format_double(e.computed.real());
      if (e.computed.imag() != 0.0)
        out << (e.computed.imag() < 0 ? "" : "+") << format_double(e.computed.imag()) << 'i';
      if (e.ratio) out << ", ratio " << format_double(*e.ratio);
      out << '\n';
    }
  }
  out << pass << " pass, " << fail << " fail, " << ledgered << " ledgered\n";
  return out.str();
}

}  // namespace

std::string render_report(const std::vector<SuiteResult>& results, const RunConfig& cfg, OutputFormat format) {
  switch (format) {
    case OutputFormat::json: return dump(report_json(results, cfg));
    case OutputFormat::csv: return render_csv(results);
    case OutputFormat::text: return render_text(results);
  }
  return {};
}

}  // namespace dm
