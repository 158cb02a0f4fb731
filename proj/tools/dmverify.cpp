// dmverify: verification suites, model reports, zeta sweeps and matrix dumps.

#include "dirac_maxwell/dynamics.hpp"
#include "dirac_maxwell/errors.hpp"
#include "dirac_maxwell/planewave.hpp"
#include "dirac_maxwell/serialize.hpp"
#include "dirac_maxwell/suites.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>

using namespace dm;
using nlohmann::json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return 0;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path + " for writing");
  f << text;
  return 0;
}

json vec_json(const Vec3d& v) { return json::array({v.x(), v.y(), v.z()}); }

json bispinor_json(const Bispinord& b) {
  json j = json::array();
  for (int k = 0; k < 4; ++k) j.push_back(complex_pair(b(k)));
  return j;
}

json field_json(const EmField& f) {
  json e = json::array();
  json h = json::array();
  for (int k = 0; k < 3; ++k) {
    e.push_back(to_json(f.e(k)));
    h.push_back(to_json(f.h(k)));
  }
  return {{"E", e}, {"H", h}};
}

json checks_json(const SuiteResult& r) {
  json j = json::array();
  for (const auto& c : r.checks) j.push_back(to_json(c));
  return j;
}

json ledger_json(const SuiteResult& r) {
  json j = json::array();
  for (const auto& e : r.ledger.entries) j.push_back(to_json(e));
  return j;
}

// ---------------------------------------------------------------- commands

int cmd_verify(const RunConfig& cfg, const std::string& suite, const std::string& out) {
  std::vector<Suite> suites;
  if (suite == "all") {
    suites = all_suites();
  } else if (auto s = parse_suite(suite)) {
    suites.push_back(*s);
  } else {
    throw UsageError("unknown suite " + suite);
  }
  const auto results = run_suites(suites, cfg);
  emit(render_report(results, cfg, cfg.format), out);
  for (const auto& r : results)
    if (!r.passed()) return kExitFail;
  return 0;
}

int cmd_torus(const RunConfig& cfg, const std::string& out) {
  const auto u = cfg.unit_system();
  const TorusModel base = derive_parameters(u, cfg.zeta);
  const double e0 = calibrate_e0(base, 0.0, cfg.quadrature_points);
  const TorusModel m = with_e0(base, e0);
  const auto chain = consistency_chain(m, {0.0, cfg.tol_rel});
  const auto sm = spin_and_moment(m, u.e);
  const auto zb = zitterbewegung(u);
  const int nq = cfg.quadrature_points;

  json model = {{"units", to_string(u.mode)},
                {"hbar", u.hbar},
                {"c", u.c},
                {"m_e", u.m_e},
                {"e", u.e},
                {"zeta", m.zeta},
                {"lambda_p", m.lambda_p},
                {"omega_p", m.omega_p},
                {"omega_s", m.omega_s},
                {"r_t", m.r_t},
                {"r_s", m.r_s},
                {"r_c", m.r_c},
                {"s_c", m.s_c},
                {"delta_tau", m.delta_tau},
                {"k", m.k},
                {"e0", m.e0}};
  json derived = {{"alpha_q", coupling_constant(m.zeta)},
                  {"q", chain.q},
                  {"q_over_e", chain.q / u.e},
                  {"m_s", chain.m_s},
                  {"charge_full_wave", integrate_charge(m, ChargeSpan::full_wave, nq)},
                  {"charge_half_wave_density", integrate_charge(m, ChargeSpan::half_wave, nq)},
                  {"charge_printed_integrand", integrate_charge_printed(m, nq)},
                  {"charge_stated", charge_stated(m)},
                  {"mass_quadrature", integrate_mass(m, nq)},
                  {"mass_density_form", integrate_mass_density(m, nq)},
                  {"mass_closed_form", mass_closed_form(m)},
                  {"r_o", chain.r_o},
                  {"r_o_over_r_s", chain.ratio_ro_rs},
                  {"fine_structure", u.fine_structure()},
                  {"sigma_p", sm.sigma_p},
                  {"sigma_s", sm.sigma_s},
                  {"ring_current", sm.current},
                  {"ring_area", sm.area},
                  {"mu_s", sm.mu_s},
                  {"mu_closed_form", moment_closed_form(u, u.e)},
                  {"zitterbewegung", {{"omega_z", zb.omega_z}, {"r_z", zb.r_z}, {"v", zb.v}}}};
  const auto suite = run_suite(Suite::torus, cfg);
  json j = {{"meta", {{"version", kReportVersion}, {"config", to_json(cfg)}}},
            {"model", model},
            {"derived", derived},
            {"checks", checks_json(suite)},
            {"ledger", ledger_json(suite)}};
  emit(dump(j), out);
  return suite.passed() ? 0 : kExitFail;
}

int cmd_planewave(const RunConfig& cfg, const Vec3d& p_mc, const std::string& branch_name, int which,
                  const std::string& out) {
  if (branch_name != "positive" && branch_name != "negative") throw UsageError("branch must be positive or negative");
  if (which != 1 && which != 2) throw UsageError("which must be 1 or 2");
  const auto u = cfg.unit_system();
  const double mass = u.m_e;
  const Vec3d p = p_mc * (mass * u.c);
  const Branch branch = branch_name == "positive" ? Branch::positive : Branch::negative;
  const auto st = make_state(branch, which, p, mass, u);
  const auto set = canonical_alpha_set();
  const double mc2 = mass * u.c * u.c;
  const auto [ep, em] = dispersion(p, mass, u);

  json j = {{"meta", {{"version", kReportVersion}, {"config", to_json(cfg)}}},
            {"momentum", vec_json(p)},
            {"momentum_over_mc", vec_json(p_mc)},
            {"branch", to_string(branch)},
            {"which", which},
            {"energy", st.energy},
            {"dispersion", {ep, em}},
            {"amplitudes", bispinor_json(st.amplitudes)},
            {"residual", residual(st, set, mass, u)},
            {"residual_over_mc2", residual(st, set, mass, u) / mc2},
            {"determinant_over_mc2_4", to_json(determinant(build_system(st.energy, p, mass, u)) /
                                               (mc2 * mc2 * mc2 * mc2))}};
  json interp = json::array();
  for (auto ax : {Axis::x, Axis::y, Axis::z}) {
    for (auto o : {Orientation::negative, Orientation::positive}) {
      const auto layout = layout_for(ax, o);
      json entry = {{"layout", layout.name}};
      try {
        const auto fi = field_interpretation(st, layout);
        entry["field"] = field_json(fi.field);
        entry["nonzero"] = fi.nonzero;
        json labels = json::array();
        for (int k = 0; k < 4; ++k) labels.push_back(layout.slot_label(k));
        entry["slots"] = labels;
      } catch (const AxisMismatch& e) {
        entry["error"] = e.what();
      }
      interp.push_back(entry);
    }
  }
  j["field_interpretation"] = interp;
  emit(dump(j), out);
  return 0;
}

int cmd_dynamics(const RunConfig& cfg, const std::string& out) {
  const auto u = cfg.unit_system();
  const TorusModel base = derive_parameters(u, cfg.zeta);
  const TorusModel m = with_e0(base, calibrate_e0(base, 0.0, cfg.quadrature_points));
  const auto set = canonical_alpha_set();
  const double mass = u.m_e;
  const double mc = mass * u.c;

  json forces = json::object();
  for (auto pol : {RingPolarization::ex_hz, RingPolarization::ez_hx}) {
    const auto f = lorentz_force_ring(m, m.e0, pol);
    forces[std::string(to_string(pol))] = {{"f2", f.f2},
                                           {"f0", f.f0},
                                           {"f2_via_current", f.f2_via_current},
                                           {"f0_via_current", f.f0_via_current}};
  }

  json lagr = json::object();
  for (auto form : {DiracForm::plus, DiracForm::plus_adjoint}) {
    for (double detune : {1.0, 1.1}) {
      const auto sol = form_solution(form, 1, 0.8 * mc, mass, u);
      const auto h = plane_wave_history(sol.b, detune * sol.omega, sol.k, electron_y_layout());
      const double t = 0.3 / std::abs(sol.omega);
      const double s = 0.2 / std::abs(sol.k);
      const FieldJet jet{h.value(t, s), h.d_t(t, s), h.d_s(t, s)};
      const auto l = lagrangian_linear(jet, set, mass, u);
      const auto mf = maxwell_lagrangian_forms(jet, mass, u);
      const std::string key = std::string(to_string(form)) + (detune == 1.0 ? "" : "_detuned");
      lagr[key] = {{"quantum_em_units", to_json(l.quantum_em_units)},
                   {"field", to_json(l.field)},
                   {"current", to_json(l.current)},
                   {"maxwell_lhs", to_json(mf.lhs)},
                   {"maxwell_rhs", to_json(mf.rhs)}};
    }
  }

  FieldJet sample;
  sample.value = EmField::real(Vec3d(0.6, 0.0, 0.3), Vec3d(0.4, 0.0, 0.9));
  const auto nl = lagrangian_nonlinear(sample, m, mass, set);
  json nonlinear = {{"sample_field", field_json(sample.value)},
                    {"quartic_field", nl.quartic_field},
                    {"quartic_invariant", nl.quartic_invariant},
                    {"invariant_linear", nl.invariant_linear},
                    {"quartic_quantum", nl.quartic_quantum},
                    {"quartic_quantum_fierz", nl.quartic_quantum_fierz},
                    {"quartic_quantum_minus", nl.quartic_quantum_minus},
                    {"total_invariant", nl.total_invariant}};

  const auto pp = photon_photon_comparison(m, EmField::real(Vec3d(0.6, 0.2, 0.3), Vec3d(0.4, -0.1, 0.9)));
  json table = json::array();
  table.push_back({{"lagrangian", "self_action"},
                   {"prefactor", pp.prefactor_self},
                   {"invariant_coefficient", 1},
                   {"pseudoscalar_coefficient", pp.coefficient_self}});
  table.push_back({{"lagrangian", "photon_photon"},
                   {"prefactor", pp.b},
                   {"invariant_coefficient", 1},
                   {"pseudoscalar_coefficient", pp.coefficient_photon}});

  const auto suite = run_suite(Suite::dynamics, cfg);
  json j = {{"meta", {{"version", kReportVersion}, {"config", to_json(cfg)}}},
            {"omega_s", m.omega_s},
            {"omega_e", 2.0 * mass * u.c * u.c / u.hbar},
            {"e0", m.e0},
            {"forces", forces},
            {"lagrangian_linear", lagr},
            {"lagrangian_nonlinear", nonlinear},
            {"photon_photon_comparison", table},
            {"self_action_constant", self_action_constant(m, coupling_constant(m.zeta))},
            {"r_s", m.r_s},
            {"checks", checks_json(suite)},
            {"ledger", ledger_json(suite)}};
  emit(dump(j), out);
  return suite.passed() ? 0 : kExitFail;
}

int cmd_sweep_zeta(const RunConfig& cfg, double lo, double hi, int steps, bool csv, const std::string& out) {
  if (!(lo > 0.0 && lo <= hi && hi <= 1.0)) throw UsageError("need 0 < min <= max <= 1");
  if (steps < 1) throw UsageError("steps must be at least 1");
  const auto u = cfg.unit_system();
  std::ostringstream text;
  json rows = json::array();
  if (csv) text << "zeta,alpha_q,q,m_s,mu_s\n";
  for (int i = 0; i < steps; ++i) {
    const double z = steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1);
    const TorusModel base = derive_parameters(u, z);
    const TorusModel m = with_e0(base, calibrate_e0(base, 0.0, cfg.quadrature_points));
    const auto chain = consistency_chain(m, {0.0, cfg.tol_rel});
    const double mu = spin_and_moment(m, chain.q).mu_s;
    const double alpha = coupling_constant(z);
    if (csv) {
      text << format_double(z) << ',' << format_double(alpha) << ',' << format_double(chain.q) << ','
           << format_double(chain.m_s) << ',' << format_double(mu) << '\n';
    } else {
      rows.push_back({{"zeta", z}, {"alpha_q", alpha}, {"q", chain.q}, {"m_s", chain.m_s}, {"mu_s", mu}});
    }
  }
  emit(csv ? text.str() : dump(rows), out);
  return 0;
}

int cmd_dump_matrices(const std::string& which, const std::string& out) {
  const auto canonical = canonical_alpha_set();
  AlphaSet set;
  if (which == "canonical") {
    set = canonical;
  } else if (which == "primed") {
    set = alpha_prime_set();
  } else if (which == "similarity") {
    set = canonical_transform(s_matrix(), canonical, TransformMode::similarity);
  } else if (which == "two_sided") {
    set = canonical_transform(s_matrix(), canonical, TransformMode::two_sided);
  } else {
    throw UsageError("set must be canonical, primed, similarity or two_sided");
  }
  json j = to_json(set);
  j["set"] = which;
  j["s_matrix"] = to_json(s_matrix());
  emit(dump(j), out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dirac-Maxwell correspondence verifier"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string units = "natural";
  std::string format = "json";
  std::string out;
  const std::map<std::string, UnitMode> unit_map{{"natural", UnitMode::natural},
                                                  {"gaussian_cgs", UnitMode::gaussian_cgs}};
  const std::map<std::string, OutputFormat> format_map{
      {"json", OutputFormat::json}, {"csv", OutputFormat::csv}, {"text", OutputFormat::text}};

  app.add_option("--units", units, "natural or gaussian_cgs")->check(CLI::IsMember({"natural", "gaussian_cgs"}));
  app.add_option("--zeta", cfg.zeta, "torus aspect parameter in (0, 1]");
  app.add_option("--tol-abs", cfg.tol_abs, "absolute tolerance, in units of each quantity's natural scale");
  app.add_option("--tol-rel", cfg.tol_rel, "relative tolerance");
  app.add_option("--samples", cfg.samples, "random samples per property");
  app.add_option("--seed", cfg.seed, "64-bit seed");
  auto* fmt = app.add_option("--format", format, "json, csv or text")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--quad-points", cfg.quadrature_points, "initial Simpson intervals (>= 64)");
  app.add_option("--out", out, "output path (default: standard output)");

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "algebra, bilinear, fierz, torus, planewave, dynamics or all");

  auto* torus = app.add_subcommand("torus", "torus model, derived quantities and ledger as JSON");

  double px = 0.0, py = 1.0, pz = 0.0;
  std::string branch = "positive";
  int which = 1;
  auto* planewave = app.add_subcommand("planewave", "plane-wave amplitudes and field interpretation as JSON");
  planewave->add_option("--px", px, "momentum x in units of m c");
  planewave->add_option("--py", py, "momentum y in units of m c");
  planewave->add_option("--pz", pz, "momentum z in units of m c");
  planewave->add_option("--branch", branch, "positive or negative");
  planewave->add_option("--which", which, "solution 1 or 2 of the branch");

  auto* dynamics = app.add_subcommand("dynamics", "forces, Lagrangians and the photon-photon table as JSON");

  double zmin = 0.05, zmax = 1.0;
  int steps = 20;
  auto* sweep = app.add_subcommand("sweep-zeta", "CSV rows zeta, alpha_q, q, m_s, mu_s");
  sweep->add_option("--min", zmin, "smallest zeta");
  sweep->add_option("--max", zmax, "largest zeta");
  sweep->add_option("--steps", steps, "number of rows");

  std::string set_name = "canonical";
  auto* dumpm = app.add_subcommand("dump-matrices", "a Dirac matrix set as JSON, entries [re, im]");
  dumpm->add_option("--set", set_name, "canonical, primed, similarity or two_sided");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    cfg.units = unit_map.at(units);
    cfg.format = format_map.at(format);
    if (auto err = cfg.validate()) throw UsageError(*err);

    if (*verify) return cmd_verify(cfg, suite, out);
    if (*torus) return cmd_torus(cfg, out);
    if (*planewave) return cmd_planewave(cfg, Vec3d(px, py, pz), branch, which, out);
    if (*dynamics) return cmd_dynamics(cfg, out);
    if (*sweep) return cmd_sweep_zeta(cfg, zmin, zmax, steps, fmt->count() == 0 || format == "csv", out);
    if (*dumpm) return cmd_dump_matrices(set_name, out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const dm::DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
