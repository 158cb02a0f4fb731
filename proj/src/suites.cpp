#include "dirac_maxwell/suites.hpp"

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/dynamics.hpp"
#include "dirac_maxwell/em_bridge.hpp"
#include "dirac_maxwell/errors.hpp"
#include "dirac_maxwell/planewave.hpp"
#include "dirac_maxwell/rng.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <numbers>
#include <sstream>

namespace dm {

std::string_view to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::text: return "text";
  }
  return "?";
}

UnitSystem RunConfig::unit_system() const {
  return units == UnitMode::natural ? UnitSystem::natural() : UnitSystem::gaussian_cgs();
}

std::optional<std::string> RunConfig::validate() const {
  if (!(zeta > 0.0 && zeta <= 1.0)) return "zeta must lie in (0, 1]";
  if (!(tol_abs >= 0.0) || !std::isfinite(tol_abs)) return "tol-abs must be a finite non-negative number";
  if (!(tol_rel >= 0.0) || !std::isfinite(tol_rel)) return "tol-rel must be a finite non-negative number";
  if (samples < 1) return "samples must be at least 1";
  if (quadrature_points < 64) return "quad-points must be at least 64";
  return std::nullopt;
}

std::string_view to_string(Suite s) {
  switch (s) {
    case Suite::algebra: return "algebra";
    case Suite::bilinear: return "bilinear";
    case Suite::fierz: return "fierz";
    case Suite::torus: return "torus";
    case Suite::planewave: return "planewave";
    case Suite::dynamics: return "dynamics";
  }
  return "?";
}

std::vector<Suite> all_suites() {
  return {Suite::algebra, Suite::bilinear, Suite::fierz, Suite::torus, Suite::planewave, Suite::dynamics};
}

std::optional<Suite> parse_suite(std::string_view name) {
  for (auto s : all_suites())
    if (to_string(s) == name) return s;
  return std::nullopt;
}

bool SuiteResult::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckReport& c) { return c.passed(); });
}

namespace {

constexpr double pi = std::numbers::pi;
constexpr double kUlps = 4.0 * DBL_EPSILON;

class Collector {
 public:
  Collector(Suite suite, const RunConfig& cfg) : prefix_(std::string(to_string(suite)) + "."), cfg_(cfg) {
    result_.suite = suite;
  }

  const RunConfig& config() const { return cfg_; }

  void check(const std::string& id, std::string ref, Complexd claimed, Complexd computed, Tolerance tol,
             std::string notes = {}) {
    result_.checks.push_back(
        make_check(prefix_ + id, std::move(ref), claimed, computed, tol, std::move(notes)));
  }
  /// Relative comparison of nonzero quantities.
  void rel(const std::string& id, std::string ref, Complexd claimed, Complexd computed, double tol,
           std::string notes = {}) {
    check(id, std::move(ref), claimed, computed, {0.0, tol}, std::move(notes));
  }
  /// computed must vanish to tol_abs times the natural scale of the quantity.
  void zero(const std::string& id, std::string ref, Complexd computed, double scale,
            std::string notes = {}) {
    check(id, std::move(ref), 0.0, computed, {cfg_.tol_abs * scale, 0.0}, std::move(notes));
  }
  void predicate(const std::string& id, std::string ref, bool holds, std::string notes = {}) {
    result_.checks.push_back(make_predicate(prefix_ + id, std::move(ref), holds, std::move(notes)));
  }
  /// A stated relation that its own ingredients contradict: a ledgered check plus a ledger entry.
  void discrepancy(const std::string& id, const std::string& relation, Complexd stated, Complexd computed,
                   const std::string& notes) {
    result_.checks.push_back(make_ledgered(prefix_ + id, relation, stated, computed, notes));
    result_.ledger.add(make_discrepancy(relation, stated, computed, notes));
  }

  SuiteResult finish() {
    std::stable_sort(result_.checks.begin(), result_.checks.end(),
                     [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return std::move(result_);
  }

 private:
  std::string prefix_;
  const RunConfig& cfg_;
  SuiteResult result_;
};

/// Worst sample of a family of comparisons, scored by |computed - claimed| / max(|claimed|, |computed|, scale).
class Worst {
 public:
  void add(Complexd claimed, Complexd computed, double scale) {
    const double denom = std::max({std::abs(claimed), std::abs(computed), scale});
    const double s = denom > 0.0 ? std::abs(computed - claimed) / denom : 0.0;
    ++count_;
    if (s > score_ || count_ == 1) {
      score_ = s;
      claimed_ = claimed;
      computed_ = computed;
      scale_ = scale;
    }
  }

  void emit(Collector& out, const std::string& id, std::string ref, double tol) const {
    std::ostringstream notes;
    notes << "worst of " << count_ << " samples";
    out.check(id, std::move(ref), claimed_, computed_, {tol * scale_, tol}, notes.str());
  }

 private:
  Complexd claimed_{};
  Complexd computed_{};
  double scale_ = 0.0;
  double score_ = 0.0;
  int count_ = 0;
};

std::string pad(int value, int width) {
  std::string s = std::to_string(value);
  if (static_cast<int>(s.size()) < width) s.insert(0, static_cast<std::size_t>(width) - s.size(), '0');
  return s;
}

Vec3d random_vec(SplitMix64& rng) {
  const double x = rng.uniform(-1.0, 1.0);
  const double y = rng.uniform(-1.0, 1.0);
  const double z = rng.uniform(-1.0, 1.0);
  return {x, y, z};
}

Complexd random_complex(SplitMix64& rng) {
  const double re = rng.uniform(-1.0, 1.0);
  const double im = rng.uniform(-1.0, 1.0);
  return {re, im};
}

/// Random real field with no component along the axis, so it fits the axis layouts.
EmField random_transverse(SplitMix64& rng, Axis axis) {
  Vec3d e = random_vec(rng);
  Vec3d h = random_vec(rng);
  e(static_cast<int>(axis)) = 0.0;
  h(static_cast<int>(axis)) = 0.0;
  return EmField::real(e, h);
}

EmField random_complex_y(SplitMix64& rng) {
  EmField f;
  f.e.x() = random_complex(rng);
  f.e.z() = random_complex(rng);
  f.h.x() = random_complex(rng);
  f.h.z() = random_complex(rng);
  return f;
}

double field_scale(const EmField& f) { return f.e.squaredNorm() + f.h.squaredNorm(); }

std::string join(const std::array<double, 5>& d) {
  std::string s;
  for (std::size_t k = 0; k < d.size(); ++k) {
    if (k) s += ", ";
    s += format_double(d[k]);
  }
  return s;
}

// ---------------------------------------------------------------- algebra

SuiteResult run_algebra(const RunConfig& cfg) {
  Collector out(Suite::algebra, cfg);
  auto rng = suite_stream(cfg.seed, "algebra");
  const auto set = canonical_alpha_set();

  out.check("anticommutation", "{a_mu, a_nu} = 2 delta_mu_nu I for mu, nu in 1..4, exactly", 0.0,
            anticommutation_deviation(set), {0.0, 0.0});
  out.check("pseudoscalar", "a5 anticommutes with a1..a4 and squares to I, exactly", 0.0,
            pseudoscalar_deviation(set), {0.0, 0.0});
  out.check("hermiticity", "a0..a5 are Hermitian", 0.0, hermiticity_deviation(set), {0.0, 0.0});

  const auto group = generate_group(set);
  out.check("group.order", "the products of the matrices form 16 phase classes", 16.0,
            static_cast<double>(group.size()), {0.0, 0.0});
  bool closed = true;
  for (const auto& a : group)
    for (const auto& b : group) closed = closed && phase_class_of(group, a * b) >= 0;
  out.predicate("group.closure", "every product of two classes lies in a class", closed);

  const auto primed = alpha_prime_set();
  out.discrepancy("primed.anticommutation", "primed set obeys the anticommutation relations", 0.0,
                  anticommutation_deviation(primed),
                  "the displayed primed a2 carries entry (4,3) with the wrong sign");
  out.discrepancy("primed.hermiticity", "primed a2 is Hermitian", 0.0, hermiticity_deviation(primed[2]),
                  "entry (4,3) of the displayed primed a2 is not the conjugate of entry (3,4)");

  const Matrix4cd s = s_matrix();
  out.check("transform.s_unitary", "S^+ S = I", 0.0, unitarity_defect(s), {1e-15, 0.0});

  const auto sim = canonical_transform(s, set, TransformMode::similarity);
  const auto two = canonical_transform(s, set, TransformMode::two_sided);
  const auto d_sim = entrywise_difference(sim, primed);
  const auto d_two = entrywise_difference(two, primed);
  const double match = 1e-12;
  for (int k = 0; k < 5; ++k) {
    const std::string id = "transform.similarity.a" + std::to_string(k + 1);
    const std::string ref = "S^+ a" + std::to_string(k + 1) + " S equals the displayed primed matrix";
    if (k == 1) {
      out.discrepancy(id, ref, primed[2](3, 2), sim[2](3, 2),
                      "only entry (4,3) differs; the transformed matrix is Hermitian");
    } else {
      out.check(id, ref, 0.0, d_sim[static_cast<std::size_t>(k)], {match, 0.0});
    }
  }
  Matrix4cd a2_fixed = primed[2];
  a2_fixed(3, 2) = std::conj(primed[2](2, 3));
  out.check("transform.similarity.a2_except_entry", "S^+ a2 S equals the displayed primed a2 elsewhere",
            0.0, max_abs((sim[2] - a2_fixed).eval()), {match, 0.0});

  int sim_matches = 0;
  int two_matches = 0;
  for (int k = 0; k < 5; ++k) {
    sim_matches += d_sim[static_cast<std::size_t>(k)] <= match;
    two_matches += d_two[static_cast<std::size_t>(k)] <= match;
  }
  const bool one_mode = sim_matches == 4 && two_matches == 0;
  out.predicate("transform.winning_mode", "exactly one transform mode maps the set onto the primed set",
                one_mode,
                "winning mode: " + std::string(to_string(TransformMode::similarity)) +
                    "; similarity differences " + join(d_sim) + "; two_sided differences " + join(d_two));
  out.check("transform.similarity.anticommutation", "S^+ a S obeys the anticommutation relations", 0.0,
            anticommutation_deviation(sim), {1e-14, 0.0});

  // Any unitary change of representation keeps the algebra.
  Matrix4cd g;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = random_complex(rng);
  const Matrix4cd u = Eigen::HouseholderQR<Matrix4cd>(g).householderQ();
  const auto moved = canonical_transform(u, set, TransformMode::similarity);
  out.check("transform.random_unitary.anticommutation",
            "U^+ a U obeys the anticommutation relations for a random unitary U", 0.0,
            anticommutation_deviation(moved), {1e-13, 0.0});
  out.check("transform.random_unitary.group_order", "U^+ a U generates 16 phase classes", 16.0,
            static_cast<double>(generate_group(moved, 1e-10).size()), {0.0, 0.0});
  return out.finish();
}

// ---------------------------------------------------------------- bilinear

SuiteResult run_bilinear(const RunConfig& cfg) {
  Collector out(Suite::bilinear, cfg);
  auto rng = suite_stream(cfg.seed, "bilinear");
  const auto set = canonical_alpha_set();
  const double tol = cfg.tol_rel;

  for (const auto& triad : axis_triads()) {
    const std::string t = triad.name();
    const int ax = static_cast<int>(triad.axis);
    Worst w0, w4, w5, wk, woff, wround;
    for (int i = 0; i < cfg.samples; ++i) {
      const EmField f = random_transverse(rng, triad.axis);
      const Vec3d e = f.e_real();
      const Vec3d h = f.h_real();
      const double scale = e.squaredNorm() + h.squaredNorm();
      const Bispinord psi = bispinor_from_fields(f, triad.layout);
      w0.add(scale, sandwich(psi, set[0]), scale);
      w4.add(e.squaredNorm() - h.squaredNorm(), sandwich(psi, set[4]), scale);
      w5.add(2.0 * e.dot(h), sandwich(psi, set[5]), scale);
      wk.add(triad.poynting_sign() * 2.0 * e.cross(h)(ax), sandwich(psi, set[triad.working_matrix()]),
             scale);
      for (int k = 1; k <= 3; ++k)
        if (k != triad.working_matrix()) woff.add(0.0, sandwich(psi, set[k]), scale);
      const EmField back = fields_from_bispinor(psi, triad.layout);
      wround.add(0.0, std::max(max_abs((back.e - f.e).eval()), max_abs((back.h - f.h).eval())),
                 std::sqrt(scale));
    }
    w0.emit(out, t + ".a0", "psi+ a0 psi = E^2 + H^2", tol);
    w4.emit(out, t + ".a4", "psi+ a4 psi = E^2 - H^2", tol);
    w5.emit(out, t + ".a5", "psi+ a5 psi = 2 E.H", tol);
    wk.emit(out, t + ".working",
            std::string("working-axis bilinear = ") + (triad.poynting_sign() < 0 ? "-" : "+") +
                "2 (E x H)_" + std::string(to_string(triad.axis)),
            tol);
    woff.emit(out, t + ".off_axis", "the other two vector bilinears vanish", tol);
    wround.emit(out, t + ".roundtrip", "fields -> bispinor -> fields is the identity", tol);
  }

  bool threw = false;
  try {
    bispinor_from_fields(EmField::real(Vec3d(0.0, 1.0, 0.0), Vec3d::Zero()), electron_y_layout());
  } catch (const LayoutViolation&) {
    threw = true;
  }
  out.predicate("layout_violation", "a field component without a slot is rejected", threw);

  // Bilinears survive the change of representation psi = S psi'.
  const Matrix4cd s = s_matrix();
  const auto primed = canonical_transform(s, set, TransformMode::similarity);
  std::array<Worst, 6> inv;
  Worst pair_head, pair_tail;
  EmField example;
  for (int i = 0; i < cfg.samples; ++i) {
    const EmField f = random_transverse(rng, Axis::y);
    if (i == 0) example = f;
    const double scale = field_scale(f);
    const Bispinord psi = bispinor_from_fields(f, electron_y_layout());
    const Bispinord psi_p = s.adjoint() * psi;
    for (int k = 0; k < 6; ++k)
      inv[static_cast<std::size_t>(k)].add(sandwich(psi, set[k]), sandwich(psi_p, primed[k]), scale);
    const Bispinord shown = primed_bispinor_printed(f);
    pair_head.add(0.0, max_abs((shown.head<3>() - psi_p.head<3>()).eval()), std::sqrt(scale));
    pair_tail.add(psi_p(3), shown(3), std::sqrt(scale));
  }
  for (int k = 0; k < 6; ++k)
    inv[static_cast<std::size_t>(k)].emit(out, "similarity_invariance.a" + std::to_string(k),
                                          "psi'+ a'" + std::to_string(k) + " psi' = psi+ a" +
                                              std::to_string(k) + " psi",
                                          tol);
  pair_head.emit(out, "primed.components_1_3", "displayed psi' components 1..3 equal S^+ psi", tol);

  const Bispinord psi = bispinor_from_fields(example, electron_y_layout());
  const Bispinord psi_p = s.adjoint() * psi;
  out.discrepancy("primed.component_4", "displayed psi'_4 = (sqrt2/2)(E_x - iH_x) equals (S^+ psi)_4",
                  primed_bispinor_printed(example)(3), psi_p(3),
                  "S^+ psi gives (iH_x - E_x)/sqrt2; substituting the displayed psi' back returns iH_x "
                  "where E_x is claimed, so the pairing is fixed by the round trip");
  const EmField round = fields_from_bispinor(s * psi_p, electron_y_layout());
  out.check("primed.roundtrip", "psi = S psi' recovers the fields", 0.0,
            std::max(max_abs((round.e - example.e).eval()), max_abs((round.h - example.h).eval())),
            {tol * std::sqrt(field_scale(example)), 0.0});
  return out.finish();
}

// ---------------------------------------------------------------- fierz

SuiteResult run_fierz(const RunConfig& cfg) {
  Collector out(Suite::fierz, cfg);
  auto rng = suite_stream(cfg.seed, "fierz");
  const auto set = canonical_alpha_set();
  const auto units = cfg.unit_system();
  const double tol = cfg.tol_rel;
  const int width = std::max(4, static_cast<int>(std::to_string(cfg.samples - 1).size()));

  Worst quartic;
  for (int i = 0; i < cfg.samples; ++i) {
    const EmField f = EmField::real(random_vec(rng), random_vec(rng));
    const auto p = fierz_em(f);
    const double scale = field_scale(f) * field_scale(f);
    out.check("em." + pad(i, width), "(E^2+H^2)^2 - 4 (ExH)^2 = (E^2-H^2)^2 + 4 (E.H)^2", p.lhs, p.rhs,
              {tol * scale, tol});
    const double u = energy_density(f);
    const double g2 = momentum_density(f, units).squaredNorm();
    const double c = units.c;
    quartic.add(p.rhs, 64.0 * pi * pi * (u * u - c * c * g2), scale);
  }
  quartic.emit(out, "quartic", "(8 pi)^2 (U^2 - c^2 g^2) = (E^2-H^2)^2 + 4 (E.H)^2", tol);

  Worst quantum;
  for (int i = 0; i < cfg.samples; ++i) {
    Bispinord psi;
    for (int k = 0; k < 4; ++k) psi(k) = random_complex(rng);
    const auto p = fierz_quantum(psi, set);
    const double n = psi.squaredNorm();
    quantum.add(p.lhs, p.rhs, n * n);
  }
  quantum.emit(out, "quantum", "(psi+psi)^2 - (psi+ a psi)^2 = (psi+ a4 psi)^2 + (psi+ a5 psi)^2", tol);

  Worst cross_lhs, cross_rhs;
  for (int i = 0; i < cfg.samples; ++i) {
    const EmField f = random_transverse(rng, Axis::y);
    const auto em = fierz_em(f);
    const auto q = fierz_quantum(bispinor_from_fields(f, electron_y_layout()), set);
    const double scale = field_scale(f) * field_scale(f);
    cross_lhs.add(em.lhs, q.lhs, scale);
    cross_rhs.add(em.rhs, q.rhs, scale);
  }
  cross_lhs.emit(out, "cross.lhs", "quantum vector side equals the field vector side through the layout", tol);
  cross_rhs.emit(out, "cross.rhs", "quantum scalar side equals the field invariant side through the layout",
                 tol);
  return out.finish();
}

// ---------------------------------------------------------------- torus

SuiteResult run_torus(const RunConfig& cfg) {
  Collector out(Suite::torus, cfg);
  const auto u = cfg.unit_system();
  const double tol = cfg.tol_rel;
  const int nq = cfg.quadrature_points;
  const TorusModel m = derive_parameters(u, cfg.zeta);

  const double compton = u.hbar / (u.m_e * u.c);
  out.rel("parameters.r_t", "r_t = hbar / 2 m c, half the reduced Compton wavelength", compton / 2.0, m.r_t,
          tol);
  out.rel("parameters.r_s", "the torus size does not change after division: r_s = r_t", m.r_t, m.r_s, tol);
  out.rel("parameters.lambda_p", "lambda_p = pi hbar / m c = 2 pi r_t", 2.0 * pi * m.r_t, m.lambda_p, tol);
  out.rel("parameters.omega_r", "omega_s r_s = c", u.c, m.omega_s * m.r_s, tol);
  out.rel("parameters.k", "k = omega / c", m.omega_s / u.c, m.k, tol);
  out.rel("parameters.s_c", "S_c = pi (zeta r_t)^2", pi * cfg.zeta * cfg.zeta * m.r_t * m.r_t, m.s_c, tol);
  out.rel("parameters.delta_tau", "torus volume 2 pi r_s * pi r_c^2 = 2 pi^2 zeta^2 r_s^3",
          2.0 * pi * m.r_s * m.s_c, m.delta_tau, tol);

  const double e0 = calibrate_e0(m, 0.0, nq);
  const TorusModel mc = with_e0(m, e0);
  const auto cur = ring_current(mc, e0, 0.0);
  out.rel("ring_current.tangential", "j_tau = (omega / 4 pi) E", mc.omega_s * e0 / (4.0 * pi), cur.j_tau, tol);
  out.rel("ring_current.charge_density", "rho = j_tau / c = (1/4 pi)(omega / c) E",
          mc.omega_s * e0 / (4.0 * pi * u.c), charge_density(mc, e0), tol);

  out.check("coupling.zeta_one", "alpha_q = 2 zeta^2 / pi ~ 0.637 at zeta = 1", 0.637, coupling_constant(1.0),
            {5e-4, 0.0});
  out.rel("coupling.config", "alpha_q = 2 zeta^2 / pi", 2.0 * cfg.zeta * cfg.zeta / pi,
          coupling_constant(cfg.zeta), tol);
  out.rel("coupling.quadratic", "alpha_q(2 zeta) / alpha_q(zeta) = 4", 4.0,
          coupling_constant(0.8) / coupling_constant(0.4), tol);
  out.rel("coupling.fine_structure_zeta", "zeta solving alpha_q = e^2 / hbar c is sqrt(pi alpha / 2)",
          std::sqrt(pi * u.fine_structure() / 2.0), zeta_for_coupling(u.fine_structure()), tol);

  const double q_scale = e0 * mc.s_c;
  out.check("charge.full_wave", "the full-wave charge vanishes", 0.0,
            integrate_charge(mc, ChargeSpan::full_wave, nq), {1e-12 * q_scale, 0.0});
  out.rel("charge.closed_form", "(1/pi) E0 S_c = zeta^2 E0 r_s^2", charge_stated(mc), charge_closed_form(mc),
          tol);
  out.discrepancy("charge.printed_integrand", "semi-photon charge q = (1/pi) E0 S_c from its printed integrand",
                  charge_stated(mc), integrate_charge_printed(mc, nq),
                  "(1/pi)(omega/c) E0 S_c 2 int_0^{lambda/4} cos(kl) dl evaluates to (2/pi) E0 S_c");
  out.discrepancy("charge.density_half_wave",
                  "semi-photon charge q = (1/pi) E0 S_c from the density (omega/4 pi c) E0 cos(kl)",
                  charge_stated(mc), integrate_charge(mc, ChargeSpan::half_wave, nq),
                  "the ring charge density over the half wave gives (1/2 pi) E0 S_c");

  out.rel("mass.quadrature", "(S_c E0^2 / pi c^2) int_0^{lambda/4} cos^2 = E0^2 S_c / (4 omega_s c)",
          mass_closed_form(mc), integrate_mass(mc, nq), 1e-10);
  out.rel("mass.calibrated", "calibrated E0 gives m_s = m_e", u.m_e, integrate_mass(mc, nq), tol);
  out.discrepancy("mass.amplitude_exponent", "semi-photon mass with E0 to the first power",
                  e0 * mc.s_c / (4.0 * mc.omega_s * u.c), integrate_mass(mc, nq),
                  "the quadrature of the energy density is quadratic in E0; ratio equals E0");
  out.discrepancy("mass.density_form", "semi-photon mass from the density E0^2 cos^2(kl) / 4 pi c^2",
                  mass_closed_form(mc), integrate_mass_density(mc, nq),
                  "integrating the stated mass density over the half wave gives half the closed form");

  for (int k = 1; k <= 20; ++k) {
    const double z = k / 20.0;
    const TorusModel mz = derive_parameters(u, z);
    const auto chain = consistency_chain(with_e0(mz, calibrate_e0(mz, 0.0, nq)), {0.0, tol});
    for (const auto& c : chain.checks) {
      const std::string name = c.id.substr(c.id.find('.') + 1);
      out.rel("chain.z" + pad(k, 2) + "." + name, c.ref + " at zeta = " + format_double(z), c.claimed,
              c.computed, tol, c.notes);
    }
  }
  const auto chain = consistency_chain(mc, {0.0, tol});
  out.check("classical_radius.ratio", "r_o / r_s is close to 1/137", 1.0 / 137.0, chain.ratio_ro_rs,
            {0.0, 5e-3});

  const auto sm = spin_and_moment(mc, u.e);
  out.rel("spin.photon", "sigma_p = hbar", u.hbar, sm.sigma_p, kUlps);
  out.rel("spin.semi_photon", "sigma_s = hbar / 2", u.hbar / 2.0, sm.sigma_s, kUlps);
  out.rel("spin.split", "sigma_s = sigma_p / 2", sm.sigma_p / 2.0, sm.sigma_s, kUlps);
  out.rel("moment", "mu_s = I S_I = (1/2) e hbar / 2 m_e", moment_closed_form(u, u.e), sm.mu_s, kUlps);

  const auto zb = zitterbewegung(u);
  out.rel("zitterbewegung.omega", "omega_z = 2 m c^2 / hbar = omega_s", mc.omega_s, zb.omega_z, tol);
  out.rel("zitterbewegung.radius", "r_z = hbar / 2 m c = r_s", mc.r_s, zb.r_z, tol);
  out.rel("zitterbewegung.speed", "omega_z r_z = c", u.c, zb.omega_z * zb.r_z, tol);
  return out.finish();
}

// ---------------------------------------------------------------- planewave

const char* form_tag(DiracForm f) {
  switch (f) {
    case DiracForm::plus: return "plus";
    case DiracForm::plus_adjoint: return "plus_adjoint";
    case DiracForm::minus: return "minus";
    case DiracForm::minus_adjoint: return "minus_adjoint";
  }
  return "?";
}

constexpr std::array<DiracForm, 4> kForms{DiracForm::plus, DiracForm::plus_adjoint, DiracForm::minus,
                                          DiracForm::minus_adjoint};

bool same_system(const ScalarSystem& a, const ScalarSystem& b) {
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& x = a.rows[k];
    const auto& y = b.rows[k];
    if (x.f_kind != y.f_kind || x.f_component != y.f_component || x.deriv_sign != y.deriv_sign ||
        x.g_kind != y.g_kind || x.g_component != y.g_component || x.mass_sign != y.mass_sign)
      return false;
  }
  return true;
}

const ScalarSystem& printed_system(const std::vector<std::pair<std::string, ScalarSystem>>& all,
                                   const std::string& key) {
  for (const auto& [k, s] : all)
    if (k == key) return s;
  throw DomainError("no printed system " + key);
}

/// A vacuum wave along the triad's Poynting direction, E transverse and H = n x E.
FieldHistory vacuum_wave(const AxisTriad& triad, double k, double omega, bool reverse_h) {
  const int ax = static_cast<int>(triad.axis);
  Vec3d n = Vec3d::Zero();
  n(ax) = triad.poynting_sign();
  Vec3d ea = Vec3d::Zero();
  Vec3d eb = Vec3d::Zero();
  ea((ax + 1) % 3) = 1.0;
  eb((ax + 2) % 3) = 0.5;
  const double kn = k * triad.poynting_sign();
  const double hs = reverse_h ? -1.0 : 1.0;
  auto make = [=](double t, double s, int which) {
    const double ph = kn * s - omega * t;
    Vec3d e;
    if (which == 0) {
      e = ea * std::cos(ph) + eb * std::sin(ph);
    } else {
      const double dph = which == 1 ? -omega : kn;
      e = (-ea * std::sin(ph) + eb * std::cos(ph)) * dph;
    }
    return EmField::real(e, hs * n.cross(e));
  };
  FieldHistory h;
  h.value = [=](double t, double s) { return make(t, s, 0); };
  h.d_t = [=](double t, double s) { return make(t, s, 1); };
  h.d_s = [=](double t, double s) { return make(t, s, 2); };
  return h;
}

std::vector<double> grid(double period, int n) {
  std::vector<double> v;
  for (int i = 0; i < n; ++i) v.push_back(period * (0.13 + 0.29 * i));
  return v;
}

SuiteResult run_planewave(const RunConfig& cfg) {
  Collector out(Suite::planewave, cfg);
  auto rng = suite_stream(cfg.seed, "planewave");
  const auto u = cfg.unit_system();
  const auto set = canonical_alpha_set();
  const double tol = cfg.tol_rel;
  const double mass = u.m_e;
  const double c = u.c;
  const double mc = mass * c;
  const double mc2 = mass * c * c;
  const double mc2_4 = mc2 * mc2 * mc2 * mc2;

  Worst disp, build, det_on, det_off, ortho, cont;
  std::array<Worst, 4> res;
  bool dims = true;
  for (int i = 0; i < cfg.samples; ++i) {
    const Vec3d p = 2.0 * mc * random_vec(rng);
    const auto [ep, em] = dispersion(p, mass, u);
    disp.add(c * c * p.squaredNorm() + mc2 * mc2, ep * ep, mc2 * mc2);
    const Matrix4cd op = ep * set[0] + c * (p.x() * set[1] + p.y() * set[2] + p.z() * set[3]) + mc2 * set[4];
    build.add(0.0, max_abs((build_system(ep, p, mass, u) - op).eval()), ep);
    for (double eps : {ep, em}) {
      const Matrix4cd sys = build_system(eps, p, mass, u);
      det_on.add(0.0, determinant(sys), 1.0);
      dims = dims && nullspace(sys).size() == 2;
    }
    const double off = 0.5 * ep;
    det_off.add((off * off - ep * ep) * (off * off - ep * ep), determinant(build_system(off, p, mass, u)),
                mc2_4);
    int f = 0;
    for (auto br : {Branch::positive, Branch::negative}) {
      for (int which : {1, 2}) {
        const auto st = make_state(br, which, p, mass, u, rng.uniform(0.0, 2.0 * pi));
        res[static_cast<std::size_t>(f++)].add(0.0, residual(st, set, mass, u), 1.0);
        const auto cb = continuity_check(st, set, u);
        cont.add(0.0, cb.balance, std::abs(st.energy) / u.hbar * st.amplitudes.squaredNorm());
      }
    }
    const auto pos = solution_basis(Branch::positive, p, mass, u);
    const auto neg = solution_basis(Branch::negative, p, mass, u);
    for (const auto& a : {pos.first, pos.second})
      for (const auto& b : {neg.first, neg.second}) ortho.add(0.0, a.dot(b), a.norm() * b.norm());
  }
  disp.emit(out, "dispersion", "eps^2 = c^2 p^2 + m^2 c^4", tol);
  build.emit(out, "build_system", "the amplitude system equals eps a0 + c a.p + beta m c^2", tol);
  // Residual and determinant bounds are absolute in units of m c^2.
  const char* names[4] = {"positive1", "positive2", "negative1", "negative2"};
  for (std::size_t f = 0; f < 4; ++f)
    res[f].emit(out, std::string("residual.") + names[f], "printed amplitudes annihilate the amplitude system",
                1e-12 * mc2);
  det_on.emit(out, "determinant.on_shell", "the determinant vanishes on shell", 1e-10 * mc2_4);
  det_off.emit(out, "determinant.off_shell", "det = (eps^2 - eps_+^2)^2 off shell", 1e-10);
  out.predicate("nullspace.dimension", "the on-shell nullspace has dimension 2 for both branches", dims);
  ortho.emit(out, "orthogonality", "positive and negative branch amplitudes are orthogonal", tol);
  cont.emit(out, "continuity", "dP/dt + div S_pr = 0", tol);

  // Sparsity for momentum along y in the wave layout.
  {
    const Vec3d p(0.0, 0.7 * mc, 0.0);
    const std::array<std::array<bool, 4>, 4> expected{{{false, true, true, false},
                                                       {true, false, false, true},
                                                       {true, false, false, true},
                                                       {false, true, true, false}}};
    int f = 0;
    for (auto br : {Branch::positive, Branch::negative}) {
      for (int which : {1, 2}) {
        const auto fi = field_interpretation(make_state(br, which, p, mass, u), electron_y_layout());
        out.predicate(std::string("sparsity.") + names[f], "nonzero slots match the printed pattern",
                      fi.nonzero == expected[static_cast<std::size_t>(f)]);
        ++f;
      }
    }
    bool threw = false;
    try {
      field_interpretation(make_state(Branch::positive, 1, Vec3d(0.1 * mc, 0.7 * mc, 0.0), mass, u),
                           electron_y_layout());
    } catch (const AxisMismatch&) {
      threw = true;
    }
    out.predicate("field_interpretation.axis_mismatch", "off-axis momentum is rejected", threw);
  }

  // The displayed special value sets at p_y = m c.
  {
    const auto sv = special_values(mass, u);
    for (int f = 0; f < 4; ++f) {
      const auto k = static_cast<std::size_t>(f);
      out.check(std::string("special.literal.") + names[f], "eps = +-m c^2 substituted as stated reproduces "
                "the displayed values", 0.0, max_abs((sv.literal[k] - sv.printed[k]).eval()), {tol, 0.0});
    }
    const Vec3d p(0.0, mc, 0.0);
    out.discrepancy("special.off_shell", "eps_+ = m c^2 at p = m c lies on the mass shell", 0.0,
                    determinant(build_system(mc2, p, mass, u)) / mc2_4,
                    "on shell eps_+ = sqrt2 m c^2; the literal values solve an off-shell system");
    out.discrepancy("special.on_shell_value", "B+(1) component 2 equals 1/2 in magnitude", 0.5,
                    std::abs(sv.on_shell[0](1)), "the dispersion relation gives 1/(1 + sqrt2)");
    const EmField fld = fields_from_bispinor(sv.printed[0], electron_y_layout());
    out.discrepancy("special.h_over_e", "H is two times less than E in the displayed solution", 0.5,
                    std::abs(fld.h.x()) / std::abs(fld.e.z()), "the displayed amplitudes give |H| = 2 |E|");
  }

  // Each operator form annihilates its paired plane wave.
  for (auto form : kForms) {
    const auto sg = form_signs(form);
    for (int which : {1, 2}) {
      const auto sol = form_solution(form, which, 0.8 * mc, mass, u);
      const Matrix4cd op = static_cast<double>(sg.energy) * u.hbar * sol.omega * set[0] +
                           static_cast<double>(sg.momentum) * c * u.hbar * sol.k * set[2] +
                           static_cast<double>(sg.mass) * mc2 * set[4];
      out.zero(std::string("form_pairing.") + form_tag(form) + "." + std::to_string(which),
               "the form's plane wave satisfies the form", max_abs((op * sol.b).eval()),
               mc2 * max_abs(sol.b));
    }
  }

  // The same equation written as Maxwell's equations with imaginary currents.
  const double kappa = mc / u.hbar;
  for (auto form : kForms) {
    for (const auto& triad : axis_triads()) {
      double disagreement = 0.0;
      double residual_max = 0.0;
      double scale = 0.0;
      for (int which : {1, 2}) {
        const auto sol = form_solution(form, which, 0.8 * mc, mass, u);
        const auto hist = plane_wave_history(sol.b, sol.omega, sol.k, triad.layout);
        const auto g = dirac_residual_em(hist, triad, mass, form, grid(2 * pi / std::abs(sol.omega), 3),
                                         grid(2 * pi / std::abs(sol.k), 3), u);
        disagreement = std::max(disagreement, g.max_disagreement);
        residual_max = std::max(residual_max, std::max(g.max_scalar, g.max_bispinor));
        scale = std::max(scale, (kappa + std::abs(sol.k) + std::abs(sol.omega) / c) * max_abs(sol.b));
      }
      const std::string id = std::string("maxwell.") + triad.name() + "." + form_tag(form);
      out.zero(id + ".agreement", "bispinor residual equals the four scalar equations slot by slot",
               disagreement, scale);
      out.zero(id + ".residual", "the paired plane wave solves the scalar equations", residual_max, scale);
    }
  }
  {
    const auto printed = printed_scalar_systems();
    const auto yneg = layout_for(Axis::y, Orientation::negative);
    const auto& base = printed_system(printed, "y-/minus");
    for (auto ax : {Axis::x, Axis::y, Axis::z}) {
      const auto to = layout_for(ax, Orientation::positive);
      const std::string key = to.name + "/minus";
      out.predicate("maxwell.tables." + to.name, "printed " + key + " equals the transposed y- system",
                    same_system(transpose_system(base, yneg, to), printed_system(printed, key)));
    }
  }
  {
    // Detuned control: the residual must notice a wrong frequency.
    const auto triad = axis_triad(Axis::y, Orientation::negative);
    const auto sol = form_solution(DiracForm::plus, 1, 0.8 * mc, mass, u);
    const auto hist = plane_wave_history(sol.b, 1.1 * sol.omega, sol.k, triad.layout);
    const auto g = dirac_residual_em(hist, triad, mass, DiracForm::plus, grid(2 * pi / std::abs(sol.omega), 3),
                                     grid(2 * pi / std::abs(sol.k), 3), u);
    const double scale = (kappa + std::abs(sol.k) + std::abs(sol.omega) / c) * max_abs(sol.b);
    out.predicate("maxwell.detuned_control", "a detuned frequency leaves a residual above 1e-2 of scale",
                  g.max_scalar > 1e-2 * scale, "residual " + format_double(g.max_scalar / scale));

    // The same check with derivatives from differences of the field history.
    const auto good = plane_wave_history(sol.b, sol.omega, sol.k, triad.layout);
    ResidualOptions opts;
    opts.wavelength = 2 * pi / std::abs(sol.k);
    const auto gd = dirac_residual_em(FieldHistory{good.value, {}, {}}, triad, mass, DiracForm::plus,
                                      grid(2 * pi / std::abs(sol.omega), 3), grid(opts.wavelength, 3), u, opts);
    out.check("maxwell.finite_difference.y-.plus", "differenced plane wave solves the scalar equations", 0.0,
              gd.max_scalar, {1e-8 * scale, 0.0},
              "truncation estimate " + format_double(gd.truncation_estimate));
    out.check("maxwell.finite_difference.agreement", "differenced residual forms agree slot by slot", 0.0,
              gd.max_disagreement, {cfg.tol_abs * scale, 0.0});
  }
  {
    // Without mass the scalar systems are Maxwell's vacuum equations: the plus
    // forms for the negative orientations, the minus forms for the positive ones.
    const double k = 0.8 * kappa;
    const double omega = c * k;
    for (const auto& triad : axis_triads()) {
      const bool neg = triad.orientation == Orientation::negative;
      const auto wave = vacuum_wave(triad, k, omega, false);
      const auto mirrored = vacuum_wave(triad, k, omega, true);
      const auto ts = grid(2 * pi / omega, 3);
      const auto ss = grid(2 * pi / k, 3);
      const DiracForm maxwell = neg ? DiracForm::plus : DiracForm::minus;
      const DiracForm other = neg ? DiracForm::minus : DiracForm::plus;
      const auto g = dirac_residual_em(wave, triad, 0.0, maxwell, ts, ss, u);
      const auto gm = dirac_residual_em(mirrored, triad, 0.0, other, ts, ss, u);
      const auto gx = dirac_residual_em(wave, triad, 0.0, other, ts, ss, u);
      const std::string id = std::string("maxwell.massless.") + triad.name();
      out.zero(id + ".vacuum", std::string("a vacuum wave solves the massless ") + form_tag(maxwell) + " system",
               g.max_scalar, k);
      out.zero(id + ".mirrored", std::string("the massless ") + form_tag(other) +
               " system is Maxwell's with H reversed", gm.max_scalar, k);
      out.predicate(id + ".distinct", "the vacuum wave does not solve the other sign pattern",
                    gx.max_scalar > 1e-2 * k);
    }
  }
  {
    auto triad = axis_triad(Axis::y, Orientation::negative);
    triad.layout = positron_y_layout();
    const auto sol = form_solution(DiracForm::minus, 1, 0.8 * mc, mass, u);
    const auto hist = plane_wave_history(sol.b, sol.omega, sol.k, triad.layout);
    const auto g = dirac_residual_em(hist, triad, mass, DiracForm::minus, grid(2 * pi / std::abs(sol.omega), 3),
                                     grid(2 * pi / std::abs(sol.k), 3), u);
    const double scale = (kappa + std::abs(sol.k) + std::abs(sol.omega) / c) * max_abs(sol.b);
    out.zero("maxwell.positron.agreement", "the charge-conjugated layout keeps both residual forms equal",
             g.max_disagreement, scale);
    const auto sys = scalar_system_for(triad.layout, DiracForm::minus);
    const auto& plus = printed_system(printed_scalar_systems(), "y-/plus");
    out.discrepancy("maxwell.positron.currents",
                    "the charge-conjugated minus-form system has the current signs of the plus-form system",
                    plus.rows[0].mass_sign, sys.rows[0].mass_sign,
                    "the transposed system carries the current signs of the table satisfied by the adjoint form");
  }
  {
    // The table displayed for the plus form is solved by the adjoint form's wave.
    const auto triad = axis_triad(Axis::y, Orientation::negative);
    const auto& shown = printed_system(printed_scalar_systems(), "y-/plus_adjoint");
    const auto sol = form_solution(DiracForm::plus, 1, 0.8 * mc, mass, u);
    const auto hist = plane_wave_history(sol.b, sol.omega, sol.k, triad.layout);
    const FieldJet jet{hist.value(0.0, 0.0), hist.d_t(0.0, 0.0), hist.d_s(0.0, 0.0)};
    double r = 0.0;
    for (const auto& v : scalar_residual(shown, jet, mass, u)) r = std::max(r, std::abs(v));
    const double scale = (kappa + std::abs(sol.k) + std::abs(sol.omega) / c) * max_abs(sol.b);
    out.discrepancy("maxwell.label_swap", "the system derived from the plus form is solved by plus-form waves", 0.0,
                    r / scale, "it is solved by the adjoint form's waves; the two displayed labels are swapped");
    out.discrepancy("maxwell.current_frequency", "the imaginary currents oscillate at omega = m c^2 / hbar",
                    mc2 / u.hbar, std::abs(sol.omega),
                    "the plane wave frequency is sqrt(c^2 p^2 + m^2 c^4) / hbar; the current coefficient "
                    "is m c / hbar, equal to omega / c only at rest");
  }

  {
    const auto model = derive_parameters(u, cfg.zeta);
    out.rel("normalization", "psi = sqrt(8 pi m c^2) psi' normalizes psi' to 1 over the torus", 1.0,
            normalization_integral(model, cfg.quadrature_points), 1e-10);
  }
  return out.finish();
}

// ---------------------------------------------------------------- dynamics

FieldJet jet_at(const FieldHistory& h, double t, double s) { return {h.value(t, s), h.d_t(t, s), h.d_s(t, s)}; }

SuiteResult run_dynamics(const RunConfig& cfg) {
  Collector out(Suite::dynamics, cfg);
  auto rng = suite_stream(cfg.seed, "dynamics");
  const auto u = cfg.unit_system();
  const auto set = canonical_alpha_set();
  const double tol = cfg.tol_rel;
  const double c = u.c;
  const double mass = u.m_e;
  const double mc = mass * c;
  const double kappa = mc / u.hbar;
  const TorusModel base = derive_parameters(u, cfg.zeta);
  const TorusModel model = with_e0(base, calibrate_e0(base, 0.0, cfg.quadrature_points));

  {
    Worst t00, trace, tp0;
    for (int i = 0; i < cfg.samples; ++i) {
      const EmField f = EmField::real(random_vec(rng), random_vec(rng));
      const double scale = field_scale(f);
      const auto st = stress_tensor(f);
      t00.add(4.0 * pi * energy_density(f), st.tau_00, scale);
      trace.add(st.tau_00, st.trace(), scale);
      tp0.add(0.0, max_abs((st.tau_p0 - 4.0 * pi * poynting(f, u) / c).eval()), scale);
    }
    t00.emit(out, "stress.tau_00", "tau_00 = 4 pi U = (E^2 + H^2) / 2", tol);
    trace.emit(out, "stress.trace", "sum_p tau_pp = tau_00", tol);
    tp0.emit(out, "stress.tau_p0", "tau_p0 = 4 pi S / c", tol);
    const EmField f = EmField::real(Vec3d(1.0, 0.0, 0.0), Vec3d::Zero());
    out.discrepancy("stress.inverted_delta", "trace with delta_pq = 0 for p = q equals tau_00",
                    stress_tensor_inverted_delta(f).tau_00, stress_tensor_inverted_delta(f).trace(),
                    "the printed delta convention gives trace -(E^2 + H^2); the standard delta is used");
  }

  {
    const double e = model.e0;
    for (auto pol : {RingPolarization::ex_hz, RingPolarization::ez_hx}) {
      const auto f = lorentz_force_ring(model, e, pol);
      const std::string p(to_string(pol));
      const double sign = pol == RingPolarization::ex_hz ? 1.0 : -1.0;
      out.rel("force." + p + ".f0", "f0 = +-(1/4 pi c) omega E^2", sign * model.omega_s * e * e / (4 * pi * c), f.f0,
              tol);
      out.rel("force." + p + ".f2_current", "f2 = (1/c) j_tau H", f.f2_via_current, f.f2, tol);
      out.rel("force." + p + ".f0_current", "f0 = (1/c) j_tau E", f.f0_via_current, f.f0, tol);
    }
    const double j = ring_current(model, e, 0.0).j_tau;
    const Vec3d conf = magnetic_confinement_density(EmField::real(Vec3d(e, 0, 0), Vec3d(0, 0, e)),
                                                    Vec3d(0.0, j, 0.0), u);
    out.rel("force.confinement", "|(1/c) j_tau x H| equals f2 on the ring", lorentz_force_ring(model, e,
            RingPolarization::ex_hz).f2, conf.norm(), tol);
    out.rel("omega_alias", "the ring frequency omega_s equals omega_e = 2 m c^2 / hbar",
            2.0 * mass * c * c / u.hbar, model.omega_s, tol, "force formulas use omega_s, currents omega_e");
  }

  {
    Worst q_f, f_j;
    for (int i = 0; i < cfg.samples; ++i) {
      const FieldJet jet{random_complex_y(rng), random_complex_y(rng) * Complexd(c * kappa),
                         random_complex_y(rng) * Complexd(kappa)};
      const auto l = lagrangian_linear(jet, set, mass, u);
      const double scale = c / (4 * pi) * kappa * field_scale(jet.value);
      q_f.add(l.field, l.quantum_em_units, scale);
      f_j.add(l.field, l.current, scale);
    }
    q_f.emit(out, "lagrangian.linear.quantum_vs_field", "quantum form equals the field form", tol);
    f_j.emit(out, "lagrangian.linear.current_vs_field", "current form equals the field form", tol);

    auto jet_for = [&](DiracForm form, double detune) {
      const auto sol = form_solution(form, 1, 0.8 * mc, mass, u);
      const auto h = plane_wave_history(sol.b, detune * sol.omega, sol.k, electron_y_layout());
      return jet_at(h, 0.3 / std::abs(sol.omega), 0.2 / std::abs(sol.k));
    };
    const FieldJet on = jet_for(DiracForm::plus, 1.0);
    const auto l_on = lagrangian_linear(on, set, mass, u);
    const double s_on = c / (4 * pi) * kappa * field_scale(on.value);
    out.zero("lagrangian.linear.on_shell.quantum", "L_s = 0 on shell (quantum form)", l_on.quantum_em_units, s_on);
    out.zero("lagrangian.linear.on_shell.field", "L_s = 0 on shell (field form)", l_on.field, s_on);
    out.zero("lagrangian.linear.on_shell.current", "L_s = 0 on shell (current form)", l_on.current, s_on);

    const FieldJet off = jet_for(DiracForm::plus, 1.1);
    const auto l_off = lagrangian_linear(off, set, mass, u);
    const double s_off = c / (4 * pi) * kappa * field_scale(off.value);
    out.predicate("lagrangian.linear.detuned.nonzero", "a detuned wave has L != 0",
                  std::abs(l_off.field) > 1e-3 * s_off);
    out.rel("lagrangian.linear.detuned.quantum_vs_field", "detuned: quantum form equals the field form",
            l_off.field, l_off.quantum_em_units, tol);
    out.rel("lagrangian.linear.detuned.current_vs_field", "detuned: current form equals the field form",
            l_off.field, l_off.current, tol);

    const FieldJet adj = jet_for(DiracForm::plus_adjoint, 1.0);
    const auto mf_adj = maxwell_lagrangian_forms(adj, mass, u);
    out.rel("lagrangian.maxwell.adjoint_wave", "(1/8 pi)(E^2 - H^2) = (i / omega_e)(dU/dt + div S)", mf_adj.lhs,
            mf_adj.rhs, tol, "holds for the adjoint form's wave");
    const auto mf_on = maxwell_lagrangian_forms(on, mass, u);
    out.discrepancy("lagrangian.maxwell.plus_wave",
                    "(1/8 pi)(E^2 - H^2) = (i / omega_e)(dU/dt + div S) for waves with L_s = 0", mf_on.lhs,
                    mf_on.rhs, "for the wave with L_s = 0 the two sides have opposite signs");
    FieldJet stat;
    stat.value = EmField::real(Vec3d(1.0, 0.0, 0.0), Vec3d(0.0, 0.0, 0.5));
    const auto mf_s = maxwell_lagrangian_forms(stat, mass, u);
    out.discrepancy("lagrangian.maxwell.static", "(1/8 pi)(E^2 - H^2) = (i / omega_e)(dU/dt + div S)", mf_s.lhs,
                    mf_s.rhs, "static control: the relation is specific to the twirled wave");
  }

  {
    Worst qf, qq, cross;
    for (int i = 0; i < cfg.samples; ++i) {
      FieldJet jet;
      jet.value = random_transverse(rng, Axis::y);
      const auto l = lagrangian_nonlinear(jet, model, mass, set);
      const double w = field_scale(jet.value);
      const double pre = model.delta_tau / (64 * pi * pi * mass * c * c);
      qf.add(l.quartic_invariant, l.quartic_field, pre * w * w);
      qq.add(l.quartic_quantum, l.quartic_quantum_fierz, model.delta_tau / (8 * pi) * w * w);
      cross.add(l.quartic_field * (8 * pi * mass * c * c), l.quartic_quantum, model.delta_tau / (8 * pi) * w * w);
    }
    qf.emit(out, "lagrangian.nonlinear.field_vs_invariant", "(dtau/m c^2)(U^2 - c^2 g^2) equals the invariant form",
            tol);
    qq.emit(out, "lagrangian.nonlinear.quantum_fierz", "quantum quartic equals its Fierz rewrite", tol);
    cross.emit(out, "lagrangian.nonlinear.quantum_vs_field",
               "quantum quartic through the layout equals 8 pi m c^2 times the field quartic", tol);

    FieldJet jet;
    jet.value = EmField::real(Vec3d(0.6, 0.0, 0.3), Vec3d(0.4, 0.0, 0.9));
    const auto l = lagrangian_nonlinear(jet, model, mass, set);
    out.discrepancy("lagrangian.nonlinear.normalization",
                    "quantum quartic normalized with 1/(8 pi m c) equals the field quartic",
                    l.quartic_quantum / (8 * pi * mass * c), l.quartic_field,
                    "the field quartic is the quantum quartic divided by 8 pi m c^2; the two differ by a "
                    "factor c, invisible in natural units");
    out.discrepancy("lagrangian.nonlinear.pseudoscalar_sign",
                    "quantum quartic = (dtau/8 pi)[(psi+ a4 psi)^2 - (psi+ a5 psi)^2]", l.quartic_quantum_minus,
                    l.quartic_quantum, "the Fierz identity needs a plus sign on the pseudoscalar square");
    const auto qk = quantum_kinetic_coefficients(u, set);
    out.rel("lagrangian.kinetic.du_dt", "the quantum kinetic part carries dU/dt with coefficient 1", 1.0,
            qk.du_dt_coefficient, 1e-12);
    out.discrepancy("lagrangian.kinetic.div_s", "the quantum kinetic part carries div S with coefficient 1", 1.0,
                    qk.div_s_coefficient, "c d_y (psi+ a_y psi) gives 2 div S");

    EmField sample = EmField::real(Vec3d(0.6, 0.2, 0.3), Vec3d(0.4, -0.1, 0.9));
    const auto pp = photon_photon_comparison(model, sample);
    out.rel("photon_photon.coefficient", "(E.H)^2 coefficient of the self-action bracket is 4", 4.0,
            pp.coefficient_self, 1e-12,
            "photon-photon coefficient " + format_double(pp.coefficient_photon) + " reported as data");
    const double alpha = u.fine_structure();
    out.rel("photon_photon.b", "b = (2/45) e^4 hbar / m^4 c^7 = (2/45) alpha^2 hbar^3 / m^4 c^5",
            2.0 / 45.0 * alpha * alpha * std::pow(u.hbar, 3) / (std::pow(mass, 4) * std::pow(c, 5)), pp.b, tol);
    out.rel("self_action", "(zeta^2 / 2 alpha_q c) r_s^3 = pi r_s^3 / 4 c at alpha_q = 2 zeta^2 / pi",
            pi * std::pow(model.r_s, 3) / (4 * c), self_action_constant(model, coupling_constant(cfg.zeta)), tol);
  }

  {
    const double omega = model.omega_s;
    const double r = model.r_s;
    const auto cr = centripetal_check(omega, r);
    out.rel("centripetal.curl", "rot v = 2 omega", 2 * omega, cr.curl_v.z(), 1e-9);
    out.rel("centripetal.acceleration", "|a_r| = v^2 / r = c omega for v = c", c * omega, cr.a_r.norm(), 1e-9);
    Worst ratio;
    for (int i = 0; i < cfg.samples; ++i) {
      const auto x = centripetal_check(rng.uniform(0.1, 5.0) * omega, rng.uniform(0.1, 5.0) * r);
      ratio.add(1.0, x.a_r.norm() * (x.expected_a > 0 ? 1.0 / x.expected_a : 0.0), 1.0);
    }
    ratio.emit(out, "centripetal.random", "|a_r| r / v^2 = 1", 1e-9);

    const double rho = 1.0;
    const auto rot = uniform_rotation(rho, omega, 0.3);
    const Vec3d at(r, 0.0, 0.0);
    const Vec3d mm = matter_motion_residual(rot, at, 1e-3 * r);
    const Vec3d lg = lamb_gromeka_residual(rot, at, 1e-3 * r);
    const double scale = rho * omega * omega * r;
    out.rel("matter_motion.uniform_rotation", "uniform rotation residual equals -2 rho omega^2 r", -2.0 * scale,
            mm.x(), 1e-9);
    out.discrepancy("matter_motion.uniform_rotation_zero",
                    "uniform rotation satisfies the equation of matter motion", 0.0, mm.norm() / scale,
                    "the v x rot g term is 2 rho omega^2 r, twice the centripetal term");
    out.zero("matter_motion.lamb_gromeka", "the Levi-Civita form gives the same residual", (mm - lg).norm(),
             scale);
    const auto ring = ring_wave_ansatz(model);
    const Vec3d rr = matter_motion_residual(ring, at, 1e-3 * r);
    const double u0 = model.e0 * model.e0 / (4 * pi);
    out.discrepancy("matter_motion.ring_wave", "ring-wave ansatz residual (exploratory, no verdict)", 0.0,
                    rr.norm() / (u0 / r), "residual in units of U/r; no boundary-value solution is given");
  }
  return out.finish();
}

}  // namespace

SuiteResult run_suite(Suite suite, const RunConfig& config) {
  switch (suite) {
    case Suite::algebra: return run_algebra(config);
    case Suite::bilinear: return run_bilinear(config);
    case Suite::fierz: return run_fierz(config);
    case Suite::torus: return run_torus(config);
    case Suite::planewave: return run_planewave(config);
    case Suite::dynamics: return run_dynamics(config);
  }
  throw DomainError("unknown suite");
}

std::vector<SuiteResult> run_suites(const std::vector<Suite>& suites, const RunConfig& config) {
  std::vector<Suite> order = suites;
  std::sort(order.begin(), order.end(),
            [](Suite a, Suite b) { return to_string(a) < to_string(b); });
  order.erase(std::unique(order.begin(), order.end()), order.end());
  std::vector<SuiteResult> out;
  for (auto s : order) out.push_back(run_suite(s, config));
  return out;
}

}  // namespace dm
