#include "dirac_maxwell/torus_model.hpp"

#include "dirac_maxwell/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dm {

namespace {

constexpr double pi = std::numbers::pi;

void require_e0(const TorusModel& m) {
  if (!m.has_e0) throw DomainError("field amplitude E0 is not set");
}

}  // namespace

double TorusModel::ring_wavelength() const { return 2.0 * pi / k; }

TorusModel derive_parameters(const UnitSystem& units, double zeta) {
  if (!(zeta > 0.0 && zeta <= 1.0)) throw DomainError("zeta must lie in (0, 1]");
  if (!units.is_valid()) throw DomainError("unit constants must be positive");
  TorusModel m;
  m.units = units;
  m.zeta = zeta;
  m.lambda_p = pi * units.hbar / (units.m_e * units.c);
  m.r_t = units.hbar / (2.0 * units.m_e * units.c);
  m.r_s = m.r_t;
  m.omega_s = units.c / m.r_s;
  m.omega_p = 2.0 * pi * units.c / m.lambda_p;
  m.k = m.omega_s / units.c;
  m.r_c = zeta * m.r_s;
  m.s_c = pi * m.r_c * m.r_c;
  m.delta_tau = 2.0 * pi * pi * zeta * zeta * m.r_s * m.r_s * m.r_s;
  return m;
}

TorusModel with_e0(TorusModel model, double e0) {
  model.e0 = e0;
  model.has_e0 = true;
  return model;
}

RingCurrent ring_current(const TorusModel& model, double e_magnitude, double de_dt) {
  return {de_dt / (4.0 * pi), model.omega_s * e_magnitude / (4.0 * pi)};
}

double charge_density(const TorusModel& model, double e_magnitude) {
  return ring_current(model, e_magnitude, 0.0).j_tau / model.units.c;
}

QuadratureResult simpson(const std::function<double(double)>& f, double a, double b, int n_points,
                         double rel_tol, int max_doublings) {
  if (n_points < 2) throw DomainError("simpson needs at least 2 intervals");
  int n = n_points + (n_points % 2);
  auto rule = [&](int intervals, double& abs_integral) {
    const double h = (b - a) / intervals;
    double sum = 0.0;
    double abs_sum = 0.0;
    for (int i = 0; i <= intervals; ++i) {
      const double w = (i == 0 || i == intervals) ? 1.0 : (i % 2 ? 4.0 : 2.0);
      const double v = f(a + i * h);
      sum += w * v;
      abs_sum += w * std::abs(v);
    }
    abs_integral = std::abs(abs_sum * h / 3.0);
    return sum * h / 3.0;
  };
  double scale = 0.0;
  double prev = rule(n, scale);
  for (int d = 0; d < max_doublings; ++d) {
    n *= 2;
    const double cur = rule(n, scale);
    const double change = std::abs(cur - prev);
    if (change <= rel_tol * std::max(std::abs(cur), scale)) return {cur, n, change};
    prev = cur;
  }
  std::ostringstream msg;
  msg << "no convergence after " << max_doublings << " doublings (n = " << n << ")";
  throw QuadratureNotConverged(msg.str());
}

double integrate_charge(const TorusModel& model, ChargeSpan span, int n_points) {
  require_e0(model);
  if (n_points < 64) throw DomainError("quadrature needs at least 64 points");
  const double pre = model.omega_s / (4.0 * pi * model.units.c) * model.e0 * model.s_c;
  const double lam = model.ring_wavelength();
  auto f = [&](double l) { return std::cos(model.k * l); };
  const auto r = span == ChargeSpan::full_wave ? simpson(f, 0.0, lam, n_points)
                                               : simpson(f, -lam / 4.0, lam / 4.0, n_points);
  return pre * r.value;
}

double integrate_charge_printed(const TorusModel& model, int n_points) {
  require_e0(model);
  if (n_points < 64) throw DomainError("quadrature needs at least 64 points");
  const double pre = (1.0 / pi) * model.omega_s / model.units.c * model.e0 * model.s_c * 2.0;
  const auto r =
      simpson([&](double l) { return std::cos(model.k * l); }, 0.0, model.ring_wavelength() / 4.0,
              n_points);
  return pre * r.value;
}

double charge_stated(const TorusModel& model) {
  require_e0(model);
  return model.e0 * model.s_c / pi;
}

double charge_closed_form(const TorusModel& model) {
  require_e0(model);
  return model.zeta * model.zeta * model.e0 * model.r_s * model.r_s;
}

double integrate_mass(const TorusModel& model, int n_points) {
  require_e0(model);
  if (n_points < 64) throw DomainError("quadrature needs at least 64 points");
  const double c = model.units.c;
  const double pre = model.s_c * model.e0 * model.e0 / (pi * c * c);
  const auto r = simpson(
      [&](double l) {
        const double v = std::cos(model.k * l);
        return v * v;
      },
      0.0, model.ring_wavelength() / 4.0, n_points);
  return pre * r.value;
}

double integrate_mass_density(const TorusModel& model, int n_points) {
  require_e0(model);
  if (n_points < 64) throw DomainError("quadrature needs at least 64 points");
  const double c = model.units.c;
  const double pre = model.s_c * model.e0 * model.e0 / (4.0 * pi * c * c);
  const double q = model.ring_wavelength() / 4.0;
  const auto r = simpson(
      [&](double l) {
        const double v = std::cos(model.k * l);
        return v * v;
      },
      -q, q, n_points);
  return pre * r.value;
}

double mass_closed_form(const TorusModel& model) {
  require_e0(model);
  return model.e0 * model.e0 * model.s_c / (4.0 * model.omega_s * model.units.c);
}

double calibrate_e0(const TorusModel& model, double target_mass, int n_points) {
  const double target = target_mass > 0.0 ? target_mass : model.units.m_e;
  auto mass = [&](double e0) { return integrate_mass(with_e0(model, e0), n_points); };
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; mass(hi) < target; ++i) {
    if (i > 2000) throw DomainError("cannot bracket the calibration amplitude");
    lo = hi;
    hi *= 2.0;
  }
  for (int i = 0; i < 2000 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (mass(mid) < target ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

double coupling_constant(double zeta) {
  if (!(zeta > 0.0 && zeta <= 1.0)) throw DomainError("zeta must lie in (0, 1]");
  return 2.0 * zeta * zeta / pi;
}

double zeta_for_coupling(double alpha_q) {
  if (!(alpha_q > 0.0 && alpha_q <= coupling_constant(1.0)))
    throw DomainError("coupling outside the range reachable with zeta in (0, 1]");
  double lo = 0.0;
  double hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (2.0 * mid * mid / pi < alpha_q ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

ChainResult consistency_chain(const TorusModel& model, Tolerance tol) {
  require_e0(model);
  const auto& u = model.units;
  const double z2 = model.zeta * model.zeta;
  const double r2 = model.r_s * model.r_s;
  ChainResult out;
  out.q = charge_closed_form(model);
  out.m_s = pi * z2 * model.e0 * model.e0 * r2 / (4.0 * model.omega_s * u.c);
  out.alpha_q = out.q * out.q / (u.hbar * u.c);
  out.r_o = u.e * u.e / (2.0 * u.m_e * u.c * u.c);
  out.ratio_ro_rs = out.r_o / model.r_s;

  const double m_from_q = pi * out.q * out.q / (4.0 * z2 * model.omega_s * u.c * r2);
  const double r_from_q = pi / (2.0 * z2) * out.q * out.q / (2.0 * out.m_s * u.c * u.c);
  out.checks.push_back(make_check("chain.mass_from_charge",
                                  "m_s = pi q^2 / (4 zeta^2 omega_s c r_s^2)", out.m_s, m_from_q, tol));
  out.checks.push_back(make_check("chain.radius_from_charge",
                                  "r_s = (pi / 2 zeta^2) q^2 / (2 m_s c^2)", model.r_s, r_from_q, tol));
  out.checks.push_back(make_check("chain.mass_closed_form", "m_s = E0^2 S_c / (4 omega_s c)",
                                  mass_closed_form(model), out.m_s, tol));
  out.checks.push_back(make_check("chain.coupling", "q^2 / hbar c = 2 zeta^2 / pi at m_s = m_e",
                                  coupling_constant(model.zeta), out.alpha_q, tol,
                                  "E0 calibrated so that m_s = m_e"));
  out.checks.push_back(make_check("chain.classical_radius_ratio", "r_o / r_s = e^2 / hbar c",
                                  u.fine_structure(), out.ratio_ro_rs, tol));
  return out;
}

SpinMoment spin_and_moment(const TorusModel& model, double q) {
  const auto& u = model.units;
  SpinMoment s;
  s.sigma_p = 2.0 * u.m_e * u.c * model.r_t;
  s.sigma_s = u.m_e * u.c * model.r_s;
  s.current = q * model.omega_s / (2.0 * pi);
  s.area = pi * model.r_s * model.r_s;
  s.mu_s = s.current * s.area;
  return s;
}

double moment_closed_form(const UnitSystem& units, double q) {
  return 0.5 * q * units.hbar / (2.0 * units.m_e);
}

Zitterbewegung zitterbewegung(const UnitSystem& units) {
  return {2.0 * units.m_e * units.c * units.c / units.hbar, units.hbar / (2.0 * units.m_e * units.c),
          units.c};
}

}  // namespace dm
