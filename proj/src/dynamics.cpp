#include "dirac_maxwell/dynamics.hpp"

#include "dirac_maxwell/errors.hpp"

#include <cmath>
#include <numbers>

namespace dm {

namespace {

constexpr double pi = std::numbers::pi;

void require_real(const EmField& f, const char* what) {
  if (!f.is_real()) throw DomainError(std::string(what) + " needs real field amplitudes");
}

StressTensor stress_with_delta(const EmField& f, bool inverted) {
  require_real(f, "stress_tensor");
  const Vec3d e = f.e_real();
  const Vec3d h = f.h_real();
  const double w = e.squaredNorm() + h.squaredNorm();
  StressTensor t;
  for (int p = 0; p < 3; ++p) {
    for (int q = 0; q < 3; ++q) {
      const double delta = (p == q) != inverted ? 1.0 : 0.0;
      t.tau_pq(p, q) = -(e(p) * e(q) + h(p) * h(q)) + 0.5 * delta * w;
    }
  }
  t.tau_p0 = e.cross(h);
  t.tau_00 = 0.5 * w;
  return t;
}

Complexd cdot(const Vec3cd& a, const Vec3cd& b) { return a.dot(b); }  // conjugates a

}  // namespace

StressTensor stress_tensor(const EmField& f) { return stress_with_delta(f, false); }

StressTensor stress_tensor_inverted_delta(const EmField& f) { return stress_with_delta(f, true); }

std::string_view to_string(RingPolarization p) {
  return p == RingPolarization::ex_hz ? "ex_hz" : "ez_hx";
}

RingForce lorentz_force_ring(const TorusModel& model, double e_amplitude, RingPolarization pol) {
  if (e_amplitude < 0.0) throw DomainError("field amplitude must be non-negative");
  const double c = model.units.c;
  const double sign = pol == RingPolarization::ex_hz ? 1.0 : -1.0;
  const double e = e_amplitude;
  const double h = e_amplitude;
  const double j_tau = ring_current(model, e, 0.0).j_tau;
  RingForce f;
  f.f2 = sign * model.omega_s * e * h / (4.0 * pi * c);
  f.f0 = sign * model.omega_s * e * e / (4.0 * pi * c);
  f.f2_via_current = sign * j_tau * h / c;
  f.f0_via_current = sign * j_tau * e / c;
  return f;
}

Vec3d magnetic_confinement_density(const EmField& f, const Vec3d& j_tau, const UnitSystem& units) {
  require_real(f, "magnetic_confinement_density");
  return j_tau.cross(f.h_real()) / units.c;
}

EmDensities em_densities(const FieldJet& jet, const UnitSystem& units) {
  const auto& v = jet.value;
  const auto& s = jet.d_s;
  EmDensities d;
  d.du_dt = (cdot(v.e, jet.d_t.e) + cdot(v.h, jet.d_t.h)) / (4.0 * pi);
  d.div_s = units.c / (4.0 * pi) *
            (std::conj(v.e.z()) * s.h.x() + std::conj(v.h.x()) * s.e.z() -
             std::conj(v.e.x()) * s.h.z() - std::conj(v.h.z()) * s.e.x());
  d.e_sq = cdot(v.e, v.e);
  d.h_sq = cdot(v.h, v.h);
  return d;
}

CurrentPair currents(const EmField& f, double mass, const UnitSystem& units) {
  const double omega_e = 2.0 * mass * units.c * units.c / units.hbar;
  const Complexd pre = kI * omega_e / (4.0 * pi);
  return {pre * f.e, pre * f.h};
}

LinearLagrangian lagrangian_linear(const FieldJet& jet, const AlphaSet& set, double mass,
                                   const UnitSystem& units) {
  const auto layout = electron_y_layout();
  const Bispinord psi = bispinor_from_fields(jet.value, layout);
  const Bispinord psi_t = bispinor_from_fields(jet.d_t, layout);
  const Bispinord psi_y = bispinor_from_fields(jet.d_s, layout);
  const double c = units.c;
  const double omega_e = 2.0 * mass * c * c / units.hbar;

  LinearLagrangian l;
  l.quantum = psi.dot(psi_t) / c - psi.dot(set[2] * psi_y) -
              kI * (mass * c / units.hbar) * psi.dot(set[4] * psi);
  l.quantum_em_units = l.quantum * c / (4.0 * pi);

  const auto d = em_densities(jet, units);
  l.field = d.du_dt + d.div_s - kI * omega_e / (8.0 * pi) * (d.e_sq - d.h_sq);

  const auto j = currents(jet.value, mass, units);
  // Products pair each current with the conjugate field.
  const Complexd je_e = jet.value.e.dot(j.j_e);
  const Complexd jm_h = jet.value.h.dot(j.j_m);
  l.current = d.du_dt + d.div_s - 0.5 * (je_e - jm_h);
  return l;
}

MaxwellForms maxwell_lagrangian_forms(const FieldJet& jet, double mass, const UnitSystem& units) {
  const auto d = em_densities(jet, units);
  const double omega_e = 2.0 * mass * units.c * units.c / units.hbar;
  return {(d.e_sq - d.h_sq) / (8.0 * pi), kI / omega_e * (d.du_dt + d.div_s)};
}

NonlinearLagrangian lagrangian_nonlinear(const FieldJet& jet, const TorusModel& model, double mass,
                                         const AlphaSet& set) {
  require_real(jet.value, "lagrangian_nonlinear");
  const auto& units = model.units;
  const double c = units.c;
  const double mc2 = mass * c * c;
  const double dtau = model.delta_tau;
  const Vec3d e = jet.value.e_real();
  const Vec3d h = jet.value.h_real();
  const double e2 = e.squaredNorm();
  const double h2 = h.squaredNorm();
  const double eh = e.dot(h);

  NonlinearLagrangian l;
  const auto d = em_densities(jet, units);
  l.kinetic_field = kI * units.hbar / (2.0 * mc2) * (d.du_dt + d.div_s);
  const double u = (e2 + h2) / (8.0 * pi);
  const Vec3d g = e.cross(h) / (4.0 * pi * c);
  l.quartic_field = dtau / mc2 * (u * u - c * c * g.squaredNorm());
  l.invariant_linear = (e2 - h2) / (8.0 * pi);
  l.quartic_invariant =
      dtau / (64.0 * pi * pi * mc2) * ((e2 - h2) * (e2 - h2) + 4.0 * eh * eh);

  const Bispinord psi = bispinor_from_fields(jet.value, electron_y_layout());
  auto b = [&](int k) { return std::real(sandwich(psi, set[k])); };
  const double vec_sq = b(1) * b(1) + b(2) * b(2) + b(3) * b(3);
  l.quartic_quantum = dtau / (8.0 * pi) * (b(0) * b(0) - vec_sq);
  l.quartic_quantum_fierz = dtau / (8.0 * pi) * (b(4) * b(4) + b(5) * b(5));
  l.quartic_quantum_minus = dtau / (8.0 * pi) * (b(4) * b(4) - b(5) * b(5));
  l.total_field = l.kinetic_field + l.quartic_field;
  l.total_invariant = l.invariant_linear + l.quartic_invariant;
  return l;
}

double pseudoscalar_coefficient(const EmField& f) {
  require_real(f, "pseudoscalar_coefficient");
  const Vec3d e = f.e_real();
  const Vec3d h = f.h_real();
  const double eh = e.dot(h);
  if (eh == 0.0) throw DomainError("sample field needs E.H != 0");
  const double w = e.squaredNorm() + h.squaredNorm();
  const double d = e.squaredNorm() - h.squaredNorm();
  return (w * w - 4.0 * e.cross(h).squaredNorm() - d * d) / (eh * eh);
}

PhotonPhotonComparison photon_photon_comparison(const TorusModel& model, const EmField& sample) {
  const auto& u = model.units;
  PhotonPhotonComparison c;
  c.coefficient_self = pseudoscalar_coefficient(sample);
  c.coefficient_photon = 7.0;
  c.b = 2.0 / 45.0 * std::pow(u.e, 4) * u.hbar / (std::pow(u.m_e, 4) * std::pow(u.c, 7));
  c.prefactor_self = model.delta_tau / (64.0 * pi * pi * u.m_e * u.c * u.c);
  return c;
}

QuantumKinetic quantum_kinetic_coefficients(const UnitSystem& units, const AlphaSet& set) {
  const auto layout = electron_y_layout();
  FieldJet jet;
  jet.value = EmField::real(Vec3d(1.0, 0.0, 0.3), Vec3d(0.2, 0.0, 1.0));
  const EmField rate = EmField::real(Vec3d(0.5, 0.0, -0.4), Vec3d(0.7, 0.0, 0.1));

  auto kinetic = [&](const FieldJet& j) {
    const Bispinord psi = bispinor_from_fields(j.value, layout);
    const Bispinord pt = bispinor_from_fields(j.d_t, layout);
    const Bispinord py = bispinor_from_fields(j.d_s, layout);
    const double dt_norm = 2.0 * std::real(psi.dot(pt));
    const double dy_vec = 2.0 * std::real(psi.dot(set[2] * py));
    return 0.5 * dt_norm - units.c * dy_vec;  // bracket of i hbar [...]
  };
  QuantumKinetic q;
  FieldJet time_only = jet;
  time_only.d_t = rate;
  q.du_dt_coefficient = kinetic(time_only) / (4.0 * pi * std::real(em_densities(time_only, units).du_dt));
  FieldJet space_only = jet;
  space_only.d_s = rate;
  q.div_s_coefficient =
      kinetic(space_only) / (4.0 * pi * std::real(em_densities(space_only, units).div_s));
  return q;
}

double self_action_constant(const TorusModel& model, double alpha_q) {
  if (!(alpha_q > 0.0)) throw DomainError("alpha_q must be positive");
  return model.zeta * model.zeta / (2.0 * alpha_q * model.units.c) * std::pow(model.r_s, 3);
}

namespace {

Vec3d curl(const VectorField& f, const Vec3d& x, double h) {
  auto d = [&](int comp, int axis) {
    Vec3d dx = Vec3d::Zero();
    dx(axis) = h;
    return (f(x + dx)(comp) - f(x - dx)(comp)) / (2.0 * h);
  };
  return {d(2, 1) - d(1, 2), d(0, 2) - d(2, 0), d(1, 0) - d(0, 1)};
}

Vec3d gradient(const ScalarField& f, const Vec3d& x, double h) {
  Vec3d g;
  for (int a = 0; a < 3; ++a) {
    Vec3d dx = Vec3d::Zero();
    dx(a) = h;
    g(a) = (f(x + dx) - f(x - dx)) / (2.0 * h);
  }
  return g;
}

int levi_civita(int i, int j, int k) {
  if (i == j || j == k || i == k) return 0;
  return ((j - i + 3) % 3 == 1) ? 1 : -1;
}

}  // namespace

CentripetalResult centripetal_check(double omega, double r) {
  if (omega < 0.0 || !(r > 0.0)) throw DomainError("need omega >= 0 and r > 0");
  const Vec3d w(0.0, 0.0, omega);
  const VectorField v = [&](const Vec3d& x) -> Vec3d { return w.cross(x); };
  const Vec3d at(r, 0.0, 0.0);
  CentripetalResult out;
  out.curl_v = curl(v, at, 1e-3 * r);
  const Vec3d vv = v(at);
  out.a_r = 0.5 * vv.cross(out.curl_v);
  out.speed = vv.norm();
  out.expected_a = out.speed * out.speed / r;
  return out;
}

Vec3d matter_motion_residual(const MatterMotionInput& in, const Vec3d& point, double h) {
  return in.dg_dt(point) + gradient(in.u, point, h) - in.v(point).cross(curl(in.g, point, h));
}

Vec3d lamb_gromeka_residual(const MatterMotionInput& in, const Vec3d& point, double h) {
  // d_j g_i table, then (v x rot g)_i = eps_ijk v_j eps_klm d_l g_m.
  Eigen::Matrix3d dg;
  for (int l = 0; l < 3; ++l) {
    Vec3d dx = Vec3d::Zero();
    dx(l) = h;
    const Vec3d diff = (in.g(point + dx) - in.g(point - dx)) / (2.0 * h);
    for (int m = 0; m < 3; ++m) dg(l, m) = diff(m);
  }
  Vec3d rot = Vec3d::Zero();
  for (int k = 0; k < 3; ++k)
    for (int l = 0; l < 3; ++l)
      for (int m = 0; m < 3; ++m) rot(k) += levi_civita(k, l, m) * dg(l, m);
  const Vec3d v = in.v(point);
  Vec3d out = in.dg_dt(point);
  for (int i = 0; i < 3; ++i) {
    Vec3d dx = Vec3d::Zero();
    dx(i) = h;
    out(i) += (in.u(point + dx) - in.u(point - dx)) / (2.0 * h);
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out(i) -= levi_civita(i, j, k) * v(j) * rot(k);
  }
  return out;
}

MatterMotionInput uniform_rotation(double rho, double omega, double u0) {
  const Vec3d w(0.0, 0.0, omega);
  MatterMotionInput in;
  in.g = [=](const Vec3d& x) -> Vec3d { return rho * w.cross(x); };
  in.dg_dt = [](const Vec3d&) -> Vec3d { return Vec3d::Zero(); };
  in.u = [=](const Vec3d&) { return u0; };
  in.v = [=](const Vec3d& x) -> Vec3d { return w.cross(x); };
  return in;
}

MatterMotionInput ring_wave_ansatz(const TorusModel& model) {
  if (!model.has_e0) throw DomainError("field amplitude E0 is not set");
  const double c = model.units.c;
  const double u0 = model.e0 * model.e0 / (4.0 * pi);
  auto tangent = [](const Vec3d& x) -> Vec3d {
    const double rho = std::hypot(x.x(), x.y());
    return Vec3d(-x.y() / rho, x.x() / rho, 0.0);
  };
  MatterMotionInput in;
  in.g = [=](const Vec3d& x) -> Vec3d { return (u0 / c) * tangent(x); };
  in.dg_dt = [](const Vec3d&) -> Vec3d { return Vec3d::Zero(); };
  in.u = [=](const Vec3d&) { return u0; };
  in.v = [=](const Vec3d& x) -> Vec3d { return c * tangent(x); };
  return in;
}

}  // namespace dm
