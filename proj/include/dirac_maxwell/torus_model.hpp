#pragma once

// The twirled semi-photon on a torus: geometry, ring displacement current,
// charge and mass quadratures, coupling constant, spin and magnetic moment.

#include "dirac_maxwell/report.hpp"
#include "dirac_maxwell/units.hpp"

#include <functional>
#include <vector>

namespace dm {

struct TorusModel {
  UnitSystem units;
  double zeta = 1.0;
  double lambda_p = 0.0;  // cm
  double omega_p = 0.0;   // rad/s
  double omega_s = 0.0;
  double r_t = 0.0;  // cm
  double r_s = 0.0;
  double r_c = 0.0;
  double s_c = 0.0;        // cm^2
  double delta_tau = 0.0;  // cm^3
  double k = 0.0;          // 1/cm
  double e0 = 0.0;         // statvolt/cm
  bool has_e0 = false;

  /// Wavelength of the ring wave, 2 pi / k.
  double ring_wavelength() const;
};

/// Throws DomainError unless 0 < zeta <= 1 and the units are valid.
TorusModel derive_parameters(const UnitSystem& units, double zeta = 1.0);
TorusModel with_e0(TorusModel model, double e0);

struct RingCurrent {
  double j_n = 0.0;
  double j_tau = 0.0;

  Complexd complex() const { return {j_n, j_tau}; }
};

/// j_n = (1/4pi) dE/dt, j_tau = (omega/4pi) E.
RingCurrent ring_current(const TorusModel& model, double e_magnitude, double de_dt);
/// rho = j_tau / c.
double charge_density(const TorusModel& model, double e_magnitude);

struct QuadratureResult {
  double value = 0.0;
  int n_points = 0;
  double last_change = 0.0;
};

/// Composite Simpson with interval doubling until the change falls below
/// rel_tol times max(|value|, integral of |f|). Throws QuadratureNotConverged.
QuadratureResult simpson(const std::function<double(double)>& f, double a, double b, int n_points,
                         double rel_tol = 1e-10, int max_doublings = 16);

enum class ChargeSpan { full_wave, half_wave };

/// Charge density (omega/4 pi c) E0 cos(k l) S_c integrated over one
/// wavelength [0, lambda] or the half wave [-lambda/4, lambda/4].
double integrate_charge(const TorusModel& model, ChargeSpan span, int n_points = 64);
/// The semi-photon charge integrand as printed: (1/pi)(omega/c) E0 S_c 2 int_0^{lambda/4} cos(k l) dl.
double integrate_charge_printed(const TorusModel& model, int n_points = 64);
/// The stated result (1/pi) E0 S_c.
double charge_stated(const TorusModel& model);
/// zeta^2 E0 r_s^2.
double charge_closed_form(const TorusModel& model);

/// (S_c E0^2 / pi c^2) int_0^{lambda/4} cos^2(k l) dl.
double integrate_mass(const TorusModel& model, int n_points = 64);
/// Density E0^2 cos^2(k l) / (4 pi c^2) over the half wave [-lambda/4, lambda/4].
double integrate_mass_density(const TorusModel& model, int n_points = 64);
/// E0^2 S_c / (4 omega_s c).
double mass_closed_form(const TorusModel& model);

/// Amplitude for which integrate_mass equals target_mass (default m_e), by bisection.
double calibrate_e0(const TorusModel& model, double target_mass = 0.0, int n_points = 64);

/// 2 zeta^2 / pi. Throws DomainError outside (0, 1].
double coupling_constant(double zeta);
/// Inverse of coupling_constant by bisection.
double zeta_for_coupling(double alpha_q);

struct ChainResult {
  double q = 0.0;
  double m_s = 0.0;
  double alpha_q = 0.0;  ///< q^2 / (hbar c)
  double r_o = 0.0;
  double ratio_ro_rs = 0.0;
  std::vector<CheckReport> checks;
};

/// Substitute q(E0) and m_s(E0) into the mass, radius and coupling relations.
/// The coupling check assumes E0 is calibrated so that m_s = m_e.
ChainResult consistency_chain(const TorusModel& model, Tolerance tol = {});

struct SpinMoment {
  double sigma_p = 0.0;
  double sigma_s = 0.0;
  double current = 0.0;
  double area = 0.0;
  double mu_s = 0.0;  ///< current * area
};

SpinMoment spin_and_moment(const TorusModel& model, double q);
/// (1/2) q hbar / 2 m_e.
double moment_closed_form(const UnitSystem& units, double q);

struct Zitterbewegung {
  double omega_z = 0.0;
  double r_z = 0.0;
  double v = 0.0;
};

Zitterbewegung zitterbewegung(const UnitSystem& units);

}  // namespace dm
