#pragma once

// Stress tensor, ring forces, linear and non-linear Lagrangians in quantum and
// electromagnetic form, the self-action coefficient and the rotating-fluid
// consistency checks.

#include "dirac_maxwell/em_bridge.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <functional>

namespace dm {

struct StressTensor {
  Eigen::Matrix3d tau_pq = Eigen::Matrix3d::Zero();
  Vec3d tau_p0 = Vec3d::Zero();
  double tau_00 = 0.0;

  double trace() const { return tau_pq.trace(); }
};

/// Standard Kronecker delta. Real mode only.
StressTensor stress_tensor(const EmField& f);
/// Same formula with delta_pq = 0 for p = q and 1 otherwise, as printed.
StressTensor stress_tensor_inverted_delta(const EmField& f);

enum class RingPolarization { ex_hz, ez_hx };

std::string_view to_string(RingPolarization p);

struct RingForce {
  double f2 = 0.0;
  double f0 = 0.0;
  double f2_via_current = 0.0;  ///< (1/c) j_tau H
  double f0_via_current = 0.0;  ///< (1/c) j_tau E
};

/// |E| = |H| = e_amplitude on the ring. Throws DomainError for negative amplitude.
RingForce lorentz_force_ring(const TorusModel& model, double e_amplitude, RingPolarization pol);

/// (1/c) j_tau x H. Real mode only.
Vec3d magnetic_confinement_density(const EmField& f, const Vec3d& j_tau, const UnitSystem& units);

/// Complex-mode densities along y for the electron layout, all with conjugates on the left.
struct EmDensities {
  Complexd du_dt;  ///< (1/4pi)(E*.dE/dt + H*.dH/dt)
  Complexd div_s;  ///< (c/4pi)(Ez* dHx + Hx* dEz - Ex* dHz - Hz* dEx)
  Complexd e_sq;   ///< E*.E
  Complexd h_sq;   ///< H*.H
};

EmDensities em_densities(const FieldJet& jet, const UnitSystem& units);

/// j_e = i (omega_e / 4 pi) E, j_m = i (omega_e / 4 pi) H with omega_e = 2 m c^2 / hbar.
struct CurrentPair {
  Vec3cd j_e;
  Vec3cd j_m;
};

CurrentPair currents(const EmField& f, double mass, const UnitSystem& units);

struct LinearLagrangian {
  Complexd quantum;  ///< psi+ ((1/c) d_t - a_y d_y - i (m c / hbar) beta) psi
  Complexd quantum_em_units;  ///< quantum * c / 4 pi
  Complexd field;    ///< dU/dt + div S - i (omega_e / 8 pi)(E^2 - H^2)
  Complexd current;  ///< dU/dt + div S - (1/2)(j_e.E* - j_m.H*)
};

/// The jet describes fields along y in the electron layout.
LinearLagrangian lagrangian_linear(const FieldJet& jet, const AlphaSet& set, double mass,
                                   const UnitSystem& units);

struct MaxwellForms {
  Complexd lhs;  ///< (1/8pi)(E^2 - H^2)
  Complexd rhs;  ///< (i / omega_e)(dU/dt + div S)
};

MaxwellForms maxwell_lagrangian_forms(const FieldJet& jet, double mass, const UnitSystem& units);

struct NonlinearLagrangian {
  Complexd kinetic_field;  ///< i (hbar / 2 m c^2)(dU/dt + div S)
  double quartic_field = 0.0;      ///< (dtau / m c^2)(U^2 - c^2 g^2)
  double quartic_invariant = 0.0;  ///< dtau / ((8pi)^2 m c^2) [(E^2-H^2)^2 + 4 (E.H)^2]
  double invariant_linear = 0.0;   ///< (1/8pi)(E^2 - H^2)
  double quartic_quantum = 0.0;    ///< (dtau / 8pi)[(psi+psi)^2 - (psi+ a psi)^2]
  double quartic_quantum_fierz = 0.0;  ///< (dtau / 8pi)[(psi+ a4 psi)^2 + (psi+ a5 psi)^2]
  double quartic_quantum_minus = 0.0;  ///< same with a minus sign on the pseudoscalar square
  Complexd total_field;      ///< kinetic_field + quartic_field
  double total_invariant = 0.0;  ///< invariant_linear + quartic_invariant
};

/// Real fields along y in the electron layout.
NonlinearLagrangian lagrangian_nonlinear(const FieldJet& jet, const TorusModel& model, double mass,
                                         const AlphaSet& set);

/// Coefficient of the (E.H)^2 term inside the bracket after the Fierz rewrite,
/// measured from the identity at a sample field.
double pseudoscalar_coefficient(const EmField& f);

struct PhotonPhotonComparison {
  double coefficient_self = 4.0;
  double coefficient_photon = 7.0;
  double b = 0.0;                ///< (2/45) e^4 hbar / (m^4 c^7)
  double prefactor_self = 0.0;   ///< dtau / ((8pi)^2 m c^2)
};

PhotonPhotonComparison photon_photon_comparison(const TorusModel& model, const EmField& sample);

/// Kinetic part of the quantum form, i hbar [d_t (psi+psi / 2) - c d_y (psi+ a_y psi)],
/// divided by 4 pi i hbar and split into the coefficients multiplying dU/dt and div S.
struct QuantumKinetic {
  double du_dt_coefficient = 0.0;
  double div_s_coefficient = 0.0;
};

/// Real fields only; reads dU/dt and div S from the jet and fits both coefficients.
QuantumKinetic quantum_kinetic_coefficients(const UnitSystem& units, const AlphaSet& set);

/// (zeta^2 / (2 alpha_q c)) r_s^3.
double self_action_constant(const TorusModel& model, double alpha_q);

struct CentripetalResult {
  Vec3d curl_v = Vec3d::Zero();
  Vec3d a_r = Vec3d::Zero();
  double speed = 0.0;
  double expected_a = 0.0;  ///< v^2 / r
};

/// Rigid rotation v = omega z x r sampled at (r, 0, 0); curl by central differences.
CentripetalResult centripetal_check(double omega, double r);

using VectorField = std::function<Vec3d(const Vec3d&)>;
using ScalarField = std::function<double(const Vec3d&)>;

struct MatterMotionInput {
  VectorField g;
  VectorField dg_dt;
  ScalarField u;
  VectorField v;
};

/// (dg/dt + grad U) - v x rot g at a point; spatial derivatives by central differences.
Vec3d matter_motion_residual(const MatterMotionInput& in, const Vec3d& point, double h = 1e-5);
/// The same balance for an ideal liquid, evaluated component-wise through the Levi-Civita symbol.
Vec3d lamb_gromeka_residual(const MatterMotionInput& in, const Vec3d& point, double h = 1e-5);

/// Uniform rotation g = rho omega z x r, constant U, v = omega z x r.
MatterMotionInput uniform_rotation(double rho, double omega, double u0);
/// Ring wave: U = E0^2 / 4pi, g = (U / c) tau, v = c tau about the z axis.
MatterMotionInput ring_wave_ansatz(const TorusModel& model);

}  // namespace dm
