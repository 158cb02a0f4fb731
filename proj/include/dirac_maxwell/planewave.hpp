#pragma once

// Plane-wave solutions of the free equation: the homogeneous 4x4 system for
// the amplitudes, its nullspace, dispersion, field interpretation and the
// probability continuity balance.

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/em_bridge.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <array>
#include <utility>
#include <vector>

namespace dm {

enum class Branch { positive, negative };

std::string_view to_string(Branch b);

struct PlaneWaveState {
  double energy = 0.0;            ///< eps = hbar omega, signed
  Vec3d momentum = Vec3d::Zero(); ///< p = hbar k
  Bispinord amplitudes = Bispinord::Zero();  ///< B_j = b_j e^{i phi}
  double phase = 0.0;
  Branch branch = Branch::positive;
};

/// Coefficient matrix of the amplitude system, entered row by row:
/// (eps +- m c^2) on the diagonal, c p couplings between upper and lower pairs.
Matrix4cd build_system(double energy, const Vec3d& momentum, double mass, const UnitSystem& units);

/// (eps_+, eps_-) = +-sqrt(c^2 p^2 + m^2 c^4).
std::pair<double, double> dispersion(const Vec3d& momentum, double mass, const UnitSystem& units);

/// Determinant by Gaussian elimination with partial pivoting.
Complexd determinant(const Matrix4cd& m);

/// Nullspace basis by Gaussian elimination with partial pivoting; free
/// variables are set to unit vectors in column order.
std::vector<Bispinord> nullspace(const Matrix4cd& m, double pivot_tol = 1e-10);

/// The two printed solutions of the branch (B3 = 1 / B4 = 1 for positive, B1 = 1 / B2 = 1 for negative).
std::pair<Bispinord, Bispinord> solution_basis(Branch branch, const Vec3d& momentum, double mass,
                                               const UnitSystem& units);

PlaneWaveState make_state(Branch branch, int which, const Vec3d& momentum, double mass,
                          const UnitSystem& units, double phase = 0.0);

/// max |(s_eps eps a0 + s_p c a.p + s_m beta m c^2) B| with signs from the form.
double residual(const PlaneWaveState& state, const AlphaSet& set, double mass, const UnitSystem& units,
                DiracForm form = DiracForm::plus);

struct FieldInterpretation {
  EmField field;
  std::array<bool, 4> nonzero{};  ///< per amplitude slot
};

/// Throws AxisMismatch if the momentum has a component off the layout axis.
FieldInterpretation field_interpretation(const PlaneWaveState& state, const FieldLayout& layout,
                                         double zero_tol = 1e-14);

/// Amplitudes B+(1), B+(2), B-(1), B-(2) at p_y = m c with phase pi/2.
struct SpecialValues {
  std::array<Bispinord, 4> literal;   ///< eps_+- = +-m c^2 substituted as stated
  std::array<Bispinord, 4> on_shell;  ///< eps_+- from the dispersion relation
  std::array<Bispinord, 4> printed;   ///< the displayed value sets
};

SpecialValues special_values(double mass, const UnitSystem& units);

struct ContinuityResult {
  double dp_dt = 0.0;
  double div_s = 0.0;
  double balance = 0.0;
};

/// dP/dt + div S_pr for P = psi+ a0 psi, S_pr = -c psi+ a psi, evaluated analytically.
ContinuityResult continuity_check(const PlaneWaveState& state, const AlphaSet& set,
                                  const UnitSystem& units);

/// Plane wave solving a given operator form: psi = b exp(i(k s - omega t)).
struct FormSolution {
  Bispinord b = Bispinord::Zero();
  double omega = 0.0;
  double k = 0.0;
};

/// Built from a printed amplitude solution of the plus system at momentum p along
/// the working axis, with omega and k signs chosen so the form annihilates it.
FormSolution form_solution(DiracForm form, int which, double p_axis, double mass,
                           const UnitSystem& units);

/// Fields of psi = b exp(i(k s - omega t)) through a layout, with analytic derivatives.
FieldHistory plane_wave_history(const Bispinord& b, double omega, double k, const FieldLayout& layout);

/// Integral of psi'+ psi' over the torus volume after psi = sqrt(8 pi m c^2) psi',
/// for a ring wave whose energy density integrates to m c^2.
double normalization_integral(const TorusModel& model, int n_points = 64);

}  // namespace dm
