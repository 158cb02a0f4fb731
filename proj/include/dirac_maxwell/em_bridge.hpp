#pragma once

// The bispinor <-> electromagnetic field dictionary: layouts, bilinear
// covariants as Maxwell invariants, Fierz identities and the residual of the
// Dirac equation written as Maxwell's equations with imaginary currents.

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/layout.hpp"
#include "dirac_maxwell/linalg.hpp"
#include "dirac_maxwell/units.hpp"

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace dm {

/// Electric field e (statvolt/cm) and magnetic field h (gauss).
struct EmField {
  Vec3cd e = Vec3cd::Zero();
  Vec3cd h = Vec3cd::Zero();

  static EmField real(const Vec3d& e, const Vec3d& h) {
    return {e.cast<Complexd>(), h.cast<Complexd>()};
  }
  bool is_real() const { return e.imag().isZero(0.0) && h.imag().isZero(0.0); }
  Vec3d e_real() const { return e.real(); }
  Vec3d h_real() const { return h.real(); }
  Complexd& component(FieldKind kind, Axis c) {
    return (kind == FieldKind::electric ? e : h)(static_cast<int>(c));
  }
  Complexd component(FieldKind kind, Axis c) const {
    return (kind == FieldKind::electric ? e : h)(static_cast<int>(c));
  }

  EmField operator+(const EmField& o) const { return {e + o.e, h + o.h}; }
  EmField operator-(const EmField& o) const { return {e - o.e, h - o.h}; }
  EmField operator*(Complexd s) const { return {s * e, s * h}; }
};

/// Throws LayoutViolation if a nonzero component has no slot.
Bispinord bispinor_from_fields(const EmField& f, const FieldLayout& layout);
EmField fields_from_bispinor(const Bispinord& psi, const FieldLayout& layout);

/// The primed electron bispinor as displayed:
/// (sqrt2/2)(E_x + iH_x, E_z + iH_z, E_z - iH_z, E_x - iH_x).
Bispinord primed_bispinor_printed(const EmField& f);

enum class BilinearKind { scalar, vector0, vector1, vector2, vector3, pseudoscalar };

std::string_view to_string(BilinearKind k);
int matrix_index(BilinearKind k);

/// psi^+ a_kind psi.
Complexd bilinear(BilinearKind kind, const Bispinord& psi, const AlphaSet& set);

struct FierzPair {
  double lhs = 0.0;
  double rhs = 0.0;
};

/// lhs = (E^2+H^2)^2 - 4 (ExH)^2, rhs = (E^2-H^2)^2 + 4 (E.H)^2. Real mode only.
FierzPair fierz_em(const EmField& f);
/// lhs = (psi+a0psi)^2 - sum_k (psi+akpsi)^2, rhs = (psi+a4psi)^2 + (psi+a5psi)^2.
FierzPair fierz_quantum(const Bispinord& psi, const AlphaSet& set);

/// (E^2 + H^2) / 8 pi. Real mode only.
double energy_density(const EmField& f);
/// (c / 4 pi) E x H. Real mode only.
Vec3d poynting(const EmField& f, const UnitSystem& units);
/// S / c^2.
Vec3d momentum_density(const EmField& f, const UnitSystem& units);

// ---------------------------------------------------------------- field equations

/// Sign pattern (energy, momentum, mass) of a Dirac operator form
///   s_eps a0 eps^ + s_p c a.p^ + s_m beta m c^2,
/// with eps^ = i hbar d/dt and p^ = -i hbar grad.
enum class DiracForm { plus, plus_adjoint, minus, minus_adjoint };

std::string_view to_string(DiracForm f);

struct FormSigns {
  int energy = 1;
  int momentum = 1;
  int mass = 1;
};
FormSigns form_signs(DiracForm f);

/// One scalar field equation
///   (1/c) d_t F + deriv_sign * d_axis G + mass_sign * i (m c / hbar) F = 0.
struct ScalarRow {
  FieldKind f_kind = FieldKind::electric;
  Axis f_component = Axis::x;
  int deriv_sign = 1;
  FieldKind g_kind = FieldKind::magnetic;
  Axis g_component = Axis::z;
  int mass_sign = 1;
};

/// Four scalar equations, row k paired with layout slot k.
struct ScalarSystem {
  std::string name;
  Axis axis = Axis::y;
  std::array<ScalarRow, 4> rows{};
};

/// Systems transcribed as printed, keyed by label:
///   "y-/plus_adjoint", "y-/plus", "y-/minus", "x+/minus", "y+/minus", "z+/minus".
std::vector<std::pair<std::string, ScalarSystem>> printed_scalar_systems();

/// Rewrite a system for another layout by following slots (index transposition).
ScalarSystem transpose_system(const ScalarSystem& sys, const FieldLayout& from, const FieldLayout& to);

/// The scalar system for a (layout, form) pair: the printed one when it exists,
/// otherwise transposed from the printed y- system of that form.
ScalarSystem scalar_system_for(const FieldLayout& layout, DiracForm form);

/// Field values and first derivatives at one space-time point.
struct FieldJet {
  EmField value;
  EmField d_t;
  EmField d_s;  ///< derivative along the propagation axis
};

/// Field evolution along one axis, optionally with analytic derivatives.
struct FieldHistory {
  std::function<EmField(double t, double s)> value;
  std::function<EmField(double t, double s)> d_t;  ///< empty: use central differences
  std::function<EmField(double t, double s)> d_s;
};

struct ResidualOptions {
  double wavelength = 1.0;        ///< sets the difference step
  double step_fraction = 1e-4;    ///< h = step_fraction * wavelength
  double tolerance = 1e-6;        ///< bound on the truncation estimate, relative to field scale
};

struct ResidualGrid {
  std::vector<double> t;
  std::vector<double> s;
  /// Per point (row-major in (t, s)): the four scalar-equation residuals.
  std::vector<std::array<Complexd, 4>> scalar;
  /// Per point: the bispinor-form residual divided by i hbar c times the form's energy sign.
  std::vector<std::array<Complexd, 4>> bispinor;
  double max_scalar = 0.0;
  double max_bispinor = 0.0;
  /// Max over points and slots of |bispinor_k - factor_k * scalar_k|.
  double max_disagreement = 0.0;
  double truncation_estimate = 0.0;
  bool analytic = true;
};

/// Scalar rows evaluated from a jet.
std::array<Complexd, 4> scalar_residual(const ScalarSystem& sys, const FieldJet& jet, double mass,
                                        const UnitSystem& units);
/// Matrix form evaluated from a jet through the layout.
std::array<Complexd, 4> bispinor_residual(const AxisTriad& triad, const AlphaSet& set, DiracForm form,
                                          const FieldJet& jet, double mass, const UnitSystem& units);

/// Evaluate both residual forms over the grid t x s. Throws GridTooCoarse.
ResidualGrid dirac_residual_em(const FieldHistory& fields, const AxisTriad& triad, double mass,
                               DiracForm form, const std::vector<double>& t,
                               const std::vector<double>& s, const UnitSystem& units,
                               const ResidualOptions& opts = {});

}  // namespace dm
