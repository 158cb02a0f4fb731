#pragma once

// Registry of alpha-representation Dirac matrices, the per-axis matrix
// triads, the 16-element matrix group and unitary changes of representation.

#include "dirac_maxwell/layout.hpp"
#include "dirac_maxwell/linalg.hpp"
#include "dirac_maxwell/report.hpp"

#include <array>
#include <string>
#include <vector>

namespace dm {

/// a[0] = identity-like time matrix, a[1..3] spatial, a[4] = beta, a[5] = pseudoscalar.
struct AlphaSet {
  std::array<Matrix4cd, 6> a{};
  std::string label;

  const Matrix4cd& operator[](int k) const { return a[static_cast<std::size_t>(k)]; }
  Matrix4cd& operator[](int k) { return a[static_cast<std::size_t>(k)]; }
  const Matrix4cd& beta() const { return a[4]; }
};

AlphaSet canonical_alpha_set();
/// The primed set entered entry by entry, including its printed alpha'_2.
AlphaSet alpha_prime_set();
/// Unitary change of representation, scaled by 1/sqrt(2).
Matrix4cd s_matrix();

/// Max over mu,nu in 1..4 of |{a_mu, a_nu} - 2 delta I|.
double anticommutation_deviation(const AlphaSet& set);
/// Max over mu in 1..4 of |{a5, a_mu}| and |a5^2 - I|.
double pseudoscalar_deviation(const AlphaSet& set);
/// Max over k in 0..5 of |a_k - a_k^+|.
double hermiticity_deviation(const AlphaSet& set);
double hermiticity_deviation(const Matrix4cd& m);

CheckReport verify_anticommutation(const AlphaSet& set, Tolerance tol = {});

/// Phase classes (phases 1, -1, i, -i) of the closure of {I, a1..a5}.
std::vector<Matrix4cd> generate_group(const AlphaSet& set, double match_tol = 1e-12);
/// Index of the class containing m, or -1.
int phase_class_of(const std::vector<Matrix4cd>& classes, const Matrix4cd& m,
                   double match_tol = 1e-12);

struct AxisTriad {
  Axis axis = Axis::y;
  Orientation orientation = Orientation::negative;
  /// matrix_for[c] = alpha index multiplying the momentum component c.
  std::array<int, 3> matrix_for{};
  FieldLayout layout;

  /// Alpha index of the matrix acting along the propagation axis.
  int working_matrix() const { return matrix_for[static_cast<std::size_t>(axis)]; }
  /// -1 for the negative orientation, +1 for the positive one.
  int poynting_sign() const { return orientation == Orientation::negative ? -1 : 1; }
  std::string name() const;
};

/// Negative x, y, z then positive x, y, z.
std::vector<AxisTriad> axis_triads();
AxisTriad axis_triad(Axis axis, Orientation orientation);

enum class TransformMode { two_sided, similarity };

std::string_view to_string(TransformMode m);

/// two_sided: S a S, similarity: S^+ a S. Throws NotUnitary.
AlphaSet canonical_transform(const Matrix4cd& s, const AlphaSet& set, TransformMode mode,
                             double unitary_tol = 1e-12);

/// Entrywise max difference for each of a1..a5.
std::array<double, 5> entrywise_difference(const AlphaSet& lhs, const AlphaSet& rhs);

}  // namespace dm
