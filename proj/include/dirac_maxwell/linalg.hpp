#pragma once

// Fixed-shape complex linear algebra used throughout the library: 4x4
// matrices, bispinors and complex 3-vectors, all thin aliases over Eigen.

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>

namespace dm {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Matrix4c = Eigen::Matrix<Complex<Scalar>, 4, 4>;

template <typename Scalar>
using Bispinor = Eigen::Matrix<Complex<Scalar>, 4, 1>;

template <typename Scalar>
using Vec3c = Eigen::Matrix<Complex<Scalar>, 3, 1>;

template <typename Scalar>
using Vec3r = Eigen::Matrix<Scalar, 3, 1>;

using Complexd = Complex<double>;
using Matrix4cd = Matrix4c<double>;
using Bispinord = Bispinor<double>;
using Vec3cd = Vec3c<double>;
using Vec3d = Vec3r<double>;

inline constexpr Complexd kI{0.0, 1.0};

/// Largest absolute entry; the matrix norm used by every check in the library.
template <typename Derived>
typename Derived::RealScalar max_abs(const Eigen::MatrixBase<Derived>& m) {
  if (m.size() == 0) return typename Derived::RealScalar(0);
  return m.cwiseAbs().maxCoeff();
}

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i) {
    const auto z = m.derived().coeff(i);
    if (!std::isfinite(std::real(z)) || !std::isfinite(std::imag(z))) return false;
  }
  return true;
}

template <typename Scalar>
Matrix4c<Scalar> mat_mul(const Matrix4c<Scalar>& a, const Matrix4c<Scalar>& b) {
  return a * b;
}

template <typename Scalar>
Matrix4c<Scalar> adjoint(const Matrix4c<Scalar>& a) {
  return a.adjoint();
}

template <typename Scalar>
Matrix4c<Scalar> anticommutator(const Matrix4c<Scalar>& a, const Matrix4c<Scalar>& b) {
  return a * b + b * a;
}

template <typename Scalar>
Matrix4c<Scalar> commutator(const Matrix4c<Scalar>& a, const Matrix4c<Scalar>& b) {
  return a * b - b * a;
}

/// Deviation of A^+ A from the identity in the entrywise max norm.
template <typename Scalar>
Scalar unitarity_defect(const Matrix4c<Scalar>& a) {
  return max_abs((a.adjoint() * a - Matrix4c<Scalar>::Identity()).eval());
}

template <typename Scalar>
bool is_unitary(const Matrix4c<Scalar>& a, Scalar tol) {
  return unitarity_defect(a) <= tol;
}

/// Hermitian form psi^+ M psi.
template <typename Scalar>
Complex<Scalar> sandwich(const Bispinor<Scalar>& psi, const Matrix4c<Scalar>& m) {
  return psi.dot(m * psi);  // Eigen's dot conjugates the left operand
}

template <typename Scalar>
Vec3c<Scalar> cross(const Vec3c<Scalar>& a, const Vec3c<Scalar>& b) {
  return a.cross(b);
}

/// Bilinear (non-conjugating) dot product a.b, as used for E.E in real mode.
template <typename Scalar>
Complex<Scalar> bilinear_dot(const Vec3c<Scalar>& a, const Vec3c<Scalar>& b) {
  return a.transpose() * b;
}

/// Absolute and relative tolerance pair; a comparison passes if either holds.
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-12;

  bool accepts(double abs_err, double rel_err) const { return abs_err <= abs || rel_err <= rel; }
};

inline double relative_error(double computed, double expected) {
  const double scale = std::max(std::abs(computed), std::abs(expected));
  if (scale == 0.0) return 0.0;
  return std::abs(computed - expected) / scale;
}

inline double relative_error(Complexd computed, Complexd expected) {
  const double scale = std::max(std::abs(computed), std::abs(expected));
  if (scale == 0.0) return 0.0;
  return std::abs(computed - expected) / scale;
}

}  // namespace dm
