#pragma once

#include <cmath>
#include <string_view>

namespace dm {

enum class UnitMode { natural, gaussian_cgs };

std::string_view to_string(UnitMode m);

/// Physical constants supplied to every formula; nothing is baked in.
struct UnitSystem {
  double hbar = 1.0;  // erg s
  double c = 1.0;     // cm / s
  double m_e = 1.0;   // g
  double e = 0.0;     // esu
  UnitMode mode = UnitMode::natural;

  /// hbar = c = m_e = 1 with e chosen so that e^2 / (hbar c) is the fine-structure constant.
  static UnitSystem natural();
  /// CODATA 2018 values in the Gaussian CGS system.
  static UnitSystem gaussian_cgs();

  bool is_valid() const { return hbar > 0 && c > 0 && m_e > 0 && e > 0; }
  double rest_energy() const { return m_e * c * c; }
  double fine_structure() const { return e * e / (hbar * c); }
};

inline constexpr double kFineStructureInverse = 137.035999084;

inline UnitSystem UnitSystem::natural() {
  return {1.0, 1.0, 1.0, std::sqrt(1.0 / kFineStructureInverse), UnitMode::natural};
}

inline UnitSystem UnitSystem::gaussian_cgs() {
  return {1.054571817e-27, 2.99792458e10, 9.1093837015e-28, 4.80320471e-10, UnitMode::gaussian_cgs};
}

inline std::string_view to_string(UnitMode m) {
  return m == UnitMode::natural ? "natural" : "gaussian_cgs";
}

}  // namespace dm
