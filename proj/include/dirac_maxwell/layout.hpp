#pragma once

// Which electromagnetic field component occupies each bispinor slot.

#include "dirac_maxwell/linalg.hpp"

#include <array>
#include <string>
#include <string_view>

namespace dm {

enum class Axis { x = 0, y = 1, z = 2 };
enum class Orientation { negative, positive };
enum class FieldKind { electric, magnetic };

std::string_view to_string(Axis a);
std::string_view to_string(Orientation o);

struct FieldSlot {
  FieldKind kind = FieldKind::electric;
  Axis component = Axis::x;
  int sign = 1;

  /// Multiplier applied to the field component: sign for E, sign*i for H.
  Complexd factor() const {
    return kind == FieldKind::electric ? Complexd(sign, 0.0) : Complexd(0.0, sign);
  }
};

struct FieldLayout {
  std::string name;
  std::array<FieldSlot, 4> slots{};
  bool charge_conjugated = false;

  /// Propagation axis: the one component no slot references.
  Axis axis() const;
  bool is_valid() const;
  /// Printable slot label such as "iH_x" or "-E_z".
  std::string slot_label(int k) const;
};

FieldLayout layout_for(Axis axis, Orientation orientation);
/// The electron layout (E_x, E_z, iH_x, iH_z) for a wave along y.
FieldLayout electron_y_layout();
/// Charge-conjugated partner (E_x, -E_z, iH_x, -iH_z).
FieldLayout positron_y_layout();

}  // namespace dm
