#include "dirac_maxwell/em_bridge.hpp"

#include "dirac_maxwell/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace dm {

Bispinord bispinor_from_fields(const EmField& f, const FieldLayout& layout) {
  std::array<std::array<bool, 3>, 2> covered{};
  Bispinord psi;
  for (int k = 0; k < 4; ++k) {
    const auto& s = layout.slots[static_cast<std::size_t>(k)];
    covered[s.kind == FieldKind::electric ? 0 : 1][static_cast<std::size_t>(s.component)] = true;
    psi(k) = s.factor() * f.component(s.kind, s.component);
  }
  for (int kind = 0; kind < 2; ++kind) {
    for (int c = 0; c < 3; ++c) {
      const auto fk = kind == 0 ? FieldKind::electric : FieldKind::magnetic;
      if (!covered[static_cast<std::size_t>(kind)][static_cast<std::size_t>(c)] &&
          f.component(fk, static_cast<Axis>(c)) != Complexd(0.0)) {
        std::ostringstream msg;
        msg << (kind == 0 ? "E_" : "H_") << to_string(static_cast<Axis>(c))
            << " is nonzero but has no slot in layout " << layout.name;
        throw LayoutViolation(msg.str());
      }
    }
  }
  return psi;
}

EmField fields_from_bispinor(const Bispinord& psi, const FieldLayout& layout) {
  EmField f;
  for (int k = 0; k < 4; ++k) {
    const auto& s = layout.slots[static_cast<std::size_t>(k)];
    f.component(s.kind, s.component) = psi(k) / s.factor();
  }
  return f;
}

Bispinord primed_bispinor_printed(const EmField& f) {
  const double h = std::sqrt(2.0) / 2.0;
  const Complexd ex = f.e.x();
  const Complexd ez = f.e.z();
  const Complexd ihx = kI * f.h.x();
  const Complexd ihz = kI * f.h.z();
  Bispinord p;
  p << h * (ex + ihx), h * (ez + ihz), h * (ez - ihz), h * (ex - ihx);
  return p;
}

std::string_view to_string(BilinearKind k) {
  switch (k) {
    case BilinearKind::scalar: return "scalar";
    case BilinearKind::vector0: return "vector0";
    case BilinearKind::vector1: return "vector1";
    case BilinearKind::vector2: return "vector2";
    case BilinearKind::vector3: return "vector3";
    case BilinearKind::pseudoscalar: return "pseudoscalar";
  }
  return "?";
}

int matrix_index(BilinearKind k) {
  switch (k) {
    case BilinearKind::scalar: return 4;
    case BilinearKind::vector0: return 0;
    case BilinearKind::vector1: return 1;
    case BilinearKind::vector2: return 2;
    case BilinearKind::vector3: return 3;
    case BilinearKind::pseudoscalar: return 5;
  }
  return 0;
}

Complexd bilinear(BilinearKind kind, const Bispinord& psi, const AlphaSet& set) {
  return sandwich(psi, set[matrix_index(kind)]);
}

namespace {

void require_real(const EmField& f, const char* what) {
  if (!f.is_real()) throw DomainError(std::string(what) + " needs real field amplitudes");
}

}  // namespace

FierzPair fierz_em(const EmField& f) {
  require_real(f, "fierz_em");
  const Vec3d e = f.e_real();
  const Vec3d h = f.h_real();
  const double e2 = e.squaredNorm();
  const double h2 = h.squaredNorm();
  const double s2 = e.cross(h).squaredNorm();
  const double eh = e.dot(h);
  return {(e2 + h2) * (e2 + h2) - 4.0 * s2, (e2 - h2) * (e2 - h2) + 4.0 * eh * eh};
}

FierzPair fierz_quantum(const Bispinord& psi, const AlphaSet& set) {
  auto b = [&](int k) { return std::real(sandwich(psi, set[k])); };
  const double b0 = b(0);
  const double b1 = b(1);
  const double b2 = b(2);
  const double b3 = b(3);
  const double b4 = b(4);
  const double b5 = b(5);
  return {b0 * b0 - b1 * b1 - b2 * b2 - b3 * b3, b4 * b4 + b5 * b5};
}

double energy_density(const EmField& f) {
  require_real(f, "energy_density");
  return (f.e_real().squaredNorm() + f.h_real().squaredNorm()) / (8.0 * std::numbers::pi);
}

Vec3d poynting(const EmField& f, const UnitSystem& units) {
  require_real(f, "poynting");
  return units.c / (4.0 * std::numbers::pi) * f.e_real().cross(f.h_real());
}

Vec3d momentum_density(const EmField& f, const UnitSystem& units) {
  return poynting(f, units) / (units.c * units.c);
}

// ---------------------------------------------------------------- field equations

std::string_view to_string(DiracForm f) {
  switch (f) {
    case DiracForm::plus: return "plus";
    case DiracForm::plus_adjoint: return "plus_adjoint";
    case DiracForm::minus: return "minus";
    case DiracForm::minus_adjoint: return "minus_adjoint";
  }
  return "?";
}

FormSigns form_signs(DiracForm f) {
  switch (f) {
    case DiracForm::plus: return {1, 1, 1};
    case DiracForm::plus_adjoint: return {-1, -1, 1};
    case DiracForm::minus: return {1, -1, -1};
    case DiracForm::minus_adjoint: return {-1, 1, -1};
  }
  return {};
}

namespace {

constexpr FieldKind E = FieldKind::electric;
constexpr FieldKind H = FieldKind::magnetic;

ScalarSystem system(std::string name, Axis axis, std::array<ScalarRow, 4> rows) {
  return {std::move(name), axis, rows};
}

}  // namespace

std::vector<std::pair<std::string, ScalarSystem>> printed_scalar_systems() {
  using A = Axis;
  std::vector<std::pair<std::string, ScalarSystem>> out;
  out.emplace_back("y-/plus_adjoint",
                   system("y-/plus_adjoint", A::y,
                          {ScalarRow{E, A::x, -1, H, A::z, 1}, ScalarRow{E, A::z, 1, H, A::x, 1},
                           ScalarRow{H, A::x, 1, E, A::z, -1}, ScalarRow{H, A::z, -1, E, A::x, -1}}));
  out.emplace_back("y-/plus",
                   system("y-/plus", A::y,
                          {ScalarRow{E, A::x, -1, H, A::z, -1}, ScalarRow{E, A::z, 1, H, A::x, -1},
                           ScalarRow{H, A::x, 1, E, A::z, 1}, ScalarRow{H, A::z, -1, E, A::x, 1}}));
  out.emplace_back("y-/minus",
                   system("y-/minus", A::y,
                          {ScalarRow{E, A::x, 1, H, A::z, 1}, ScalarRow{E, A::z, -1, H, A::x, 1},
                           ScalarRow{H, A::x, -1, E, A::z, -1}, ScalarRow{H, A::z, 1, E, A::x, -1}}));
  out.emplace_back("x+/minus",
                   system("x+/minus", A::x,
                          {ScalarRow{E, A::y, 1, H, A::z, 1}, ScalarRow{E, A::z, -1, H, A::y, 1},
                           ScalarRow{H, A::y, -1, E, A::z, -1}, ScalarRow{H, A::z, 1, E, A::y, -1}}));
  out.emplace_back("y+/minus",
                   system("y+/minus", A::y,
                          {ScalarRow{E, A::z, 1, H, A::x, 1}, ScalarRow{E, A::x, -1, H, A::z, 1},
                           ScalarRow{H, A::z, -1, E, A::x, -1}, ScalarRow{H, A::x, 1, E, A::z, -1}}));
  out.emplace_back("z+/minus",
                   system("z+/minus", A::z,
                          {ScalarRow{E, A::x, 1, H, A::y, 1}, ScalarRow{E, A::y, -1, H, A::x, 1},
                           ScalarRow{H, A::x, -1, E, A::y, -1}, ScalarRow{H, A::y, 1, E, A::x, -1}}));
  return out;
}

namespace {

int slot_of(const FieldLayout& l, FieldKind kind, Axis c) {
  for (int k = 0; k < 4; ++k) {
    const auto& s = l.slots[static_cast<std::size_t>(k)];
    if (s.kind == kind && s.component == c) return k;
  }
  throw LayoutViolation(std::string("no slot for component ") + std::string(to_string(c)) +
                        " in layout " + l.name);
}

}  // namespace

ScalarSystem transpose_system(const ScalarSystem& sys, const FieldLayout& from, const FieldLayout& to) {
  ScalarSystem out;
  out.name = sys.name + "->" + to.name;
  out.axis = to.axis();
  for (int k = 0; k < 4; ++k) {
    const auto& row = sys.rows[static_cast<std::size_t>(k)];
    const int a = slot_of(from, row.f_kind, row.f_component);
    const int b = slot_of(from, row.g_kind, row.g_component);
    const auto& fa = from.slots[static_cast<std::size_t>(a)];
    const auto& fb = from.slots[static_cast<std::size_t>(b)];
    const auto& ta = to.slots[static_cast<std::size_t>(a)];
    const auto& tb = to.slots[static_cast<std::size_t>(b)];
    ScalarRow r;
    r.f_kind = ta.kind;
    r.f_component = ta.component;
    r.g_kind = tb.kind;
    r.g_component = tb.component;
    r.deriv_sign = row.deriv_sign * fa.sign * fb.sign * ta.sign * tb.sign;
    r.mass_sign = row.mass_sign;
    out.rows[static_cast<std::size_t>(a)] = r;
  }
  return out;
}

ScalarSystem scalar_system_for(const FieldLayout& layout, DiracForm form) {
  const auto printed = printed_scalar_systems();
  auto find = [&](const std::string& key) -> const ScalarSystem* {
    for (const auto& [k, s] : printed)
      if (k == key) return &s;
    return nullptr;
  };
  if (!layout.charge_conjugated) {
    if (const auto* s = find(layout.name + "/" + std::string(to_string(form)))) return *s;
  }
  const auto y_neg = layout_for(Axis::y, Orientation::negative);
  if (form == DiracForm::minus_adjoint) {
    // Same derivative pattern as the minus form, opposite imaginary currents.
    ScalarSystem base = *find("y-/minus");
    for (auto& r : base.rows) r.mass_sign = -r.mass_sign;
    base.name = "y-/minus_adjoint";
    return transpose_system(base, y_neg, layout);
  }
  return transpose_system(*find("y-/" + std::string(to_string(form))), y_neg, layout);
}

std::array<Complexd, 4> scalar_residual(const ScalarSystem& sys, const FieldJet& jet, double mass,
                                        const UnitSystem& units) {
  const double kappa = mass * units.c / units.hbar;
  std::array<Complexd, 4> out{};
  for (std::size_t k = 0; k < 4; ++k) {
    const auto& r = sys.rows[k];
    const Complexd f = jet.value.component(r.f_kind, r.f_component);
    out[k] = jet.d_t.component(r.f_kind, r.f_component) / units.c +
             static_cast<double>(r.deriv_sign) * jet.d_s.component(r.g_kind, r.g_component) +
             static_cast<double>(r.mass_sign) * kI * kappa * f;
  }
  return out;
}

std::array<Complexd, 4> bispinor_residual(const AxisTriad& triad, const AlphaSet& set, DiracForm form,
                                          const FieldJet& jet, double mass, const UnitSystem& units) {
  const auto sg = form_signs(form);
  const auto& layout = triad.layout;
  const Bispinord psi = bispinor_from_fields(jet.value, layout);
  const Bispinord psi_t = bispinor_from_fields(jet.d_t, layout);
  const Bispinord psi_s = bispinor_from_fields(jet.d_s, layout);
  const double kappa = mass * units.c / units.hbar;
  const double p_ratio = static_cast<double>(sg.momentum * sg.energy);
  const double m_ratio = static_cast<double>(sg.mass * sg.energy);
  const Bispinord r = psi_t / units.c - p_ratio * (set[triad.working_matrix()] * psi_s) -
                      m_ratio * kI * kappa * (set.beta() * psi);
  return {r(0), r(1), r(2), r(3)};
}

namespace {

/// Fourth-order central difference and the Richardson estimate of its error.
struct Difference {
  EmField value;
  double error = 0.0;
};

Difference central(const std::function<EmField(double)>& f, double x, double h) {
  auto d = [&](double step) {
    return (f(x - 2 * step) - f(x + 2 * step) + (f(x + step) - f(x - step)) * Complexd(8.0)) *
           Complexd(1.0 / (12.0 * step));
  };
  const EmField fine = d(h);
  const EmField coarse = d(2 * h);
  const EmField diff = fine - coarse;
  return {fine, std::max(max_abs(diff.e), max_abs(diff.h)) / 15.0};
}

double jet_scale(const EmField& f) { return std::max(max_abs(f.e), max_abs(f.h)); }

}  // namespace

ResidualGrid dirac_residual_em(const FieldHistory& fields, const AxisTriad& triad, double mass,
                               DiracForm form, const std::vector<double>& t,
                               const std::vector<double>& s, const UnitSystem& units,
                               const ResidualOptions& opts) {
  if (!fields.value) throw DomainError("field history has no value function");
  if (!(opts.wavelength > 0.0) || !(opts.step_fraction > 0.0))
    throw DomainError("wavelength and step fraction must be positive");
  const auto set = canonical_alpha_set();
  const auto sys = scalar_system_for(triad.layout, form);

  ResidualGrid g;
  g.t = t;
  g.s = s;
  g.analytic = static_cast<bool>(fields.d_t) && static_cast<bool>(fields.d_s);
  const double hs = opts.step_fraction * opts.wavelength;
  const double ht = hs / units.c;
  const double k_scale = 2.0 * std::numbers::pi / opts.wavelength;

  for (double tv : t) {
    for (double sv : s) {
      FieldJet jet;
      jet.value = fields.value(tv, sv);
      double err = 0.0;
      if (fields.d_t) {
        jet.d_t = fields.d_t(tv, sv);
      } else {
        const auto d = central([&](double x) { return fields.value(x, sv); }, tv, ht);
        jet.d_t = d.value;
        err = std::max(err, d.error / units.c);
      }
      if (fields.d_s) {
        jet.d_s = fields.d_s(tv, sv);
      } else {
        const auto d = central([&](double x) { return fields.value(tv, x); }, sv, hs);
        jet.d_s = d.value;
        err = std::max(err, d.error);
      }
      const double scale = std::max(jet_scale(jet.value) * k_scale, 1e-300);
      g.truncation_estimate = std::max(g.truncation_estimate, err / scale);

      const auto sc = scalar_residual(sys, jet, mass, units);
      const auto bs = bispinor_residual(triad, set, form, jet, mass, units);
      for (std::size_t k = 0; k < 4; ++k) {
        g.max_scalar = std::max(g.max_scalar, std::abs(sc[k]));
        g.max_bispinor = std::max(g.max_bispinor, std::abs(bs[k]));
        const Complexd factor = triad.layout.slots[k].factor();
        g.max_disagreement = std::max(g.max_disagreement, std::abs(bs[k] - factor * sc[k]));
      }
      g.scalar.push_back(sc);
      g.bispinor.push_back(bs);
    }
  }
  if (g.truncation_estimate > opts.tolerance) {
    std::ostringstream msg;
    msg << "relative truncation estimate " << g.truncation_estimate << " exceeds "
        << opts.tolerance;
    throw GridTooCoarse(msg.str());
  }
  return g;
}

}  // namespace dm
