#include "dirac_maxwell/planewave.hpp"

#include "dirac_maxwell/errors.hpp"

#include <cmath>
#include <numbers>

namespace dm {

std::string_view to_string(Branch b) { return b == Branch::positive ? "positive" : "negative"; }

Matrix4cd build_system(double energy, const Vec3d& momentum, double mass, const UnitSystem& units) {
  const double c = units.c;
  const double mc2 = mass * c * c;
  const Complexd pz = c * momentum.z();
  const Complexd pm = c * Complexd(momentum.x(), -momentum.y());
  const Complexd pp = c * Complexd(momentum.x(), momentum.y());
  Matrix4cd m = Matrix4cd::Zero();
  m(0, 0) = energy + mc2;
  m(0, 2) = pz;
  m(0, 3) = pm;
  m(1, 1) = energy + mc2;
  m(1, 2) = pp;
  m(1, 3) = -pz;
  m(2, 2) = energy - mc2;
  m(2, 0) = pz;
  m(2, 1) = pm;
  m(3, 3) = energy - mc2;
  m(3, 0) = pp;
  m(3, 1) = -pz;
  return m;
}

std::pair<double, double> dispersion(const Vec3d& momentum, double mass, const UnitSystem& units) {
  const double c = units.c;
  const double e = std::sqrt(c * c * momentum.squaredNorm() + mass * mass * c * c * c * c);
  return {e, -e};
}

Complexd determinant(const Matrix4cd& m) {
  Matrix4cd a = m;
  Complexd det = 1.0;
  for (int col = 0; col < 4; ++col) {
    int piv = col;
    for (int r = col + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == Complexd(0.0)) return 0.0;
    if (piv != col) {
      a.row(piv).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const Complexd f = a(r, col) / a(col, col);
      a.row(r) -= f * a.row(col);
    }
  }
  return det;
}

std::vector<Bispinord> nullspace(const Matrix4cd& m, double pivot_tol) {
  Matrix4cd a = m;
  const double scale = std::max(max_abs(m), 1e-300);
  std::array<int, 4> pivot_col{-1, -1, -1, -1};
  std::array<bool, 4> is_pivot{};
  int row = 0;
  for (int col = 0; col < 4 && row < 4; ++col) {
    int piv = row;
    for (int r = row + 1; r < 4; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (std::abs(a(piv, col)) <= pivot_tol * scale) continue;
    a.row(piv).swap(a.row(row));
    a.row(row) /= a(row, col);
    for (int r = 0; r < 4; ++r) {
      if (r == row) continue;
      const Complexd f = a(r, col);
      if (f != Complexd(0.0)) a.row(r) -= f * a.row(row);
    }
    pivot_col[static_cast<std::size_t>(row)] = col;
    is_pivot[static_cast<std::size_t>(col)] = true;
    ++row;
  }
  std::vector<Bispinord> basis;
  for (int free = 0; free < 4; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    Bispinord v = Bispinord::Zero();
    v(free) = 1.0;
    for (int r = 0; r < row; ++r) v(pivot_col[static_cast<std::size_t>(r)]) = -a(r, free);
    basis.push_back(v);
  }
  return basis;
}

std::pair<Bispinord, Bispinord> solution_basis(Branch branch, const Vec3d& momentum, double mass,
                                               const UnitSystem& units) {
  const double c = units.c;
  const double mc2 = mass * c * c;
  const auto [ep, em] = dispersion(momentum, mass, units);
  const Complexd pz = c * momentum.z();
  const Complexd pm = c * Complexd(momentum.x(), -momentum.y());
  const Complexd pp = c * Complexd(momentum.x(), momentum.y());
  Bispinord b1;
  Bispinord b2;
  if (branch == Branch::positive) {
    const double d = ep + mc2;
    b1 << -pz / d, -pp / d, 1.0, 0.0;
    b2 << -pm / d, pz / d, 0.0, 1.0;
  } else {
    const double d = -em + mc2;
    b1 << 1.0, 0.0, pz / d, pp / d;
    b2 << 0.0, 1.0, pm / d, -pz / d;
  }
  return {b1, b2};
}

PlaneWaveState make_state(Branch branch, int which, const Vec3d& momentum, double mass,
                          const UnitSystem& units, double phase) {
  const auto [ep, em] = dispersion(momentum, mass, units);
  const auto basis = solution_basis(branch, momentum, mass, units);
  PlaneWaveState s;
  s.branch = branch;
  s.energy = branch == Branch::positive ? ep : em;
  s.momentum = momentum;
  s.phase = phase;
  s.amplitudes = (which == 1 ? basis.first : basis.second) * std::exp(kI * phase);
  return s;
}

double residual(const PlaneWaveState& state, const AlphaSet& set, double mass, const UnitSystem& units,
                DiracForm form) {
  const auto sg = form_signs(form);
  const double c = units.c;
  const Vec3d& p = state.momentum;
  const Matrix4cd op = static_cast<double>(sg.energy) * state.energy * set[0] +
                       static_cast<double>(sg.momentum) * c * (p.x() * set[1] + p.y() * set[2] + p.z() * set[3]) +
                       static_cast<double>(sg.mass) * mass * c * c * set[4];
  return max_abs((op * state.amplitudes).eval());
}

FieldInterpretation field_interpretation(const PlaneWaveState& state, const FieldLayout& layout,
                                         double zero_tol) {
  const int ax = static_cast<int>(layout.axis());
  for (int k = 0; k < 3; ++k) {
    if (k != ax && state.momentum(k) != 0.0)
      throw AxisMismatch("momentum has a component off the " + std::string(to_string(layout.axis())) +
                         " axis of layout " + layout.name);
  }
  FieldInterpretation out;
  out.field = fields_from_bispinor(state.amplitudes, layout);
  const double scale = max_abs(state.amplitudes);
  for (int k = 0; k < 4; ++k)
    out.nonzero[static_cast<std::size_t>(k)] = std::abs(state.amplitudes(k)) > zero_tol * scale;
  return out;
}

SpecialValues special_values(double mass, const UnitSystem& units) {
  const double c = units.c;
  const double mc2 = mass * c * c;
  const Vec3d p(0.0, mass * c, 0.0);
  const Complexd phase = std::exp(kI * (std::numbers::pi / 2.0));
  SpecialValues out;

  // The printed solution formulas with eps_+ and eps_- supplied explicitly.
  auto family = [&](double eps_pos, double eps_neg) {
    const Complexd py = c * Complexd(0.0, p.y());
    const double dp = eps_pos + mc2;
    const double dn = -eps_neg + mc2;
    std::array<Bispinord, 4> b;
    b[0] << 0.0, -py / dp, 1.0, 0.0;
    b[1] << py / dp, 0.0, 0.0, 1.0;
    b[2] << 1.0, 0.0, 0.0, py / dn;
    b[3] << 0.0, 1.0, -py / dn, 0.0;
    for (auto& v : b) v *= phase;
    return b;
  };
  out.literal = family(mc2, -mc2);
  const auto [ep, em] = dispersion(p, mass, units);
  out.on_shell = family(ep, em);
  out.printed[0] << 0.0, 0.5, kI, 0.0;
  out.printed[1] << -0.5, 0.0, 0.0, kI;
  out.printed[2] << kI, 0.0, 0.0, -0.5;
  out.printed[3] << 0.0, kI, 0.5, 0.0;
  return out;
}

ContinuityResult continuity_check(const PlaneWaveState& state, const AlphaSet& set,
                                  const UnitSystem& units) {
  // psi = B exp(i(k.r - omega t)): d/dt psi = -i omega psi, grad psi = i k psi.
  const Bispinord& b = state.amplitudes;
  const double omega = state.energy / units.hbar;
  const Vec3d k = state.momentum / units.hbar;
  const Complexd dt = Complexd(0.0, -omega);
  ContinuityResult r;
  r.dp_dt = std::real(std::conj(dt) * sandwich(b, set[0]) + dt * sandwich(b, set[0]));
  double div = 0.0;
  for (int j = 0; j < 3; ++j) {
    const Complexd dj(0.0, k(j));
    div += -units.c * std::real(std::conj(dj) * sandwich(b, set[j + 1]) + dj * sandwich(b, set[j + 1]));
  }
  r.div_s = div;
  r.balance = r.dp_dt + r.div_s;
  return r;
}

FormSolution form_solution(DiracForm form, int which, double p_axis, double mass,
                           const UnitSystem& units) {
  // s_e hbar omega + s_p c a hbar k + s_m beta m c^2 = s_m (eps' + c a p' + beta m c^2)
  // with omega = s_m s_e eps' / hbar and k = s_m s_p p' / hbar.
  const auto sg = form_signs(form);
  const int we = sg.mass * sg.energy;
  const int wk = sg.mass * sg.momentum;
  const Branch branch = we > 0 ? Branch::positive : Branch::negative;
  const Vec3d p(0.0, p_axis, 0.0);
  const auto st = make_state(branch, which, p, mass, units);
  return {st.amplitudes, we * st.energy / units.hbar, wk * p_axis / units.hbar};
}

FieldHistory plane_wave_history(const Bispinord& b, double omega, double k, const FieldLayout& layout) {
  const EmField amp = fields_from_bispinor(b, layout);
  FieldHistory h;
  h.value = [=](double t, double s) { return amp * std::exp(kI * (k * s - omega * t)); };
  h.d_t = [=](double t, double s) { return amp * (Complexd(0.0, -omega) * std::exp(kI * (k * s - omega * t))); };
  h.d_s = [=](double t, double s) { return amp * (Complexd(0.0, k) * std::exp(kI * (k * s - omega * t))); };
  return h;
}

double normalization_integral(const TorusModel& model, int n_points) {
  const auto& u = model.units;
  const double mc2 = u.m_e * u.c * u.c;
  // E = H = E0 cos(k l) along the ring; total field energy set to m c^2.
  const double e0_sq = 8.0 * std::numbers::pi * mc2 / model.delta_tau;
  const double norm = 8.0 * std::numbers::pi * mc2;
  const double length = 2.0 * std::numbers::pi * model.r_s;
  const auto q = simpson(
      [&](double l) {
        const double v = std::cos(model.k * l);
        return 2.0 * e0_sq * v * v / norm;  // psi+ psi = E^2 + H^2
      },
      0.0, length, n_points);
  return model.s_c * q.value;
}

}  // namespace dm
