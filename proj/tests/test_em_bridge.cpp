#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_maxwell/em_bridge.hpp"
#include "dirac_maxwell/errors.hpp"
#include "dirac_maxwell/planewave.hpp"
#include "dirac_maxwell/rng.hpp"

#include <cmath>
#include <numbers>

using namespace dm;
using doctest::Approx;

namespace {

EmField sample_y() { return EmField::real(Vec3d(1.0, 0.0, 2.0), Vec3d(3.0, 0.0, -1.0)); }

}  // namespace

TEST_CASE("electron layout fills (E_x, E_z, iH_x, iH_z)") {
  const auto psi = bispinor_from_fields(sample_y(), electron_y_layout());
  CHECK(psi(0) == Complexd(1.0));
  CHECK(psi(1) == Complexd(2.0));
  CHECK(psi(2) == Complexd(0.0, 3.0));
  CHECK(psi(3) == Complexd(0.0, -1.0));
  const auto back = fields_from_bispinor(psi, electron_y_layout());
  CHECK(back.e == sample_y().e);
  CHECK(back.h == sample_y().h);
}

TEST_CASE("a component without a slot is rejected") {
  CHECK_THROWS_AS(bispinor_from_fields(EmField::real(Vec3d(0, 1, 0), Vec3d::Zero()), electron_y_layout()),
                  LayoutViolation);
  CHECK_NOTHROW(bispinor_from_fields(EmField::real(Vec3d(0, 1, 0), Vec3d::Zero()),
                                     layout_for(Axis::x, Orientation::negative)));
}

TEST_CASE("bilinears are Maxwell invariants") {
  // E = (1,0,2), H = (3,0,-1): E^2+H^2 = 15, E^2-H^2 = -5, E.H = 1, (ExH)_y = 7.
  const auto set = canonical_alpha_set();
  const auto psi = bispinor_from_fields(sample_y(), electron_y_layout());
  CHECK(bilinear(BilinearKind::vector0, psi, set) == Complexd(15.0));
  CHECK(bilinear(BilinearKind::scalar, psi, set) == Complexd(-5.0));
  CHECK(bilinear(BilinearKind::pseudoscalar, psi, set) == Complexd(2.0));
  CHECK(bilinear(BilinearKind::vector2, psi, set) == Complexd(-14.0));
  CHECK(bilinear(BilinearKind::vector1, psi, set) == Complexd(0.0));
  CHECK(bilinear(BilinearKind::vector3, psi, set) == Complexd(0.0));

  const auto pos = layout_for(Axis::y, Orientation::positive);
  const auto psi_p = bispinor_from_fields(sample_y(), pos);
  CHECK(std::real(bilinear(BilinearKind::vector2, psi_p, set)) == Approx(14.0));
  CHECK(to_string(BilinearKind::pseudoscalar) == "pseudoscalar");
}

TEST_CASE("bilinear sign table, random fields on all triads") {
  const auto set = canonical_alpha_set();
  auto rng = SplitMix64(7);
  for (const auto& t : axis_triads()) {
    const int ax = static_cast<int>(t.axis);
    for (int i = 0; i < 200; ++i) {
      Vec3d e(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      Vec3d h(rng.uniform(-1, 1), rng.uniform(-1, 1), rng.uniform(-1, 1));
      e(ax) = 0.0;
      h(ax) = 0.0;
      const auto psi = bispinor_from_fields(EmField::real(e, h), t.layout);
      const double scale = e.squaredNorm() + h.squaredNorm();
      CHECK(std::abs(sandwich(psi, set[0]) - scale) <= 1e-12 * scale);
      CHECK(std::abs(sandwich(psi, set[4]) - (e.squaredNorm() - h.squaredNorm())) <= 1e-12 * scale);
      CHECK(std::abs(sandwich(psi, set[5]) - 2.0 * e.dot(h)) <= 1e-12 * scale);
      CHECK(std::abs(sandwich(psi, set[2]) - t.poynting_sign() * 2.0 * e.cross(h)(ax)) <= 1e-12 * scale);
    }
  }
}

TEST_CASE("Fierz pair") {
  const auto f = EmField::real(Vec3d(1, 2, 3), Vec3d(-1, 0.5, 2));
  const auto p = fierz_em(f);
  CHECK(p.lhs == Approx(p.rhs).epsilon(1e-14));
  // E.H = 6, E^2 - H^2 = 14 - 5.25.
  CHECK(p.rhs == Approx(8.75 * 8.75 + 4 * 36.0));
  CHECK_THROWS_AS(fierz_em(EmField{Vec3cd(kI, 0, 0), Vec3cd::Zero()}), DomainError);

  Bispinord psi;
  psi << Complexd(0.3, -0.2), Complexd(1.0, 0.5), Complexd(-0.7, 0.1), Complexd(0.2, 0.9);
  const auto q = fierz_quantum(psi, canonical_alpha_set());
  CHECK(q.lhs == Approx(q.rhs).epsilon(1e-13));
}

TEST_CASE("energy density and Poynting vector") {
  const auto u = UnitSystem::natural();
  const auto f = EmField::real(Vec3d(1, 0, 0), Vec3d(0, 0, 1));
  CHECK(energy_density(f) == Approx(2.0 / (8.0 * std::numbers::pi)));
  const Vec3d s = poynting(f, u);
  CHECK(s.y() == Approx(-1.0 / (4.0 * std::numbers::pi)));
  CHECK(momentum_density(f, u).y() == Approx(s.y()));
}

TEST_CASE("printed scalar systems") {
  const auto printed = printed_scalar_systems();
  CHECK(printed.size() == 6);
  const auto yneg = layout_for(Axis::y, Orientation::negative);
  const auto& base = printed[2].second;
  CHECK(printed[2].first == "y-/minus");
  for (std::size_t i = 3; i < 6; ++i) {
    const auto& sys = printed[i].second;
    const auto t = transpose_system(base, yneg, layout_for(sys.axis, Orientation::positive));
    for (std::size_t k = 0; k < 4; ++k) {
      CHECK(t.rows[k].deriv_sign == sys.rows[k].deriv_sign);
      CHECK(t.rows[k].mass_sign == sys.rows[k].mass_sign);
      CHECK(t.rows[k].g_component == sys.rows[k].g_component);
    }
  }
  // The charge-conjugated minus-form system carries the currents of the table solved by the adjoint form.
  const auto pos = scalar_system_for(positron_y_layout(), DiracForm::minus);
  const auto& adj = printed[0].second;
  for (std::size_t k = 0; k < 4; ++k) CHECK(pos.rows[k].mass_sign == adj.rows[k].mass_sign);
  CHECK(form_signs(DiracForm::minus_adjoint).mass == -1);
}

TEST_CASE("residual forms agree on analytic plane waves") {
  const auto u = UnitSystem::natural();
  const std::vector<double> ts{0.0, 0.4, 1.3};
  const std::vector<double> ss{-0.2, 0.5, 2.0};
  for (auto form : {DiracForm::plus, DiracForm::plus_adjoint, DiracForm::minus, DiracForm::minus_adjoint}) {
    for (const auto& t : axis_triads()) {
      const auto sol = form_solution(form, 2, 0.8, 1.0, u);
      const auto g = dirac_residual_em(plane_wave_history(sol.b, sol.omega, sol.k, t.layout), t, 1.0, form, ts, ss, u);
      CHECK(g.analytic);
      CHECK(g.max_disagreement <= 1e-12);
      CHECK(g.max_scalar <= 1e-12);
      CHECK(g.scalar.size() == 9);
    }
  }
}

TEST_CASE("finite differences and the coarse-grid guard") {
  const auto u = UnitSystem::natural();
  const auto t = axis_triad(Axis::z, Orientation::positive);
  const auto sol = form_solution(DiracForm::minus, 1, 0.8, 1.0, u);
  const auto h = plane_wave_history(sol.b, sol.omega, sol.k, t.layout);
  ResidualOptions opts;
  opts.wavelength = 2 * std::numbers::pi / std::abs(sol.k);
  const auto g = dirac_residual_em(FieldHistory{h.value, {}, {}}, t, 1.0, DiracForm::minus, {0.1}, {0.3}, u, opts);
  CHECK_FALSE(g.analytic);
  CHECK(g.max_scalar <= 1e-8);
  CHECK(g.truncation_estimate <= 1e-6);

  opts.step_fraction = 0.05;
  opts.tolerance = 1e-12;
  CHECK_THROWS_AS(dirac_residual_em(FieldHistory{h.value, {}, {}}, t, 1.0, DiracForm::minus, {0.1}, {0.3}, u, opts),
                  GridTooCoarse);
}

TEST_CASE("primed bispinor pairing") {
  const auto f = sample_y();
  const Bispinord exact = s_matrix().adjoint() * bispinor_from_fields(f, electron_y_layout());
  const Bispinord shown = primed_bispinor_printed(f);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(exact(k) - shown(k)) <= 1e-15);
  CHECK(std::abs(exact(3) + shown(3)) <= 1e-15);
}
