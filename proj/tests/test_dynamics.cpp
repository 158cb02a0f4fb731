#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_maxwell/dynamics.hpp"
#include "dirac_maxwell/errors.hpp"
#include "dirac_maxwell/planewave.hpp"
#include "dirac_maxwell/rng.hpp"

#include <cmath>
#include <numbers>

using namespace dm;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

namespace {

const UnitSystem kNat = UnitSystem::natural();

FieldJet wave_jet(DiracForm form, double detune = 1.0) {
  const auto s = form_solution(form, 1, 0.8, 1.0, kNat);
  const auto h = plane_wave_history(s.b, detune * s.omega, s.k, electron_y_layout());
  return {h.value(0.2, 0.3), h.d_t(0.2, 0.3), h.d_s(0.2, 0.3)};
}

Complexd rand_c(SplitMix64& r) { return {r.uniform(-1, 1), r.uniform(-1, 1)}; }

EmField rand_y(SplitMix64& r) {
  EmField f;
  f.e.x() = rand_c(r);
  f.e.z() = rand_c(r);
  f.h.x() = rand_c(r);
  f.h.z() = rand_c(r);
  return f;
}

}  // namespace

TEST_CASE("stress tensor") {
  const auto t = stress_tensor(EmField::real(Vec3d(1, 0, 0), Vec3d::Zero()));
  CHECK(t.tau_00 == 0.5);
  CHECK(t.trace() == Approx(0.5));
  CHECK(t.tau_pq(0, 0) == -0.5);
  const auto z = stress_tensor(EmField{});
  CHECK(z.tau_pq.isZero(0.0));
  CHECK(z.tau_00 == 0.0);
  const auto f = EmField::real(Vec3d(0.3, -1, 2), Vec3d(1, 0.4, -0.7));
  const auto s = stress_tensor(f);
  CHECK(s.trace() == Approx(s.tau_00));
  CHECK(s.tau_00 == Approx(4 * pi * energy_density(f)));
  CHECK((s.tau_p0 - 4 * pi * poynting(f, kNat)).norm() <= 1e-14);
  CHECK(stress_tensor_inverted_delta(EmField::real(Vec3d(1, 0, 0), Vec3d::Zero())).trace() == Approx(-1.0));
  CHECK_THROWS_AS(stress_tensor(EmField{Vec3cd(kI, 0, 0), Vec3cd::Zero()}), DomainError);
}

TEST_CASE("ring forces") {
  const auto m = derive_parameters(kNat, 1.0);
  const auto f = lorentz_force_ring(m, 1.0, RingPolarization::ex_hz);
  CHECK(f.f0 == Approx(1.0 / (2 * pi)));
  CHECK(f.f2 == Approx(1.0 / (2 * pi)));
  CHECK(f.f2 == Approx(f.f2_via_current));
  CHECK(f.f0 == Approx(f.f0_via_current));
  const auto g = lorentz_force_ring(m, 1.0, RingPolarization::ez_hx);
  CHECK(g.f0 == -f.f0);
  CHECK(g.f2 == -f.f2);
  const auto zero = lorentz_force_ring(m, 0.0, RingPolarization::ex_hz);
  CHECK(zero.f0 == 0.0);
  CHECK(zero.f2 == 0.0);
  CHECK_THROWS_AS(lorentz_force_ring(m, -1.0, RingPolarization::ex_hz), DomainError);
  CHECK(to_string(RingPolarization::ez_hx) == "ez_hx");
}

TEST_CASE("magnetic confinement") {
  const Vec3d f = magnetic_confinement_density(EmField::real(Vec3d::Zero(), Vec3d(0, 0, 1)), Vec3d(0, 1, 0), kNat);
  CHECK(f.x() == 1.0);
  CHECK(f.y() == 0.0);
  CHECK(magnetic_confinement_density(EmField::real(Vec3d::Zero(), Vec3d(0, 2, 0)), Vec3d(0, 1, 0), kNat).norm() == 0.0);
  const auto m = derive_parameters(kNat, 1.0);
  const double j = ring_current(m, 1.0, 0.0).j_tau;
  CHECK(magnetic_confinement_density(EmField::real(Vec3d(1, 0, 0), Vec3d(0, 0, 1)), Vec3d(0, j, 0), kNat).norm() ==
        Approx(lorentz_force_ring(m, 1.0, RingPolarization::ex_hz).f2));
}

TEST_CASE("currents use omega_e = 2 m c^2 / hbar") {
  const auto c = currents(EmField::real(Vec3d(1, 0, 0), Vec3d(0, 0, 1)), 1.0, kNat);
  CHECK(c.j_e.x() == Complexd(0.0, 2.0 / (4 * pi)));
  CHECK(c.j_m.z() == Complexd(0.0, 2.0 / (4 * pi)));
}

TEST_CASE("linear Lagrangian forms") {
  const auto set = canonical_alpha_set();
  auto rng = SplitMix64(11);
  for (int i = 0; i < 200; ++i) {
    const FieldJet jet{rand_y(rng), rand_y(rng), rand_y(rng)};
    const auto l = lagrangian_linear(jet, set, 1.0, kNat);
    const double scale = std::abs(l.field) + 1.0;
    CHECK(std::abs(l.quantum_em_units - l.field) <= 1e-12 * scale);
    CHECK(std::abs(l.current - l.field) <= 1e-12 * scale);
  }
  const auto on = lagrangian_linear(wave_jet(DiracForm::plus), set, 1.0, kNat);
  CHECK(std::abs(on.quantum) <= 1e-12);
  CHECK(std::abs(on.field) <= 1e-12);
  CHECK(std::abs(on.current) <= 1e-12);
  const auto off = lagrangian_linear(wave_jet(DiracForm::plus, 1.1), set, 1.0, kNat);
  CHECK(std::abs(off.field) > 1e-3);
  CHECK(std::abs(off.field - off.quantum_em_units) <= 1e-12 * std::abs(off.field));
  const auto zero = lagrangian_linear(FieldJet{}, set, 1.0, kNat);
  CHECK(std::abs(zero.field) == 0.0);
}

TEST_CASE("Maxwell Lagrangian pair") {
  const auto adj = maxwell_lagrangian_forms(wave_jet(DiracForm::plus_adjoint), 1.0, kNat);
  CHECK(std::abs(adj.lhs - adj.rhs) <= 1e-12 * std::abs(adj.lhs));
  const auto plus = maxwell_lagrangian_forms(wave_jet(DiracForm::plus), 1.0, kNat);
  CHECK(std::abs(plus.lhs + plus.rhs) <= 1e-12 * std::abs(plus.lhs));
  FieldJet stat;
  stat.value = EmField::real(Vec3d(1, 0, 0), Vec3d(0, 0, 0.5));
  const auto s = maxwell_lagrangian_forms(stat, 1.0, kNat);
  CHECK(std::real(s.lhs) == Approx(0.75 / (8 * pi)));
  CHECK(s.rhs == Complexd(0.0));
  FieldJet null_field;
  null_field.value = EmField::real(Vec3d(1, 0, 0), Vec3d(0, 0, 1));
  CHECK(maxwell_lagrangian_forms(null_field, 1.0, kNat).lhs == Complexd(0.0));
}

TEST_CASE("non-linear Lagrangian") {
  const auto set = canonical_alpha_set();
  const auto m = derive_parameters(kNat, 1.0);
  const auto zero = lagrangian_nonlinear(FieldJet{}, m, 1.0, set);
  CHECK(zero.quartic_field == 0.0);
  CHECK(zero.total_invariant == 0.0);
  auto rng = SplitMix64(12);
  for (int i = 0; i < 200; ++i) {
    FieldJet jet;
    jet.value = EmField::real(Vec3d(rng.uniform(-1, 1), 0, rng.uniform(-1, 1)),
                              Vec3d(rng.uniform(-1, 1), 0, rng.uniform(-1, 1)));
    const auto l = lagrangian_nonlinear(jet, m, 1.0, set);
    CHECK(l.quartic_field == Approx(l.quartic_invariant).epsilon(1e-12));
    CHECK(l.quartic_quantum == Approx(l.quartic_quantum_fierz).epsilon(1e-12));
    CHECK(l.quartic_quantum == Approx(8 * pi * l.quartic_field).epsilon(1e-12));
  }
}

TEST_CASE("photon-photon comparison") {
  const auto m = derive_parameters(kNat, 1.0);
  const auto sample = EmField::real(Vec3d(0.6, 0.2, 0.3), Vec3d(0.4, -0.1, 0.9));
  CHECK(pseudoscalar_coefficient(sample) == Approx(4.0).epsilon(1e-12));
  CHECK_THROWS_AS(pseudoscalar_coefficient(EmField::real(Vec3d(1, 0, 0), Vec3d(0, 1, 0))), DomainError);
  const auto c = photon_photon_comparison(m, sample);
  CHECK(c.coefficient_photon == 7.0);
  const double alpha = 1.0 / 137.035999084;
  CHECK(c.b == Approx(2.0 / 45.0 * alpha * alpha).epsilon(1e-12));
  CHECK(c.prefactor_self == Approx(pi * pi / 4 / (64 * pi * pi)));
}

TEST_CASE("quantum kinetic coefficients") {
  const auto q = quantum_kinetic_coefficients(kNat, canonical_alpha_set());
  CHECK(q.du_dt_coefficient == Approx(1.0).epsilon(1e-12));
  CHECK(q.div_s_coefficient == Approx(2.0).epsilon(1e-12));
}

TEST_CASE("self-action constant") {
  auto m = derive_parameters(kNat, 1.0);
  CHECK(self_action_constant(m, 2.0 / pi) == Approx(pi / 32.0));
  const double base = self_action_constant(m, 0.5);
  m.r_s *= 2.0;
  CHECK(self_action_constant(m, 0.5) == Approx(8.0 * base));
  m.zeta = 1e-9;
  CHECK(self_action_constant(m, 0.5) < 1e-15);
  CHECK_THROWS_AS(self_action_constant(m, 0.0), DomainError);
}

TEST_CASE("centripetal check") {
  const auto r = centripetal_check(2.0, 0.5);
  CHECK(r.curl_v.x() == Approx(0.0));
  CHECK(r.curl_v.z() == Approx(4.0).epsilon(1e-12));
  CHECK(r.a_r.norm() == Approx(2.0).epsilon(1e-12));
  CHECK(r.expected_a == Approx(2.0));
  const auto z = centripetal_check(0.0, 0.5);
  CHECK(z.curl_v.norm() == 0.0);
  CHECK(z.a_r.norm() == 0.0);
  auto rng = SplitMix64(13);
  for (int i = 0; i < 100; ++i) {
    const auto x = centripetal_check(rng.uniform(0.1, 5), rng.uniform(0.1, 5));
    CHECK(x.a_r.norm() / x.expected_a == Approx(1.0).epsilon(1e-9));
  }
  CHECK_THROWS_AS(centripetal_check(1.0, 0.0), DomainError);
}

TEST_CASE("matter motion") {
  const Vec3d at(0.5, 0.0, 0.0);
  const auto still = uniform_rotation(0.0, 0.0, 1.0);
  CHECK(matter_motion_residual(still, at).norm() == 0.0);
  const auto rot = uniform_rotation(1.0, 2.0, 0.3);
  const Vec3d r = matter_motion_residual(rot, at, 1e-3);
  CHECK(r.x() == Approx(-4.0).epsilon(1e-10));
  CHECK(std::abs(r.y()) <= 1e-12);
  CHECK((lamb_gromeka_residual(rot, at, 1e-3) - r).norm() <= 1e-12);

  const auto m = with_e0(derive_parameters(kNat, 1.0), 1.0);
  const auto ring = ring_wave_ansatz(m);
  const Vec3d rr = matter_motion_residual(ring, at, 1e-4);
  CHECK(rr.x() == Approx(-1.0 / (4 * pi) / 0.5).epsilon(1e-6));
  CHECK_THROWS_AS(ring_wave_ansatz(derive_parameters(kNat, 1.0)), DomainError);
}
