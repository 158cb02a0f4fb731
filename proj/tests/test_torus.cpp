#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_maxwell/errors.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <cmath>
#include <numbers>

using namespace dm;
using doctest::Approx;

constexpr double pi = std::numbers::pi;

TEST_CASE("natural-unit geometry") {
  const auto m = derive_parameters(UnitSystem::natural(), 1.0);
  CHECK(m.r_s == 0.5);
  CHECK(m.r_t == 0.5);
  CHECK(m.omega_s == 2.0);
  CHECK(m.lambda_p == Approx(pi));
  CHECK(m.k == 2.0);
  CHECK(m.delta_tau == Approx(pi * pi / 4.0));
  CHECK(m.s_c == Approx(pi / 4.0));
  CHECK(m.ring_wavelength() == Approx(pi));
  CHECK_FALSE(m.has_e0);
}

TEST_CASE("CGS radius is half the reduced Compton wavelength") {
  const auto m = derive_parameters(UnitSystem::gaussian_cgs(), 1.0);
  // Reduced Compton wavelength 3.8615926796e-11 cm.
  CHECK(m.r_s == Approx(3.8615926796e-11 / 2.0).epsilon(1e-9));
  CHECK(m.omega_s * m.r_s == Approx(2.99792458e10).epsilon(1e-15));
}

TEST_CASE("zeta out of range") {
  CHECK_THROWS_AS(derive_parameters(UnitSystem::natural(), 0.0), DomainError);
  CHECK_THROWS_AS(derive_parameters(UnitSystem::natural(), 1.5), DomainError);
  CHECK_THROWS_AS(coupling_constant(-0.1), DomainError);
  UnitSystem bad = UnitSystem::natural();
  bad.c = 0.0;
  CHECK_THROWS_AS(derive_parameters(bad, 1.0), DomainError);
}

TEST_CASE("ring current") {
  const auto m = derive_parameters(UnitSystem::natural(), 1.0);
  const auto j0 = ring_current(m, 0.0, 0.0);
  CHECK(j0.j_n == 0.0);
  CHECK(j0.j_tau == 0.0);
  const auto j = ring_current(m, 1.0, 0.0);
  CHECK(j.j_tau == Approx(1.0 / (2.0 * pi)));
  CHECK(charge_density(m, 1.0) == Approx(1.0 / (2.0 * pi)));
  CHECK(ring_current(m, 0.0, 4.0 * pi).j_n == Approx(1.0));
  CHECK(j.complex().imag() == j.j_tau);
}

TEST_CASE("Simpson rule") {
  const auto r = simpson([](double x) { return x * x; }, 0.0, 3.0, 64);
  CHECK(r.value == Approx(9.0).epsilon(1e-14));
  CHECK_THROWS_AS(simpson([](double x) { return std::cos(1e4 * x); }, 0.0, 1.0, 64, 1e-12, 1), QuadratureNotConverged);
  CHECK_THROWS_AS(simpson([](double) { return 1.0; }, 0.0, 1.0, 1), DomainError);
}

TEST_CASE("charge quadratures, zeta = 1, E0 = 1") {
  const auto m = with_e0(derive_parameters(UnitSystem::natural(), 1.0), 1.0);
  CHECK(std::abs(integrate_charge(m, ChargeSpan::full_wave)) <= 1e-12 * m.e0 * m.s_c);
  CHECK(integrate_charge(m, ChargeSpan::half_wave) == Approx(0.125).epsilon(1e-10));
  CHECK(integrate_charge_printed(m) == Approx(0.5).epsilon(1e-10));
  CHECK(charge_stated(m) == Approx(0.25));
  CHECK(charge_closed_form(m) == Approx(0.25));
  CHECK_THROWS_AS(integrate_charge(derive_parameters(UnitSystem::natural(), 1.0), ChargeSpan::full_wave),
                  DomainError);
  CHECK_THROWS_AS(integrate_charge(m, ChargeSpan::full_wave, 32), DomainError);
}

TEST_CASE("full-wave charge vanishes for any amplitude and grid") {
  for (double e0 : {0.3, 1.0, 17.0})
    for (int n : {64, 100, 256}) {
      const auto m = with_e0(derive_parameters(UnitSystem::natural(), 0.7), e0);
      CHECK(std::abs(integrate_charge(m, ChargeSpan::full_wave, n)) <= 1e-12 * e0 * m.s_c);
    }
}

TEST_CASE("mass quadratures") {
  const auto m = with_e0(derive_parameters(UnitSystem::natural(), 1.0), 1.0);
  CHECK(mass_closed_form(m) == Approx(pi / 32.0).epsilon(1e-15));
  CHECK(std::abs(integrate_mass(m) / (pi / 32.0) - 1.0) <= 1e-10);
  CHECK(integrate_mass_density(m) == Approx(pi / 64.0).epsilon(1e-10));
  CHECK(integrate_mass(with_e0(m, 0.0)) == 0.0);
  CHECK(std::abs(integrate_mass(m, 64) - integrate_mass(m, 128)) <= 1e-10 * integrate_mass(m));
}

TEST_CASE("calibration") {
  for (auto u : {UnitSystem::natural(), UnitSystem::gaussian_cgs()}) {
    const auto m = derive_parameters(u, 0.6);
    const double e0 = calibrate_e0(m);
    CHECK(integrate_mass(with_e0(m, e0)) == Approx(u.m_e).epsilon(1e-12));
  }
  // Natural units, zeta = 1: E0^2 = 32 / pi.
  CHECK(calibrate_e0(derive_parameters(UnitSystem::natural(), 1.0)) == Approx(std::sqrt(32.0 / pi)).epsilon(1e-10));
}

TEST_CASE("coupling constant") {
  CHECK(coupling_constant(1.0) == Approx(0.63662).epsilon(1e-5));
  CHECK(std::abs(coupling_constant(1.0) - 0.637) <= 5e-4);
  CHECK(coupling_constant(0.8) / coupling_constant(0.4) == Approx(4.0));
  CHECK(coupling_constant(1e-8) < 1e-15);
  CHECK(zeta_for_coupling(1.0 / 137.036) == Approx(std::sqrt(pi / (2.0 * 137.036))).epsilon(1e-13));
  CHECK_THROWS_AS(zeta_for_coupling(0.9), DomainError);
  double prev = 0.0;
  for (int k = 1; k <= 20; ++k) {
    const double a = coupling_constant(k / 20.0);
    CHECK(a > prev);
    prev = a;
  }
}

TEST_CASE("consistency chain") {
  const auto m = with_e0(derive_parameters(UnitSystem::natural(), 1.0), 1.0);
  const auto r = consistency_chain(m, {0.0, 1e-12});
  CHECK(r.q == Approx(0.25));
  for (const auto& c : r.checks)
    if (c.id != "chain.coupling") CHECK_MESSAGE(c.verdict == Verdict::pass, c.id);
  CHECK(r.ratio_ro_rs == Approx(1.0 / 137.035999084));

  for (auto u : {UnitSystem::natural(), UnitSystem::gaussian_cgs()})
    for (int k = 1; k <= 20; ++k) {
      const auto mz = derive_parameters(u, k / 20.0);
      const auto rz = consistency_chain(with_e0(mz, calibrate_e0(mz)), {0.0, 1e-12});
      for (const auto& c : rz.checks) CHECK_MESSAGE(c.verdict == Verdict::pass, c.id);
      CHECK(std::abs(rz.ratio_ro_rs * 137.0 - 1.0) <= 5e-3);
    }
}

TEST_CASE("spin, moment, Zitterbewegung") {
  const auto mn = derive_parameters(UnitSystem::natural(), 1.0);
  const auto sn = spin_and_moment(mn, 1.0);
  CHECK(sn.sigma_p == 1.0);
  CHECK(sn.sigma_s == 0.5);

  const auto u = UnitSystem::gaussian_cgs();
  const auto m = derive_parameters(u, 1.0);
  const auto s = spin_and_moment(m, u.e);
  CHECK(std::abs(s.sigma_p / u.hbar - 1.0) <= 4 * 2.2e-16);
  CHECK(std::abs(s.sigma_s / (u.hbar / 2) - 1.0) <= 4 * 2.2e-16);
  CHECK(s.sigma_s == s.sigma_p / 2);
  CHECK(std::abs(s.mu_s / (0.5 * u.e * u.hbar / (2 * u.m_e)) - 1.0) <= 1e-12);
  CHECK(moment_closed_form(u, u.e) == Approx(0.5 * u.e * u.hbar / (2 * u.m_e)));

  const auto z = zitterbewegung(UnitSystem::natural());
  CHECK(z.omega_z == 2.0);
  CHECK(z.r_z == 0.5);
  CHECK(z.v == 1.0);
  const auto zc = zitterbewegung(u);
  CHECK(zc.omega_z * zc.r_z == Approx(u.c).epsilon(1e-15));
  CHECK(zc.omega_z == Approx(m.omega_s).epsilon(1e-15));
  CHECK(zc.r_z == m.r_s);
}
