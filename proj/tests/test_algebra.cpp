#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/errors.hpp"

#include <cmath>

using namespace dm;

TEST_CASE("linalg helpers") {
  Matrix4cd a = Matrix4cd::Zero();
  a(0, 1) = {3.0, -4.0};
  CHECK(max_abs(a) == 5.0);
  CHECK(max_abs(Matrix4cd::Zero().eval()) == 0.0);
  CHECK(unitarity_defect(Matrix4cd::Identity().eval()) == 0.0);
  CHECK_FALSE(is_unitary(Matrix4cd(2.0 * Matrix4cd::Identity()), 1e-12));

  Bispinord psi;
  psi << 1.0, kI, 0.0, 2.0;
  CHECK(sandwich(psi, Matrix4cd::Identity().eval()) == Complexd(6.0, 0.0));

  Vec3cd u(1.0, 0.0, 0.0);
  Vec3cd v(0.0, 1.0, 0.0);
  CHECK(cross(u, v)(2) == Complexd(1.0));
  CHECK(bilinear_dot(Vec3cd(kI, 0.0, 0.0), Vec3cd(kI, 0.0, 0.0)) == Complexd(-1.0));

  Tolerance tol{1e-3, 0.0};
  CHECK(tol.accepts(1e-4, 1.0));
  CHECK_FALSE(tol.accepts(1e-2, 1.0));
  CHECK(relative_error(0.0, 0.0) == 0.0);
}

TEST_CASE("canonical set obeys the algebra exactly") {
  const auto set = canonical_alpha_set();
  CHECK(anticommutation_deviation(set) == 0.0);
  CHECK(pseudoscalar_deviation(set) == 0.0);
  CHECK(hermiticity_deviation(set) == 0.0);
  CHECK(set[0] == Matrix4cd::Identity());
  CHECK(verify_anticommutation(set).verdict == Verdict::pass);
}

TEST_CASE("displayed matrix entries") {
  const auto set = canonical_alpha_set();
  // a2 row 1 column 4 is -i.
  CHECK(set[2](0, 3) == Complexd(0.0, -1.0));
  CHECK(set[2](3, 0) == Complexd(0.0, 1.0));
  CHECK(set[4](0, 0) == Complexd(1.0));
  CHECK(set[4](2, 2) == Complexd(-1.0));
}

TEST_CASE("sixteen phase classes") {
  const auto set = canonical_alpha_set();
  const auto group = generate_group(set);
  CHECK(group.size() == 16);
  CHECK(phase_class_of(group, Matrix4cd::Identity()) >= 0);
  CHECK(phase_class_of(group, Matrix4cd(kI * set[1] * set[2])) >= 0);
  Matrix4cd stranger = Matrix4cd::Zero();
  stranger(0, 0) = 1.0;
  CHECK(phase_class_of(group, stranger) == -1);
}

TEST_CASE("primed set as displayed") {
  const auto p = alpha_prime_set();
  CHECK(anticommutation_deviation(p) == doctest::Approx(4.0));
  CHECK(pseudoscalar_deviation(p) == doctest::Approx(2.0));
  CHECK(hermiticity_deviation(p[2]) == doctest::Approx(2.0));
  for (int k : {0, 1, 3, 4, 5}) CHECK(hermiticity_deviation(p[k]) == 0.0);
}

TEST_CASE("change of representation") {
  const auto set = canonical_alpha_set();
  const Matrix4cd s = s_matrix();
  CHECK(unitarity_defect(s) <= 1e-15);

  const auto sim = canonical_transform(s, set, TransformMode::similarity);
  const auto d = entrywise_difference(sim, alpha_prime_set());
  CHECK(d[0] <= 1e-12);
  CHECK(d[1] == doctest::Approx(2.0));
  CHECK(d[2] <= 1e-12);
  CHECK(d[3] <= 1e-12);
  CHECK(d[4] <= 1e-12);
  CHECK(anticommutation_deviation(sim) <= 1e-14);

  const auto two = canonical_transform(s, set, TransformMode::two_sided);
  for (double x : entrywise_difference(two, alpha_prime_set())) CHECK(x == doctest::Approx(1.5));

  CHECK_THROWS_AS(canonical_transform(Matrix4cd(2.0 * Matrix4cd::Identity()), set, TransformMode::similarity),
                  NotUnitary);
  CHECK(to_string(TransformMode::similarity) == "similarity");
}

TEST_CASE("axis triads and layouts") {
  const auto triads = axis_triads();
  REQUIRE(triads.size() == 6);
  for (const auto& t : triads) {
    CHECK(t.working_matrix() == 2);
    CHECK(t.layout.is_valid());
    CHECK(t.layout.axis() == t.axis);
  }
  CHECK(triads[0].name() == "x-");
  CHECK(triads[4].name() == "y+");
  CHECK(triads[1].poynting_sign() == -1);
  CHECK(triads[4].poynting_sign() == 1);

  const auto e = electron_y_layout();
  CHECK(e.slot_label(0) == "E_x");
  CHECK(e.slot_label(2) == "iH_x");
  CHECK(e.axis() == Axis::y);
  const auto p = positron_y_layout();
  CHECK(p.charge_conjugated);
  CHECK(p.slot_label(1) == "-E_z");
  CHECK(p.slot_label(3) == "-iH_z");
  CHECK(e.slots[2].factor() == kI);
}
