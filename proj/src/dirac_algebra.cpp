#include "dirac_maxwell/dirac_algebra.hpp"

#include "dirac_maxwell/errors.hpp"

#include <cmath>
#include <limits>
#include <sstream>

namespace dm {

// ---------------------------------------------------------------- layouts

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::x: return "x";
    case Axis::y: return "y";
    case Axis::z: return "z";
  }
  return "?";
}

std::string_view to_string(Orientation o) {
  return o == Orientation::negative ? "negative" : "positive";
}

Axis FieldLayout::axis() const {
  std::array<bool, 3> used{};
  for (const auto& s : slots) used[static_cast<std::size_t>(s.component)] = true;
  for (int c = 0; c < 3; ++c)
    if (!used[static_cast<std::size_t>(c)]) return static_cast<Axis>(c);
  return Axis::y;
}

bool FieldLayout::is_valid() const {
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      const auto& a = slots[static_cast<std::size_t>(i)];
      const auto& b = slots[static_cast<std::size_t>(j)];
      if (a.kind == b.kind && a.component == b.component) return false;
    }
  }
  int electric = 0;
  std::array<int, 3> used{};
  for (const auto& s : slots) {
    if (s.sign != 1 && s.sign != -1) return false;
    if (s.kind == FieldKind::electric) ++electric;
    ++used[static_cast<std::size_t>(s.component)];
  }
  // Two transverse components of each field, one axis left free.
  int free_axes = 0;
  for (int u : used) free_axes += (u == 0);
  return electric == 2 && free_axes == 1;
}

std::string FieldLayout::slot_label(int k) const {
  const auto& s = slots[static_cast<std::size_t>(k)];
  std::string out = s.sign < 0 ? "-" : "";
  out += s.kind == FieldKind::electric ? "E_" : "iH_";
  out += to_string(s.component);
  return out;
}

namespace {

FieldLayout make_layout(std::string name, Axis e1, Axis e2) {
  FieldLayout l;
  l.name = std::move(name);
  l.slots = {FieldSlot{FieldKind::electric, e1, 1}, FieldSlot{FieldKind::electric, e2, 1},
             FieldSlot{FieldKind::magnetic, e1, 1}, FieldSlot{FieldKind::magnetic, e2, 1}};
  return l;
}

}  // namespace

FieldLayout layout_for(Axis axis, Orientation orientation) {
  // Counterclockwise index transposition for the negative direction,
  // clockwise for the positive one.
  const bool neg = orientation == Orientation::negative;
  switch (axis) {
    case Axis::x: return neg ? make_layout("x-", Axis::z, Axis::y) : make_layout("x+", Axis::y, Axis::z);
    case Axis::y: return neg ? make_layout("y-", Axis::x, Axis::z) : make_layout("y+", Axis::z, Axis::x);
    case Axis::z: return neg ? make_layout("z-", Axis::y, Axis::x) : make_layout("z+", Axis::x, Axis::y);
  }
  throw DomainError("unknown axis");
}

FieldLayout electron_y_layout() {
  auto l = layout_for(Axis::y, Orientation::negative);
  l.name = "electron-y";
  return l;
}

FieldLayout positron_y_layout() {
  auto l = electron_y_layout();
  l.name = "positron-y";
  l.slots[1].sign = -1;
  l.slots[3].sign = -1;
  l.charge_conjugated = true;
  return l;
}

// ---------------------------------------------------------------- matrices

namespace {

Matrix4cd from_rows(std::initializer_list<std::initializer_list<Complexd>> rows) {
  Matrix4cd m = Matrix4cd::Zero();
  int r = 0;
  for (const auto& row : rows) {
    int c = 0;
    for (const auto& v : row) m(r, c++) = v;
    ++r;
  }
  return m;
}

const Complexd i{0.0, 1.0};

}  // namespace

AlphaSet canonical_alpha_set() {
  AlphaSet s;
  s.label = "canonical";
  s[0] = Matrix4cd::Identity();
  s[1] = from_rows({{0, 0, 0, 1},  //
                    {0, 0, 1, 0},
                    {0, 1, 0, 0},
                    {1, 0, 0, 0}});
  s[2] = from_rows({{0, 0, 0, -i},  //
                    {0, 0, i, 0},
                    {0, -i, 0, 0},
                    {i, 0, 0, 0}});
  s[3] = from_rows({{0, 0, 1, 0},  //
                    {0, 0, 0, -1},
                    {1, 0, 0, 0},
                    {0, -1, 0, 0}});
  s[4] = from_rows({{1, 0, 0, 0},  //
                    {0, 1, 0, 0},
                    {0, 0, -1, 0},
                    {0, 0, 0, -1}});
  s[5] = s[1] * s[2] * s[3] * s[4];
  return s;
}

AlphaSet alpha_prime_set() {
  AlphaSet s;
  s.label = "primed";
  s[0] = Matrix4cd::Identity();
  s[1] = from_rows({{0, 1, 0, 0},  //
                    {1, 0, 0, 0},
                    {0, 0, 0, 1},
                    {0, 0, 1, 0}});
  s[2] = from_rows({{0, -i, 0, 0},  //
                    {i, 0, 0, 0},
                    {0, 0, 0, i},
                    {0, 0, i, 0}});
  s[3] = from_rows({{1, 0, 0, 0},  //
                    {0, -1, 0, 0},
                    {0, 0, 1, 0},
                    {0, 0, 0, -1}});
  s[4] = from_rows({{0, 0, 0, -1},  //
                    {0, 0, 1, 0},
                    {0, 1, 0, 0},
                    {-1, 0, 0, 0}});
  s[5] = from_rows({{0, 0, 0, -i},  //
                    {0, 0, i, 0},
                    {0, -i, 0, 0},
                    {i, 0, 0, 0}});
  return s;
}

Matrix4cd s_matrix() {
  const double h = 1.0 / std::sqrt(2.0);
  return from_rows({{h, 0, 0, -h},  //
                    {0, h, h, 0},
                    {h, 0, 0, h},
                    {0, h, -h, 0}});
}

double anticommutation_deviation(const AlphaSet& set) {
  double worst = 0.0;
  for (int mu = 1; mu <= 4; ++mu) {
    for (int nu = 1; nu <= 4; ++nu) {
      Matrix4cd expected = Matrix4cd::Zero();
      if (mu == nu) expected = 2.0 * Matrix4cd::Identity();
      worst = std::max(worst, max_abs((anticommutator(set[mu], set[nu]) - expected).eval()));
    }
  }
  return worst;
}

double pseudoscalar_deviation(const AlphaSet& set) {
  double worst = max_abs((set[5] * set[5] - Matrix4cd::Identity()).eval());
  for (int mu = 1; mu <= 4; ++mu)
    worst = std::max(worst, max_abs(anticommutator(set[5], set[mu])));
  return worst;
}

double hermiticity_deviation(const Matrix4cd& m) { return max_abs((m - m.adjoint()).eval()); }

double hermiticity_deviation(const AlphaSet& set) {
  double worst = 0.0;
  for (const auto& m : set.a) worst = std::max(worst, hermiticity_deviation(m));
  return worst;
}

CheckReport verify_anticommutation(const AlphaSet& set, Tolerance tol) {
  return make_check("anticommutation." + set.label, "{a_mu, a_nu} = 2 delta_mu_nu I, mu,nu = 1..4",
                    0.0, anticommutation_deviation(set), tol,
                    "computed = max entrywise deviation");
}

int phase_class_of(const std::vector<Matrix4cd>& classes, const Matrix4cd& m, double match_tol) {
  static const std::array<Complexd, 4> phases{Complexd(1, 0), Complexd(-1, 0), Complexd(0, 1),
                                              Complexd(0, -1)};
  for (std::size_t k = 0; k < classes.size(); ++k) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& ph : phases) best = std::min(best, max_abs((m - ph * classes[k]).eval()));
    if (best <= match_tol) return static_cast<int>(k);
  }
  return -1;
}

std::vector<Matrix4cd> generate_group(const AlphaSet& set, double match_tol) {
  constexpr std::size_t kGroupOrder = 16;
  constexpr int kRounds = 5;
  std::vector<Matrix4cd> classes{Matrix4cd::Identity()};
  for (int k = 1; k <= 5; ++k)
    if (phase_class_of(classes, set[k], match_tol) < 0) classes.push_back(set[k]);

  for (int round = 0; round < kRounds; ++round) {
    const std::size_t n = classes.size();
    bool grew = false;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const Matrix4cd p = classes[i] * classes[j];
        if (phase_class_of(classes, p, match_tol) < 0) {
          classes.push_back(p);
          grew = true;
          if (classes.size() > kGroupOrder)
            throw NonClosure("more than 16 phase classes after round " + std::to_string(round + 1));
        }
      }
    }
    if (!grew) return classes;
  }
  throw NonClosure("closure not reached within 5 product rounds");
}

// ---------------------------------------------------------------- triads

std::string AxisTriad::name() const {
  return std::string(to_string(axis)) + (orientation == Orientation::negative ? "-" : "+");
}

AxisTriad axis_triad(Axis axis, Orientation orientation) {
  AxisTriad t;
  t.axis = axis;
  t.orientation = orientation;
  switch (axis) {
    case Axis::x: t.matrix_for = {2, 3, 1}; break;  // (a_2x, a_3y, a_1z)
    case Axis::y: t.matrix_for = {1, 2, 3}; break;  // (a_1x, a_2y, a_3z)
    case Axis::z: t.matrix_for = {3, 1, 2}; break;  // (a_3x, a_1y, a_2z)
  }
  t.layout = layout_for(axis, orientation);
  return t;
}

std::vector<AxisTriad> axis_triads() {
  std::vector<AxisTriad> out;
  for (auto o : {Orientation::negative, Orientation::positive})
    for (auto a : {Axis::x, Axis::y, Axis::z}) out.push_back(axis_triad(a, o));
  return out;
}

// ---------------------------------------------------------------- transforms

std::string_view to_string(TransformMode m) {
  return m == TransformMode::two_sided ? "two_sided" : "similarity";
}

AlphaSet canonical_transform(const Matrix4cd& s, const AlphaSet& set, TransformMode mode,
                             double unitary_tol) {
  if (!is_unitary(s, unitary_tol)) {
    std::ostringstream msg;
    msg << "unitarity defect " << unitarity_defect(s) << " exceeds " << unitary_tol;
    throw NotUnitary(msg.str());
  }
  AlphaSet out;
  out.label = set.label + "/" + std::string(to_string(mode));
  const Matrix4cd left = mode == TransformMode::two_sided ? s : Matrix4cd(s.adjoint());
  for (int k = 0; k < 6; ++k) out[k] = left * set[k] * s;
  return out;
}

std::array<double, 5> entrywise_difference(const AlphaSet& lhs, const AlphaSet& rhs) {
  std::array<double, 5> d{};
  for (int k = 1; k <= 5; ++k) d[static_cast<std::size_t>(k - 1)] = max_abs((lhs[k] - rhs[k]).eval());
  return d;
}

}  // namespace dm
