// Acceptance suite: one line per criterion, exit status 0 iff all pass.

#include "dirac_maxwell/dirac_algebra.hpp"
#include "dirac_maxwell/dynamics.hpp"
#include "dirac_maxwell/serialize.hpp"
#include "dirac_maxwell/suites.hpp"
#include "dirac_maxwell/torus_model.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

using namespace dm;

namespace {

struct Outcome {
  bool ok = true;
  std::string why;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      why = what;
    }
  }
};

bool starts_with(const std::string& s, const std::string& p) { return s.compare(0, p.size(), p) == 0; }

class Results {
 public:
  explicit Results(UnitMode mode) {
    cfg_.units = mode;
    for (const auto& r : run_suites(all_suites(), cfg_))
      for (const auto& c : r.checks) checks_.push_back(c);
  }

  // Every check under prefix must not fail; at least min_count must exist.
  void all_pass(Outcome& o, const std::string& prefix, std::size_t min_count = 1) const {
    std::size_t n = 0;
    for (const auto& c : checks_) {
      if (!starts_with(c.id, prefix)) continue;
      ++n;
      o.require(c.verdict != Verdict::fail, name() + " " + c.id + " failed");
    }
    o.require(n >= min_count, name() + " " + prefix + ": " + std::to_string(n) + " checks, wanted " +
                                  std::to_string(min_count));
  }

  void is(Outcome& o, const std::string& id, Verdict v) const {
    for (const auto& c : checks_)
      if (c.id == id) {
        o.require(c.verdict == v, name() + " " + id + " is " + std::string(to_string(c.verdict)));
        return;
      }
    o.require(false, name() + " " + id + " missing");
  }

  std::string name() const { return cfg_.units == UnitMode::natural ? "[natural]" : "[cgs]"; }

 private:
  RunConfig cfg_;
  std::vector<CheckReport> checks_;
};

}  // namespace

int main() {
  const Results nat(UnitMode::natural);
  const Results cgs(UnitMode::gaussian_cgs);
  const std::vector<const Results*> both{&nat, &cgs};

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria;

  criteria.emplace_back("anticommutation exact for the canonical set", [&] {
    Outcome o;
    const auto set = canonical_alpha_set();
    o.require(anticommutation_deviation(set) == 0.0, "a1..a4 anticommutator deviation nonzero");
    o.require(pseudoscalar_deviation(set) == 0.0, "a5 deviation nonzero");
    nat.is(o, "algebra.anticommutation", Verdict::pass);
    nat.is(o, "algebra.pseudoscalar", Verdict::pass);
    return o;
  });

  criteria.emplace_back("sixteen phase classes", [&] {
    Outcome o;
    const auto n = generate_group(canonical_alpha_set()).size();
    o.require(n == 16, "group has " + std::to_string(n) + " classes");
    nat.all_pass(o, "algebra.group.");
    return o;
  });

  criteria.emplace_back("bilinear dictionary on all six triads", [&] {
    Outcome o;
    for (const char* t : {"x-", "x+", "y-", "y+", "z-", "z+"})
      for (const char* k : {"a0", "a4", "a5", "working", "off_axis"})
        nat.all_pass(o, std::string("bilinear.") + t + "." + k);
    return o;
  });

  criteria.emplace_back("Fierz identities, field and quantum forms", [&] {
    Outcome o;
    nat.all_pass(o, "fierz.em.", 1000);
    nat.all_pass(o, "fierz.quantum");
    nat.all_pass(o, "fierz.quartic");
    nat.all_pass(o, "fierz.cross.");
    return o;
  });

  criteria.emplace_back("torus model numbers", [&] {
    Outcome o;
    o.require(std::abs(coupling_constant(1.0) - 0.637) <= 5e-4, "alpha_q(1) off");
    for (const auto* r : both) {
      r->all_pass(o, "torus.");
      r->all_pass(o, "torus.chain.", 100);
      r->is(o, "torus.spin.photon", Verdict::pass);
      r->is(o, "torus.spin.semi_photon", Verdict::pass);
      r->is(o, "torus.moment", Verdict::pass);
      r->is(o, "torus.charge.full_wave", Verdict::pass);
      r->is(o, "torus.mass.quadrature", Verdict::pass);
      r->is(o, "torus.charge.printed_integrand", Verdict::ledgered);
      r->is(o, "torus.mass.amplitude_exponent", Verdict::ledgered);
    }
    return o;
  });

  criteria.emplace_back("plane-wave solutions", [&] {
    Outcome o;
    for (const auto* r : both) {
      r->all_pass(o, "planewave.residual.", 4);
      r->is(o, "planewave.determinant.on_shell", Verdict::pass);
      r->all_pass(o, "planewave.sparsity.", 4);
      r->all_pass(o, "planewave.special.literal.", 4);
      r->is(o, "planewave.special.off_shell", Verdict::ledgered);
    }
    return o;
  });

  criteria.emplace_back("Dirac and Maxwell expansions agree on every axis", [&] {
    Outcome o;
    for (const auto* r : both)
      for (const char* t : {"x-", "x+", "y-", "y+", "z-", "z+"})
        for (const char* f : {"plus", "plus_adjoint", "minus", "minus_adjoint"}) {
          const std::string base = std::string("planewave.maxwell.") + t + "." + f;
          r->is(o, base + ".agreement", Verdict::pass);
          r->is(o, base + ".residual", Verdict::pass);
        }
    return o;
  });

  criteria.emplace_back("Lagrangian forms", [&] {
    Outcome o;
    for (const auto* r : both) {
      r->all_pass(o, "dynamics.lagrangian.linear.", 5);
      r->is(o, "dynamics.lagrangian.nonlinear.field_vs_invariant", Verdict::pass);
      r->is(o, "dynamics.lagrangian.nonlinear.quantum_vs_field", Verdict::pass);
    }
    const auto m = derive_parameters(UnitSystem::natural(), 1.0);
    const auto cmp = photon_photon_comparison(m, EmField::real(Vec3d(0.6, 0, 0.3), Vec3d(0.4, 0, 0.9)));
    o.require(std::abs(cmp.coefficient_self - 4.0) <= 1e-12, "self coefficient is not 4");
    o.require(cmp.coefficient_photon == 7.0, "photon coefficient is not 7");
    return o;
  });

  criteria.emplace_back("canonical transformation", [&] {
    Outcome o;
    const auto set = canonical_alpha_set();
    const Matrix4cd s = s_matrix();
    o.require(unitarity_defect(s) <= 1e-15, "S not unitary");
    int winners = 0;
    for (auto mode : {TransformMode::similarity, TransformMode::two_sided}) {
      const auto d = entrywise_difference(canonical_transform(s, set, mode), alpha_prime_set());
      // a2 is compared through the ledgered pairing, the rest entrywise.
      bool match = true;
      for (std::size_t k = 0; k < d.size(); ++k)
        if (k != 1 && d[k] > 1e-12) match = false;
      winners += match;
    }
    o.require(winners == 1, std::to_string(winners) + " modes match");
    nat.is(o, "algebra.transform.winning_mode", Verdict::pass);
    nat.is(o, "algebra.transform.similarity.a2_except_entry", Verdict::pass);
    nat.all_pass(o, "bilinear.similarity_invariance.", 6);
    return o;
  });

  criteria.emplace_back("deterministic reports under ten seconds", [&] {
    Outcome o;
    RunConfig cfg;
    const auto t0 = std::chrono::steady_clock::now();
    const auto a = render_report(run_suites(all_suites(), cfg), cfg, OutputFormat::json);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const auto b = render_report(run_suites(all_suites(), cfg), cfg, OutputFormat::json);
    o.require(a == b, "reports differ");
    o.require(secs < 10.0, "full run took " + std::to_string(secs) + " s");
    return o;
  });

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto o = criteria[i].second();
    std::printf("criterion %2zu %s: %s%s%s\n", i + 1, o.ok ? "PASS" : "FAIL", criteria[i].first.c_str(),
                o.ok ? "" : " -- ", o.why.c_str());
    failed += !o.ok;
  }
  return failed == 0 ? 0 : 1;
}
