// Acceptance criteria 1-8. One PASS/FAIL line per criterion; exit status is
// nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "naive.hpp"
#include "plab/theorems.hpp"

using namespace plab;

namespace {

ModuleOptions wide() {
  ModuleOptions o;
  o.module_cap = 2048;
  return o;
}

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

ModulePtr zn_module(std::uint32_t n, ScalarMode mode) {
  return build_module(ModuleSpec::ring_as_module(RingSpec::zn(n), mode));
}

Submodule gen(const FiniteModule& m, std::vector<std::vector<Elem>> tuples) {
  std::vector<Elem> g;
  for (const auto& t : tuples) g.push_back(resolve_generator(m, t));
  return submodule_generated(m, g);
}

bool is_witness(const Verdict& v, std::vector<Elem> scalars, Elem element) {
  return !v.holds && v.witness && v.witness->scalars == scalars && v.witness->element == element;
}

Outcome ac1() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  {
    const auto m = zn_module(30, ScalarMode::integer_image);
    const auto r = classify_submodule(zero_submodule(*m));
    o.require(r[PredicateId::wc1a].holds, "(a) Z30 WC1A");
    o.require(is_witness(r[PredicateId::c1a], {2, 3, 5}, 1), "(a) Z30 C1A witness (2,3,5,1)");
  }
  {
    const auto m = zn_module(36, ScalarMode::integer_image);
    const auto c = colon_ring(zero_submodule(*m), std::vector<Elem>{2});
    o.require(c.integer_generator == std::uint64_t{18}, "(b) colon generator 18");
    o.require(!z_ideal_w1a(18), "(b) z_ideal_w1a(18) false");
    const auto w = z_ideal_w1a_witness(18, 10000);
    o.require(w && *w == std::array<std::uint64_t, 3>{2, 3, 3}, "(b) witness (2,3,3)");
  }
  {
    const auto m = zn_module(9, ScalarMode::integer_image);
    const auto n = zero_submodule(*m);
    o.require(check_predicate(n, PredicateId::weakly_classical_prime).holds, "(c) Z9 WCP");
    o.require(is_witness(check_predicate(n, PredicateId::classical_prime), {3, 3}, 1), "(c) Z9 CP witness (3,3,1)");
  }
  {
    const auto m = build_module(ModuleSpec::free(RingSpec::zn(8), 3, ScalarMode::integer_image));
    const auto l = gen(*m, {{1, 0, 0}});
    const auto v = check_predicate(l, PredicateId::wc1a);
    o.require(!v.holds && replay_witness(l, PredicateId::wc1a, *v.witness), "(d) Z8^3 N=L not WC1A");
    o.require(!naive::c1a(*m, l.members, true), "(d) naive oracle agrees");
    const auto q = quotient_module(m, l);
    o.require(check_predicate(zero_submodule(*q.module), PredicateId::wc1a).holds, "(d) N/L=(0) WC1A");
  }
  {
    const auto m = build_module(ModuleSpec::free(RingSpec::zn(36), 2, ScalarMode::integer_image), wide());
    const auto n = gen(*m, {{2, 0}, {0, 3}});
    o.require(is_witness(check_predicate(n, PredicateId::wc1a), {2, 2, 3}, m->compose(std::vector<Elem>{1, 1})),
              "(e) Z36^2 witness (2,2,3,(1,1))");
    const auto z = zn_module(36, ScalarMode::integer_image);
    o.require(naive::c1a(*z, gen(*z, {{2}}).members, true) && naive::c1a(*z, gen(*z, {{3}}).members, true),
              "(e) factors WC1A by brute force");
  }
  {
    const auto r = build_ring(RingSpec::trunc_poly(2, 3));
    const auto u = is_u_ring(*r);
    bool covered = u.witness.has_value() && u.covering_family.size() >= 2;
    if (covered) {
      ElementSet un(r->size());
      for (const auto& f : u.covering_family) {
        covered = covered && !u.witness->members.is_subset_of(f.members);
        un |= f.members;
      }
      covered = covered && u.witness->members.is_subset_of(un);
    }
    o.require(!u.holds && covered, "(f) trunc_poly(2,3) not a u-ring with a covering witness");
  }
  const double s = seconds_since(t0);
  o.require(s < 60, "runtime " + std::to_string(s) + "s");
  if (o.pass) o.detail = "worked examples reproduced in " + std::to_string(s) + "s";
  return o;
}

Outcome ac2(const Workspace& ws) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = run_check("T14", ws);
  const double s = seconds_since(t0);
  o.require(r.status == CheckStatus::verified, std::to_string(r.counterexample_count) + " disagreements");
  o.require(r.instances_checked >= 10000, "only " + std::to_string(r.instances_checked) + " evaluations");
  o.require(s < 300, "runtime " + std::to_string(s) + "s");
  if (o.pass) o.detail = std::to_string(r.instances_checked) + " condition evaluations agree";
  return o;
}

Outcome ac3(const Workspace& ws) {
  Outcome o;
  std::size_t instances = 0;
  for (std::size_t i = 0; i < ws.modules().size(); ++i) {
    const auto& e = ws.modules()[i];
    const auto prof = module_profile(*e.module);
    for (const auto& n : ws.proper_instances(i)) {
      const auto v = implication_violations(SubmoduleAnalyzer(e.ctx, n).classify(), prof);
      ++instances;
      for (const auto& msg : v) o.require(false, e.id + " " + ws.submodule_name(i, n) + ": " + msg);
    }
  }
  if (o.pass) o.detail = "implications hold on " + std::to_string(instances) + " submodules";
  return o;
}

Outcome ac4(const SuiteReport& r) {
  Outcome o;
  for (const auto& c : r.checks) {
    if (c.id == "T18" || c.id == "T24") {
      o.require(c.counterexample_count == 0, c.id + " asserted direction has " +
                                                 std::to_string(c.counterexample_count) + " counterexamples");
      o.require(c.instances_checked > 0, c.id + " checked nothing");
      continue;
    }
    o.require(c.status == CheckStatus::verified, c.id + " " + to_string(c.status) + " (" +
                                                     std::to_string(c.counterexample_count) + " counterexamples" +
                                                     (c.counterexamples.empty() ? "" : ", first " +
                                                      c.counterexamples.front().instance + ": " +
                                                      c.counterexamples.front().detail) + ")");
    o.require(c.qualifying >= 3, c.id + " has " + std::to_string(c.qualifying) + " qualifying instances");
  }
  o.require(r.checks.size() == 27, "suite ran " + std::to_string(r.checks.size()) + " checks");
  if (o.pass) {
    const auto* t18 = r.find("T18");
    const auto* t24 = r.find("T24");
    o.detail = "25 exhaustive checks verified; logged um-dependent findings T18=" +
               std::to_string(t18->finding_count) + " T24=" + std::to_string(t24->finding_count);
  }
  return o;
}

bool all_proper_wc1a(const FiniteModule& m, bool use_naive) {
  const auto ctx = std::make_shared<const ModuleContext>(
      std::shared_ptr<const FiniteModule>(std::shared_ptr<const FiniteModule>(), &m));
  for (const auto& n : m.lattice()) {
    if (!n.is_proper()) continue;
    const bool w = use_naive ? naive::c1a(m, n.members, true) : SubmoduleAnalyzer(ctx, n).check(PredicateId::wc1a).holds;
    if (!w) return false;
  }
  return true;
}

bool cube_kills(const FiniteModule& m) {
  const Ideal m3 = ideal_power(m.ring().maximal_ideals().front(), 3);
  return ideal_times_submodule(m3, whole_module(m)).is_zero();
}

Outcome ac5() {
  Outcome o;
  const std::vector<ModuleSpec> z8 = {
      ModuleSpec::ring_as_module(RingSpec::zn(8), ScalarMode::ring),
      ModuleSpec::free(RingSpec::zn(8), 2, ScalarMode::ring),
      ModuleSpec::cyclic_quotient(RingSpec::zn(8), {4}, ScalarMode::ring),
      ModuleSpec::cyclic_quotient(RingSpec::zn(8), {2}, ScalarMode::ring),
  };
  for (const auto& s : z8) {
    const auto m = build_module(s);
    o.require(all_proper_wc1a(*m, false) && all_proper_wc1a(*m, true), s.describe() + " has a non-WC1A submodule");
    o.require(cube_kills(*m), s.describe() + ": m^3 M != 0");
  }
  const auto z16 = zn_module(16, ScalarMode::ring);
  o.require(!all_proper_wc1a(*z16, false) && !cube_kills(*z16), "Z16: both sides should be false");
  const auto n = gen(*z16, {{8}});
  const auto v = check_predicate(n, PredicateId::wc1a);
  o.require(is_witness(v, {2, 2, 2}, 1) && replay_witness(n, PredicateId::wc1a, *v.witness),
            "Z16: 8Z16 witness (2,2,2,1)");
  if (o.pass) o.detail = "Z8 family all WC1A with m^3M=0; Z16 fails both with 8Z16 and (2,2,2,1)";
  return o;
}

std::vector<RingSpec> small_rings() {
  std::vector<RingSpec> out;
  for (std::uint32_t n = 2; n <= 16; ++n) out.push_back(RingSpec::zn(n));
  for (std::uint32_t a = 2; a <= 8; ++a)
    for (std::uint32_t b = a; a * b <= 16; ++b) out.push_back(RingSpec::product({RingSpec::zn(a), RingSpec::zn(b)}));
  for (auto [p, v] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {2u, 3u}}) out.push_back(RingSpec::trunc_poly(p, v));
  return out;
}

Outcome ac6() {
  Outcome o;
  std::size_t instances = 0, disagreements = 0;
  std::string first;
  for (const auto& rs : small_rings()) {
    const auto ring = build_ring(rs);
    std::vector<ModuleSpec> specs;
    std::vector<ScalarMode> modes{ScalarMode::ring};
    if (rs.kind == RingKind::zn) modes.push_back(ScalarMode::integer_image);
    for (auto mode : modes) {
      specs.push_back(ModuleSpec::ring_as_module(rs, mode));
      if (ring->size() * ring->size() <= 64) specs.push_back(ModuleSpec::free(rs, 2, mode));
      for (const auto& i : ring->ideals())
        if (i.is_proper() && !i.is_zero()) specs.push_back(ModuleSpec::cyclic_quotient(rs, i.generators, mode));
    }
    for (const auto& s : specs) {
      const auto m = build_module(s);
      if (m->size() > 64) continue;
      const auto ctx = std::make_shared<const ModuleContext>(m);
      for (const auto& n : m->lattice()) {
        if (!n.is_proper()) continue;
        ++instances;
        SubmoduleAnalyzer a(ctx, n);
        const bool ok = a.check(PredicateId::wc1a).holds == naive::c1a(*m, n.members, true) &&
                        a.check(PredicateId::c1a).holds == naive::c1a(*m, n.members, false);
        if (!ok && disagreements++ == 0) first = s.describe() + " |N|=" + std::to_string(n.size());
      }
    }
  }
  o.require(disagreements == 0, std::to_string(disagreements) + " disagreements, first " + first);
  o.require(instances >= 500, "only " + std::to_string(instances) + " instances");
  if (o.pass) o.detail = "optimized and naive WC1A/C1A agree on " + std::to_string(instances) + " submodules";
  return o;
}

Outcome ac7() {
  Outcome o;
  SuiteOptions one, eight;
  eight.jobs = 8;
  const auto a = dump_json(suite_to_json(run_suite(Workspace(default_catalog()), one), false));
  const auto b = dump_json(suite_to_json(run_suite(Workspace(default_catalog()), one), false));
  const auto c = dump_json(suite_to_json(run_suite(Workspace(default_catalog()), eight), false));
  o.require(a == b, "two serial runs differ");
  o.require(a == c, "--jobs 8 differs from --jobs 1");
  if (o.pass) o.detail = "reports byte-identical (" + std::to_string(a.size()) + " bytes, sha256 " +
                         sha256_hex(a).substr(0, 16) + ")";
  return o;
}

Outcome ac8() {
  Outcome o;
  o.require(every_proper_ideal_w1a(*build_ring(RingSpec::zn(8))).holds, "Z8 should hold");
  o.require(every_proper_ideal_w1a(*build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)}))).holds,
            "Z2xZ3 should hold");
  const auto v = every_proper_ideal_w1a(*build_ring(RingSpec::zn(12)));
  o.require(!v.holds && v.witness_ideal && v.witness_ideal->members.members() == std::vector<Elem>{0, 6} &&
                v.witness_triple == std::array<Elem, 3>{3, 3, 2},
            "Z12 should fail at 6Z12 with (3,3,2)");
  if (o.pass) o.detail = "Z8 true, Z2xZ3 true, Z12 false at 6Z12 with (3,3,2)";
  return o;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](const char* id, const std::function<Outcome()>& f) {
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << id << (o.pass ? " PASS " : " FAIL ") << o.detail << std::endl;
    failures += !o.pass;
  };

  const Workspace ws(default_catalog());
  report("AC1", ac1);
  report("AC2", [&] { return ac2(ws); });
  report("AC3", [&] { return ac3(ws); });
  report("AC4", [&] { return ac4(run_suite(ws)); });
  report("AC5", ac5);
  report("AC6", ac6);
  report("AC7", ac7);
  report("AC8", ac8);
  return failures == 0 ? 0 : 1;
}
