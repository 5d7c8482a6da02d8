#include <gtest/gtest.h>

#include "naive.hpp"
#include "plab/classify.hpp"

using namespace plab;

namespace {

ModuleOptions wide() {
  ModuleOptions o;
  o.module_cap = 2048;
  return o;
}

ModulePtr zn_module(std::uint32_t n, ScalarMode mode) {
  return build_module(ModuleSpec::ring_as_module(RingSpec::zn(n), mode));
}

Submodule gen(const ModulePtr& m, std::vector<Elem> g) { return submodule_generated(*m, g); }

std::vector<ModulePtr> small_modules() {
  std::vector<ModulePtr> out;
  for (std::uint32_t n : {4u, 6u, 8u, 9u, 12u, 16u}) {
    out.push_back(zn_module(n, ScalarMode::ring));
    out.push_back(zn_module(n, ScalarMode::integer_image));
  }
  out.push_back(build_module(ModuleSpec::free(RingSpec::zn(4), 2, ScalarMode::ring)));
  out.push_back(build_module(ModuleSpec::free(RingSpec::zn(4), 2, ScalarMode::integer_image)));
  out.push_back(build_module(ModuleSpec::ring_as_module(RingSpec::trunc_poly(2, 2), ScalarMode::ring)));
  out.push_back(build_module(
      ModuleSpec::ring_as_module(RingSpec::product({RingSpec::zn(2), RingSpec::zn(4)}), ScalarMode::ring)));
  return out;
}

}  // namespace

TEST(Classify, Z30ZeroSubmodule) {
  const auto m = zn_module(30, ScalarMode::integer_image);
  const auto rep = classify_submodule(zero_submodule(*m));
  EXPECT_TRUE(rep[PredicateId::wc1a].holds);
  ASSERT_FALSE(rep[PredicateId::c1a].holds);
  const auto& w = *rep[PredicateId::c1a].witness;
  EXPECT_EQ(w.scalars, (std::vector<Elem>{2, 3, 5}));
  EXPECT_EQ(w.element, Elem{1});
  ASSERT_FALSE(rep.quadruple_zeros.empty());
  EXPECT_EQ(rep.quadruple_zeros.front(), (QuadrupleZero{2, 3, 5, 1}));
}

TEST(Classify, Z9WeaklyClassicalPrimeOnly) {
  const auto m = zn_module(9, ScalarMode::integer_image);
  const auto n = zero_submodule(*m);
  EXPECT_TRUE(check_predicate(n, PredicateId::weakly_classical_prime).holds);
  const auto cp = check_predicate(n, PredicateId::classical_prime);
  ASSERT_FALSE(cp.holds);
  EXPECT_EQ(cp.witness->scalars, (std::vector<Elem>{3, 3}));
  EXPECT_EQ(cp.witness->element, Elem{1});
}

TEST(Classify, Z36ColonSummary) {
  const auto m = zn_module(36, ScalarMode::integer_image);
  const auto rep = classify_submodule(zero_submodule(*m));
  const auto it = std::find_if(rep.colons.begin(), rep.colons.end(), [](const ColonSummary& c) { return c.element == 2; });
  ASSERT_NE(it, rep.colons.end());
  EXPECT_EQ(it->integer_generator, std::uint64_t{18});
  EXPECT_FALSE(it->weakly_one_abs_prime);
}

TEST(Classify, Z8CubedFamily) {
  const auto m = build_module(ModuleSpec::free(RingSpec::zn(8), 3, ScalarMode::integer_image));
  const auto l = gen(m, {m->compose(std::vector<Elem>{1, 0, 0})});
  const auto v = check_predicate(l, PredicateId::wc1a);
  ASSERT_FALSE(v.holds);
  EXPECT_TRUE(replay_witness(l, PredicateId::wc1a, *v.witness));
  EXPECT_FALSE(naive::c1a(*m, l.members, true));
  // The printed witness 2*2*2*(1,1,1) has abcm = 0, so it is no WC1A violation.
  SubmoduleAnalyzer a(std::make_shared<const ModuleContext>(m), l);
  const Elem ones = m->compose(std::vector<Elem>{1, 1, 1});
  EXPECT_EQ(m->act(8 % 8, ones), m->zero());
  EXPECT_TRUE(a.is_quadruple_zero(2, 2, 2, ones));
  const auto q = quotient_module(m, l);
  EXPECT_TRUE(check_predicate(zero_submodule(*q.module), PredicateId::wc1a).holds);
}

TEST(Classify, Z36SquaredProduct) {
  const auto m = build_module(ModuleSpec::free(RingSpec::zn(36), 2, ScalarMode::integer_image), wide());
  const auto n = gen(m, {m->compose(std::vector<Elem>{2, 0}), m->compose(std::vector<Elem>{0, 3})});
  const auto v = check_predicate(n, PredicateId::wc1a);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->scalars, (std::vector<Elem>{2, 2, 3}));
  EXPECT_EQ(v.witness->element, m->compose(std::vector<Elem>{1, 1}));
  const auto z = zn_module(36, ScalarMode::integer_image);
  EXPECT_TRUE(naive::c1a(*z, gen(z, {2}).members, true));
  EXPECT_TRUE(naive::c1a(*z, gen(z, {3}).members, true));
}

TEST(Classify, MatchesNaiveOracle) {
  std::size_t instances = 0;
  for (const auto& m : small_modules()) {
    const auto ctx = std::make_shared<const ModuleContext>(m);
    for (const auto& n : m->lattice()) {
      if (!n.is_proper()) continue;
      SubmoduleAnalyzer a(ctx, n);
      const std::string where = m->spec().describe() + " |N|=" + std::to_string(n.size());
      EXPECT_EQ(a.check(PredicateId::wc1a).holds, naive::c1a(*m, n.members, true)) << where;
      EXPECT_EQ(a.check(PredicateId::c1a).holds, naive::c1a(*m, n.members, false)) << where;
      EXPECT_EQ(a.check(PredicateId::weakly_classical_prime).holds, naive::cp(*m, n.members, true)) << where;
      EXPECT_EQ(a.check(PredicateId::classical_prime).holds, naive::cp(*m, n.members, false)) << where;
      EXPECT_EQ(a.module_colon(), naive::colon(*m, n.members)) << where;
      ++instances;
    }
  }
  EXPECT_GT(instances, 60u);
}

TEST(Classify, WitnessesReplay) {
  for (const auto& m : small_modules()) {
    for (const auto& n : m->lattice()) {
      if (!n.is_proper()) continue;
      const auto rep = classify_submodule(n);
      for (auto id : kAllPredicates) {
        const auto& v = rep[id];
        if (v.holds || id == PredicateId::nilpotent) continue;
        ASSERT_TRUE(v.witness) << to_string(id);
        EXPECT_TRUE(replay_witness(n, id, *v.witness)) << m->spec().describe() << " " << to_string(id);
      }
      EXPECT_TRUE(implication_violations(rep, module_profile(*m)).empty());
    }
  }
}

TEST(Classify, Tmain1ConditionsAgree) {
  for (const auto& m : small_modules()) {
    const auto ctx = std::make_shared<const ModuleContext>(m);
    for (const auto& n : m->lattice()) {
      if (!n.is_proper()) continue;
      SubmoduleAnalyzer a(ctx, n);
      const bool w = a.check(PredicateId::wc1a).holds;
      for (int k = 1; k <= 8; ++k) EXPECT_EQ(a.tmain1(k).holds, w) << m->spec().describe() << " k=" << k;
    }
  }
}

TEST(Classify, NilpotentExponent) {
  const auto m = zn_module(16, ScalarMode::ring);
  const auto v = check_predicate(gen(m, {4}), PredicateId::nilpotent);
  // (4)^k (4) = 0 first at k = 1: 4*4 = 16 = 0.
  EXPECT_TRUE(v.holds);
  EXPECT_EQ(v.exponent, 1u);
  const auto u = check_predicate(gen(m, {2}), PredicateId::nilpotent);
  EXPECT_EQ(u.exponent, 3u);
}

TEST(Classify, Z16EightIsTheFirstFailure) {
  const auto m = zn_module(16, ScalarMode::ring);
  const auto v = check_predicate(gen(m, {8}), PredicateId::wc1a);
  ASSERT_FALSE(v.holds);
  EXPECT_EQ(v.witness->scalars, (std::vector<Elem>{2, 2, 2}));
  EXPECT_EQ(v.witness->element, Elem{1});
}

TEST(Classify, RejectsWholeModule) {
  const auto m = zn_module(8, ScalarMode::ring);
  EXPECT_THROW(SubmoduleAnalyzer(std::make_shared<const ModuleContext>(m), whole_module(*m)), SpecError);
  EXPECT_EQ(predicate_from_string("WC1A"), PredicateId::wc1a);
  EXPECT_FALSE(predicate_from_string("nope").has_value());
}
