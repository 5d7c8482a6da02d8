#include <gtest/gtest.h>

#include <numeric>

#include "plab/ring.hpp"

using namespace plab;

namespace {

std::size_t euler_phi(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

std::size_t divisor_count(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t d = 1; d <= n; ++d) c += n % d == 0;
  return c;
}

// Brute-force ideal closure of one element set in Z_n-style rings.
bool is_ideal(const FiniteRing& r, const ElementSet& s) {
  if (!s.test(r.zero())) return false;
  for (Elem a : s.members())
    for (Elem b : s.members())
      if (!s.test(r.sub(a, b))) return false;
  for (Elem a : s.members())
    for (Elem x = 0; x < r.size(); ++x)
      if (!s.test(r.mul(x, a))) return false;
  return true;
}

}  // namespace

TEST(Ring, ZnUnitsMatchEulerPhi) {
  for (std::uint32_t n = 2; n <= 40; ++n) {
    const auto r = build_ring(RingSpec::zn(n));
    EXPECT_EQ(r->units().count(), euler_phi(n)) << "n=" << n;
    EXPECT_EQ(r->nonunits().size(), n - euler_phi(n));
  }
}

TEST(Ring, ZnIdealsAreDivisors) {
  for (std::uint32_t n : {2u, 12u, 30u, 36u, 64u}) {
    const auto r = build_ring(RingSpec::zn(n));
    EXPECT_EQ(r->ideals().size(), divisor_count(n)) << "n=" << n;
    for (const auto& i : r->ideals()) EXPECT_TRUE(is_ideal(*r, i.members));
  }
}

TEST(Ring, ProductRingTables) {
  const auto r = build_ring(RingSpec::product({RingSpec::zn(4), RingSpec::zn(9)}));
  ASSERT_EQ(r->size(), 36u);
  EXPECT_EQ(r->units().count(), 2u * 6u);
  EXPECT_EQ(r->maximal_ideals().size(), 2u);
  const Elem parts[] = {3, 5};
  const Elem x = r->compose(parts);
  EXPECT_EQ(r->decompose(x), (std::vector<Elem>{3, 5}));
  // (3,5)^2 = (1,7)
  const Elem sq[] = {1, 7};
  EXPECT_EQ(r->mul(x, x), r->compose(sq));
}

TEST(Ring, TruncatedPolynomialRing) {
  const auto r = build_ring(RingSpec::trunc_poly(2, 3));
  ASSERT_EQ(r->size(), 16u);
  EXPECT_TRUE(r->is_local());
  // Units are exactly the elements with constant term 1.
  EXPECT_EQ(r->units().count(), 8u);
  const Ideal m = r->maximal_ideals().front();
  EXPECT_EQ(m.size(), 8u);
  EXPECT_TRUE(ideal_power(m, 2).is_zero());
  EXPECT_EQ(r->label(3), "x+y");
}

TEST(Ring, JacobsonRadical) {
  const auto r = build_ring(RingSpec::zn(12));
  const Ideal j = jacobson_radical(*r);
  EXPECT_EQ(j.members.members(), (std::vector<Elem>{0, 6}));
  const auto f = build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)}));
  EXPECT_TRUE(jacobson_radical(*f).is_zero());
}

TEST(Ring, ClassifyIdealAgainstDefinitions) {
  for (std::uint32_t n : {8u, 12u, 18u, 30u, 36u}) {
    const auto r = build_ring(RingSpec::zn(n));
    for (const auto& i : r->ideals()) {
      if (!i.is_proper()) continue;
      bool prime = true, w1a = true;
      const auto& nu = r->nonunits();
      for (Elem x = 0; x < n; ++x)
        for (Elem y = 0; y < n; ++y)
          if (i.contains(r->mul(x, y)) && !i.contains(x) && !i.contains(y)) prime = false;
      for (Elem a : nu)
        for (Elem b : nu)
          for (Elem c : nu) {
            const Elem abc = r->mul(r->mul(a, b), c);
            if (abc != 0 && i.contains(abc) && !i.contains(r->mul(a, b)) && !i.contains(c)) w1a = false;
          }
      const auto rep = classify_ideal(*r, i);
      EXPECT_EQ(rep.prime, prime) << "Z" << n << " ideal of size " << i.size();
      EXPECT_EQ(rep.weakly_one_abs_prime, w1a) << "Z" << n << " ideal of size " << i.size();
    }
  }
}

TEST(Ring, IntegerIdealRule) {
  EXPECT_TRUE(validate_z_ideal_rule(40));
  EXPECT_TRUE(z_ideal_w1a(0));
  EXPECT_TRUE(z_ideal_w1a(7));
  EXPECT_FALSE(z_ideal_w1a(18));
  const auto w = z_ideal_w1a_witness(18, 1000);
  ASSERT_TRUE(w);
  EXPECT_EQ(*w, (std::array<std::uint64_t, 3>{2, 3, 3}));
}

TEST(Ring, UringTruncatedPolynomial) {
  const auto r = build_ring(RingSpec::trunc_poly(2, 3));
  const auto v = is_u_ring(*r);
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness);
  // The witness ideal lies in the union of the family, and in no single member.
  ElementSet cover(r->size());
  for (const auto& f : v.covering_family) {
    EXPECT_FALSE(v.witness->members.is_subset_of(f.members));
    cover |= f.members;
  }
  EXPECT_TRUE(v.witness->members.is_subset_of(cover));
  EXPECT_TRUE(is_u_ring(*build_ring(RingSpec::zn(12))).holds);
}

TEST(Ring, EveryProperIdealWeakly) {
  EXPECT_TRUE(every_proper_ideal_w1a(*build_ring(RingSpec::zn(8))).holds);
  EXPECT_TRUE(every_proper_ideal_w1a(*build_ring(RingSpec::product({RingSpec::zn(2), RingSpec::zn(3)}))).holds);
  const auto v = every_proper_ideal_w1a(*build_ring(RingSpec::zn(12)));
  EXPECT_FALSE(v.holds);
  ASSERT_TRUE(v.witness_ideal);
  EXPECT_EQ(v.witness_ideal->members.members(), (std::vector<Elem>{0, 6}));
  EXPECT_EQ(*v.witness_triple, (std::array<Elem, 3>{3, 3, 2}));
  EXPECT_FALSE(local_cube_zero_or_two_fields(*build_ring(RingSpec::zn(12))));
  EXPECT_TRUE(local_cube_zero_or_two_fields(*build_ring(RingSpec::zn(8))));
  EXPECT_FALSE(local_cube_zero_or_two_fields(*build_ring(RingSpec::zn(16))));
}

TEST(Ring, LocalizationOfZ12AtThreeIsZ4) {
  const auto base = build_ring(RingSpec::zn(12));
  const Elem s[] = {3};
  const auto loc = localize_ring(base, s);
  EXPECT_EQ(loc.ring->size(), 4u);
  EXPECT_TRUE(ring_isomorphism(*loc.ring, *build_ring(RingSpec::zn(4))).has_value());
  const Elem zero_in_s[] = {0};
  EXPECT_THROW(localize_ring(base, zero_in_s), SpecError);
}

TEST(Ring, CapIsEnforced) {
  RingOptions o;
  o.ring_cap = 16;
  EXPECT_THROW(build_ring(RingSpec::zn(30), o), CapExceeded);
}

TEST(Ring, SpecDescribe) {
  EXPECT_EQ(RingSpec::zn(30).describe(), "Z30");
  EXPECT_EQ(RingSpec::product({RingSpec::zn(4), RingSpec::zn(9)}).describe(), "Z4xZ9");
  EXPECT_EQ(RingSpec::trunc_poly(2, 3).describe(), "Z2[x,y,z]/(x,y,z)^2");
}
