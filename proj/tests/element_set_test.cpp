#include <gtest/gtest.h>

#include "plab/element_set.hpp"

using plab::Elem;
using plab::ElementSet;

TEST(ElementSet, SetTestCountAcrossWords) {
  ElementSet s(130);
  for (Elem e : {0u, 63u, 64u, 129u}) s.set(e);
  EXPECT_EQ(s.count(), 4u);
  EXPECT_TRUE(s.test(64));
  EXPECT_FALSE(s.test(65));
  s.reset(64);
  EXPECT_FALSE(s.test(64));
  EXPECT_EQ(s.members(), (std::vector<Elem>{0, 63, 129}));
}

TEST(ElementSet, FirstOfEmptyIsUniverse) {
  ElementSet s(70);
  EXPECT_TRUE(s.none());
  EXPECT_EQ(s.first(), 70u);
  s.set(66);
  EXPECT_EQ(s.first(), 66u);
}

TEST(ElementSet, Algebra) {
  const Elem a_el[] = {1, 2, 3};
  const Elem b_el[] = {3, 4};
  const auto a = ElementSet::of(8, a_el);
  const auto b = ElementSet::of(8, b_el);
  EXPECT_EQ((a | b).count(), 4u);
  EXPECT_EQ((a & b).members(), std::vector<Elem>{3});
  EXPECT_TRUE(a.intersects(b));
  EXPECT_FALSE((a & b).is_subset_of(ElementSet(8)));
  EXPECT_TRUE((a & b).is_subset_of(a));
  auto c = a;
  c.subtract(b);
  EXPECT_EQ(c.members(), (std::vector<Elem>{1, 2}));
  EXPECT_EQ(ElementSet::full(8).count(), 8u);
}

TEST(ElementSet, CanonicalOrderIsCardinalityThenMembers) {
  const Elem x[] = {5};
  const Elem y[] = {0, 1};
  const Elem z[] = {0, 2};
  const auto sx = ElementSet::of(8, x), sy = ElementSet::of(8, y), sz = ElementSet::of(8, z);
  EXPECT_TRUE(plab::canonical_less(sx, sy));
  EXPECT_TRUE(plab::canonical_less(sy, sz));
  EXPECT_FALSE(plab::canonical_less(sz, sy));
}

TEST(ElementSet, EqualSetsHashEqual) {
  const Elem x[] = {2, 77};
  const auto a = ElementSet::of(100, x);
  auto b = ElementSet(100);
  b.set(77);
  b.set(2);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.hash(), b.hash());
}
