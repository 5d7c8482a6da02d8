#pragma once

// Additive-subgroup helpers shared by the ring and module code. Both store
// addition as a dense size*size table, so the helpers work on raw spans.

#include <span>

#include "plab/element_set.hpp"

namespace plab::detail {

/// H <- H + <b>, assuming H is already a subgroup.
inline void join_cyclic(std::span<const Elem> add, std::size_t n, ElementSet& h, Elem b) {
  if (h.test(b)) return;
  const auto base = h.members();
  ElementSet grown = h;
  Elem x = b;
  while (!h.test(x)) {
    for (Elem y : base) grown.set(add[y * n + x]);
    x = add[x * n + b];
  }
  h = std::move(grown);
}

/// H <- H + B for subgroups H and B.
inline void join_subgroup(std::span<const Elem> add, std::size_t n, ElementSet& h, const ElementSet& b) {
  b.for_each([&](Elem x) {
    if (!h.test(x)) join_cyclic(add, n, h, x);
  });
}

}  // namespace plab::detail
