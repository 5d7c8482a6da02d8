#pragma once

// Brute-force definitions straight from the predicate formulas. No shared
// tables, no grouping, no minimal-factor shortcuts: only Cayley-table lookups.

#include <algorithm>
#include <numeric>
#include <vector>

#include "plab/module.hpp"

namespace naive {

using plab::Elem;
using plab::ElementSet;
using plab::FiniteModule;
using plab::FiniteRing;

/// Quantified nonunit scalars: ring nonunits, or every residue over Z.
inline std::vector<Elem> nonunit_scalars(const FiniteModule& m) {
  if (m.mode() == plab::ScalarMode::ring) return m.ring().nonunits();
  std::vector<Elem> all(m.ring().size());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

inline std::vector<Elem> all_scalars(const FiniteModule& m) {
  std::vector<Elem> all(m.ring().size());
  std::iota(all.begin(), all.end(), Elem{0});
  return all;
}

/// (weakly) classical 1-absorbing prime.
inline bool c1a(const FiniteModule& m, const ElementSet& n, bool weakly) {
  const FiniteRing& r = m.ring();
  const auto d = nonunit_scalars(m);
  for (Elem a : d)
    for (Elem b : d)
      for (Elem c : d)
        for (Elem x = 0; x < m.size(); ++x) {
          const Elem ab = r.mul(a, b);
          const Elem v = m.act(r.mul(ab, c), x);
          if (!n.test(v) || (weakly && v == m.zero())) continue;
          if (!n.test(m.act(ab, x)) && !n.test(m.act(c, x))) return false;
        }
  return true;
}

/// (weakly) classical prime.
inline bool cp(const FiniteModule& m, const ElementSet& n, bool weakly) {
  const FiniteRing& r = m.ring();
  const auto d = all_scalars(m);
  for (Elem a : d)
    for (Elem b : d)
      for (Elem x = 0; x < m.size(); ++x) {
        const Elem v = m.act(r.mul(a, b), x);
        if (!n.test(v) || (weakly && v == m.zero())) continue;
        if (!n.test(m.act(a, x)) && !n.test(m.act(b, x))) return false;
      }
  return true;
}

/// Module annihilated set (N :_R M).
inline ElementSet colon(const FiniteModule& m, const ElementSet& n) {
  ElementSet out(m.ring().size());
  for (Elem a = 0; a < m.ring().size(); ++a) {
    bool ok = true;
    for (Elem x = 0; x < m.size() && ok; ++x) ok = n.test(m.act(a, x));
    if (ok) out.set(a);
  }
  return out;
}

/// Every subgroup closed under the action, by closing every subset of
/// cyclic submodules. Only for very small modules.
inline std::vector<ElementSet> submodules(const FiniteModule& m) {
  std::vector<ElementSet> found;
  auto close = [&](ElementSet s) {
    for (bool grew = true; grew;) {
      grew = false;
      const auto mem = s.members();
      for (Elem x : mem)
        for (Elem y : mem) {
          const Elem z = m.add(x, y);
          if (!s.test(z)) s.set(z), grew = true;
        }
      for (Elem x : s.members())
        for (Elem a = 0; a < m.ring().size(); ++a) {
          const Elem z = m.act(a, x);
          if (!s.test(z)) s.set(z), grew = true;
        }
    }
    return s;
  };
  ElementSet zero(m.size());
  zero.set(m.zero());
  found.push_back(zero);
  for (std::size_t i = 0; i < found.size(); ++i)
    for (Elem x = 0; x < m.size(); ++x) {
      if (found[i].test(x)) continue;
      ElementSet s = found[i];
      s.set(x);
      s = close(s);
      if (std::find(found.begin(), found.end(), s) == found.end()) found.push_back(s);
    }
  return found;
}

}  // namespace naive
