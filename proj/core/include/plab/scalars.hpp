#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "plab/element_set.hpp"

namespace plab {

class FiniteRing;

/// How the "nonunit scalar" quantifier is read for a module.
///
/// ring:          scalars range over the nonunits of the finite ring.
/// integer_image: the module is a module over the integers acting through
///                Z_n; every residue class contains a nonunit integer, so the
///                quantifier ranges over all residues.
enum class ScalarMode { ring, integer_image };

const char* to_string(ScalarMode mode) noexcept;

/// Weight of a scalar for witness ordering. Ring mode: the element index.
/// Integer mode: the smallest nonnegative nonunit integer in the class, i.e. the
/// residue itself except residue 1, which is represented by n+1.
std::uint64_t scalar_weight(const FiniteRing& ring, ScalarMode mode, Elem r);

/// A quantified scalar set with a precomputed table of minimal factorisations
/// p = a*b (a, b in the set), ordered by (w(a)+w(b), w(a), w(b)).
class ScalarDomain {
 public:
  static constexpr Elem kNone = ~Elem{0};

  ScalarDomain() = default;
  /// nonunits_only=false quantifies over every ring element.
  ScalarDomain(const FiniteRing& ring, ScalarMode mode, bool nonunits_only);

  const std::vector<Elem>& scalars() const noexcept { return scalars_; }
  const ElementSet& members() const noexcept { return members_; }
  std::uint64_t weight(Elem r) const noexcept { return weight_[r]; }
  /// Distinct products a*b of two domain scalars, ascending by index.
  const std::vector<Elem>& products() const noexcept { return products_; }
  /// Minimal factorisation of p, or {kNone,kNone}.
  const std::array<Elem, 2>& min_factor(Elem p) const noexcept { return min_factor_[p]; }
  ScalarMode mode() const noexcept { return mode_; }

 private:
  ScalarMode mode_ = ScalarMode::ring;
  std::vector<Elem> scalars_;
  ElementSet members_;
  std::vector<std::uint64_t> weight_;
  std::vector<Elem> products_;
  std::vector<std::array<Elem, 2>> min_factor_;
};

/// Sort key for scalar tuples: total weight, then weights left to right.
template <std::size_t K>
std::array<std::uint64_t, K + 1> weight_key(const ScalarDomain& d, const std::array<Elem, K>& t) {
  std::array<std::uint64_t, K + 1> key{};
  for (std::size_t i = 0; i < K; ++i) {
    key[0] += d.weight(t[i]);
    key[i + 1] = d.weight(t[i]);
  }
  return key;
}

/// Minimal triple (a,b,c) of domain scalars with abc in `target`, ab and c
/// outside `colon`. Scans distinct products ab with their minimal factorisation,
/// so the cost is |products| * |scalars|.
std::optional<std::array<Elem, 3>> min_absorbing_violation(const FiniteRing& ring,
                                                           const ScalarDomain& domain,
                                                           const ElementSet& colon,
                                                           const ElementSet& target);

}  // namespace plab
