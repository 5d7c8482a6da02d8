#include "plab/scalars.hpp"

#include <algorithm>

#include "plab/ring.hpp"

namespace plab {

const char* to_string(ScalarMode mode) noexcept {
  return mode == ScalarMode::ring ? "ring" : "integer_image";
}

std::uint64_t scalar_weight(const FiniteRing& ring, ScalarMode mode, Elem r) {
  if (mode == ScalarMode::ring) return r;
  return r == 1 ? ring.size() + 1 : r;
}

ScalarDomain::ScalarDomain(const FiniteRing& ring, ScalarMode mode, bool nonunits_only)
    : mode_(mode), members_(ring.size()), weight_(ring.size()) {
  const std::size_t n = ring.size();
  for (Elem r = 0; r < n; ++r) weight_[r] = scalar_weight(ring, mode, r);
  const bool all = !nonunits_only || mode == ScalarMode::integer_image;
  for (Elem r = 0; r < n; ++r) {
    if (all || !ring.is_unit(r)) {
      scalars_.push_back(r);
      members_.set(r);
    }
  }
  std::sort(scalars_.begin(), scalars_.end(),
            [&](Elem a, Elem b) { return weight_[a] < weight_[b]; });

  min_factor_.assign(n, {kNone, kNone});
  // Scalars are in weight order, so the first hit per (sum) bucket is not
  // automatically minimal; compare keys explicitly.
  for (Elem a : scalars_) {
    for (Elem b : scalars_) {
      const Elem p = ring.mul(a, b);
      auto& cur = min_factor_[p];
      if (cur[0] == kNone) {
        cur = {a, b};
        continue;
      }
      const auto ka = std::array<std::uint64_t, 3>{weight_[a] + weight_[b], weight_[a], weight_[b]};
      const auto kc = std::array<std::uint64_t, 3>{weight_[cur[0]] + weight_[cur[1]], weight_[cur[0]],
                                                   weight_[cur[1]]};
      if (ka < kc) cur = {a, b};
    }
  }
  for (Elem p = 0; p < n; ++p)
    if (min_factor_[p][0] != kNone) products_.push_back(p);
}

std::optional<std::array<Elem, 3>> min_absorbing_violation(const FiniteRing& ring,
                                                           const ScalarDomain& domain,
                                                           const ElementSet& colon,
                                                           const ElementSet& target) {
  std::optional<std::array<Elem, 3>> best;
  std::array<std::uint64_t, 4> best_key{};
  for (Elem p : domain.products()) {
    if (colon.test(p)) continue;
    const auto& f = domain.min_factor(p);
    for (Elem c : domain.scalars()) {
      if (colon.test(c)) continue;
      if (!target.test(ring.mul(p, c))) continue;
      const std::array<Elem, 3> t{f[0], f[1], c};
      const auto key = weight_key(domain, t);
      if (!best || key < best_key) {
        best = t;
        best_key = key;
      }
    }
  }
  return best;
}

}  // namespace plab
