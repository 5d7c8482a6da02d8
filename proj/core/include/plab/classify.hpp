#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "plab/module.hpp"

namespace plab {

/// Prime-like submodule predicates. Quantified scalars follow the module's
/// scalar mode (nonunits of R, or every residue in integer-image mode).
///
///   prime                   xm in N  =>  x in (N:M) or m in N              (x in R)
///   classical_prime         xym in N  =>  xm in N or ym in N               (x,y in R)
///   weakly_classical_prime  0 != xym in N  =>  xm in N or ym in N          (x,y in R)
///   c1a                     abcm in N  =>  abm in N or cm in N             (a,b,c nonunits)
///   wc1a                    0 != abcm in N  =>  abm in N or cm in N        (a,b,c nonunits)
///   weakly_1abs_submodule   0 != abm in N  =>  ab in (N:M) or m in N       (a,b nonunits)
///   weakly_semiprime        0 != a^2 m in N  =>  am in N                   (a in R)
///   nilpotent               (N:M)^k N = 0 for some k >= 1
enum class PredicateId {
  prime,
  classical_prime,
  weakly_classical_prime,
  c1a,
  wc1a,
  weakly_1abs_submodule,
  weakly_semiprime,
  nilpotent,
};

inline constexpr std::array<PredicateId, 8> kAllPredicates = {
    PredicateId::prime, PredicateId::classical_prime, PredicateId::weakly_classical_prime,
    PredicateId::c1a,   PredicateId::wc1a,            PredicateId::weakly_1abs_submodule,
    PredicateId::weakly_semiprime, PredicateId::nilpotent};

/// Upper-case report name, e.g. "WC1A".
const char* to_string(PredicateId id) noexcept;
std::optional<PredicateId> predicate_from_string(const std::string& s);

/// Witness tuple: scalar indices, an optional module element, and for the
/// ideal- or submodule-quantified conditions the lattice positions involved.
struct Witness {
  std::vector<Elem> scalars;
  std::optional<Elem> element;
  std::vector<std::size_t> ideals;
  std::optional<std::size_t> submodule;
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct Verdict {
  bool holds = true;
  std::optional<Witness> witness;
  std::uint64_t instances_scanned = 0;
  /// nilpotent: smallest k with (N:M)^k N = 0.
  std::optional<unsigned> exponent;
};

struct QuadrupleZero {
  Elem a = 0, b = 0, c = 0, m = 0;
  friend bool operator==(const QuadrupleZero&, const QuadrupleZero&) = default;
};

struct ColonSummary {
  Elem element = 0;
  Ideal colon;
  std::optional<std::uint64_t> integer_generator;
  bool weakly_one_abs_prime = false;
};

struct ClassificationReport {
  std::array<Verdict, 8> verdicts;
  std::vector<QuadrupleZero> quadruple_zeros;  // first 16 in canonical order
  std::vector<ColonSummary> colons;

  const Verdict& operator[](PredicateId id) const { return verdicts[static_cast<std::size_t>(id)]; }
};

/// Per-module tables shared by every submodule analysis: ideal lattice views,
/// scalar-times-ideal products and module colon sets by scalar.
class ModuleContext {
 public:
  explicit ModuleContext(ModulePtr module);

  const FiniteModule& module() const noexcept { return *module_; }
  const ModulePtr& module_ptr() const noexcept { return module_; }
  const FiniteRing& ring() const noexcept { return module_->ring(); }
  const ScalarDomain& nonunits() const noexcept { return module_->nonunit_scalars(); }
  const ScalarDomain& all() const noexcept { return module_->all_scalars(); }

  /// Ideals quantified as "proper ideals": proper ideals of R in ring mode,
  /// every ideal of Z_n in integer-image mode (images of proper ideals of Z).
  const std::vector<Ideal>& proper_ideals() const noexcept { return proper_ideals_; }
  /// a.I for nonunit scalar position i (in nonunits().scalars()) and ideal j.
  const ElementSet& scalar_ideal(std::size_t i, std::size_t j) const { return scalar_ideal_[i * proper_ideals_.size() + j]; }
  /// Generators of a.I.
  const std::vector<Elem>& scalar_ideal_gens(std::size_t i, std::size_t j) const {
    return scalar_ideal_gens_[i * proper_ideals_.size() + j];
  }
  /// p.I for any ring element p.
  const ElementSet& element_ideal(Elem p, std::size_t j) const { return element_ideal_[p * proper_ideals_.size() + j]; }
  /// IJ and IJK.
  const Ideal& ideal_product2(std::size_t i, std::size_t j) const { return prod2_[i * proper_ideals_.size() + j]; }
  const ElementSet& ideal_product3(std::size_t i, std::size_t j, std::size_t k) const;
  /// a.(IJ) for nonunit scalar position i and ideals j, k (computed on first use).
  const ElementSet& scalar_ideal_product(std::size_t i, std::size_t j, std::size_t k) const;
  /// (0 :_M r) for every ring element r.
  const ElementSet& module_annihilated_by(Elem r) const { return ann_by_[r]; }

 private:
  void build_products3() const;

  ModulePtr module_;
  std::vector<Ideal> proper_ideals_;
  std::vector<ElementSet> scalar_ideal_;
  std::vector<std::vector<Elem>> scalar_ideal_gens_;
  std::vector<ElementSet> element_ideal_;
  std::vector<Ideal> prod2_;
  std::vector<ElementSet> ann_by_;
  mutable std::once_flag prod3_once_;
  mutable std::vector<ElementSet> prod3_;
  mutable std::vector<ElementSet> scalar_prod2_;
};

using ContextPtr = std::shared_ptr<const ModuleContext>;

/// Analysis of one proper submodule. Colon sets (N :_R m) and annihilators are
/// grouped by distinct (colon, annihilator) pair so every scan runs once per pair.
class SubmoduleAnalyzer {
 public:
  SubmoduleAnalyzer(ContextPtr ctx, Submodule n);

  const Submodule& submodule() const noexcept { return n_; }
  const ModuleContext& context() const noexcept { return *ctx_; }
  const ElementSet& colon(Elem m) const { return colon_[m]; }
  /// (N :_R M).
  const ElementSet& module_colon() const noexcept { return module_colon_; }
  /// (N :_M r) for every ring element r.
  const ElementSet& module_colon_by(Elem r) const { return colon_by_[r]; }

  Verdict check(PredicateId id) const;
  ClassificationReport classify() const;
  std::vector<QuadrupleZero> quadruple_zeros(std::size_t limit) const;
  bool is_quadruple_zero(Elem a, Elem b, Elem c, Elem m) const;

  /// Condition k (1..8) of the first characterization theorem.
  Verdict tmain1(int k) const;
  /// Condition k (1..8) of the second characterization theorem; needs the lattice.
  Verdict tmain2(int k) const;

 private:
  struct Group {
    ElementSet colon;  // (N :_R m)
    ElementSet ann;    // Ann_R(m)
    Elem first;        // smallest m with this pair
    std::size_t count = 0;
  };
  struct LatticeGroup {
    ElementSet colon;   // (N :_R L)
    ElementSet ann;     // Ann_R(L)
    std::size_t first;  // smallest lattice index with this pair
  };
  template <class F>
  Verdict scan_groups(F&& per_group) const;
  const std::vector<LatticeGroup>& lattice_groups() const;

  ContextPtr ctx_;
  Submodule n_;
  std::vector<ElementSet> colon_;
  ElementSet module_colon_;
  std::vector<ElementSet> colon_by_;
  std::vector<Group> groups_;
  std::vector<std::size_t> group_of_;  // per module element, npos for m in N
  mutable std::optional<std::vector<LatticeGroup>> lattice_groups_;
};

Verdict check_predicate(const Submodule& n, PredicateId id);
ClassificationReport classify_submodule(const Submodule& n);
std::vector<QuadrupleZero> find_quadruple_zeros(const Submodule& n, std::size_t limit);

enum class TmainTheorem { tmain1, tmain2 };
Verdict tmain_condition(const Submodule& n, TmainTheorem theorem, int k);

/// Replays a witness of a false verdict against the predicate formula.
bool replay_witness(const Submodule& n, PredicateId id, const Witness& w);

/// Implications between predicates that must hold on every proper submodule.
/// Returns a description of each violated implication (empty when consistent).
std::vector<std::string> implication_violations(const ClassificationReport& r, const ModuleProfile& profile);

}  // namespace plab
