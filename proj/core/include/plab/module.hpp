#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plab/element_set.hpp"
#include "plab/ring.hpp"
#include "plab/scalars.hpp"

namespace plab {

enum class ModuleKind { ring_as_module, free, quotient, product, cyclic_quotient, localization };

/// Constructor recipe for a finite module. All element indices refer to the
/// canonical order of the module (or ring) they are taken from.
///
/// Element order:
///   ring_as_module   ring order
///   free, product    lexicographic tuples, first coordinate most significant
///   quotient,
///   cyclic_quotient  cosets ordered by their smallest representative
///   localization     discovered class order over pairs (m, s)
struct ModuleSpec {
  ModuleKind kind = ModuleKind::ring_as_module;
  RingSpec ring;  // scalar ring (for product over product ring: the product ring)
  ScalarMode scalar_mode = ScalarMode::ring;
  std::uint32_t rank = 0;                          // free
  std::shared_ptr<const ModuleSpec> base;          // quotient, localization
  std::vector<Elem> kernel_generators;             // quotient, elements of base
  std::vector<ModuleSpec> factors;                 // product
  bool over_product_ring = false;                  // product
  std::vector<Elem> ideal_generators;              // cyclic_quotient, elements of ring
  std::vector<Elem> mult_set_generators;           // localization, elements of base ring

  static ModuleSpec ring_as_module(RingSpec ring, ScalarMode mode);
  static ModuleSpec free(RingSpec ring, std::uint32_t rank, ScalarMode mode);
  static ModuleSpec quotient(ModuleSpec base, std::vector<Elem> kernel_generators);
  static ModuleSpec product(std::vector<ModuleSpec> factors, bool over_product_ring = false);
  static ModuleSpec cyclic_quotient(RingSpec ring, std::vector<Elem> ideal_generators, ScalarMode mode);
  static ModuleSpec localization(ModuleSpec base, std::vector<Elem> mult_set_generators);

  std::string describe() const;
  friend bool operator==(const ModuleSpec& a, const ModuleSpec& b);
};

struct ModuleOptions {
  std::size_t module_cap = 1024;
  std::size_t lattice_cap = 65536;
  /// Full lattice enumeration is only attempted up to this module size.
  std::size_t lattice_module_max = 256;
  std::size_t hom_cap = 100000;
  RingOptions ring;
};

class FiniteModule;
using ModulePtr = std::shared_ptr<const FiniteModule>;

/// Submodule with a non-owning module pointer; the module must outlive it.
struct Submodule {
  const FiniteModule* module = nullptr;
  ElementSet members;
  std::vector<Elem> generators;

  bool contains(Elem m) const { return members.test(m); }
  std::size_t size() const { return members.count(); }
  bool is_proper() const;
  bool is_zero() const { return members.count() == 1; }
  friend bool operator==(const Submodule& a, const Submodule& b) { return a.members == b.members; }
};

/// Finite module over a finite ring, backed by an addition table and an
/// action table act[r*size + m] = r.m.
class FiniteModule {
 public:
  struct Tables {
    std::size_t size = 0;
    std::vector<Elem> add;  // size*size
    std::vector<Elem> act;  // ring.size()*size
    Elem zero = 0;
    std::vector<std::string> labels;
  };

  /// Runs the module-axiom scan and precomputes annihilators and cyclic submodules.
  FiniteModule(RingPtr ring, Tables tables, ModuleSpec spec, ModuleOptions options,
               std::vector<ModulePtr> components = {});

  FiniteModule(const FiniteModule&) = delete;
  FiniteModule& operator=(const FiniteModule&) = delete;

  const FiniteRing& ring() const noexcept { return *ring_; }
  const RingPtr& ring_ptr() const noexcept { return ring_; }
  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }
  Elem act(Elem r, Elem m) const noexcept { return act_[r * size_ + m]; }
  std::span<const Elem> add_table() const noexcept { return add_; }

  ScalarMode mode() const noexcept { return spec_.scalar_mode; }
  const ModuleSpec& spec() const noexcept { return spec_; }
  const ModuleOptions& options() const noexcept { return options_; }
  const std::string& label(Elem m) const { return labels_[m]; }

  /// Quantified nonunit scalars under the module's scalar mode.
  const ScalarDomain& nonunit_scalars() const noexcept { return nonunits_; }
  /// Every ring element as a scalar (weights follow the scalar mode).
  const ScalarDomain& all_scalars() const noexcept { return all_; }

  /// Ann_R(m) as a set of ring elements.
  const ElementSet& annihilator(Elem m) const { return ann_[m]; }
  /// Cyclic submodule Rm as a set of module elements.
  const ElementSet& cyclic(Elem m) const { return cyclic_[m]; }
  /// Greedy minimal generating set (smallest index first).
  const std::vector<Elem>& generators_hint() const noexcept { return gens_hint_; }
  /// Greedy additive generating set.
  const std::vector<Elem>& additive_generators() const noexcept { return add_gens_; }

  /// Factor modules of a free or product module; empty otherwise.
  const std::vector<ModulePtr>& components() const noexcept { return components_; }
  Elem compose(std::span<const Elem> parts) const;
  std::vector<Elem> decompose(Elem m) const;

  /// Base module and projection table for quotient modules (null otherwise).
  const ModulePtr& quotient_base() const noexcept { return quotient_base_; }
  const std::vector<Elem>& quotient_projection() const noexcept { return quotient_projection_; }

  /// Full submodule lattice in canonical order. Lazy; throws CapExceeded when
  /// the module is larger than lattice_module_max or the lattice exceeds lattice_cap.
  const std::vector<Submodule>& lattice() const;
  bool lattice_available() const;

 private:
  friend struct ModuleBuilderAccess;
  void scan_axioms() const;
  void derive_structure();

  RingPtr ring_;
  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> act_;
  std::vector<Elem> neg_;
  Elem zero_;
  std::vector<std::string> labels_;
  ModuleSpec spec_;
  ModuleOptions options_;
  std::vector<ModulePtr> components_;
  ModulePtr quotient_base_;
  std::vector<Elem> quotient_projection_;
  ScalarDomain nonunits_;
  ScalarDomain all_;
  std::vector<ElementSet> ann_;
  std::vector<ElementSet> cyclic_;
  std::vector<Elem> gens_hint_;
  std::vector<Elem> add_gens_;

  mutable std::once_flag lattice_once_;
  mutable std::vector<Submodule> lattice_;
  mutable std::string lattice_error_;
};

/// Builds the module described by `spec`; the scalar ring is built from spec.ring.
ModulePtr build_module(const ModuleSpec& spec, const ModuleOptions& options = {});

Submodule submodule_generated(const FiniteModule& m, std::span<const Elem> gens);
/// Submodule from a closed member set; throws SpecError if it is not one.
Submodule submodule_from_members(const FiniteModule& m, ElementSet members);
Submodule zero_submodule(const FiniteModule& m);
Submodule whole_module(const FiniteModule& m);
const std::vector<Submodule>& submodule_lattice(const FiniteModule& m);

Submodule submodule_sum(const Submodule& a, const Submodule& b);
/// I.K: generated by g.k for g in generators of I and k in generators of K.
Submodule ideal_times_submodule(const Ideal& i, const Submodule& k);

struct ColonIdeal {
  Ideal ideal;
  /// Integer-image mode: nonnegative generator d of the pulled-back ideal dZ.
  std::optional<std::uint64_t> integer_generator;
};

/// (N :_R K) for an element list K.
ColonIdeal colon_ring(const Submodule& n, std::span<const Elem> k);
ColonIdeal colon_ring(const Submodule& n, const Submodule& k);
/// (N :_M J) and (N :_M a).
Submodule colon_module(const Submodule& n, const Ideal& j);
Submodule colon_module(const Submodule& n, Elem scalar);
/// Integer generator of the pullback of an ideal of Z_n to Z.
std::uint64_t integer_generator(const Ideal& ideal);

/// R-linear map given as an image table.
struct ModuleHom {
  const FiniteModule* source = nullptr;
  const FiniteModule* target = nullptr;
  std::vector<Elem> map;
  bool mono = false;
  bool epi = false;

  Submodule kernel() const;
  Submodule image_of(const Submodule& n) const;
  Submodule preimage_of(const Submodule& n) const;
};

struct QuotientModule {
  ModulePtr module;
  ModuleHom projection;  // source is the original module
};

/// M/L with canonical projection. Throws SpecError when L = M.
QuotientModule quotient_module(const ModulePtr& m, const Submodule& l);

/// Direct product. Same-ring variant: equal rings and modes. Product-ring
/// variant: factor i is a module over ring i and the result lives over the
/// product ring.
ModulePtr direct_product(std::span<const ModulePtr> factors, bool over_product_ring = false);
/// Product submodule N_1 x ... x N_k of a product module.
Submodule product_submodule(const FiniteModule& product, std::span<const Submodule> parts);

struct LocalizedModule {
  ModulePtr module;
  LocalizedRing ring;
  std::vector<Elem> canonical;  // m -> m/1
  ElementSet s_torsion;          // {m : um = 0 for some u in S}

  /// S^{-1}N as the closure of the image of N.
  Submodule localize(const Submodule& n) const;
};

/// S^{-1}M over S^{-1}R. Ring mode only; throws SpecError when zero is in S.
LocalizedModule localize_module(const ModulePtr& m, std::span<const Elem> s_gens);

/// All homomorphisms M -> M' by assigning images to generators_hint.
/// Throws CapExceeded when the candidate count passes `cap`.
std::vector<ModuleHom> enumerate_homs(const FiniteModule& src, const FiniteModule& dst, std::size_t cap);

struct TensorFree {
  ModulePtr module;  // M^k, identified with R^k tensor M
  Submodule sub;     // N^k
};

/// F tensor M and F tensor N for F = R^k. The colon identity
/// (N^k :_{M^k} a) = (N :_M a)^k is asserted for every scalar a.
TensorFree tensor_free(const ModulePtr& m, unsigned k, const Submodule& n);

struct MultProfile {
  bool is_multiplication = false;
  std::optional<Submodule> failing_submodule;
};

/// Requires the lattice. A module is a multiplication module when every
/// submodule N equals (N :_R M) M.
MultProfile multiplication_profile(const FiniteModule& m);
/// NK := (N:M)(K:M)M, meaningful on multiplication modules.
Submodule submodule_product(const Submodule& n, const Submodule& k);

struct ModuleProfile {
  bool cyclic = false;
  bool faithful = false;
  bool reduced = false;
  bool torsion_module = false;
  bool non_torsion = false;
  ElementSet torsion;                        // {m : Ann(m) != 0}
  std::optional<Elem> cyclic_generator;
  std::optional<std::array<Elem, 2>> reduced_witness;  // (a, m): a^2 m = 0, am != 0
};

ModuleProfile module_profile(const FiniteModule& m);

/// Ann_R(M) as an ideal; in integer-image mode the image in Z_n.
Ideal module_annihilator(const FiniteModule& m);

/// Every residue r of Z_n contains a nonunit integer r + kn with k <= 2.
bool integer_image_quantifier_sound(std::uint64_t n);

}  // namespace plab
