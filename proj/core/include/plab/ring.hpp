#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "plab/element_set.hpp"
#include "plab/error.hpp"

namespace plab {

enum class RingKind { zn, product, trunc_poly, localization };

/// Constructor recipe for a finite commutative ring with identity.
///
/// Element order is fixed by the constructor:
///   zn            residues 0..n-1
///   product       lexicographic tuples, first factor most significant
///   trunc_poly    base-p digits (c0, c_vars, ..., c_1), the constant term most
///                 significant and x_1 the least significant digit, so that
///                 x=1, y=2, x+y=3, z=4 for Z_2[x,y,z]/(x,y,z)^2
///   localization  order in which classes a/s are discovered (a, then s)
struct RingSpec {
  RingKind kind = RingKind::zn;
  std::uint32_t n = 0;
  std::vector<RingSpec> factors;
  std::uint32_t p = 0;
  std::uint32_t vars = 0;
  std::shared_ptr<const RingSpec> base;
  std::vector<Elem> mult_set_generators;

  static RingSpec zn(std::uint32_t n);
  static RingSpec product(std::vector<RingSpec> factors);
  static RingSpec trunc_poly(std::uint32_t p, std::uint32_t vars);
  static RingSpec localization(RingSpec base, std::vector<Elem> mult_set_generators);

  /// Short human-readable name, e.g. "Z30", "Z4xZ9", "Z2[x,y,z]/(x,y,z)^2".
  std::string describe() const;

  friend bool operator==(const RingSpec& a, const RingSpec& b);
};

struct RingOptions {
  std::size_t ring_cap = 256;
  std::size_t ideal_cap = 4096;
};

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

/// Ideal of a finite ring. Holds a non-owning pointer; the ring must outlive it.
struct Ideal {
  const FiniteRing* ring = nullptr;
  ElementSet members;
  std::vector<Elem> generators;

  bool contains(Elem e) const { return members.test(e); }
  std::size_t size() const { return members.count(); }
  bool is_proper() const;
  bool is_zero() const { return members.count() == 1; }
  friend bool operator==(const Ideal& a, const Ideal& b) { return a.members == b.members; }
};

/// Finite commutative ring with identity backed by dense Cayley tables.
class FiniteRing {
 public:
  struct Tables {
    std::size_t size = 0;
    std::vector<Elem> add;  // size*size
    std::vector<Elem> mul;  // size*size
    Elem zero = 0;
    Elem one = 0;
    std::vector<std::string> labels;
  };

  /// Runs the full axiom scan, then derives units and maximal ideals.
  FiniteRing(Tables tables, RingSpec spec, RingOptions options, std::vector<RingPtr> components = {});

  FiniteRing(const FiniteRing&) = delete;
  FiniteRing& operator=(const FiniteRing&) = delete;

  std::size_t size() const noexcept { return size_; }
  Elem zero() const noexcept { return zero_; }
  Elem one() const noexcept { return one_; }
  Elem add(Elem a, Elem b) const noexcept { return add_[a * size_ + b]; }
  Elem mul(Elem a, Elem b) const noexcept { return mul_[a * size_ + b]; }
  Elem neg(Elem a) const noexcept { return neg_[a]; }
  Elem sub(Elem a, Elem b) const noexcept { return add(a, neg(b)); }

  bool is_unit(Elem a) const noexcept { return units_.test(a); }
  const ElementSet& units() const noexcept { return units_; }
  /// Nonunits in index order; zero counts as a nonunit.
  const std::vector<Elem>& nonunits() const noexcept { return nonunits_; }
  const std::vector<Ideal>& maximal_ideals() const noexcept { return maximal_; }
  bool is_local() const noexcept { return maximal_.size() == 1; }

  const RingSpec& spec() const noexcept { return spec_; }
  const RingOptions& options() const noexcept { return options_; }
  const std::string& label(Elem a) const { return labels_[a]; }
  /// Greedy additive generating set (smallest index first).
  const std::vector<Elem>& additive_generators() const noexcept { return add_gens_; }
  /// Factor rings for product rings, empty otherwise.
  const std::vector<RingPtr>& components() const noexcept { return components_; }

  /// Element of a product ring from component indices (first factor most significant).
  Elem compose(std::span<const Elem> parts) const;
  std::vector<Elem> decompose(Elem a) const;

  /// Full ideal lattice in canonical order (lazy; throws CapExceeded past ideal_cap).
  const std::vector<Ideal>& ideals() const;

  /// Principal ideal Ra.
  ElementSet principal(Elem a) const;

 private:
  void scan_axioms() const;
  void derive_units();
  void derive_maximal_ideals();
  void derive_additive_generators();

  std::size_t size_;
  std::vector<Elem> add_;
  std::vector<Elem> mul_;
  std::vector<Elem> neg_;
  Elem zero_;
  Elem one_;
  std::vector<std::string> labels_;
  RingSpec spec_;
  RingOptions options_;
  std::vector<RingPtr> components_;
  ElementSet units_;
  std::vector<Elem> nonunits_;
  std::vector<Ideal> maximal_;
  std::vector<Elem> add_gens_;

  mutable std::once_flag ideals_once_;
  mutable std::vector<Ideal> ideals_;
  mutable std::string ideals_error_;
};

RingPtr build_ring(const RingSpec& spec, const RingOptions& options = {});

/// Smallest ideal containing `gens`; empty gens give the zero ideal.
Ideal ideal_generated(const FiniteRing& ring, std::span<const Elem> gens);
/// Ideal whose member set is already closed; recomputes a small generating set.
Ideal ideal_from_members(const FiniteRing& ring, ElementSet members);
Ideal zero_ideal(const FiniteRing& ring);
Ideal unit_ideal(const FiniteRing& ring);

const std::vector<Ideal>& ideal_lattice(const FiniteRing& ring);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
/// a^k for k >= 1.
Ideal ideal_power(const Ideal& a, unsigned k);
/// (A :_R B) = {r : rB subset of A}.
Ideal ideal_quotient(const Ideal& a, const Ideal& b);

/// Powers a, a^2, ... up to and including the first repeated (stable) power.
std::vector<Ideal> ideal_power_chain(const Ideal& a);

Ideal jacobson_radical(const FiniteRing& ring);

/// Structure-preserving map between two finite rings, given as an image table.
struct RingMap {
  const FiniteRing* source = nullptr;
  RingPtr target;
  std::vector<Elem> image;
};

struct LocalizedRing {
  RingPtr ring;
  RingMap canonical;            // a -> a/1
  ElementSet multiplicative_set;  // S over the base ring
  ElementSet s_torsion;           // {x : ux = 0 for some u in S}
  /// One pair (a, s) per element of the localized ring, meaning a/s.
  std::vector<std::pair<Elem, Elem>> representatives;
};

/// Multiplicative closure of gens together with one.
ElementSet multiplicative_closure(const FiniteRing& ring, std::span<const Elem> gens);

/// S^{-1}R for S generated by s_gens. Throws SpecError when zero lies in S.
LocalizedRing localize_ring(const RingPtr& ring, std::span<const Elem> s_gens);

struct IdealReport {
  bool proper = false;
  bool prime = false;
  bool maximal = false;
  bool one_abs_prime = false;
  bool weakly_one_abs_prime = false;
  std::optional<std::array<Elem, 2>> prime_witness;             // xy in I, x,y not in I
  std::optional<std::array<Elem, 3>> one_abs_witness;           // xyz in I, xy,z not in I
  std::optional<std::array<Elem, 3>> weakly_one_abs_witness;    // 0 != xyz in I, xy,z not in I
};

IdealReport classify_ideal(const FiniteRing& ring, const Ideal& ideal);

struct URingVerdict {
  bool holds = true;
  std::optional<Ideal> witness;       // ideal covered by non-containing ideals
  std::vector<Ideal> covering_family;  // greedy subcover in canonical order
};

/// u-ring test. On a finite ring I is covered by a finite family of ideals none
/// containing I exactly when I lies in the union of all ideals not containing I
/// (that family is finite and any covering family is a subfamily of it).
URingVerdict is_u_ring(const FiniteRing& ring);

struct EveryIdealVerdict {
  bool holds = true;
  std::optional<Ideal> witness_ideal;
  std::optional<std::array<Elem, 3>> witness_triple;
};

/// Whether every proper ideal is weakly 1-absorbing prime.
EveryIdealVerdict every_proper_ideal_w1a(const FiniteRing& ring);

/// Ring-level structural test: local with m^3 = 0, or a product of two fields.
bool local_cube_zero_or_two_fields(const FiniteRing& ring);

/// dZ is a weakly 1-absorbing prime ideal of the integers iff d = 0 or d is prime.
bool z_ideal_w1a(std::uint64_t d);
/// Bounded search for nonunit integers 2 <= x,y,z with xyz <= bound, d | xyz,
/// d not dividing xy nor z. Ordered by x+y+z, then (x,y,z).
std::optional<std::array<std::uint64_t, 3>> z_ideal_w1a_witness(std::uint64_t d, std::uint64_t bound);
/// Confirms the closed form against the bounded search for every 0 <= d <= max_d.
bool validate_z_ideal_rule(std::uint64_t max_d = 30);

/// Ring isomorphism search; returns the image table R1 -> R2 when one exists.
std::optional<std::vector<Elem>> ring_isomorphism(const FiniteRing& a, const FiniteRing& b);

}  // namespace plab
