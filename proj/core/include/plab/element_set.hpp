#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace plab {

/// Index of an element inside a finite ring or module table.
using Elem = std::uint32_t;

/// Fixed-universe bitset over element indices 0..universe-1.
class ElementSet {
 public:
  ElementSet() = default;
  explicit ElementSet(std::size_t universe)
      : universe_(universe), words_((universe + 63) / 64, 0) {}

  static ElementSet full(std::size_t universe);
  static ElementSet of(std::size_t universe, std::span<const Elem> elems);

  std::size_t universe() const noexcept { return universe_; }

  bool test(Elem e) const noexcept { return (words_[e >> 6] >> (e & 63)) & 1u; }
  void set(Elem e) noexcept { words_[e >> 6] |= std::uint64_t{1} << (e & 63); }
  void reset(Elem e) noexcept { words_[e >> 6] &= ~(std::uint64_t{1} << (e & 63)); }

  std::size_t count() const noexcept;
  bool none() const noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;
  bool intersects(const ElementSet& other) const noexcept;

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  /// Removes every member of `other`.
  ElementSet& subtract(const ElementSet& other) noexcept;

  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  std::vector<Elem> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const int b = std::countr_zero(bits);
        f(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
  }

  /// Smallest member, or universe() when empty.
  Elem first() const noexcept;

  std::size_t hash() const noexcept;
  std::span<const std::uint64_t> words() const noexcept { return words_; }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Canonical order on subsets: by cardinality, then by ascending member list.
bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const noexcept { return s.hash(); }
};

}  // namespace plab
