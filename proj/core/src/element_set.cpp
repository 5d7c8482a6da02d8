#include "plab/element_set.hpp"

namespace plab {

ElementSet ElementSet::full(std::size_t universe) {
  ElementSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  if (const std::size_t tail = universe % 64; tail != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << tail) - 1;
  }
  return s;
}

ElementSet ElementSet::of(std::size_t universe, std::span<const Elem> elems) {
  ElementSet s(universe);
  for (Elem e : elems) s.set(e);
  return s;
}

std::size_t ElementSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool ElementSet::none() const noexcept {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

bool ElementSet::intersects(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

ElementSet& ElementSet::subtract(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

std::vector<Elem> ElementSet::members() const {
  std::vector<Elem> out;
  out.reserve(count());
  for_each([&](Elem e) { out.push_back(e); });
  return out;
}

Elem ElementSet::first() const noexcept {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Elem>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Elem>(universe_);
}

std::size_t ElementSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
  }
  return static_cast<std::size_t>(h);
}

bool canonical_less(const ElementSet& a, const ElementSet& b) noexcept {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  const auto wa = a.words();
  const auto wb = b.words();
  for (std::size_t i = 0; i < wa.size() && i < wb.size(); ++i) {
    const std::uint64_t diff = wa[i] ^ wb[i];
    if (diff != 0) {
      const std::uint64_t low = diff & (~diff + 1);
      // Equal cardinality: whichever set owns the lowest differing element
      // has the smaller member list.
      return (wa[i] & low) != 0;
    }
  }
  return false;
}

}  // namespace plab
