#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <numeric>
#include <optional>
#include <vector>

namespace finbasis {

// Index of an element inside one poset's carrier. Ids follow the canonical
// (lexicographic) order of the element names, so ascending id order is the
// canonical element order everywhere.
using ElemId = unsigned;

// A subset of a poset carrier, packed as a 64-bit mask over element ids.
// Value type; all operations are pure.
class ElementSet {
public:
  static constexpr unsigned max_size = 64;

  constexpr ElementSet() = default;

  static constexpr ElementSet from_bits(std::uint64_t bits) { return ElementSet(bits); }

  static constexpr ElementSet single(ElemId i) { return ElementSet(std::uint64_t{1} << i); }

  // {0, 1, ..., n-1}
  static constexpr ElementSet first_n(unsigned n) {
    return ElementSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr unsigned size() const { return unsigned(std::popcount(bits_)); }
  constexpr bool contains(ElemId i) const { return i < 64 && ((bits_ >> i) & 1) != 0; }
  constexpr bool subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  // Least member; meaningful only when nonempty.
  constexpr ElemId min() const { return ElemId(std::countr_zero(bits_)); }

  constexpr ElementSet with(ElemId i) const { return ElementSet(bits_ | (std::uint64_t{1} << i)); }
  constexpr ElementSet without(ElemId i) const { return ElementSet(bits_ & ~(std::uint64_t{1} << i)); }

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(ElementSet a, ElementSet b) = default;

  class iterator {
  public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = ElemId;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(std::uint64_t rest) : rest_(rest) {}
    constexpr ElemId operator*() const { return ElemId(std::countr_zero(rest_)); }
    constexpr iterator& operator++() { rest_ &= rest_ - 1; return *this; }
    constexpr iterator operator++(int) { iterator t = *this; ++*this; return t; }
    friend constexpr bool operator==(iterator, iterator) = default;

  private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  std::vector<ElemId> to_vector() const {
    std::vector<ElemId> out;
    out.reserve(size());
    for (ElemId i : *this) out.push_back(i);
    return out;
  }

private:
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  std::uint64_t bits_ = 0;
};

// Canonical total order on subsets: compare ascending member sequences
// lexicographically, a strict prefix coming first. With ids in name order
// this is the lexicographic order on sorted member-name lists.
constexpr bool canonical_less(ElementSet a, ElementSet b) {
  std::uint64_t x = a.bits();
  std::uint64_t y = b.bits();
  while (x != 0 && y != 0) {
    const int i = std::countr_zero(x);
    const int j = std::countr_zero(y);
    if (i != j) return i < j;
    x &= x - 1;
    y &= y - 1;
  }
  return x == 0 && y != 0;
}

// Visits every subset of s in ascending mask order (deterministic).
template <typename Fn>
void for_each_subset(ElementSet s, Fn&& fn) {
  std::uint64_t sub = 0;
  while (true) {
    fn(ElementSet::from_bits(sub));
    sub = (sub - s.bits()) & s.bits();
    if (sub == 0) break;
  }
}

// Scans the subsets of s in (cardinality, lexicographic) order and returns
// the first one satisfying pred, or nullopt after the full 2^|s| sweep.
// This is the witness order used by directedness and basis checks: witnesses
// are minimal in cardinality, ties broken canonically.
template <typename Pred>
std::optional<ElementSet> first_subset_where(ElementSet s, Pred&& pred) {
  const std::vector<ElemId> members = s.to_vector();
  const unsigned m = unsigned(members.size());
  std::vector<unsigned> idx;
  for (unsigned k = 0; k <= m; ++k) {
    idx.resize(k);
    std::iota(idx.begin(), idx.end(), 0u);
    while (true) {
      ElementSet f;
      for (unsigned i : idx) f = f.with(members[i]);
      if (pred(f)) return f;
      int pos = int(k) - 1;
      while (pos >= 0 && idx[unsigned(pos)] == m - k + unsigned(pos)) --pos;
      if (pos < 0) break;
      ++idx[unsigned(pos)];
      for (unsigned q = unsigned(pos) + 1; q < k; ++q) idx[q] = idx[q - 1] + 1;
    }
  }
  return std::nullopt;
}

}  // namespace finbasis
