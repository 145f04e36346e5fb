#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finbasis/poset.hpp"

namespace finbasis {

namespace detail {

inline std::vector<std::string> generated_names(unsigned n) {
  std::vector<std::string> names;
  names.reserve(n);
  for (unsigned i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  return names;
}

}  // namespace detail

// Visits every labeled poset on n elements (names "e0".."e{n-1}") exactly
// once and returns how many there were. Enumeration is by brute force over
// all 2^(n(n-1)) irreflexive relations with a fast axiom filter, so n is
// capped at 6. Known counts for a sanity check: 1, 1, 3, 19, 219, 4231 for
// n = 0..5.
template <typename Fn>
std::uint64_t for_each_labeled_poset(unsigned n, Fn&& fn) {
  if (n > 6) throw Error("exhaustive poset enumeration supports carriers up to 6");

  const std::vector<std::string> names = detail::generated_names(n);

  std::vector<std::pair<unsigned, unsigned>> slots;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::uint64_t> up(n);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (unsigned i = 0; i < n; ++i) up[i] = std::uint64_t{1} << i;
    for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
      const auto [i, j] = slots[unsigned(std::countr_zero(rest))];
      up[i] |= std::uint64_t{1} << j;
    }

    bool ok = true;
    for (unsigned i = 0; ok && i < n; ++i)
      for (unsigned j = i + 1; j < n; ++j)
        if ((up[i] >> j & 1) != 0 && (up[j] >> i & 1) != 0) {
          ok = false;
          break;
        }
    for (unsigned i = 0; ok && i < n; ++i)
      for (std::uint64_t rest = up[i]; rest != 0; rest &= rest - 1) {
        const unsigned j = unsigned(std::countr_zero(rest));
        if ((up[j] & ~up[i]) != 0) {
          ok = false;
          break;
        }
      }
    if (!ok) continue;

    std::vector<std::pair<std::string, std::string>> pairs;
    for (unsigned i = 0; i < n; ++i)
      for (std::uint64_t rest = up[i]; rest != 0; rest &= rest - 1)
        pairs.emplace_back(names[i], names[unsigned(std::countr_zero(rest))]);

    PosetResult built =
        validate_poset(names, pairs, PosetOptions{ClosureMode::strict, ElementSet::max_size});
    if (!built.ok())
      throw std::logic_error("poset enumeration produced a relation failing validation");
    ++count;
    fn(*built.poset);
  }
  return count;
}

// Uniform random poset: upper-triangular adjacency with fair coin entries,
// pushed through a random permutation of the labels, then closed
// reflexively and transitively. Deterministic for a given engine state;
// only engine draws are used (no distribution objects), so results are
// identical across standard libraries.
inline Poset random_poset(unsigned n, std::mt19937_64& rng) {
  if (n == 0 || n > ElementSet::max_size)
    throw Error("random_poset requires 1 <= n <= 64");

  std::vector<unsigned> perm(n);
  for (unsigned i = 0; i < n; ++i) perm[i] = i;
  for (unsigned i = n - 1; i > 0; --i) {
    const unsigned j = unsigned(rng() % (i + 1));
    std::swap(perm[i], perm[j]);
  }

  const std::vector<std::string> names = detail::generated_names(n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (unsigned i = 0; i < n; ++i)
    for (unsigned j = i + 1; j < n; ++j)
      if ((rng() & 1) != 0) pairs.emplace_back(names[perm[i]], names[perm[j]]);

  PosetResult built =
      validate_poset(names, pairs, PosetOptions{ClosureMode::hasse, ElementSet::max_size});
  if (!built.ok()) throw std::logic_error("random_poset produced an invalid order");
  return std::move(*built.poset);
}

// Uniform random subset of s.
inline ElementSet random_subset(ElementSet s, std::mt19937_64& rng) {
  return ElementSet::from_bits(rng() & s.bits());
}

}  // namespace finbasis
