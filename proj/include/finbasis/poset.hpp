#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "finbasis/element_set.hpp"
#include "finbasis/errors.hpp"

namespace finbasis {

// How an input relation is interpreted: `strict` requires the full order
// relation, `hasse` treats the input as a generating set and applies the
// reflexive-transitive closure before the axioms are checked.
enum class ClosureMode { strict, hasse };

inline const char* to_string(ClosureMode m) {
  return m == ClosureMode::strict ? "strict" : "hasse";
}

struct PosetOptions {
  ClosureMode mode = ClosureMode::strict;
  // Ideal enumeration downstream is exponential in the carrier, so carriers
  // are capped at a desk-scale size by default. Hard limit is 64.
  unsigned max_carrier = 24;
};

enum class OrderViolationKind {
  duplicate_element,
  carrier_too_large,
  dangling_element,
  not_reflexive,
  not_antisymmetric,
  not_transitive,
};

inline const char* to_string(OrderViolationKind k) {
  switch (k) {
    case OrderViolationKind::duplicate_element: return "DuplicateElement";
    case OrderViolationKind::carrier_too_large: return "CarrierTooLarge";
    case OrderViolationKind::dangling_element: return "DanglingElement";
    case OrderViolationKind::not_reflexive: return "NotReflexive";
    case OrderViolationKind::not_antisymmetric: return "NotAntisymmetric";
    case OrderViolationKind::not_transitive: return "NotTransitive";
  }
  return "?";
}

// Names the violated axiom together with the witness elements that replay
// the failure (one element for reflexivity, a pair for antisymmetry, a
// triple for transitivity).
struct OrderViolation {
  OrderViolationKind kind;
  std::vector<std::string> witness;
};

class Poset;
struct PosetResult;
PosetResult validate_poset(std::vector<std::string> carrier,
                           const std::vector<std::pair<std::string, std::string>>& leq,
                           const PosetOptions& opts = {});

// A finite partial order. Immutable after construction; element ids index
// the lexicographically sorted name table, so id order is the canonical
// element order used for all deterministic tie-breaking.
class Poset {
public:
  unsigned size() const { return unsigned(names_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& name_of(ElemId i) const { return names_[i]; }

  std::optional<ElemId> id_of(std::string_view name) const {
    const auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return std::nullopt;
    return ElemId(it - names_.begin());
  }

  ElementSet carrier() const { return ElementSet::first_n(size()); }

  bool leq(ElemId a, ElemId b) const { return up_[a].contains(b); }

  // { y | x <= y } and { y | y <= x }, within the full carrier.
  ElementSet up(ElemId x) const { return up_[x]; }
  ElementSet down(ElemId x) const { return down_[x]; }

  std::vector<std::string> names_of(ElementSet s) const {
    std::vector<std::string> out;
    out.reserve(s.size());
    for (ElemId i : s) out.push_back(names_[i]);
    return out;
  }

  // Builds a subset from names; throws UnknownElement on a miss.
  ElementSet subset(std::span<const std::string> names) const {
    ElementSet s;
    for (const auto& n : names) {
      const auto id = id_of(n);
      if (!id) throw UnknownElement(n);
      s = s.with(*id);
    }
    return s;
  }

  ElementSet subset(std::initializer_list<std::string_view> names) const {
    ElementSet s;
    for (const auto n : names) {
      const auto id = id_of(n);
      if (!id) throw UnknownElement(std::string(n));
      s = s.with(*id);
    }
    return s;
  }

  // Full relation as name pairs, in canonical (row, column) order.
  std::vector<std::pair<std::string, std::string>> relation_pairs() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (ElemId a = 0; a < size(); ++a)
      for (ElemId b : up_[a]) out.emplace_back(names_[a], names_[b]);
    return out;
  }

  unsigned relation_size() const {
    unsigned n = 0;
    for (const auto& row : up_) n += row.size();
    return n;
  }

private:
  Poset(std::vector<std::string> names, std::vector<ElementSet> up)
      : names_(std::move(names)), up_(std::move(up)), down_(names_.size()) {
    for (ElemId a = 0; a < size(); ++a)
      for (ElemId b : up_[a]) down_[b] = down_[b].with(a);
  }

  friend PosetResult validate_poset(std::vector<std::string>,
                                    const std::vector<std::pair<std::string, std::string>>&,
                                    const PosetOptions&);

  std::vector<std::string> names_;
  std::vector<ElementSet> up_;
  std::vector<ElementSet> down_;
};

struct PosetResult {
  std::optional<Poset> poset;
  std::optional<OrderViolation> violation;

  bool ok() const { return poset.has_value(); }

  static PosetResult failure(OrderViolationKind kind, std::vector<std::string> witness) {
    return PosetResult{std::nullopt, OrderViolation{kind, std::move(witness)}};
  }
};

// Checks the poset axioms over the given carrier and relation and returns
// the poset, or the first violation in canonical scan order. In hasse mode
// the reflexive-transitive closure is applied first, so the only axiom that
// can fail afterwards is antisymmetry (a cycle in the generating set).
inline PosetResult validate_poset(std::vector<std::string> carrier,
                                  const std::vector<std::pair<std::string, std::string>>& leq,
                                  const PosetOptions& opts) {
  std::sort(carrier.begin(), carrier.end());
  for (std::size_t i = 1; i < carrier.size(); ++i)
    if (carrier[i] == carrier[i - 1])
      return PosetResult::failure(OrderViolationKind::duplicate_element, {carrier[i]});

  const unsigned cap = std::min(opts.max_carrier, ElementSet::max_size);
  if (carrier.size() > cap)
    return PosetResult::failure(OrderViolationKind::carrier_too_large,
                                {std::to_string(carrier.size()), std::to_string(cap)});

  const unsigned n = unsigned(carrier.size());
  const auto id_of = [&](const std::string& name) -> std::optional<ElemId> {
    const auto it = std::lower_bound(carrier.begin(), carrier.end(), name);
    if (it == carrier.end() || *it != name) return std::nullopt;
    return ElemId(it - carrier.begin());
  };

  std::vector<ElementSet> up(n);
  for (const auto& [a, b] : leq) {
    const auto ia = id_of(a);
    if (!ia) return PosetResult::failure(OrderViolationKind::dangling_element, {a});
    const auto ib = id_of(b);
    if (!ib) return PosetResult::failure(OrderViolationKind::dangling_element, {b});
    up[*ia] = up[*ia].with(*ib);
  }

  if (opts.mode == ClosureMode::hasse) {
    for (ElemId x = 0; x < n; ++x) up[x] = up[x].with(x);
    for (ElemId k = 0; k < n; ++k)
      for (ElemId x = 0; x < n; ++x)
        if (up[x].contains(k)) up[x] = up[x] | up[k];
  } else {
    for (ElemId x = 0; x < n; ++x)
      if (!up[x].contains(x))
        return PosetResult::failure(OrderViolationKind::not_reflexive, {carrier[x]});
  }

  for (ElemId x = 0; x < n; ++x)
    for (ElemId y : up[x])
      if (y > x && up[y].contains(x))
        return PosetResult::failure(OrderViolationKind::not_antisymmetric,
                                    {carrier[x], carrier[y]});

  if (opts.mode == ClosureMode::strict) {
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y : up[x]) {
        const ElementSet missing = up[y] - up[x];
        if (!missing.empty())
          return PosetResult::failure(OrderViolationKind::not_transitive,
                                      {carrier[x], carrier[y], carrier[missing.min()]});
      }
  }

  return PosetResult{Poset(std::move(carrier), std::move(up)), std::nullopt};
}

namespace detail {

// Shared precondition check: every member of s must lie inside ambient.
// Raise describes the scope the spec names for the operation at hand.
template <typename Raise>
void require_inside(const Poset& p, ElementSet s, ElementSet ambient, Raise&& raise) {
  const ElementSet escaped = s - ambient;
  if (escaped.empty()) return;
  const ElemId e = escaped.min();
  raise(e < p.size() ? p.name_of(e) : std::to_string(e));
}

}  // namespace detail

// Every b in universe with x <= b for all x in s. For empty s this is the
// whole universe: every element bounds the empty set.
inline ElementSet upper_bounds(const Poset& p, ElementSet universe, ElementSet s) {
  detail::require_inside(p, universe, p.carrier(),
                         [](const std::string& e) { throw SubsetEscapesUniverse(e); });
  detail::require_inside(p, s, universe,
                         [](const std::string& e) { throw SubsetEscapesUniverse(e); });
  ElementSet ub = universe;
  for (ElemId x : s) ub = ub & p.up(x);
  return ub;
}

// The least upper bound of s within universe, when it exists. At most one
// candidate can survive in a valid poset; more than one is a defect.
inline std::optional<ElemId> lub_in(const Poset& p, ElementSet universe, ElementSet s) {
  const ElementSet ubs = upper_bounds(p, universe, s);
  ElementSet least;
  for (ElemId b : ubs)
    if (ubs.subset_of(p.up(b))) least = least.with(b);
  if (least.size() > 1)
    throw std::logic_error("lub_in: multiple least upper bounds survive; order axioms violated");
  if (least.empty()) return std::nullopt;
  return least.min();
}

// { x in universe | x <= b }; always contains b itself.
inline ElementSet lower_set(const Poset& p, ElementSet universe, ElemId b) {
  detail::require_inside(p, universe, p.carrier(),
                         [](const std::string& e) { throw SubsetEscapesUniverse(e); });
  if (!universe.contains(b))
    throw ElementNotInUniverse(b < p.size() ? p.name_of(b) : std::to_string(b));
  return universe & p.down(b);
}

}  // namespace finbasis
