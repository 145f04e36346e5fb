#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "finbasis/element_set.hpp"
#include "finbasis/errors.hpp"
#include "finbasis/ideal.hpp"

namespace finbasis {

// A finite set of subsets of an ambient carrier. Member sets are deduped
// and kept in canonical order; "canonically first" below always means first
// in this order. The token table names the carrier positions (element
// names, or ideal labels when the family lives one level up).
class Family {
public:
  Family() = default;

  Family(std::vector<std::string> tokens, std::vector<ElementSet> sets)
      : tokens_(std::move(tokens)), sets_(std::move(sets)) {
    const ElementSet ambient = ElementSet::first_n(unsigned(tokens_.size()));
    for (const ElementSet s : sets_) {
      const ElementSet escaped = s - ambient;
      if (!escaped.empty()) throw SubsetEscapesCarrier(std::to_string(escaped.min()));
    }
    std::sort(sets_.begin(), sets_.end(),
              [](ElementSet a, ElementSet b) { return canonical_less(a, b); });
    sets_.erase(std::unique(sets_.begin(), sets_.end()), sets_.end());
  }

  static Family over(const Poset& p, std::vector<ElementSet> sets) {
    return Family(p.names(), std::move(sets));
  }

  const std::vector<std::string>& tokens() const { return tokens_; }
  const std::vector<ElementSet>& sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(ElementSet s) const {
    return std::binary_search(sets_.begin(), sets_.end(), s,
                              [](ElementSet a, ElementSet b) { return canonical_less(a, b); });
  }
  ElementSet ambient() const { return ElementSet::first_n(unsigned(tokens_.size())); }
  const std::string& token(ElemId i) const { return tokens_[i]; }

private:
  std::vector<std::string> tokens_;
  std::vector<ElementSet> sets_;
};

// Set union of all member sets; the empty family yields the empty set.
inline ElementSet union_of(const Family& f) {
  ElementSet u;
  for (const ElementSet s : f.sets()) u = u | s;
  return u;
}

// A finite subfamily covering a target, together with the per-element
// choice of containing set that produced it.
struct CoverWitness {
  Family subfamily;
  std::vector<std::pair<ElemId, ElementSet>> assignment;  // canonical element order
};

enum class CoverPolicy {
  // One containing set per target element, the canonically first; the
  // subfamily never exceeds the target in cardinality.
  canonical_first,
  // Smallest covering subfamily by brute force. Not minimal in any claimed
  // theorem; offered behind this opt-in only.
  minimum_cardinality,
};

namespace detail {

inline Family subfamily_of(const Family& f, const std::vector<ElementSet>& chosen) {
  return Family(f.tokens(), chosen);
}

inline std::optional<ElementSet> first_containing(const Family& f, ElemId x) {
  for (const ElementSet s : f.sets())
    if (s.contains(x)) return s;
  return std::nullopt;
}

}  // namespace detail

// Extracts a finite covering subfamily for target out of f. Mirrors the
// inductive argument on the finiteness of the target: elements are
// processed in canonical order and each contributes one containing member
// set. Throws NotCovered when some target element lies in no member set.
inline CoverWitness finite_cover(const Family& f, ElementSet target,
                                 CoverPolicy policy = CoverPolicy::canonical_first) {
  const ElementSet escaped = target - f.ambient();
  if (!escaped.empty()) throw SubsetEscapesCarrier(std::to_string(escaped.min()));

  if (policy == CoverPolicy::minimum_cardinality) {
    if (f.size() > 24)
      throw Error("minimum-cardinality cover is limited to families of at most 24 sets");
    const ElementSet indices = ElementSet::first_n(unsigned(f.size()));
    const auto covering = first_subset_where(indices, [&](ElementSet chosen) {
      ElementSet covered;
      for (ElemId k : chosen) covered = covered | f.sets()[k];
      return target.subset_of(covered);
    });
    if (!covering) {
      for (ElemId x : target)
        if (!detail::first_containing(f, x)) throw NotCovered(f.token(x));
      throw std::logic_error("finite_cover: no covering subfamily despite full coverage");
    }
    std::vector<ElementSet> chosen;
    for (ElemId k : *covering) chosen.push_back(f.sets()[k]);
    const Family sub = detail::subfamily_of(f, chosen);
    std::vector<std::pair<ElemId, ElementSet>> assignment;
    for (ElemId x : target) assignment.emplace_back(x, *detail::first_containing(sub, x));
    return CoverWitness{sub, std::move(assignment)};
  }

  std::vector<ElementSet> chosen;
  std::vector<std::pair<ElemId, ElementSet>> assignment;
  for (ElemId x : target) {
    const auto s = detail::first_containing(f, x);
    if (!s) throw NotCovered(f.token(x));
    chosen.push_back(*s);
    assignment.emplace_back(x, *s);
  }
  return CoverWitness{detail::subfamily_of(f, chosen), std::move(assignment)};
}

// Result of the union-of-directed-ideals check. Rejections of the two
// checked preconditions are ordinary outcomes with witnesses; a union that
// fails to verify as an ideal would be a theorem violation and raises
// logic_error instead.
struct UnionCheckResult {
  enum class Rejection { none, member_not_ideal, not_directed };

  bool holds = false;
  Rejection rejection = Rejection::none;
  std::optional<Ideal> union_ideal;                      // present iff holds
  std::optional<Ideal> offending_member;                 // member_not_ideal
  std::optional<std::vector<Ideal>> directedness_witness;  // minimal failing subfamily
};

namespace detail {

inline std::vector<Ideal> sorted_unique(std::vector<Ideal> v) {
  std::sort(v.begin(), v.end(), [](Ideal a, Ideal b) { return canonical_less(a, b); });
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

}  // namespace detail

// Verifies that the union of a directed family of ideals is itself an
// ideal, replaying the constructive argument rather than the definitional
// filter: downward closure goes pointwise through the member ideal holding
// each element, and directedness of a finite subset goes through
// finite_cover plus an upper-bound ideal obtained from the directedness of
// the family. The definitional is_ideal check on the union is kept outside
// as the second, independent route.
inline UnionCheckResult check_union_of_directed_ideals(const Completion& c,
                                                       std::span<const Ideal> si) {
  const Poset& p = c.base();
  const ElementSet b = c.basis_members();

  const std::vector<Ideal> family = detail::sorted_unique({si.begin(), si.end()});

  for (const Ideal i : family)
    if (!c.index_of(i)) {
      UnionCheckResult r;
      r.rejection = UnionCheckResult::Rejection::member_not_ideal;
      r.offending_member = i;
      return r;
    }

  const SubsetVerdict directed = is_directed(c.inclusion_poset(), c.node_set(family));
  if (!directed.holds) {
    UnionCheckResult r;
    r.rejection = UnionCheckResult::Rejection::not_directed;
    std::vector<Ideal> witness;
    for (ElemId idx : std::get<ElementSet>(directed.witness)) witness.push_back(c.ideals()[idx]);
    r.directedness_witness = std::move(witness);
    return r;
  }

  ElementSet u;
  for (const Ideal i : family) u = u | i.members;

  // Downward closure of the union, pointwise through a containing member.
  for (ElemId e : u) {
    ElementSet holder;
    for (const Ideal i : family)
      if (i.members.contains(e)) {
        holder = i.members;
        break;
      }
    const ElementSet below = (p.down(e) & b) - holder;
    if (!below.empty())
      throw std::logic_error("union of directed ideals: member ideal not downward closed");
  }

  // Directedness of the union: each finite subset is covered by finitely
  // many members, those members have an upper-bound ideal in the family,
  // and that ideal bounds the subset internally.
  std::vector<ElementSet> member_sets;
  for (const Ideal i : family) member_sets.push_back(i.members);
  const Family as_family = Family(p.names(), member_sets);

  bool ok = true;
  for_each_subset(u, [&](ElementSet f) {
    if (!ok) return;
    const CoverWitness cover = finite_cover(as_family, f);
    ElementSet bound_holder;
    bool found = false;
    for (const ElementSet candidate : member_sets) {
      bool bounds_all = true;
      for (const ElementSet s : cover.subfamily.sets())
        if (!s.subset_of(candidate)) {
          bounds_all = false;
          break;
        }
      if (bounds_all) {
        bound_holder = candidate;
        found = true;
        break;
      }
    }
    if (!found || upper_bounds(p, bound_holder, f).empty()) ok = false;
  });
  if (!ok)
    throw std::logic_error("union of directed ideals: directedness replay failed");

  UnionCheckResult r;
  r.holds = true;
  r.union_ideal = Ideal{u};
  return r;
}

inline UnionCheckResult check_union_of_directed_ideals(const Poset& p, ElementSet b,
                                                       std::span<const Ideal> si) {
  const Completion c = build_completion(require_basis(p, b));
  return check_union_of_directed_ideals(c, si);
}

// Least upper bound of a family of ideals inside the completion, i.e.
// lub_in against the inclusion order. Absent when the family has no upper
// ideal; for directed families it equals the union.
inline std::optional<Ideal> lub_in_completion(const Completion& c, std::span<const Ideal> si) {
  const auto node = lub_in(c.inclusion_poset(), c.inclusion_poset().carrier(), c.node_set(si));
  if (!node) return std::nullopt;
  return c.ideals()[*node];
}

}  // namespace finbasis
