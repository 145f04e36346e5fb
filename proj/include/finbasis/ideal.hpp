#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "finbasis/basis.hpp"
#include "finbasis/poset.hpp"

namespace finbasis {

// Outcome of a predicate over subsets. When holds is false the witness
// replays the failure: a single element, an offending (e, x) pair, or a
// failing finite subset, depending on the check.
struct SubsetVerdict {
  bool holds = true;
  std::variant<std::monostate, ElemId, std::pair<ElemId, ElemId>, ElementSet> witness;

  static SubsetVerdict pass() { return SubsetVerdict{}; }

  template <typename W>
  static SubsetVerdict fail(W w) {
    return SubsetVerdict{false, w};
  }
};

// A nonempty, downward-closed, directed subset of a basis carrier.
// Membership is a canonical bitmask, so equality and ordering are
// structural.
struct Ideal {
  ElementSet members;

  friend bool operator==(Ideal, Ideal) = default;
};

inline bool canonical_less(Ideal a, Ideal b) { return canonical_less(a.members, b.members); }

// Holds iff every finite F included in s has an upper bound in s itself.
// The empty F forces s to be nonempty. The scan is exhaustive over all
// 2^|s| subsets; on failure the witness is the minimal-cardinality failing
// subset, ties broken canonically.
inline SubsetVerdict is_directed(const Poset& p, ElementSet s) {
  detail::require_inside(p, s, p.carrier(),
                         [](const std::string& e) { throw SubsetEscapesCarrier(e); });
  const auto unbounded = first_subset_where(s, [&](ElementSet f) {
    ElementSet ub = s;
    for (ElemId x : f) ub = ub & p.up(x);
    return ub.empty();
  });
  if (unbounded) return SubsetVerdict::fail(*unbounded);
  return SubsetVerdict::pass();
}

namespace detail {

inline void require_in_basis(const Poset& p, ElementSet i, ElementSet b) {
  require_inside(p, b, p.carrier(),
                 [](const std::string& e) { throw SubsetEscapesBasis(e); });
  require_inside(p, i, b, [](const std::string& e) { throw SubsetEscapesBasis(e); });
}

}  // namespace detail

// Holds iff for all e in i and x in b with x <= e, x is in i. The witness
// is the first offending (e, x) pair in canonical order.
inline SubsetVerdict is_downward_closed_orig(const Poset& p, ElementSet b, ElementSet i) {
  detail::require_in_basis(p, i, b);
  for (ElemId e : i) {
    const ElementSet missing = (p.down(e) & b) - i;
    if (!missing.empty()) return SubsetVerdict::fail(std::pair{e, missing.min()});
  }
  return SubsetVerdict::pass();
}

// Alternative formulation: for every e in i, the lower set of e in b is
// included in i. Agrees with is_downward_closed_orig on all inputs; the
// witness here is the element whose lower set escapes.
inline SubsetVerdict is_downward_closed_alt(const Poset& p, ElementSet b, ElementSet i) {
  detail::require_in_basis(p, i, b);
  for (ElemId e : i)
    if (!lower_set(p, b, e).subset_of(i)) return SubsetVerdict::fail(e);
  return SubsetVerdict::pass();
}

namespace detail {

// Ideal predicate without the basis-precondition check; used by callers
// that have already certified b (or are themselves enumerating).
inline SubsetVerdict is_ideal_core(const Poset& p, ElementSet b, ElementSet i) {
  const SubsetVerdict down = is_downward_closed_orig(p, b, i);
  if (!down.holds) return down;
  return is_directed(p, i);
}

}  // namespace detail

// An ideal is a downward-closed directed subset of the basis, directedness
// taking its upper bounds inside i itself.
inline SubsetVerdict is_ideal(const Basis& basis, ElementSet i) {
  return detail::is_ideal_core(basis.poset(), basis.members(), i);
}

inline SubsetVerdict is_ideal(const Poset& p, ElementSet b, ElementSet i) {
  return is_ideal(require_basis(p, b), i);
}

// The lower set of x in the basis, as an ideal. Every principal ideal
// passes is_ideal; the exhaustive suites verify this as a theorem oracle.
inline Ideal principal_ideal(const Basis& basis, ElemId x) {
  if (!basis.members().contains(x)) {
    const Poset& p = basis.poset();
    throw ElementNotInBasis(x < p.size() ? p.name_of(x) : std::to_string(x));
  }
  return Ideal{lower_set(basis.poset(), basis.members(), x)};
}

inline Ideal principal_ideal(const Poset& p, ElementSet b, ElemId x) {
  return principal_ideal(require_basis(p, b), x);
}

// All ideals of the basis in canonical order. The definitional 2^|b|
// filter is the oracle; the principal-ideal image is recomputed as an
// independent cross-check and any disagreement is a hard failure.
inline std::vector<Ideal> enumerate_ideals(const Basis& basis) {
  const Poset& p = basis.poset();
  const ElementSet b = basis.members();

  std::vector<Ideal> found;
  for_each_subset(b, [&](ElementSet i) {
    if (detail::is_ideal_core(p, b, i).holds) found.push_back(Ideal{i});
  });
  std::sort(found.begin(), found.end(),
            [](Ideal x, Ideal y) { return canonical_less(x, y); });

  std::vector<Ideal> image;
  for (ElemId x : b) image.push_back(principal_ideal(basis, x));
  std::sort(image.begin(), image.end(),
            [](Ideal x, Ideal y) { return canonical_less(x, y); });
  image.erase(std::unique(image.begin(), image.end()), image.end());

  if (found != image)
    throw std::logic_error(
        "enumerate_ideals: definitional filter disagrees with the principal-ideal image");
  return found;
}

inline std::vector<Ideal> enumerate_ideals(const Poset& p, ElementSet b) {
  return enumerate_ideals(require_basis(p, b));
}

// { bottom } — an ideal, and included in every ideal of the basis.
inline Ideal bottom_ideal(const Basis& basis) {
  return Ideal{ElementSet::single(basis.bottom())};
}

inline Ideal bottom_ideal(const Poset& p, ElementSet b) {
  return bottom_ideal(require_basis(p, b));
}

// The poset of all ideals of a basis ordered by set inclusion. Keeps a
// materialized inclusion poset over synthetic node names ("i00", "i01", ...
// following the canonical ideal order) so the order-core operations apply
// unchanged one level up. References the base poset; it must stay alive.
class Completion {
public:
  const std::vector<Ideal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const Poset& base() const { return *base_; }
  ElementSet basis_members() const { return basis_members_; }
  const Poset& inclusion_poset() const { return inclusion_; }

  std::optional<unsigned> index_of(Ideal i) const {
    const auto it = std::lower_bound(ideals_.begin(), ideals_.end(), i,
                                     [](Ideal a, Ideal b) { return canonical_less(a, b); });
    if (it == ideals_.end() || !(*it == i)) return std::nullopt;
    return unsigned(it - ideals_.begin());
  }

  Ideal bottom() const { return bottom_; }

  // "{a,b}" style label, members in canonical order.
  std::string label_of(Ideal i) const {
    std::string out = "{";
    bool first = true;
    for (ElemId x : i.members) {
      if (!first) out += ',';
      out += base_->name_of(x);
      first = false;
    }
    out += '}';
    return out;
  }

  // Maps a family of ideals to node ids of the inclusion poset; throws
  // IdealNotInCompletion when a member is no ideal of this basis.
  ElementSet node_set(std::span<const Ideal> family) const {
    ElementSet s;
    for (Ideal i : family) {
      const auto idx = index_of(i);
      if (!idx) throw IdealNotInCompletion(label_of(i));
      s = s.with(*idx);
    }
    return s;
  }

private:
  Completion(const Poset& base, ElementSet basis_members, std::vector<Ideal> ideals,
             Poset inclusion, Ideal bottom)
      : base_(&base),
        basis_members_(basis_members),
        ideals_(std::move(ideals)),
        inclusion_(std::move(inclusion)),
        bottom_(bottom) {}

  friend Completion build_completion(const Basis&);

  const Poset* base_;
  ElementSet basis_members_;
  std::vector<Ideal> ideals_;
  Poset inclusion_;
  Ideal bottom_;
};

namespace detail {

inline std::string completion_node_name(unsigned idx) {
  std::string name = "i";
  name += char('0' + idx / 10);
  name += char('0' + idx % 10);
  return name;
}

}  // namespace detail

// Builds the ideal completion: carrier = all ideals of the basis, order =
// inclusion. The inclusion relation must itself pass the poset axioms, and
// its least element (lub of the empty set) must be the bottom ideal; both
// are asserted here.
inline Completion build_completion(const Basis& basis) {
  std::vector<Ideal> ideals = enumerate_ideals(basis);

  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (unsigned a = 0; a < ideals.size(); ++a) names.push_back(detail::completion_node_name(a));
  for (unsigned a = 0; a < ideals.size(); ++a)
    for (unsigned b = 0; b < ideals.size(); ++b)
      if (ideals[a].members.subset_of(ideals[b].members))
        pairs.emplace_back(names[a], names[b]);

  PosetResult inclusion =
      validate_poset(names, pairs, PosetOptions{ClosureMode::strict, ElementSet::max_size});
  if (!inclusion.ok())
    throw std::logic_error("build_completion: inclusion order violates the poset axioms");

  const Ideal bottom = bottom_ideal(basis);
  const auto least = lub_in(*inclusion.poset, inclusion.poset->carrier(), ElementSet{});
  if (!least || !(ideals[*least] == bottom))
    throw std::logic_error("build_completion: least ideal is not the bottom singleton");

  return Completion(basis.poset(), basis.members(), std::move(ideals),
                    std::move(*inclusion.poset), bottom);
}

inline Completion build_completion(const Poset& p, ElementSet b) {
  return build_completion(require_basis(p, b));
}

}  // namespace finbasis
