#pragma once

#include <optional>
#include <string>
#include <utility>

#include "finbasis/poset.hpp"

namespace finbasis {

enum class BasisFailureReason { not_inhabited, bounded_subset_without_lub };

inline const char* to_string(BasisFailureReason r) {
  return r == BasisFailureReason::not_inhabited ? "NotInhabited"
                                                : "BoundedSubsetWithoutLub";
}

// Replayable evidence that b is not a finitary basis: either b is empty, or
// `subset` is upper-bounded in b yet has no lub in b. The witness subset is
// minimal in cardinality, ties broken canonically.
struct BasisFailure {
  ElementSet subset;
  BasisFailureReason reason;
};

struct BasisReport {
  bool is_basis = false;
  std::optional<ElemId> bottom;
  std::optional<BasisFailure> failure;
};

// The least element of b when it exists, i.e. the lub of the empty subset.
// Absence is a normal return.
inline std::optional<ElemId> bottom_of(const Poset& p, ElementSet b) {
  detail::require_inside(p, b, p.carrier(),
                         [](const std::string& e) { throw SubsetEscapesCarrier(e); });
  return lub_in(p, b, ElementSet{});
}

// Decides whether b is a finitary basis of p: b must be inhabited and every
// subset of b that is upper-bounded in b must have a lub in b. The
// quantification is literal and exhaustive over all 2^|b| subsets,
// including the empty one (whose lub, when b is inhabited, is the bottom).
// Countability is vacuous for finite carriers and is not checked.
inline BasisReport check_finitary_basis(const Poset& p, ElementSet b) {
  detail::require_inside(p, b, p.carrier(),
                         [](const std::string& e) { throw SubsetEscapesCarrier(e); });

  if (b.empty())
    return BasisReport{false, std::nullopt,
                       BasisFailure{ElementSet{}, BasisFailureReason::not_inhabited}};

  const auto unsatisfied = first_subset_where(b, [&](ElementSet s) {
    return !upper_bounds(p, b, s).empty() && !lub_in(p, b, s).has_value();
  });
  if (unsatisfied)
    return BasisReport{false, std::nullopt,
                       BasisFailure{*unsatisfied, BasisFailureReason::bounded_subset_without_lub}};

  return BasisReport{true, lub_in(p, b, ElementSet{}), std::nullopt};
}

// A subset of a poset carrier proven to be a finitary basis. Constructed
// only through require_basis, so holding one certifies the precondition of
// the ideal and cover operations. References the poset it was checked
// against; the poset must outlive the basis.
class Basis {
public:
  const Poset& poset() const { return *poset_; }
  ElementSet members() const { return members_; }
  ElemId bottom() const { return bottom_; }

private:
  Basis(const Poset& p, ElementSet members, ElemId bottom)
      : poset_(&p), members_(members), bottom_(bottom) {}

  friend Basis require_basis(const Poset&, ElementSet);

  const Poset* poset_;
  ElementSet members_;
  ElemId bottom_;
};

inline Basis require_basis(const Poset& p, ElementSet b) {
  const BasisReport report = check_finitary_basis(p, b);
  if (!report.is_basis) {
    if (report.failure && report.failure->reason == BasisFailureReason::not_inhabited)
      throw NotAFinitaryBasis("subset is empty");
    std::string subset = "{";
    bool first = true;
    if (report.failure)
      for (ElemId x : report.failure->subset) {
        if (!first) subset += ',';
        subset += p.name_of(x);
        first = false;
      }
    subset += "} is bounded but has no lub";
    throw NotAFinitaryBasis(std::move(subset));
  }
  return Basis(p, b, *report.bottom);
}

}  // namespace finbasis
