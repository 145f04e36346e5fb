#include "finbasis/cover.hpp"

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "finbasis/enumerate.hpp"

using namespace finbasis;

namespace {

using Pair = std::pair<std::string, std::string>;

std::vector<Pair> reflexive(std::vector<std::string> names, std::vector<Pair> extra = {}) {
  std::vector<Pair> out;
  for (const auto& n : names) out.emplace_back(n, n);
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

Poset flat_booleans() {
  auto r = validate_poset({"bot", "tt", "ff"},
                          reflexive({"bot", "tt", "ff"}, {{"bot", "tt"}, {"bot", "ff"}}));
  EXPECT_TRUE(r.ok());
  return std::move(*r.poset);
}

// Tokens "1".."4"; ids follow their lexicographic (here also numeric) order.
Family digit_family(std::vector<std::vector<ElemId>> sets) {
  std::vector<ElementSet> masks;
  for (const auto& s : sets) {
    ElementSet m;
    for (ElemId x : s) m = m.with(x);
    masks.push_back(m);
  }
  return Family({"1", "2", "3", "4"}, masks);
}

ElementSet ids(std::initializer_list<ElemId> xs) {
  ElementSet m;
  for (ElemId x : xs) m = m.with(x);
  return m;
}

TEST(UnionOf, EmptyFamily) {
  EXPECT_TRUE(union_of(Family({}, {})).empty());
}

TEST(UnionOf, OverlappingSets) {
  const Family f = digit_family({{0, 1}, {1, 2}});
  EXPECT_EQ(union_of(f), ids({0, 1, 2}));
}

TEST(UnionOf, DuplicatesCollapse) {
  const Family f = digit_family({{0}, {0}});
  EXPECT_EQ(f.size(), 1u);
  EXPECT_EQ(union_of(f), ids({0}));
}

TEST(FiniteCover, PicksCanonicallyFirstContainingSets) {
  // {1,2}, {2,3}, {3,4} covering {1,4}.
  const Family f = digit_family({{0, 1}, {1, 2}, {2, 3}});
  const CoverWitness w = finite_cover(f, ids({0, 3}));
  ASSERT_EQ(w.subfamily.size(), 2u);
  EXPECT_EQ(w.subfamily.sets()[0], ids({0, 1}));
  EXPECT_EQ(w.subfamily.sets()[1], ids({2, 3}));
  ASSERT_EQ(w.assignment.size(), 2u);
  EXPECT_EQ(w.assignment[0], (std::pair<ElemId, ElementSet>{0, ids({0, 1})}));
  EXPECT_EQ(w.assignment[1], (std::pair<ElemId, ElementSet>{3, ids({2, 3})}));
}

TEST(FiniteCover, EmptyTargetNeedsNoSets) {
  const Family f = digit_family({{0, 1}, {1, 2}});
  const CoverWitness w = finite_cover(f, ElementSet{});
  EXPECT_EQ(w.subfamily.size(), 0u);
  EXPECT_TRUE(w.assignment.empty());
}

TEST(FiniteCover, FirstMatchOnSharedElement) {
  const Family f = digit_family({{0, 1}, {1, 2}});
  const CoverWitness w = finite_cover(f, ids({1}));
  ASSERT_EQ(w.subfamily.size(), 1u);
  EXPECT_EQ(w.subfamily.sets()[0], ids({0, 1}));
}

TEST(FiniteCover, UncoveredElementThrowsWithItsName) {
  const Family f = digit_family({{0, 1}});
  try {
    finite_cover(f, ids({0, 3}));
    FAIL() << "expected NotCovered";
  } catch (const NotCovered& e) {
    EXPECT_EQ(e.element(), "4");
  }
}

TEST(FiniteCover, MinimumCardinalityBeatsPerElementChoice) {
  // {1}, {2}, {1,2}: per-element selection takes the two singletons, the
  // minimum-cardinality mode finds the single covering pair.
  const Family f = digit_family({{0}, {1}, {0, 1}});
  const CoverWitness greedy = finite_cover(f, ids({0, 1}));
  EXPECT_EQ(greedy.subfamily.size(), 2u);
  const CoverWitness minimal = finite_cover(f, ids({0, 1}), CoverPolicy::minimum_cardinality);
  ASSERT_EQ(minimal.subfamily.size(), 1u);
  EXPECT_EQ(minimal.subfamily.sets()[0], ids({0, 1}));
}

TEST(FiniteCover, SoundOnSmallExhaustiveInstances) {
  // All families of up to 3 distinct subsets of a 4-element carrier.
  std::vector<ElementSet> all;
  for_each_subset(ElementSet::first_n(4), [&](ElementSet s) { all.push_back(s); });
  const std::vector<std::string> tokens{"1", "2", "3", "4"};

  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i; j < all.size(); ++j)
      for (std::size_t k = j; k < all.size(); ++k) {
        const Family f(tokens, {all[i], all[j], all[k]});
        const ElementSet whole = union_of(f);
        for_each_subset(whole, [&](ElementSet target) {
          const CoverWitness w = finite_cover(f, target);
          for (const ElementSet s : w.subfamily.sets()) EXPECT_TRUE(f.contains(s));
          EXPECT_TRUE(target.subset_of(union_of(w.subfamily)));
          EXPECT_LE(w.subfamily.size(), std::size_t{target.size()});
          for (const auto& [x, s] : w.assignment) {
            EXPECT_TRUE(s.contains(x));
            EXPECT_TRUE(w.subfamily.contains(s));
          }
        });
      }
}

TEST(UnionOfDirectedIdeals, ChainUnionIsAnIdeal) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> chain{Ideal{p.subset({"bot"})}, Ideal{p.subset({"bot", "tt"})}};
  const UnionCheckResult r = check_union_of_directed_ideals(c, chain);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(p.names_of(r.union_ideal->members), (std::vector<std::string>{"bot", "tt"}));
  EXPECT_TRUE(is_ideal(p, p.carrier(), r.union_ideal->members).holds);
}

TEST(UnionOfDirectedIdeals, SingletonFamilyIsItself) {
  const Poset p = flat_booleans();
  const std::vector<Ideal> si{Ideal{p.subset({"bot", "ff"})}};
  const UnionCheckResult r = check_union_of_directed_ideals(p, p.carrier(), si);
  ASSERT_TRUE(r.holds);
  EXPECT_EQ(*r.union_ideal, si[0]);
}

TEST(UnionOfDirectedIdeals, IncompatiblePairIsRejectedAsNotDirected) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> si{Ideal{p.subset({"bot", "tt"})}, Ideal{p.subset({"bot", "ff"})}};
  const UnionCheckResult r = check_union_of_directed_ideals(c, si);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.rejection, UnionCheckResult::Rejection::not_directed);
  ASSERT_TRUE(r.directedness_witness.has_value());
  ASSERT_EQ(r.directedness_witness->size(), 2u);
  EXPECT_EQ(p.names_of((*r.directedness_witness)[0].members),
            (std::vector<std::string>{"bot", "ff"}));
  EXPECT_EQ(p.names_of((*r.directedness_witness)[1].members),
            (std::vector<std::string>{"bot", "tt"}));
}

TEST(UnionOfDirectedIdeals, NonIdealMemberIsRejected) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> si{Ideal{p.subset({"tt"})}};
  const UnionCheckResult r = check_union_of_directed_ideals(c, si);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.rejection, UnionCheckResult::Rejection::member_not_ideal);
  ASSERT_TRUE(r.offending_member.has_value());
  EXPECT_EQ(p.names_of(r.offending_member->members), std::vector<std::string>{"tt"});
}

TEST(UnionOfDirectedIdeals, EmptyFamilyIsNotDirected) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const UnionCheckResult r = check_union_of_directed_ideals(c, std::vector<Ideal>{});
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.rejection, UnionCheckResult::Rejection::not_directed);
  EXPECT_TRUE(r.directedness_witness->empty());
}

TEST(LubInCompletion, ChainJoinsAtItsLargestMember) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> chain{Ideal{p.subset({"bot"})}, Ideal{p.subset({"bot", "ff"})}};
  const auto lub = lub_in_completion(c, chain);
  ASSERT_TRUE(lub.has_value());
  EXPECT_EQ(*lub, chain[1]);
}

TEST(LubInCompletion, EmptyFamilyGivesBottomIdeal) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const auto lub = lub_in_completion(c, std::vector<Ideal>{});
  ASSERT_TRUE(lub.has_value());
  EXPECT_EQ(*lub, c.bottom());
}

TEST(LubInCompletion, IncompatiblePairHasNoUpperIdeal) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> si{Ideal{p.subset({"bot", "tt"})}, Ideal{p.subset({"bot", "ff"})}};
  EXPECT_FALSE(lub_in_completion(c, si).has_value());
}

TEST(LubInCompletion, UnknownIdealThrows) {
  const Poset p = flat_booleans();
  const Completion c = build_completion(p, p.carrier());
  const std::vector<Ideal> si{Ideal{p.subset({"tt"})}};
  EXPECT_THROW(lub_in_completion(c, si), IdealNotInCompletion);
}

// Two verification routes, one definitional, one replaying the
// construction: they must agree on every directed family, and the union
// must be the lub in the completion.
TEST(UnionOfDirectedIdeals, AgreesWithDefinitionalRouteExhaustively) {
  for (unsigned n = 1; n <= 4; ++n) {
    for_each_labeled_poset(n, [&](const Poset& p) {
      if (!check_finitary_basis(p, p.carrier()).is_basis) return;
      const Basis basis = require_basis(p, p.carrier());
      const Completion c = build_completion(basis);
      for_each_subset(ElementSet::first_n(unsigned(c.size())), [&](ElementSet nodes) {
        std::vector<Ideal> si;
        for (ElemId k : nodes) si.push_back(c.ideals()[k]);
        const bool directed = is_directed(c.inclusion_poset(), nodes).holds;
        const UnionCheckResult r = check_union_of_directed_ideals(c, si);
        if (!directed) {
          EXPECT_EQ(r.rejection, UnionCheckResult::Rejection::not_directed);
          return;
        }
        ASSERT_TRUE(r.holds);
        EXPECT_TRUE(is_ideal(basis, r.union_ideal->members).holds);
        const auto lub = lub_in_completion(c, si);
        ASSERT_TRUE(lub.has_value());
        EXPECT_EQ(*lub, *r.union_ideal);
      });
    });
  }
}

}  // namespace
