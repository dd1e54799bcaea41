#include <gtest/gtest.h>

#include "pdt/error.hpp"
#include "pdt/prefcore.hpp"
#include "support.hpp"

namespace pdt {
namespace {

using testing::alt;

PrefFact strict(const char* a, const char* b) { return {FactKind::Strict, alt(a), alt(b)}; }
PrefFact weak(const char* a, const char* b) { return {FactKind::Weak, alt(a), alt(b)}; }
PrefFact equiv(const char* a, const char* b) { return {FactKind::Equiv, alt(a), alt(b)}; }

TEST(BaseRelationTest, StrictFactsChainTransitively) {
  const std::vector<PrefFact> facts{strict("a", "b"), strict("b", "c")};
  const auto rel = BaseRelation::build(facts);
  EXPECT_TRUE(rel.weak(alt("a"), alt("c")));
  EXPECT_EQ(classify(rel, alt("a"), alt("c")), RelKind::Less);
  EXPECT_EQ(classify(rel, alt("c"), alt("a")), RelKind::Greater);
}

TEST(BaseRelationTest, EmptyRelationLeavesDistinctAlternativesIncomparable) {
  const std::vector<Alternative> universe{alt("a"), alt("b")};
  const auto rel = BaseRelation::build({}, universe);
  const auto pairs = rel.weak_pairs();
  ASSERT_EQ(pairs.size(), 2U);
  EXPECT_EQ(pairs[0], std::pair(alt("a"), alt("a")));
  EXPECT_EQ(pairs[1], std::pair(alt("b"), alt("b")));
  EXPECT_EQ(classify(rel, alt("a"), alt("b")), RelKind::Incomp);
}

TEST(BaseRelationTest, StrictFactContradictedByClosureIsRejected) {
  const std::vector<PrefFact> facts{strict("a", "b"), weak("b", "a")};
  try {
    BaseRelation::build(facts);
    FAIL() << "expected StrictViolation";
  } catch (const StrictViolation& e) {
    EXPECT_EQ(e.left(), "a");
    EXPECT_EQ(e.right(), "b");
  }
}

TEST(BaseRelationTest, StrictViolationThroughLongerCycle) {
  const std::vector<PrefFact> facts{strict("a", "b"), weak("b", "c"), equiv("c", "a")};
  EXPECT_THROW(BaseRelation::build(facts), StrictViolation);
}

TEST(BaseRelationTest, ClassifyBasics) {
  const std::vector<PrefFact> facts{strict("a", "b"), equiv("b", "c")};
  const std::vector<Alternative> extra{alt("z")};
  const auto rel = BaseRelation::build(facts, extra);
  EXPECT_EQ(classify(rel, alt("a"), alt("a")), RelKind::Equiv);
  EXPECT_EQ(classify(rel, alt("a"), alt("b")), RelKind::Less);
  EXPECT_EQ(classify(rel, alt("b"), alt("a")), RelKind::Greater);
  EXPECT_EQ(classify(rel, alt("b"), alt("c")), RelKind::Equiv);
  EXPECT_EQ(classify(rel, alt("a"), alt("c")), RelKind::Less);
  EXPECT_EQ(classify(rel, alt("z"), alt("a")), RelKind::Incomp);
  EXPECT_THROW(classify(rel, alt("a"), alt("nope")), UnknownAlternative);
}

TEST(AlternativeTest, IdentifierRules) {
  EXPECT_NO_THROW(Alternative("carl_one-to-one2"));
  EXPECT_NO_THROW(Alternative("größe"));
  EXPECT_NO_THROW(Alternative("選択"));
  EXPECT_THROW(Alternative(""), MalformedId);
  EXPECT_THROW(Alternative("a b"), MalformedId);
  EXPECT_THROW(Alternative("a<b"), MalformedId);
  EXPECT_THROW(Alternative("a≺b"), MalformedId);
  EXPECT_THROW(Alternative("a.b"), MalformedId);
  EXPECT_THROW(Alternative("\xff"), MalformedId);
}

TEST(KindSetTest, RenderParseAndMirror) {
  const KindSet s{RelKind::Incomp, RelKind::Equiv, RelKind::Less};
  EXPECT_EQ(s.str(), "~ < #");
  EXPECT_EQ(KindSet::parse("~ < #"), s);
  EXPECT_EQ(KindSet::parse("∼ ≺ #"), s);
  EXPECT_EQ(s.mirrored().str(), "~ > #");
  EXPECT_EQ(KindSet::all().size(), 4);
  EXPECT_FALSE(KindSet::parse("~ x").has_value());
}

// Invariants over random preorders on up to 8 alternatives.
TEST(BaseRelationProperty, MirrorIdempotenceAndStrictTransitivity) {
  testing::Rng rng(20240611);
  for (int iter = 0; iter < 300; ++iter) {
    const auto alts = testing::alternatives(1 + iter % 8);
    const auto rel = testing::random_preorder(rng, alts);
    const std::size_t n = rel.size();

    const auto pairs = rel.weak_pairs();
    EXPECT_EQ(BaseRelation::from_pairs(rel.universe(), pairs), rel);

    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_TRUE(rel.weak(i, i));
      for (std::size_t j = 0; j < n; ++j) {
        EXPECT_EQ(rel.classify(i, j), mirror(rel.classify(j, i)));
        for (std::size_t k = 0; k < n; ++k) {
          if (rel.weak(i, j) && rel.weak(j, k)) EXPECT_TRUE(rel.weak(i, k));
          if (rel.classify(i, j) == RelKind::Less && rel.classify(j, k) == RelKind::Less) {
            EXPECT_EQ(rel.classify(i, k), RelKind::Less);
          }
        }
      }
    }
  }
}

TEST(BaseRelationTest, EnumeratesTwentyNinePreordersOnThree) {
  // Known count of labeled preorders on a 3-element set.
  EXPECT_EQ(testing::all_preorders(testing::alternatives(3)).size(), 29U);
}

}  // namespace
}  // namespace pdt
