#pragma once

// Generators and independent oracles shared by the unit and acceptance
// suites. Nothing here calls the engine code paths it is used to check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pdt/axiomlab.hpp"
#include "pdt/lottery.hpp"
#include "pdt/prefcore.hpp"
#include "pdt/saturate.hpp"

namespace pdt::testing {

using Rng = std::mt19937_64;

Alternative alt(const std::string& id);
Lottery deg(const std::string& id);
/// Lottery from `{"a", 1, 3}`-style triples: weight numerator/denominator.
struct W {
  std::string id;
  long num;
  long den;
};
Lottery lot(std::initializer_list<W> weights);

/// Alternatives named a0, a1, ...
std::vector<Alternative> alternatives(std::size_t n);

/// Every preorder on the given alternatives.
std::vector<BaseRelation> all_preorders(const std::vector<Alternative>& alts);
/// Closure of random weak/strict facts; strict violations are retried.
BaseRelation random_preorder(Rng& rng, const std::vector<Alternative>& alts);
/// Random total preorder together with a utility that represents it.
struct TotalPreorder {
  BaseRelation rel;
  std::vector<long> utility;  // parallel to alts
};
TotalPreorder random_total_preorder(Rng& rng, const std::vector<Alternative>& alts);

/// All lotteries with weights in multiples of 1/grid.
std::vector<Lottery> all_grid_lotteries(const std::vector<Alternative>& alts, long grid);
Lottery random_grid_lottery(Rng& rng, const std::vector<Alternative>& alts, long grid);

/// Breadth-first search over single shifts of one grid step from an
/// alternative to a strictly preferred one. True iff g is reachable from f
/// in at least one step. Both lotteries must lie on the grid.
bool shift_reachable_by_search(const BaseRelation& rel, const Lottery& f, const Lottery& g, long grid);

/// Expected utility of a lottery; `utility` is parallel to `alts`.
Rational expected_utility(const Lottery& l, const std::vector<Alternative>& alts, const std::vector<long>& utility);

/// Model whose weak relation is {(f,g) : EU(f) <= EU(g)}.
FiniteModel expected_utility_model(const std::vector<Lottery>& family, const std::vector<Alternative>& alts,
                                   const std::vector<long>& utility);
/// Model with only the reflexive pairs.
FiniteModel empty_relation_model(const std::vector<Lottery>& family);

/// Brute-force enumeration of every axiom instance whose mixtures are
/// family members, built once per family and evaluated per relation.
class InstanceOracle {
 public:
  explicit InstanceOracle(const std::vector<Lottery>& family);
  /// Number of instances the model fails.
  std::size_t failures(const FiniteModel& model) const;

 private:
  struct Segment {
    std::size_t f;
    std::size_t g;
    std::vector<std::pair<Rational, std::size_t>> points;
  };
  struct Mix {
    std::size_t f1, f2, g1, g2, left, right;
  };
  std::size_t n_;
  std::vector<Segment> segments_;
  std::vector<Mix> mixes_;
};

/// A random family of at most `max_size` lotteries built from a few base
/// lotteries plus the grid points on the segments between them.
std::vector<Lottery> random_segment_family(Rng& rng, const std::vector<Alternative>& alts, std::size_t max_size);

/// Checks every stored derivation step by step: premises derived earlier,
/// seeds re-established from the base relation, and each mixture
/// conclusion recomputed with convex_combine. Returns an empty string when
/// all steps replay, otherwise a description of the first bad step.
std::string replay_derivations(const BaseRelation& rel, const DerivedFacts& facts);

}  // namespace pdt::testing
