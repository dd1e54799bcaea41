#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdt/engine.hpp"
#include "pdt/lottery.hpp"
#include "pdt/prefcore.hpp"

namespace pdt {

/// `left <= right` (or `left < right` when strict), by index into
/// DerivedFacts::lotteries.
struct Fact {
  std::size_t left;
  std::size_t right;
  bool strict;

  friend auto operator<=>(const Fact&, const Fact&) = default;
};

enum class DerivationRule {
  Reflexivity,         // f <= f
  Dominance,           // every support pair weakly ordered
  Shift,               // transport witness
  Transitivity,        // A2
  MixtureOrder,        // A3
  Independence,        // A4
  StrictIndependence,  // A5
};

std::string derivation_rule_name(DerivationRule rule);

/// How one fact was obtained. `witnesses` holds the lotteries the axiom
/// instance is about: (f, g) for A3 and the seeds, (f1, f2, g1, g2) for
/// A4/A5 where f1 == f2 or g1 == g2 is allowed, (f, g, h) for A2.
/// For A3, `alpha` and `beta` are the mixture coefficients of the lower
/// and upper conclusion sides (beta > alpha).
struct Derivation {
  DerivationRule rule;
  std::vector<Fact> premises;
  std::vector<std::size_t> witnesses;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;
  std::optional<TransportPlan> plan;
  std::size_t step = 0;
};

/// Least fixpoint of the derivation rules over a finite family.
///
/// `lotteries` starts with the (deduplicated) family, followed by the
/// degenerate lotteries of support alternatives that were added as
/// auxiliary rule witnesses. `weak` and `strict` only mention the first
/// `family_size` entries; `derivations` covers every derived fact.
struct DerivedFacts {
  std::vector<Lottery> lotteries;
  std::size_t family_size = 0;
  std::set<std::pair<std::size_t, std::size_t>> weak;
  std::set<std::pair<std::size_t, std::size_t>> strict;
  std::map<Fact, Derivation> derivations;

  bool is_weak(std::size_t f, std::size_t g) const { return weak.contains({f, g}); }
  bool is_strict(std::size_t f, std::size_t g) const { return strict.contains({f, g}); }
};

DerivedFacts saturate(const BaseRelation& rel, std::span<const Lottery> family);

}  // namespace pdt
