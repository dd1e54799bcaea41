#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdt/lottery.hpp"
#include "pdt/prefcore.hpp"
#include "pdt/rational.hpp"
#include "pdt/relkind.hpp"

namespace pdt {

using AltPair = std::pair<Alternative, Alternative>;

/// Classification of every pair in supp(f) x supp(g).
std::map<AltPair, RelKind> cross_profile(const BaseRelation& rel, const Lottery& f, const Lottery& g);

/// True iff [a] <= [a'] for every a in supp(f) and a' in supp(g).
bool dominates(const BaseRelation& rel, const Lottery& f, const Lottery& g);

/// Mass moved from a source alternative to a target alternative. Diagonal
/// entries are mass that stays put; every off-diagonal move goes to a
/// strictly preferred alternative.
struct TransportPlan {
  std::map<AltPair, Rational> moves;

  /// Checks marginals and strictness of every off-diagonal move, and that
  /// at least one strict move carries mass.
  bool witnesses(const BaseRelation& rel, const Lottery& f, const Lottery& g) const;
  std::string str() const;
};

/// A witness that f can be turned into g by shifting probability mass to
/// strictly preferred alternatives, or nullopt. Decided by exact max-flow
/// from the alternatives where f exceeds g to those where g exceeds f.
std::optional<TransportPlan> shift_reachable(const BaseRelation& rel, const Lottery& f, const Lottery& g);

enum class Rule {
  Identity,        // f == g
  Dominance,       // R1: f dominates-below g
  ReverseDominance,  // R2
  Shift,           // R3: f shifts up to g
  ReverseShift,    // R3 mirrored
  NoLessPair,      // R4
  NoGreaterPair,   // R5
};

std::string rule_name(Rule rule);

struct RuleFiring {
  Rule rule;
  KindSet removed;
  std::optional<TransportPlan> plan;
};

/// Judgments between two lotteries not refuted by the elimination rules.
struct AdmissibleSet {
  KindSet members;
  std::vector<RuleFiring> provenance;
};

AdmissibleSet compare(const BaseRelation& rel, const Lottery& f, const Lottery& g);

/// Offers not certainly strictly dominated by another offer, in input order.
/// Throws DuplicateOfferName.
std::vector<NamedLottery> maximal_filter(const BaseRelation& rel, std::span<const NamedLottery> offers);

}  // namespace pdt
