#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "pdt/axiomlab.hpp"
#include "pdt/engine.hpp"
#include "pdt/lottery.hpp"
#include "pdt/prefcore.hpp"

namespace pdt {

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

/// Preference file contents:
///
///     alt x        # universe declaration
///     a < b        # strict
///     a <= b       # weak
///     a ~ b        # equivalent
///
/// `#` starts a comment; ≺ ⪯ ≼ ≤ ∼ are accepted for < <= <= <= ~.
struct PrefDocument {
  struct FactEntry {
    PrefFact fact;
    Position pos;
  };
  struct Declaration {
    Alternative alternative;
    Position pos;
  };

  std::vector<FactEntry> facts;
  std::vector<Declaration> universe_decls;

  std::vector<PrefFact> fact_list() const;
  std::vector<Alternative> universe() const;
  BaseRelation relation() const { return BaseRelation::build(fact_list(), universe()); }

  /// Positions are ignored.
  friend bool operator==(const PrefDocument& a, const PrefDocument& b) {
    return a.fact_list() == b.fact_list() && a.universe() == b.universe();
  }
};

PrefDocument parse_prefs(std::string_view text);
std::string render_prefs(const PrefDocument& doc);

/// Lottery file contents, one entry per line:
///
///     f : a@1/3, b@2/3
///
/// Weights are non-negative integers or `p/q`; decimals are rejected.
struct LotteryDocument {
  struct Entry {
    std::string name;
    std::vector<Lottery::Entry> pairs;
    Position pos;

    friend bool operator==(const Entry& a, const Entry& b) { return a.name == b.name && a.pairs == b.pairs; }
  };

  std::vector<Entry> entries;

  const Entry* find(std::string_view name) const;
  /// Builds every entry; throws NotNormalized / EmptySupport.
  std::vector<NamedLottery> materialize(Normalize normalize) const;

  friend bool operator==(const LotteryDocument&, const LotteryDocument&) = default;
};

LotteryDocument parse_lotteries(std::string_view text);
std::string render_lotteries(const LotteryDocument& doc);

/// A lottery document interleaved with `<name> <= <name>` relation lines.
struct ModelDocument {
  struct Pair {
    std::string left;
    std::string right;
    Position pos;
  };

  LotteryDocument lotteries;
  std::vector<Pair> weak;

  /// Throws ForeignLottery for relation lines naming an unknown lottery.
  FiniteModel materialize(Normalize normalize) const;
};

ModelDocument parse_model(std::string_view text);

/// Canonical symbols joined by spaces; with `verbose`, one indented line
/// per fired rule follows.
std::string render_verdict(const AdmissibleSet& verdict, bool verbose = false);

}  // namespace pdt
