#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pdt/engine.hpp"
#include "pdt/lottery.hpp"
#include "pdt/prefcore.hpp"
#include "pdt/relkind.hpp"

namespace pdt {

/// An explicit candidate relation `weak` over a finite family.
struct FiniteModel {
  std::vector<Lottery> family;
  std::vector<std::pair<std::size_t, std::size_t>> weak;
  /// Optional display names, parallel to `family`.
  std::vector<std::string> names;

  std::string name_of(std::size_t i) const;
};

enum class Axiom { Reflexivity, Transitivity, MixtureOrder, Independence, StrictIndependence, Persistence };

/// "A1'", "A2", ..., "A6".
std::string axiom_id(Axiom axiom);

/// A failed axiom instance. Witness layout per axiom:
///   A1': (f)          A2: (f, g, h)       A3: (f, g) with alpha < beta
///   A4/A5/A6: (f1, f2, g1, g2) with alpha
/// Mixture sides are alpha*first + (1-alpha)*second.
struct AxiomViolation {
  Axiom axiom;
  std::vector<std::size_t> witnesses;
  std::optional<Rational> alpha;
  std::optional<Rational> beta;

  std::string describe(const FiniteModel& model) const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Every instance of A1'-A6 whose mixtures are family members and that the
/// model fails. `rel` only supplies context; supports must lie in its
/// universe. Throws ForeignLottery for out-of-range pair indices.
std::vector<AxiomViolation> check_axioms(const FiniteModel& model, const BaseRelation& rel);

/// Re-evaluates one violation against the model; true if it still fails.
bool replay_violation(const FiniteModel& model, const AxiomViolation& violation);

/// Draw judgments (f1,g1), (f1,g2), (f2,g1), (f2,g2).
struct CaseTuple {
  std::array<RelKind, 4> draws;

  /// Swaps the roles of f and g.
  CaseTuple mirrored() const;
  /// Four symbols, e.g. "~<>#".
  std::string str() const;
  static std::optional<CaseTuple> parse(std::string_view text);

  friend bool operator==(const CaseTuple&, const CaseTuple&) = default;
  friend auto operator<=>(const CaseTuple&, const CaseTuple&) = default;
};

/// Draw tuples realizable by some preorder on {f1, f2, g1, g2}, in
/// lexicographic order under ~ < > #.
std::vector<CaseTuple> consistent_tuples();
bool is_consistent(const CaseTuple& t);

/// Judgments between alpha*f1 + (1-alpha)*f2 and alpha*g1 + (1-alpha)*g2,
/// alpha in (0,1), not refuted by A4-A6. Throws InconsistentTuple.
KindSet admissible_outcomes(const CaseTuple& t);

struct TableRow {
  CaseTuple tuple;
  KindSet outcomes;
  friend bool operator==(const TableRow&, const TableRow&) = default;
};

std::vector<TableRow> regenerate_table();

/// `~~## -> ~ #`, one row per line.
std::string render_table(std::span<const TableRow> rows);
/// Inverse of render_table; also accepts the unicode symbols and CRLF.
/// Throws SyntaxError.
std::vector<TableRow> parse_table(std::string_view text);

struct TableDiff {
  CaseTuple tuple;
  std::optional<KindSet> expected;
  std::optional<KindSet> actual;
};

std::vector<TableDiff> diff_table(std::span<const TableRow> expected, std::span<const TableRow> actual);
std::string render_diff(std::span<const TableDiff> diffs);

/// The hand transcription shipped with the library.
std::string_view embedded_table_text();

/// Throws TableMismatch listing every differing row.
void verify_table(std::span<const TableRow> expected);

}  // namespace pdt
