#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pdt/relkind.hpp"

namespace pdt {

/// True when `id` is a nonempty run of letters, digits, '_' or '-'.
/// Any non-ASCII code point outside the math-operator, arrow and
/// punctuation blocks counts as a letter.
bool is_valid_id(std::string_view id);

/// An atomic outcome, identified by name.
class Alternative {
 public:
  explicit Alternative(std::string id);
  const std::string& id() const noexcept { return id_; }

  friend bool operator==(const Alternative&, const Alternative&) = default;
  friend std::strong_ordering operator<=>(const Alternative& a, const Alternative& b) {
    return a.id_.compare(b.id_) <=> 0;
  }

 private:
  std::string id_;
};

enum class FactKind : std::uint8_t { Weak, Strict, Equiv };

/// A declared preference between two alternatives.
struct PrefFact {
  FactKind kind;
  Alternative left;
  Alternative right;

  friend bool operator==(const PrefFact&, const PrefFact&) = default;
};

/// Reflexive-transitive closure of declared facts over a finite universe.
/// Immutable once built.
class BaseRelation {
 public:
  /// Closes the declared facts; alternatives are the ones mentioned in
  /// `facts` plus `extra_universe`. Throws StrictViolation.
  static BaseRelation build(std::span<const PrefFact> facts,
                            std::span<const Alternative> extra_universe = {});

  /// Rebuilds from an explicit pair list (pairs are closed again).
  static BaseRelation from_pairs(std::span<const Alternative> universe,
                                 std::span<const std::pair<Alternative, Alternative>> pairs);

  const std::vector<Alternative>& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return universe_.size(); }
  bool contains(const Alternative& a) const { return index_.contains(a.id()); }

  /// Index of `a` in universe(); throws UnknownAlternative.
  std::size_t index_of(const Alternative& a) const;

  /// [a] <= [b]; throws UnknownAlternative.
  bool weak(const Alternative& a, const Alternative& b) const;
  bool weak(std::size_t i, std::size_t j) const { return matrix_[i * n() + j] != 0; }
  bool strict(std::size_t i, std::size_t j) const { return weak(i, j) && !weak(j, i); }

  RelKind classify(std::size_t i, std::size_t j) const;

  /// Number of ordered pairs in the closed relation (reflexive pairs included).
  std::size_t closure_size() const;
  /// Closed pair set in universe order.
  std::vector<std::pair<Alternative, Alternative>> weak_pairs() const;

  friend bool operator==(const BaseRelation& a, const BaseRelation& b) {
    return a.universe_ == b.universe_ && a.matrix_ == b.matrix_;
  }

 private:
  BaseRelation(std::vector<Alternative> universe, std::vector<std::uint8_t> matrix);
  std::size_t n() const noexcept { return universe_.size(); }
  void close();

  std::vector<Alternative> universe_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::uint8_t> matrix_;
};

/// Four-way classification of [a] against [b]; throws UnknownAlternative.
RelKind classify(const BaseRelation& rel, const Alternative& a, const Alternative& b);

}  // namespace pdt
