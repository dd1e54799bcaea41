#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pdt/prefcore.hpp"
#include "pdt/rational.hpp"

namespace pdt {

enum class Normalize : bool { No = false, Yes = true };

/// Finite-support probability distribution over alternatives.
///
/// Entries are kept sorted by alternative id, every weight is strictly
/// positive and the weights sum to exactly 1, so two lotteries are equal
/// iff their entry vectors are equal.
class Lottery {
 public:
  using Entry = std::pair<Alternative, Rational>;

  /// Duplicates are summed and zero weights dropped. Without normalization
  /// the sum must be exactly 1 (NotNormalized). Throws NegativeWeight and
  /// EmptySupport.
  static Lottery make(std::span<const Entry> pairs, Normalize normalize = Normalize::No);
  /// The degenerate lottery [a].
  static Lottery degenerate(const Alternative& a);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  /// Probability of `a`; zero outside the support.
  Rational weight(const Alternative& a) const;
  std::vector<Alternative> support() const;
  bool is_degenerate() const noexcept { return entries_.size() == 1; }

  /// `a@1/3, b@2/3`
  std::string str() const;

  friend bool operator==(const Lottery&, const Lottery&) = default;
  friend auto operator<=>(const Lottery& a, const Lottery& b) { return a.entries_ <=> b.entries_; }

 private:
  explicit Lottery(std::vector<Entry> entries) : entries_(std::move(entries)) {}
  std::vector<Entry> entries_;

  friend Lottery convex_combine(const Rational& alpha, const Lottery& f, const Lottery& g);
};

/// The pointwise mixture alpha*f + (1-alpha)*g. Throws AlphaOutOfRange.
Lottery convex_combine(const Rational& alpha, const Lottery& f, const Lottery& g);

/// The unique alpha in the open interval (0,1) with h = alpha*f + (1-alpha)*g,
/// if any. Throws DegeneratePair when f == g.
std::optional<Rational> decompose(const Lottery& h, const Lottery& f, const Lottery& g);

/// A lottery with a caller-chosen name (offers, model members).
struct NamedLottery {
  std::string name;
  Lottery lottery;
};

}  // namespace pdt
