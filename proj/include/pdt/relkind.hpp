#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pdt {

/// The four possible judgments between two items, in canonical order.
enum class RelKind : std::uint8_t { Equiv = 0, Less = 1, Greater = 2, Incomp = 3 };

inline constexpr std::array<RelKind, 4> kAllKinds = {RelKind::Equiv, RelKind::Less, RelKind::Greater,
                                                     RelKind::Incomp};

/// Less <-> Greater; Equiv and Incomp are fixed points.
constexpr RelKind mirror(RelKind k) {
  switch (k) {
    case RelKind::Less:
      return RelKind::Greater;
    case RelKind::Greater:
      return RelKind::Less;
    default:
      return k;
  }
}

/// ASCII symbol: one of `~ < > #`.
constexpr char symbol(RelKind k) {
  constexpr char kSymbols[] = {'~', '<', '>', '#'};
  return kSymbols[static_cast<int>(k)];
}

std::optional<RelKind> kind_from_symbol(char c);

/// Accepts the ASCII symbols and the unicode forms ∼ ≺ ≻ (and # as is).
/// Returns the kind plus the number of bytes consumed.
std::optional<std::pair<RelKind, std::size_t>> kind_from_utf8(std::string_view text);

/// A small set of RelKind values, iterated in canonical order.
class KindSet {
 public:
  constexpr KindSet() = default;
  constexpr KindSet(std::initializer_list<RelKind> kinds) {
    for (const RelKind k : kinds) insert(k);
  }
  static constexpr KindSet all() { return KindSet(0x0F); }

  constexpr bool contains(RelKind k) const { return (bits_ >> static_cast<int>(k)) & 1U; }
  constexpr void insert(RelKind k) { bits_ |= static_cast<std::uint8_t>(1U << static_cast<int>(k)); }
  constexpr void erase(RelKind k) { bits_ &= static_cast<std::uint8_t>(~(1U << static_cast<int>(k))); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const {
    int n = 0;
    for (std::uint8_t b = bits_; b != 0; b &= static_cast<std::uint8_t>(b - 1)) ++n;
    return n;
  }
  constexpr bool subset_of(KindSet other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr KindSet intersect(KindSet other) const { return KindSet(bits_ & other.bits_); }
  constexpr KindSet minus(KindSet other) const { return KindSet(bits_ & ~other.bits_); }
  constexpr KindSet mirrored() const {
    KindSet out;
    for (const RelKind k : kAllKinds) {
      if (contains(k)) out.insert(mirror(k));
    }
    return out;
  }
  std::vector<RelKind> members() const;
  constexpr std::uint8_t bits() const { return bits_; }

  /// Symbols joined by single spaces, canonical order; e.g. "~ #".
  std::string str() const;
  /// Parses the rendering produced by str(); tolerant of extra whitespace.
  static std::optional<KindSet> parse(std::string_view text);

  friend constexpr bool operator==(KindSet a, KindSet b) = default;

 private:
  constexpr explicit KindSet(unsigned bits) : bits_(static_cast<std::uint8_t>(bits & 0x0F)) {}
  std::uint8_t bits_ = 0;
};

}  // namespace pdt
