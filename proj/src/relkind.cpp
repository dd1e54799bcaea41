#include "pdt/relkind.hpp"

namespace pdt {

std::optional<RelKind> kind_from_symbol(char c) {
  switch (c) {
    case '~':
      return RelKind::Equiv;
    case '<':
      return RelKind::Less;
    case '>':
      return RelKind::Greater;
    case '#':
      return RelKind::Incomp;
    default:
      return std::nullopt;
  }
}

std::optional<std::pair<RelKind, std::size_t>> kind_from_utf8(std::string_view text) {
  if (text.empty()) return std::nullopt;
  if (auto k = kind_from_symbol(text.front())) return std::pair{*k, std::size_t{1}};
  struct Alias {
    std::string_view utf8;
    RelKind kind;
  };
  static constexpr Alias kAliases[] = {
      {"∼", RelKind::Equiv},    // ∼
      {"≺", RelKind::Less},     // ≺
      {"≻", RelKind::Greater},  // ≻
  };
  for (const auto& alias : kAliases) {
    if (text.starts_with(alias.utf8)) return std::pair{alias.kind, alias.utf8.size()};
  }
  return std::nullopt;
}

std::vector<RelKind> KindSet::members() const {
  std::vector<RelKind> out;
  for (const RelKind k : kAllKinds) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

std::string KindSet::str() const {
  std::string out;
  for (const RelKind k : members()) {
    if (!out.empty()) out += ' ';
    out += symbol(k);
  }
  return out;
}

std::optional<KindSet> KindSet::parse(std::string_view text) {
  KindSet out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t') {
      ++i;
      continue;
    }
    const auto k = kind_from_utf8(text.substr(i));
    if (!k) return std::nullopt;
    out.insert(k->first);
    i += k->second;
  }
  return out;
}

}  // namespace pdt
