#include "pdt/prefcore.hpp"

#include <algorithm>
#include <cctype>

#include "pdt/error.hpp"

namespace pdt {

namespace {

// Decodes one UTF-8 code point; returns 0 bytes on malformed input.
std::pair<char32_t, std::size_t> decode_utf8(std::string_view s) {
  const auto b0 = static_cast<unsigned char>(s[0]);
  std::size_t len = 0;
  char32_t cp = 0;
  if (b0 < 0x80) return {b0, 1};
  if ((b0 & 0xE0) == 0xC0) {
    len = 2;
    cp = b0 & 0x1F;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3;
    cp = b0 & 0x0F;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4;
    cp = b0 & 0x07;
  } else {
    return {0, 0};
  }
  if (s.size() < len) return {0, 0};
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[i]);
    if ((b & 0xC0) != 0x80) return {0, 0};
    cp = (cp << 6) | (b & 0x3F);
  }
  return {cp, len};
}

bool is_symbol_code_point(char32_t cp) {
  return (cp >= 0x00A0 && cp <= 0x00BF) || cp == 0x00D7 || cp == 0x00F7 ||
         (cp >= 0x2000 && cp <= 0x206F) || (cp >= 0x2190 && cp <= 0x23FF) ||
         (cp >= 0x27C0 && cp <= 0x27FF) || (cp >= 0x2980 && cp <= 0x2AFF) || cp == 0x3000 ||
         cp == 0xFEFF;
}

}  // namespace

bool is_valid_id(std::string_view id) {
  if (id.empty()) return false;
  std::size_t i = 0;
  while (i < id.size()) {
    const auto [cp, len] = decode_utf8(id.substr(i));
    if (len == 0) return false;
    if (cp < 0x80) {
      if (!std::isalnum(static_cast<int>(cp)) && cp != '_' && cp != '-') return false;
    } else if (is_symbol_code_point(cp)) {
      return false;
    }
    i += len;
  }
  return true;
}

Alternative::Alternative(std::string id) : id_(std::move(id)) {
  if (!is_valid_id(id_)) throw MalformedId(id_);
}

BaseRelation::BaseRelation(std::vector<Alternative> universe, std::vector<std::uint8_t> matrix)
    : universe_(std::move(universe)), matrix_(std::move(matrix)) {
  for (std::size_t i = 0; i < universe_.size(); ++i) index_.emplace(universe_[i].id(), i);
}

void BaseRelation::close() {
  const std::size_t size = n();
  for (std::size_t i = 0; i < size; ++i) matrix_[i * size + i] = 1;
  // Warshall.
  for (std::size_t k = 0; k < size; ++k) {
    for (std::size_t i = 0; i < size; ++i) {
      if (!matrix_[i * size + k]) continue;
      for (std::size_t j = 0; j < size; ++j) {
        if (matrix_[k * size + j]) matrix_[i * size + j] = 1;
      }
    }
  }
}

BaseRelation BaseRelation::build(std::span<const PrefFact> facts,
                                 std::span<const Alternative> extra_universe) {
  std::vector<Alternative> universe(extra_universe.begin(), extra_universe.end());
  for (const auto& fact : facts) {
    universe.push_back(fact.left);
    universe.push_back(fact.right);
  }
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

  const std::size_t size = universe.size();
  BaseRelation rel(std::move(universe), std::vector<std::uint8_t>(size * size, 0));
  for (const auto& fact : facts) {
    const std::size_t i = rel.index_of(fact.left);
    const std::size_t j = rel.index_of(fact.right);
    rel.matrix_[i * size + j] = 1;
    if (fact.kind == FactKind::Equiv) rel.matrix_[j * size + i] = 1;
  }
  rel.close();
  for (const auto& fact : facts) {
    if (fact.kind != FactKind::Strict) continue;
    if (rel.weak(rel.index_of(fact.right), rel.index_of(fact.left))) {
      throw StrictViolation(fact.left.id(), fact.right.id());
    }
  }
  return rel;
}

BaseRelation BaseRelation::from_pairs(std::span<const Alternative> universe,
                                      std::span<const std::pair<Alternative, Alternative>> pairs) {
  std::vector<PrefFact> facts;
  facts.reserve(pairs.size());
  for (const auto& [a, b] : pairs) facts.push_back({FactKind::Weak, a, b});
  return build(facts, universe);
}

std::size_t BaseRelation::index_of(const Alternative& a) const {
  const auto it = index_.find(a.id());
  if (it == index_.end()) throw UnknownAlternative(a.id());
  return it->second;
}

bool BaseRelation::weak(const Alternative& a, const Alternative& b) const {
  return weak(index_of(a), index_of(b));
}

RelKind BaseRelation::classify(std::size_t i, std::size_t j) const {
  const bool forward = weak(i, j);
  const bool backward = weak(j, i);
  if (forward && backward) return RelKind::Equiv;
  if (forward) return RelKind::Less;
  if (backward) return RelKind::Greater;
  return RelKind::Incomp;
}

std::size_t BaseRelation::closure_size() const {
  return static_cast<std::size_t>(std::count(matrix_.begin(), matrix_.end(), std::uint8_t{1}));
}

std::vector<std::pair<Alternative, Alternative>> BaseRelation::weak_pairs() const {
  std::vector<std::pair<Alternative, Alternative>> out;
  for (std::size_t i = 0; i < n(); ++i) {
    for (std::size_t j = 0; j < n(); ++j) {
      if (weak(i, j)) out.emplace_back(universe_[i], universe_[j]);
    }
  }
  return out;
}

RelKind classify(const BaseRelation& rel, const Alternative& a, const Alternative& b) {
  return rel.classify(rel.index_of(a), rel.index_of(b));
}

}  // namespace pdt
