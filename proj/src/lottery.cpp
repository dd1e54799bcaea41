#include "pdt/lottery.hpp"

#include <algorithm>
#include <map>

#include "pdt/error.hpp"

namespace pdt {

Lottery Lottery::make(std::span<const Entry> pairs, Normalize normalize) {
  std::map<Alternative, Rational> merged;
  Rational total;
  for (const auto& [alt, w] : pairs) {
    if (w.sign() < 0) throw NegativeWeight(alt.id());
    merged[alt] += w;
    total += w;
  }
  if (total.is_zero()) throw EmptySupport();
  if (normalize == Normalize::No && total != Rational(1)) throw NotNormalized(total.str());

  std::vector<Entry> entries;
  for (auto& [alt, w] : merged) {
    if (w.is_zero()) continue;
    entries.emplace_back(alt, normalize == Normalize::Yes ? w / total : w);
  }
  return Lottery(std::move(entries));
}

Lottery Lottery::degenerate(const Alternative& a) { return Lottery({{a, Rational(1)}}); }

Rational Lottery::weight(const Alternative& a) const {
  const auto it = std::lower_bound(entries_.begin(), entries_.end(), a,
                                   [](const Entry& e, const Alternative& key) { return e.first < key; });
  if (it != entries_.end() && it->first == a) return it->second;
  return Rational();
}

std::vector<Alternative> Lottery::support() const {
  std::vector<Alternative> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.first);
  return out;
}

std::string Lottery::str() const {
  std::string out;
  for (const auto& [alt, w] : entries_) {
    if (!out.empty()) out += ", ";
    out += alt.id() + "@" + w.str();
  }
  return out;
}

Lottery convex_combine(const Rational& alpha, const Lottery& f, const Lottery& g) {
  if (alpha.sign() < 0 || alpha > Rational(1)) throw AlphaOutOfRange(alpha.str());
  const Rational beta = Rational(1) - alpha;
  std::map<Alternative, Rational> mixed;
  for (const auto& [alt, w] : f.entries()) mixed[alt] += alpha * w;
  for (const auto& [alt, w] : g.entries()) mixed[alt] += beta * w;
  std::vector<Lottery::Entry> entries;
  for (auto& [alt, w] : mixed) {
    if (!w.is_zero()) entries.emplace_back(alt, std::move(w));
  }
  return Lottery(std::move(entries));
}

std::optional<Rational> decompose(const Lottery& h, const Lottery& f, const Lottery& g) {
  if (f == g) throw DegeneratePair();
  // h - g = alpha (f - g), pointwise over the union of supports.
  std::vector<Alternative> keys;
  for (const auto* l : {&h, &f, &g}) {
    for (const auto& e : l->entries()) keys.push_back(e.first);
  }
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  std::optional<Rational> alpha;
  for (const auto& a : keys) {
    const Rational diff = f.weight(a) - g.weight(a);
    const Rational target = h.weight(a) - g.weight(a);
    if (diff.is_zero()) {
      if (!target.is_zero()) return std::nullopt;
      continue;
    }
    const Rational candidate = target / diff;
    if (alpha && *alpha != candidate) return std::nullopt;
    alpha = candidate;
  }
  if (!alpha || alpha->sign() <= 0 || *alpha >= Rational(1)) return std::nullopt;
  return alpha;
}

}  // namespace pdt
