#include "pdt/engine.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "pdt/error.hpp"

namespace pdt {

namespace {

std::vector<Alternative> union_support(const Lottery& f, const Lottery& g) {
  std::vector<Alternative> keys = f.support();
  for (const auto& a : g.support()) keys.push_back(a);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

void require_support(const BaseRelation& rel, const Lottery& l) {
  for (const auto& [a, w] : l.entries()) rel.index_of(a);
}

// Dense Edmonds-Karp over exact rationals. Node 0 is the source and node
// size-1 the sink.
class FlowNetwork {
 public:
  explicit FlowNetwork(std::size_t size) : size_(size), capacity_(size * size), flow_(size * size) {}

  void add_edge(std::size_t from, std::size_t to, const Rational& cap) { capacity_[from * size_ + to] += cap; }

  Rational max_flow() {
    const std::size_t sink = size_ - 1;
    Rational total;
    for (;;) {
      std::vector<std::optional<std::size_t>> parent(size_);
      parent[0] = 0;
      std::queue<std::size_t> frontier;
      frontier.push(0);
      while (!frontier.empty() && !parent[sink]) {
        const std::size_t u = frontier.front();
        frontier.pop();
        for (std::size_t v = 0; v < size_; ++v) {
          if (!parent[v] && residual(u, v).sign() > 0) {
            parent[v] = u;
            frontier.push(v);
          }
        }
      }
      if (!parent[sink]) return total;
      Rational bottleneck;
      bool first = true;
      for (std::size_t v = sink; v != 0; v = *parent[v]) {
        const Rational r = residual(*parent[v], v);
        if (first || r < bottleneck) bottleneck = r;
        first = false;
      }
      for (std::size_t v = sink; v != 0; v = *parent[v]) {
        const std::size_t u = *parent[v];
        flow_[u * size_ + v] += bottleneck;
        flow_[v * size_ + u] -= bottleneck;
      }
      total += bottleneck;
    }
  }

  const Rational& flow(std::size_t from, std::size_t to) const { return flow_[from * size_ + to]; }

 private:
  Rational residual(std::size_t u, std::size_t v) const {
    return capacity_[u * size_ + v] - flow_[u * size_ + v];
  }

  std::size_t size_;
  std::vector<Rational> capacity_;
  std::vector<Rational> flow_;
};

}  // namespace

std::map<AltPair, RelKind> cross_profile(const BaseRelation& rel, const Lottery& f, const Lottery& g) {
  std::map<AltPair, RelKind> out;
  for (const auto& [a, wa] : f.entries()) {
    const std::size_t i = rel.index_of(a);
    for (const auto& [b, wb] : g.entries()) {
      out.emplace(AltPair{a, b}, rel.classify(i, rel.index_of(b)));
    }
  }
  return out;
}

bool dominates(const BaseRelation& rel, const Lottery& f, const Lottery& g) {
  require_support(rel, f);
  require_support(rel, g);
  for (const auto& [a, wa] : f.entries()) {
    for (const auto& [b, wb] : g.entries()) {
      if (!rel.weak(a, b)) return false;
    }
  }
  return true;
}

bool TransportPlan::witnesses(const BaseRelation& rel, const Lottery& f, const Lottery& g) const {
  std::map<Alternative, Rational> rows;
  std::map<Alternative, Rational> cols;
  bool moved = false;
  for (const auto& [pair, mass] : moves) {
    const auto& [source, target] = pair;
    if (mass.sign() < 0) return false;
    if (!rel.contains(source) || !rel.contains(target)) return false;
    if (source != target) {
      if (classify(rel, source, target) != RelKind::Less) return false;
      if (mass.sign() > 0) moved = true;
    }
    rows[source] += mass;
    cols[target] += mass;
  }
  for (const auto& a : union_support(f, g)) {
    if (rows[a] != f.weight(a) || cols[a] != g.weight(a)) return false;
  }
  for (const auto& [a, w] : rows) {
    if (w != f.weight(a)) return false;
  }
  for (const auto& [a, w] : cols) {
    if (w != g.weight(a)) return false;
  }
  return moved;
}

std::string TransportPlan::str() const {
  std::string out;
  for (const auto& [pair, mass] : moves) {
    if (pair.first == pair.second || mass.is_zero()) continue;
    if (!out.empty()) out += ", ";
    out += pair.first.id() + "->" + pair.second.id() + " " + mass.str();
  }
  return out;
}

std::optional<TransportPlan> shift_reachable(const BaseRelation& rel, const Lottery& f, const Lottery& g) {
  require_support(rel, f);
  require_support(rel, g);
  if (f == g) return std::nullopt;

  struct Node {
    Alternative alt;
    Rational amount;
  };
  std::vector<Node> sources;
  std::vector<Node> sinks;
  Rational total_excess;
  for (const auto& a : union_support(f, g)) {
    const Rational d = f.weight(a) - g.weight(a);
    if (d.sign() > 0) {
      sources.push_back({a, d});
      total_excess += d;
    } else if (d.sign() < 0) {
      sinks.push_back({a, -d});
    }
  }

  const std::size_t first_sink = 1 + sources.size();
  const std::size_t terminal = first_sink + sinks.size();
  FlowNetwork net(terminal + 1);
  for (std::size_t i = 0; i < sources.size(); ++i) {
    net.add_edge(0, 1 + i, sources[i].amount);
    const std::size_t si = rel.index_of(sources[i].alt);
    for (std::size_t j = 0; j < sinks.size(); ++j) {
      if (rel.strict(si, rel.index_of(sinks[j].alt))) net.add_edge(1 + i, first_sink + j, total_excess);
    }
  }
  for (std::size_t j = 0; j < sinks.size(); ++j) net.add_edge(first_sink + j, terminal, sinks[j].amount);

  if (net.max_flow() != total_excess) return std::nullopt;

  TransportPlan plan;
  for (const auto& a : union_support(f, g)) {
    const Rational stay = std::min(f.weight(a), g.weight(a));
    if (stay.sign() > 0) plan.moves[{a, a}] = stay;
  }
  for (std::size_t i = 0; i < sources.size(); ++i) {
    for (std::size_t j = 0; j < sinks.size(); ++j) {
      const Rational& mass = net.flow(1 + i, first_sink + j);
      if (mass.sign() > 0) plan.moves[{sources[i].alt, sinks[j].alt}] = mass;
    }
  }
  return plan;
}

std::string rule_name(Rule rule) {
  switch (rule) {
    case Rule::Identity:
      return "identity";
    case Rule::Dominance:
      return "R1 dominance f<=g";
    case Rule::ReverseDominance:
      return "R2 dominance g<=f";
    case Rule::Shift:
      return "R3 shift f=>g";
    case Rule::ReverseShift:
      return "R3 shift g=>f";
    case Rule::NoLessPair:
      return "R4 no < cross pair";
    case Rule::NoGreaterPair:
      return "R5 no > cross pair";
  }
  return "?";
}

AdmissibleSet compare(const BaseRelation& rel, const Lottery& f, const Lottery& g) {
  const auto profile = cross_profile(rel, f, g);
  AdmissibleSet out{KindSet::all(), {}};
  const auto fire = [&out](Rule rule, KindSet removed, std::optional<TransportPlan> plan = std::nullopt) {
    out.members = out.members.minus(removed);
    out.provenance.push_back({rule, removed, std::move(plan)});
  };

  if (f == g) {
    fire(Rule::Identity, {RelKind::Less, RelKind::Greater, RelKind::Incomp});
    return out;
  }
  if (dominates(rel, f, g)) fire(Rule::Dominance, {RelKind::Greater, RelKind::Incomp});
  if (dominates(rel, g, f)) fire(Rule::ReverseDominance, {RelKind::Less, RelKind::Incomp});
  if (auto plan = shift_reachable(rel, f, g)) {
    fire(Rule::Shift, {RelKind::Equiv, RelKind::Greater, RelKind::Incomp}, std::move(plan));
  }
  if (auto plan = shift_reachable(rel, g, f)) {
    fire(Rule::ReverseShift, {RelKind::Equiv, RelKind::Less, RelKind::Incomp}, std::move(plan));
  }
  const auto any_of_kind = [&profile](RelKind k) {
    return std::any_of(profile.begin(), profile.end(), [k](const auto& e) { return e.second == k; });
  };
  if (!any_of_kind(RelKind::Less)) fire(Rule::NoLessPair, {RelKind::Less});
  if (!any_of_kind(RelKind::Greater)) fire(Rule::NoGreaterPair, {RelKind::Greater});
  return out;
}

std::vector<NamedLottery> maximal_filter(const BaseRelation& rel, std::span<const NamedLottery> offers) {
  std::set<std::string> names;
  for (const auto& offer : offers) {
    if (!names.insert(offer.name).second) throw DuplicateOfferName(offer.name);
    require_support(rel, offer.lottery);
  }
  const KindSet certainly_less{RelKind::Less};
  std::vector<NamedLottery> out;
  for (std::size_t i = 0; i < offers.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < offers.size() && !dominated; ++j) {
      if (i == j) continue;
      dominated = compare(rel, offers[i].lottery, offers[j].lottery).members == certainly_less;
    }
    if (!dominated) out.push_back(offers[i]);
  }
  return out;
}

}  // namespace pdt
