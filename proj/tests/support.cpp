#include "support.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>

#include "pdt/error.hpp"

namespace pdt::testing {

Alternative alt(const std::string& id) { return Alternative(id); }

Lottery deg(const std::string& id) { return Lottery::degenerate(Alternative(id)); }

Lottery lot(std::initializer_list<W> weights) {
  std::vector<Lottery::Entry> pairs;
  for (const auto& w : weights) pairs.emplace_back(Alternative(w.id), Rational(w.num, w.den));
  return Lottery::make(pairs);
}

std::vector<Alternative> alternatives(std::size_t n) {
  std::vector<Alternative> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace_back("a" + std::to_string(i));
  return out;
}

std::vector<BaseRelation> all_preorders(const std::vector<Alternative>& alts) {
  const std::size_t n = alts.size();
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) free_pairs.emplace_back(i, j);
    }
  }
  std::vector<BaseRelation> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free_pairs.size()); ++mask) {
    std::vector<std::vector<bool>> r(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < free_pairs.size(); ++b) {
      if ((mask >> b) & 1U) r[free_pairs[b].first][free_pairs[b].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i) {
      for (std::size_t j = 0; j < n && transitive; ++j) {
        for (std::size_t k = 0; k < n && transitive; ++k) {
          if (r[i][j] && r[j][k] && !r[i][k]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    std::vector<std::pair<Alternative, Alternative>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (r[i][j]) pairs.emplace_back(alts[i], alts[j]);
      }
    }
    out.push_back(BaseRelation::from_pairs(alts, pairs));
  }
  return out;
}

BaseRelation random_preorder(Rng& rng, const std::vector<Alternative>& alts) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const double density = std::uniform_real_distribution<double>(0.05, 0.45)(rng);
  std::vector<PrefFact> facts;
  for (const auto& a : alts) {
    for (const auto& b : alts) {
      if (a != b && coin(rng) < density) facts.push_back({FactKind::Weak, a, b});
    }
  }
  return BaseRelation::build(facts, alts);
}

TotalPreorder random_total_preorder(Rng& rng, const std::vector<Alternative>& alts) {
  std::uniform_int_distribution<long> pick(0, static_cast<long>(alts.size()));
  std::vector<long> utility;
  std::vector<std::pair<Alternative, Alternative>> pairs;
  for (std::size_t i = 0; i < alts.size(); ++i) utility.push_back(pick(rng));
  for (std::size_t i = 0; i < alts.size(); ++i) {
    for (std::size_t j = 0; j < alts.size(); ++j) {
      if (utility[i] <= utility[j]) pairs.emplace_back(alts[i], alts[j]);
    }
  }
  return {BaseRelation::from_pairs(alts, pairs), utility};
}

namespace {

void compositions(long remaining, std::size_t slot, std::vector<long>& parts, std::vector<std::vector<long>>& out) {
  if (slot + 1 == parts.size()) {
    parts[slot] = remaining;
    out.push_back(parts);
    return;
  }
  for (long v = 0; v <= remaining; ++v) {
    parts[slot] = v;
    compositions(remaining - v, slot + 1, parts, out);
  }
}

Lottery from_counts(const std::vector<Alternative>& alts, const std::vector<long>& counts, long grid) {
  std::vector<Lottery::Entry> pairs;
  for (std::size_t i = 0; i < alts.size(); ++i) pairs.emplace_back(alts[i], Rational(counts[i], grid));
  return Lottery::make(pairs);
}

}  // namespace

std::vector<Lottery> all_grid_lotteries(const std::vector<Alternative>& alts, long grid) {
  std::vector<std::vector<long>> all;
  std::vector<long> parts(alts.size());
  compositions(grid, 0, parts, all);
  std::vector<Lottery> out;
  out.reserve(all.size());
  for (const auto& counts : all) out.push_back(from_counts(alts, counts, grid));
  return out;
}

Lottery random_grid_lottery(Rng& rng, const std::vector<Alternative>& alts, long grid) {
  // Random support size first so that degenerate and small supports are common.
  std::uniform_int_distribution<std::size_t> size_pick(1, alts.size());
  std::vector<std::size_t> order(alts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::shuffle(order.begin(), order.end(), rng);
  const std::size_t k = std::min<std::size_t>(size_pick(rng), static_cast<std::size_t>(grid));
  std::vector<long> counts(alts.size(), 0);
  for (std::size_t i = 0; i < k; ++i) counts[order[i]] = 1;
  std::uniform_int_distribution<std::size_t> slot(0, k - 1);
  for (long left = grid - static_cast<long>(k); left > 0; --left) ++counts[order[slot(rng)]];
  return from_counts(alts, counts, grid);
}

bool shift_reachable_by_search(const BaseRelation& rel, const Lottery& f, const Lottery& g, long grid) {
  const auto& alts = rel.universe();
  const auto counts = [&](const Lottery& l) {
    std::vector<long> c(alts.size(), 0);
    for (const auto& [a, w] : l.entries()) {
      const Rational scaled = w * Rational(grid);
      if (!scaled.is_integer()) throw std::invalid_argument("lottery is not on the search grid");
      c[rel.index_of(a)] = std::stol(scaled.numerator());
    }
    return c;
  };
  const auto start = counts(f);
  const auto goal = counts(g);
  std::set<std::vector<long>> seen;
  std::queue<std::vector<long>> frontier;
  frontier.push(start);
  while (!frontier.empty()) {
    const auto state = frontier.front();
    frontier.pop();
    for (std::size_t i = 0; i < alts.size(); ++i) {
      if (state[i] == 0) continue;
      for (std::size_t j = 0; j < alts.size(); ++j) {
        if (i == j || !(rel.weak(i, j) && !rel.weak(j, i))) continue;
        auto next = state;
        --next[i];
        ++next[j];
        if (next == goal) return true;
        if (seen.insert(next).second) frontier.push(std::move(next));
      }
    }
  }
  return false;
}

Rational expected_utility(const Lottery& l, const std::vector<Alternative>& alts, const std::vector<long>& utility) {
  Rational total;
  for (const auto& [a, w] : l.entries()) {
    const auto it = std::find(alts.begin(), alts.end(), a);
    total += w * Rational(utility.at(static_cast<std::size_t>(it - alts.begin())));
  }
  return total;
}

FiniteModel expected_utility_model(const std::vector<Lottery>& family, const std::vector<Alternative>& alts,
                                   const std::vector<long>& utility) {
  FiniteModel model;
  model.family = family;
  std::vector<Rational> eu;
  for (const auto& l : family) eu.push_back(expected_utility(l, alts, utility));
  for (std::size_t i = 0; i < family.size(); ++i) {
    model.names.push_back("L" + std::to_string(i));
    for (std::size_t j = 0; j < family.size(); ++j) {
      if (eu[i] <= eu[j]) model.weak.emplace_back(i, j);
    }
  }
  return model;
}

FiniteModel empty_relation_model(const std::vector<Lottery>& family) {
  FiniteModel model;
  model.family = family;
  for (std::size_t i = 0; i < family.size(); ++i) {
    model.names.push_back("L" + std::to_string(i));
    model.weak.emplace_back(i, i);
  }
  return model;
}

std::vector<Lottery> random_segment_family(Rng& rng, const std::vector<Alternative>& alts, std::size_t max_size) {
  static const std::vector<Rational> kParams = {Rational(1, 3), Rational(1, 2), Rational(2, 3)};
  std::uniform_int_distribution<int> base_count(2, 3);
  std::vector<Lottery> bases;
  const int wanted = base_count(rng);
  for (int attempts = 0; static_cast<int>(bases.size()) < wanted && attempts < 100; ++attempts) {
    Lottery l = random_grid_lottery(rng, alts, 6);
    if (std::find(bases.begin(), bases.end(), l) == bases.end()) bases.push_back(std::move(l));
  }
  std::vector<Lottery> family = bases;
  const auto add = [&family, max_size](Lottery l) {
    if (family.size() < max_size && std::find(family.begin(), family.end(), l) == family.end()) {
      family.push_back(std::move(l));
    }
  };
  for (std::size_t i = 0; i < bases.size(); ++i) {
    for (std::size_t j = i + 1; j < bases.size(); ++j) {
      for (const auto& p : kParams) add(convex_combine(p, bases[i], bases[j]));
    }
  }
  std::shuffle(family.begin(), family.end(), rng);
  return family;
}

std::string replay_derivations(const BaseRelation& rel, const DerivedFacts& facts) {
  const auto& ls = facts.lotteries;
  const auto name = [&ls](std::size_t i) { return "[" + ls.at(i).str() + "]"; };
  const auto describe = [&](const Fact& f) {
    return name(f.left) + (f.strict ? " < " : " <= ") + name(f.right);
  };
  const auto known_before = [&facts](const Fact& premise, std::size_t step) {
    const auto it = facts.derivations.find(premise);
    return it != facts.derivations.end() && it->second.step < step;
  };
  const auto strictly_below = [&rel](const Alternative& a, const Alternative& b) {
    return rel.weak(a, b) && !rel.weak(b, a);
  };

  for (const auto& [fact, d] : facts.derivations) {
    for (const auto& p : d.premises) {
      if (!known_before(p, d.step)) return describe(fact) + ": premise " + describe(p) + " not derived earlier";
    }
    const auto& w = d.witnesses;
    bool ok = false;
    bool concludes_strict = false;
    switch (d.rule) {
      case DerivationRule::Reflexivity:
        ok = fact.left == fact.right;
        break;
      case DerivationRule::Dominance: {
        ok = w.size() == 2 && w[0] == fact.left && w[1] == fact.right;
        for (const auto& [a, wa] : ls[fact.left].entries()) {
          for (const auto& [b, wb] : ls[fact.right].entries()) ok = ok && rel.weak(a, b);
        }
        break;
      }
      case DerivationRule::Shift: {
        concludes_strict = true;
        ok = d.plan.has_value();
        if (!ok) break;
        std::map<Alternative, Rational> rows, cols;
        bool moved = false;
        for (const auto& [pair, mass] : d.plan->moves) {
          if (pair.first != pair.second) {
            ok = ok && strictly_below(pair.first, pair.second);
            moved = moved || mass.sign() > 0;
          }
          ok = ok && mass.sign() >= 0;
          rows[pair.first] += mass;
          cols[pair.second] += mass;
        }
        for (const auto& [a, m] : rows) ok = ok && m == ls[fact.left].weight(a);
        for (const auto& [a, m] : cols) ok = ok && m == ls[fact.right].weight(a);
        for (const auto& [a, m] : ls[fact.left].entries()) ok = ok && rows[a] == m;
        for (const auto& [a, m] : ls[fact.right].entries()) ok = ok && cols[a] == m;
        ok = ok && moved;
        break;
      }
      case DerivationRule::Transitivity:
        ok = w.size() == 3 && d.premises.size() == 2 && w[0] == fact.left && w[2] == fact.right &&
             d.premises[0].left == w[0] && d.premises[0].right == w[1] && d.premises[1].left == w[1] &&
             d.premises[1].right == w[2];
        concludes_strict = ok && (d.premises[0].strict || d.premises[1].strict);
        break;
      case DerivationRule::MixtureOrder: {
        ok = w.size() == 2 && d.alpha && d.beta && *d.beta > *d.alpha && d.premises.size() == 1 &&
             d.premises[0].left == w[0] && d.premises[0].right == w[1] && d.premises[0].strict;
        if (!ok) break;
        ok = convex_combine(*d.beta, ls[w[0]], ls[w[1]]) == ls[fact.left] &&
             convex_combine(*d.alpha, ls[w[0]], ls[w[1]]) == ls[fact.right];
        concludes_strict = true;
        break;
      }
      case DerivationRule::Independence:
      case DerivationRule::StrictIndependence: {
        ok = w.size() == 4 && d.alpha && d.premises.size() == 2 && d.premises[0].left == w[0] &&
             d.premises[0].right == w[2] && d.premises[1].left == w[1] && d.premises[1].right == w[3];
        if (!ok) break;
        ok = convex_combine(*d.alpha, ls[w[0]], ls[w[1]]) == ls[fact.left] &&
             convex_combine(*d.alpha, ls[w[2]], ls[w[3]]) == ls[fact.right];
        if (d.rule == DerivationRule::StrictIndependence) {
          ok = ok && d.premises[0].strict;
          concludes_strict = true;
        }
        break;
      }
    }
    if (!ok) return describe(fact) + ": " + derivation_rule_name(d.rule) + " step does not replay";
    if (fact.strict && !concludes_strict) {
      return describe(fact) + ": strict fact from a rule that only yields <=";
    }
  }
  return {};
}

}  // namespace pdt::testing

namespace pdt::testing {

InstanceOracle::InstanceOracle(const std::vector<Lottery>& family) : n_(family.size()) {
  const auto member = [&family](const Lottery& l) -> std::optional<std::size_t> {
    const auto it = std::find(family.begin(), family.end(), l);
    if (it == family.end()) return std::nullopt;
    return static_cast<std::size_t>(it - family.begin());
  };
  std::set<Rational> alphas;
  for (std::size_t f = 0; f < n_; ++f) {
    for (std::size_t g = 0; g < n_; ++g) {
      if (f == g) continue;
      Segment s{f, g, {{Rational(1), f}, {Rational(0), g}}};
      for (std::size_t x = 0; x < n_; ++x) {
        if (x == f || x == g) continue;
        // Membership on the segment, found by solving for alpha on one
        // coordinate and checking the whole lottery.
        const auto& a = family[x].entries().front().first;
        const Rational wf = family[f].weight(a);
        const Rational wg = family[g].weight(a);
        std::optional<Rational> alpha;
        if (wf != wg) {
          alpha = (family[x].weight(a) - wg) / (wf - wg);
        } else {
          for (const auto& [b, w] : family[f].entries()) {
            if (family[g].weight(b) != w) {
              alpha = (family[x].weight(b) - family[g].weight(b)) / (w - family[g].weight(b));
              break;
            }
          }
        }
        if (!alpha || alpha->sign() <= 0 || !(*alpha < Rational(1))) continue;
        if (convex_combine(*alpha, family[f], family[g]) != family[x]) continue;
        s.points.emplace_back(*alpha, x);
        alphas.insert(*alpha);
        alphas.insert(Rational(1) - *alpha);
      }
      segments_.push_back(std::move(s));
    }
  }
  for (const auto& alpha : alphas) {
    // (first, second) -> member equal to alpha*first + (1-alpha)*second.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, std::size_t>> sides;
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b) {
        if (a == b) {
          sides.push_back({{a, a}, a});
        } else if (const auto m = member(convex_combine(alpha, family[a], family[b]))) {
          sides.push_back({{a, b}, *m});
        }
      }
    }
    for (const auto& [fs, left] : sides) {
      for (const auto& [gs, right] : sides) {
        if (fs.first == fs.second && gs.first == gs.second) continue;
        mixes_.push_back({fs.first, fs.second, gs.first, gs.second, left, right});
      }
    }
  }
}

std::size_t InstanceOracle::failures(const FiniteModel& model) const {
  std::vector<std::vector<bool>> w(n_, std::vector<bool>(n_, false));
  for (const auto& [i, j] : model.weak) w.at(i).at(j) = true;
  const auto lt = [&w](std::size_t i, std::size_t j) { return w[i][j] && !w[j][i]; };
  std::size_t out = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    if (!w[i][i]) ++out;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t k = 0; k < n_; ++k) {
        if (w[i][j] && w[j][k] && !w[i][k]) ++out;
      }
    }
  }
  for (const auto& s : segments_) {
    if (!lt(s.f, s.g)) continue;
    for (const auto& [beta, hi] : s.points) {
      for (const auto& [alpha, lo] : s.points) {
        if (beta > alpha && !lt(hi, lo)) ++out;
      }
    }
  }
  for (const auto& m : mixes_) {
    if (w[m.f1][m.g1] && w[m.f2][m.g2] && !w[m.left][m.right]) ++out;
    if (lt(m.f1, m.g1) && w[m.f2][m.g2] && !lt(m.left, m.right)) ++out;
    if (lt(m.left, m.right) && !(lt(m.f1, m.g1) || lt(m.f1, m.g2) || lt(m.f2, m.g1) || lt(m.f2, m.g2))) ++out;
  }
  return out;
}

}  // namespace pdt::testing
