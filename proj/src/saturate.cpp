#include "pdt/saturate.hpp"

#include <algorithm>

#include "pdt/mixture.hpp"

namespace pdt {

std::string derivation_rule_name(DerivationRule rule) {
  switch (rule) {
    case DerivationRule::Reflexivity:
      return "A1'";
    case DerivationRule::Dominance:
      return "dominance";
    case DerivationRule::Shift:
      return "shift";
    case DerivationRule::Transitivity:
      return "A2";
    case DerivationRule::MixtureOrder:
      return "A3";
    case DerivationRule::Independence:
      return "A4";
    case DerivationRule::StrictIndependence:
      return "A5";
  }
  return "?";
}

namespace {

class Saturator {
 public:
  Saturator(const BaseRelation& rel, std::vector<Lottery> lotteries)
      : rel_(rel),
        lotteries_(std::move(lotteries)),
        n_(lotteries_.size()),
        weak_(n_ * n_, 0),
        strict_(n_ * n_, 0),
        mixtures_(lotteries_) {}

  DerivedFacts run(std::size_t family_size) {
    seed();
    bool changed = true;
    while (changed) {
      changed = false;
      changed |= transitivity();
      changed |= mixture_order();
      changed |= independence();
    }
    DerivedFacts out;
    out.family_size = family_size;
    for (std::size_t i = 0; i < family_size; ++i) {
      for (std::size_t j = 0; j < family_size; ++j) {
        if (weak(i, j)) out.weak.emplace(i, j);
        if (strict(i, j)) out.strict.emplace(i, j);
      }
    }
    out.lotteries = std::move(lotteries_);
    out.derivations = std::move(derivations_);
    return out;
  }

 private:
  bool weak(std::size_t i, std::size_t j) const { return weak_[i * n_ + j] != 0; }
  bool strict(std::size_t i, std::size_t j) const { return strict_[i * n_ + j] != 0; }

  // Records `left <= right` (and `left < right` when strict); returns true
  // if anything new was learned.
  bool conclude(std::size_t left, std::size_t right, bool is_strict, Derivation d) {
    bool changed = false;
    if (!weak(left, right)) {
      weak_[left * n_ + right] = 1;
      d.step = step_++;
      derivations_.emplace(Fact{left, right, false}, d);
      changed = true;
    }
    if (is_strict && !strict(left, right)) {
      strict_[left * n_ + right] = 1;
      d.step = step_++;
      derivations_.emplace(Fact{left, right, true}, std::move(d));
      changed = true;
    }
    return changed;
  }

  void seed() {
    for (std::size_t i = 0; i < n_; ++i) {
      conclude(i, i, false, {DerivationRule::Reflexivity, {}, {i, i}, {}, {}, {}, 0});
    }
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i == j) continue;
        if (auto plan = shift_reachable(rel_, lotteries_[i], lotteries_[j])) {
          conclude(i, j, true, {DerivationRule::Shift, {}, {i, j}, {}, {}, std::move(plan), 0});
        } else if (dominates(rel_, lotteries_[i], lotteries_[j])) {
          conclude(i, j, false, {DerivationRule::Dominance, {}, {i, j}, {}, {}, {}, 0});
        }
      }
    }
  }

  bool transitivity() {
    bool changed = false;
    for (std::size_t j = 0; j < n_; ++j) {
      for (std::size_t i = 0; i < n_; ++i) {
        if (i == j || !weak(i, j)) continue;
        for (std::size_t k = 0; k < n_; ++k) {
          if (k == j || k == i || !weak(j, k)) continue;
          const bool s = strict(i, j) || strict(j, k);
          if (weak(i, k) && (!s || strict(i, k))) continue;
          changed |= conclude(i, k, s,
                              {DerivationRule::Transitivity,
                               {Fact{i, j, strict(i, j)}, Fact{j, k, strict(j, k)}},
                               {i, j, k},
                               {},
                               {},
                               {},
                               0});
        }
      }
    }
    return changed;
  }

  // From f < g: beta*f + (1-beta)*g < alpha*f + (1-alpha)*g whenever
  // beta > alpha and both points are family members.
  bool mixture_order() {
    bool changed = false;
    for (std::size_t f = 0; f < n_; ++f) {
      for (std::size_t g = 0; g < n_; ++g) {
        if (f == g || !strict(f, g)) continue;
        std::vector<MixtureIndex::Point> segment = mixtures_.between(f, g);
        segment.push_back({Rational(1), f});
        segment.push_back({Rational(0), g});
        for (const auto& upper : segment) {
          for (const auto& lower : segment) {
            if (!(upper.alpha > lower.alpha)) continue;
            if (strict(upper.result, lower.result)) continue;
            changed |= conclude(upper.result, lower.result, true,
                                {DerivationRule::MixtureOrder,
                                 {Fact{f, g, true}},
                                 {f, g},
                                 lower.alpha,
                                 upper.alpha,
                                 {},
                                 0});
          }
        }
      }
    }
    return changed;
  }

  // A4 / A5 over pairs of known facts (f1 <= g1), (f2 <= g2) sharing a
  // mixture coefficient. f1 == f2 (or g1 == g2) stands for a side that is
  // the same lottery for every coefficient.
  bool independence() {
    bool changed = false;
    for (std::size_t f1 = 0; f1 < n_; ++f1) {
      for (std::size_t f2 = 0; f2 < n_; ++f2) {
        if (f1 != f2 && !mixtures_.has_mixtures(f1, f2)) continue;
        for (std::size_t g1 = 0; g1 < n_; ++g1) {
          if (!weak(f1, g1)) continue;
          for (std::size_t g2 = 0; g2 < n_; ++g2) {
            if (!weak(f2, g2)) continue;
            if (f1 == f2 && g1 == g2) continue;
            if (g1 != g2 && !mixtures_.has_mixtures(g1, g2)) continue;
            changed |= mix_facts(f1, f2, g1, g2);
          }
        }
      }
    }
    return changed;
  }

  bool mix_facts(std::size_t f1, std::size_t f2, std::size_t g1, std::size_t g2) {
    const bool s = strict(f1, g1);
    const auto conclude_mix = [&](std::size_t left, std::size_t right, const Rational& alpha) {
      if (left == right) return false;
      if (weak(left, right) && (!s || strict(left, right))) return false;
      return conclude(left, right, s,
                      {s ? DerivationRule::StrictIndependence : DerivationRule::Independence,
                       {Fact{f1, g1, s}, Fact{f2, g2, strict(f2, g2)}},
                       {f1, f2, g1, g2},
                       alpha,
                       {},
                       {},
                       0});
    };
    bool changed = false;
    if (f1 == f2) {
      for (const auto& p : mixtures_.between(g1, g2)) changed |= conclude_mix(f1, p.result, p.alpha);
    } else if (g1 == g2) {
      for (const auto& p : mixtures_.between(f1, f2)) changed |= conclude_mix(p.result, g1, p.alpha);
    } else {
      const auto& rights = mixtures_.between(g1, g2);
      for (const auto& left : mixtures_.between(f1, f2)) {
        for (const auto& right : rights) {
          if (left.alpha == right.alpha) changed |= conclude_mix(left.result, right.result, left.alpha);
        }
      }
    }
    return changed;
  }

  const BaseRelation& rel_;
  std::vector<Lottery> lotteries_;
  std::size_t n_;
  std::vector<std::uint8_t> weak_;
  std::vector<std::uint8_t> strict_;
  MixtureIndex mixtures_;
  std::map<Fact, Derivation> derivations_;
  std::size_t step_ = 0;
};

}  // namespace

DerivedFacts saturate(const BaseRelation& rel, std::span<const Lottery> family) {
  std::vector<Lottery> lotteries;
  for (const auto& l : family) {
    for (const auto& [a, w] : l.entries()) rel.index_of(a);
    if (std::find(lotteries.begin(), lotteries.end(), l) == lotteries.end()) lotteries.push_back(l);
  }
  const std::size_t family_size = lotteries.size();
  std::vector<Alternative> alts;
  for (std::size_t i = 0; i < family_size; ++i) {
    for (const auto& a : lotteries[i].support()) alts.push_back(a);
  }
  std::sort(alts.begin(), alts.end());
  alts.erase(std::unique(alts.begin(), alts.end()), alts.end());
  for (const auto& a : alts) {
    const Lottery d = Lottery::degenerate(a);
    if (std::find(lotteries.begin(), lotteries.end(), d) == lotteries.end()) lotteries.push_back(d);
  }
  return Saturator(rel, std::move(lotteries)).run(family_size);
}

}  // namespace pdt
