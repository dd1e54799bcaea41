#include "pdt/axiomlab.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "pdt/error.hpp"
#include "pdt/mixture.hpp"

namespace pdt {

std::string FiniteModel::name_of(std::size_t i) const {
  if (i < names.size()) return names[i];
  return "#" + std::to_string(i);
}

std::string axiom_id(Axiom axiom) {
  switch (axiom) {
    case Axiom::Reflexivity:
      return "A1'";
    case Axiom::Transitivity:
      return "A2";
    case Axiom::MixtureOrder:
      return "A3";
    case Axiom::Independence:
      return "A4";
    case Axiom::StrictIndependence:
      return "A5";
    case Axiom::Persistence:
      return "A6";
  }
  return "?";
}

std::string AxiomViolation::describe(const FiniteModel& model) const {
  const auto n = [&model, this](std::size_t k) { return model.name_of(witnesses.at(k)); };
  const auto mix = [&](std::size_t a, std::size_t b, const Rational& c) {
    if (witnesses.at(a) == witnesses.at(b)) return n(a);
    return c.str() + "*" + n(a) + "+" + (Rational(1) - c).str() + "*" + n(b);
  };
  switch (axiom) {
    case Axiom::Reflexivity:
      return "A1': missing " + n(0) + " <= " + n(0);
    case Axiom::Transitivity:
      return "A2: " + n(0) + " <= " + n(1) + " and " + n(1) + " <= " + n(2) + " but not " + n(0) +
             " <= " + n(2);
    case Axiom::MixtureOrder:
      return "A3: " + n(0) + " < " + n(1) + " but not " + mix(0, 1, *beta) + " < " + mix(0, 1, *alpha);
    case Axiom::Independence:
      return "A4: " + n(0) + " <= " + n(2) + " and " + n(1) + " <= " + n(3) + " but not " +
             mix(0, 1, *alpha) + " <= " + mix(2, 3, *alpha);
    case Axiom::StrictIndependence:
      return "A5: " + n(0) + " < " + n(2) + " and " + n(1) + " <= " + n(3) + " but not " +
             mix(0, 1, *alpha) + " < " + mix(2, 3, *alpha);
    case Axiom::Persistence:
      return "A6: " + mix(0, 1, *alpha) + " < " + mix(2, 3, *alpha) + " but no " + n(0) + "/" + n(1) +
             " is strictly below " + n(2) + "/" + n(3);
  }
  return axiom_id(axiom);
}

namespace {

class ModelMatrix {
 public:
  explicit ModelMatrix(const FiniteModel& model) : n_(model.family.size()), weak_(n_ * n_, 0) {
    for (const auto& [i, j] : model.weak) {
      if (i >= n_ || j >= n_) {
        throw ForeignLottery("(" + std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      weak_[i * n_ + j] = 1;
    }
  }
  bool weak(std::size_t i, std::size_t j) const { return weak_[i * n_ + j] != 0; }
  bool strict(std::size_t i, std::size_t j) const { return weak(i, j) && !weak(j, i); }
  std::size_t size() const { return n_; }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> weak_;
};

// One side of a mixed comparison: alpha*first + (1-alpha)*second == result.
// A constant side (first == second == result) matches every alpha.
struct Side {
  std::size_t first;
  std::size_t second;
  std::size_t result;
  Rational alpha;
  bool constant;
};

bool fails_a4(const ModelMatrix& m, const Side& f, const Side& g) {
  return m.weak(f.first, g.first) && m.weak(f.second, g.second) && !m.weak(f.result, g.result);
}

bool fails_a5(const ModelMatrix& m, const Side& f, const Side& g) {
  return m.strict(f.first, g.first) && m.weak(f.second, g.second) && !m.strict(f.result, g.result);
}

bool fails_a6(const ModelMatrix& m, const Side& f, const Side& g) {
  if (!m.strict(f.result, g.result)) return false;
  for (const std::size_t fj : {f.first, f.second}) {
    for (const std::size_t gk : {g.first, g.second}) {
      if (m.strict(fj, gk)) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<AxiomViolation> check_axioms(const FiniteModel& model, const BaseRelation& rel) {
  const ModelMatrix m(model);
  for (const auto& l : model.family) {
    for (const auto& [a, w] : l.entries()) rel.index_of(a);
  }
  const std::size_t n = m.size();
  std::vector<AxiomViolation> out;

  for (std::size_t i = 0; i < n; ++i) {
    if (!m.weak(i, i)) out.push_back({Axiom::Reflexivity, {i}, {}, {}});
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!m.weak(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (m.weak(j, k) && !m.weak(i, k)) out.push_back({Axiom::Transitivity, {i, j, k}, {}, {}});
      }
    }
  }

  const MixtureIndex mixtures(model.family);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t g = 0; g < n; ++g) {
      if (f == g || !m.strict(f, g)) continue;
      std::vector<MixtureIndex::Point> segment = mixtures.between(f, g);
      segment.push_back({Rational(1), f});
      segment.push_back({Rational(0), g});
      for (const auto& upper : segment) {
        for (const auto& lower : segment) {
          if (upper.alpha > lower.alpha && !m.strict(upper.result, lower.result)) {
            out.push_back({Axiom::MixtureOrder, {f, g}, lower.alpha, upper.alpha});
          }
        }
      }
    }
  }

  std::vector<Side> constants;
  std::map<Rational, std::vector<Side>> proper_by_alpha;
  std::vector<Side> proper;
  for (std::size_t x = 0; x < n; ++x) {
    constants.push_back({x, x, x, Rational(), true});
    for (std::size_t y = 0; y < n; ++y) {
      if (x == y) continue;
      for (const auto& p : mixtures.between(x, y)) {
        Side s{x, y, p.result, p.alpha, false};
        proper_by_alpha[p.alpha].push_back(s);
        proper.push_back(std::move(s));
      }
    }
  }

  const auto check_pair = [&](const Side& f, const Side& g) {
    const Rational& alpha = f.constant ? g.alpha : f.alpha;
    const std::vector<std::size_t> w{f.first, f.second, g.first, g.second};
    if (fails_a4(m, f, g)) out.push_back({Axiom::Independence, w, alpha, {}});
    if (fails_a5(m, f, g)) out.push_back({Axiom::StrictIndependence, w, alpha, {}});
    if (fails_a6(m, f, g)) out.push_back({Axiom::Persistence, w, alpha, {}});
  };
  for (const auto& [alpha, sides] : proper_by_alpha) {
    for (const auto& f : sides) {
      for (const auto& g : sides) check_pair(f, g);
    }
  }
  for (const auto& c : constants) {
    for (const auto& s : proper) {
      check_pair(c, s);
      check_pair(s, c);
    }
  }
  return out;
}

bool replay_violation(const FiniteModel& model, const AxiomViolation& v) {
  const ModelMatrix m(model);
  const auto& w = v.witnesses;
  const auto member = [&model](const Lottery& l) -> std::optional<std::size_t> {
    const auto it = std::find(model.family.begin(), model.family.end(), l);
    if (it == model.family.end()) return std::nullopt;
    return static_cast<std::size_t>(it - model.family.begin());
  };
  const auto mix = [&](std::size_t a, std::size_t b, const Rational& alpha) {
    return member(convex_combine(alpha, model.family.at(a), model.family.at(b)));
  };
  switch (v.axiom) {
    case Axiom::Reflexivity:
      return !m.weak(w.at(0), w.at(0));
    case Axiom::Transitivity:
      return m.weak(w.at(0), w.at(1)) && m.weak(w.at(1), w.at(2)) && !m.weak(w.at(0), w.at(2));
    case Axiom::MixtureOrder: {
      if (!v.alpha || !v.beta || !(*v.beta > *v.alpha) || !m.strict(w.at(0), w.at(1))) return false;
      const auto hi = mix(w[0], w[1], *v.beta);
      const auto lo = mix(w[0], w[1], *v.alpha);
      return hi && lo && !m.strict(*hi, *lo);
    }
    case Axiom::Independence:
    case Axiom::StrictIndependence:
    case Axiom::Persistence: {
      if (!v.alpha) return false;
      const auto hf = mix(w.at(0), w.at(1), *v.alpha);
      const auto hg = mix(w.at(2), w.at(3), *v.alpha);
      if (!hf || !hg) return false;
      const Side f{w[0], w[1], *hf, *v.alpha, w[0] == w[1]};
      const Side g{w[2], w[3], *hg, *v.alpha, w[2] == w[3]};
      if (v.axiom == Axiom::Independence) return fails_a4(m, f, g);
      if (v.axiom == Axiom::StrictIndependence) return fails_a5(m, f, g);
      return fails_a6(m, f, g);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Draw-tuple analysis

CaseTuple CaseTuple::mirrored() const {
  // Swapping f and g transposes the draw matrix and flips every judgment.
  return CaseTuple{{mirror(draws[0]), mirror(draws[2]), mirror(draws[1]), mirror(draws[3])}};
}

std::string CaseTuple::str() const {
  std::string out;
  for (const RelKind k : draws) out += symbol(k);
  return out;
}

std::optional<CaseTuple> CaseTuple::parse(std::string_view text) {
  CaseTuple t{};
  std::size_t i = 0;
  for (auto& d : t.draws) {
    const auto k = kind_from_utf8(text.substr(i));
    if (!k) return std::nullopt;
    d = k->first;
    i += k->second;
  }
  if (i != text.size()) return std::nullopt;
  return t;
}

namespace {

constexpr std::size_t kF1 = 0, kF2 = 1, kG1 = 2, kG2 = 3;

std::set<CaseTuple> enumerate_consistent() {
  std::vector<std::pair<std::size_t, std::size_t>> free_pairs;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      if (i != j) free_pairs.emplace_back(i, j);
    }
  }
  std::set<CaseTuple> out;
  for (unsigned mask = 0; mask < (1U << free_pairs.size()); ++mask) {
    std::array<std::array<bool, 4>, 4> r{};
    for (std::size_t i = 0; i < 4; ++i) r[i][i] = true;
    for (std::size_t b = 0; b < free_pairs.size(); ++b) {
      if ((mask >> b) & 1U) r[free_pairs[b].first][free_pairs[b].second] = true;
    }
    bool transitive = true;
    for (std::size_t i = 0; i < 4 && transitive; ++i) {
      for (std::size_t j = 0; j < 4 && transitive; ++j) {
        for (std::size_t k = 0; k < 4 && transitive; ++k) {
          if (r[i][j] && r[j][k] && !r[i][k]) transitive = false;
        }
      }
    }
    if (!transitive) continue;
    const auto kind = [&r](std::size_t i, std::size_t j) {
      if (r[i][j] && r[j][i]) return RelKind::Equiv;
      if (r[i][j]) return RelKind::Less;
      if (r[j][i]) return RelKind::Greater;
      return RelKind::Incomp;
    };
    out.insert(CaseTuple{{kind(kF1, kG1), kind(kF1, kG2), kind(kF2, kG1), kind(kF2, kG2)}});
  }
  return out;
}

const std::set<CaseTuple>& consistent_set() {
  static const std::set<CaseTuple> tuples = enumerate_consistent();
  return tuples;
}

bool weak_le(RelKind k) { return k == RelKind::Equiv || k == RelKind::Less; }
bool weak_ge(RelKind k) { return k == RelKind::Equiv || k == RelKind::Greater; }

}  // namespace

std::vector<CaseTuple> consistent_tuples() {
  const auto& s = consistent_set();
  return {s.begin(), s.end()};
}

bool is_consistent(const CaseTuple& t) { return consistent_set().contains(t); }

KindSet admissible_outcomes(const CaseTuple& t) {
  if (!is_consistent(t)) throw InconsistentTuple(t.str());
  const RelKind first = t.draws[0];   // (f1, g1)
  const RelKind second = t.draws[3];  // (f2, g2)
  KindSet out = KindSet::all();

  // A4, both directions.
  if (weak_le(first) && weak_le(second)) out = out.minus({RelKind::Greater, RelKind::Incomp});
  if (weak_ge(first) && weak_ge(second)) out = out.minus({RelKind::Less, RelKind::Incomp});

  // A5, both directions; either positional draw may be the strict one.
  const bool forced_less = (first == RelKind::Less && weak_le(second)) || (second == RelKind::Less && weak_le(first));
  const bool forced_greater =
      (first == RelKind::Greater && weak_ge(second)) || (second == RelKind::Greater && weak_ge(first));
  if (forced_less) out = out.intersect({RelKind::Less});
  if (forced_greater) out = out.intersect({RelKind::Greater});

  // A6, both directions, over all four draws.
  const auto any = [&t](RelKind k) { return std::find(t.draws.begin(), t.draws.end(), k) != t.draws.end(); };
  if (!any(RelKind::Less)) out.erase(RelKind::Less);
  if (!any(RelKind::Greater)) out.erase(RelKind::Greater);
  return out;
}

std::vector<TableRow> regenerate_table() {
  std::vector<TableRow> rows;
  for (const auto& t : consistent_set()) rows.push_back({t, admissible_outcomes(t)});
  return rows;
}

std::string render_table(std::span<const TableRow> rows) {
  std::string out;
  for (const auto& row : rows) out += row.tuple.str() + " -> " + row.outcomes.str() + "\n";
  return out;
}

std::vector<TableRow> parse_table(std::string_view text) {
  std::vector<TableRow> rows;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    if (line.empty()) continue;

    const auto arrow = line.find("->");
    if (arrow == std::string_view::npos) throw SyntaxError(line_no, 1, "'<tuple> -> <set>'");
    std::string_view lhs = line.substr(0, arrow);
    while (!lhs.empty() && lhs.back() == ' ') lhs.remove_suffix(1);
    const auto tuple = CaseTuple::parse(lhs);
    if (!tuple) throw SyntaxError(line_no, 1, "four symbols from ~ < > #");
    const auto outcomes = KindSet::parse(line.substr(arrow + 2));
    if (!outcomes || outcomes->empty()) throw SyntaxError(line_no, arrow + 3, "a nonempty symbol set");
    rows.push_back({*tuple, *outcomes});
  }
  return rows;
}

std::vector<TableDiff> diff_table(std::span<const TableRow> expected, std::span<const TableRow> actual) {
  std::map<CaseTuple, std::pair<std::optional<KindSet>, std::optional<KindSet>>> merged;
  for (const auto& row : expected) merged[row.tuple].first = row.outcomes;
  for (const auto& row : actual) merged[row.tuple].second = row.outcomes;
  std::vector<TableDiff> out;
  for (const auto& [tuple, sides] : merged) {
    if (sides.first != sides.second) out.push_back({tuple, sides.first, sides.second});
  }
  // Row order is part of the format: report a row that sits at a different
  // position even when its content agrees.
  if (out.empty() && expected.size() == actual.size()) {
    for (std::size_t i = 0; i < expected.size(); ++i) {
      if (!(expected[i].tuple == actual[i].tuple)) {
        out.push_back({expected[i].tuple, expected[i].outcomes, actual[i].outcomes});
      }
    }
  }
  return out;
}

std::string render_diff(std::span<const TableDiff> diffs) {
  const auto show = [](const std::optional<KindSet>& s) { return s ? s->str() : std::string("(missing)"); };
  std::string out;
  for (const auto& d : diffs) {
    out += "-" + d.tuple.str() + " -> " + show(d.expected) + "\n";
    out += "+" + d.tuple.str() + " -> " + show(d.actual) + "\n";
  }
  return out;
}

void verify_table(std::span<const TableRow> expected) {
  const auto actual = regenerate_table();
  const auto diffs = diff_table(expected, actual);
  if (!diffs.empty()) throw TableMismatch(render_diff(diffs), diffs.size());
}

}  // namespace pdt
