#include "pdt/io.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

#include "pdt/error.hpp"

namespace pdt {

namespace {

enum class Op { Strict, Weak, Equiv };

struct OpSpelling {
  std::string_view text;
  Op op;
};

// Longest spellings first so "<=" wins over "<".
constexpr OpSpelling kOps[] = {
    {"<=", Op::Weak}, {"<", Op::Strict},        {"~", Op::Equiv},   {"≺", Op::Strict},
    {"⪯", Op::Weak},  {"≼", Op::Weak},           {"≤", Op::Weak},    {"∼", Op::Equiv},
};

// Characters that end an identifier.
bool is_delimiter_byte(char c) {
  switch (c) {
    case ' ':
    case '\t':
    case '<':
    case '>':
    case '=':
    case '~':
    case '@':
    case ',':
    case ':':
    case '/':
      return true;
    default:
      return false;
  }
}

std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead & 0xE0) == 0xC0) return 2;
  if ((lead & 0xF0) == 0xE0) return 3;
  if ((lead & 0xF8) == 0xF0) return 4;
  return 1;
}

/// Walks one line, tracking a 1-based code point column.
class Cursor {
 public:
  Cursor(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  void skip_ws() {
    while (!at_end() && (line_[pos_] == ' ' || line_[pos_] == '\t')) advance(1);
  }
  bool at_end() const { return pos_ >= line_.size(); }
  std::string_view rest() const { return line_.substr(pos_); }
  Position position() const { return {line_no_, column_}; }

  void advance(std::size_t bytes) {
    const std::size_t end = std::min(line_.size(), pos_ + bytes);
    while (pos_ < end) {
      pos_ += utf8_length(static_cast<unsigned char>(line_[pos_]));
      ++column_;
    }
  }

  [[noreturn]] void fail(std::string expected) const { throw SyntaxError(line_no_, column_, std::move(expected)); }

  std::optional<Op> match_op() {
    for (const auto& spelling : kOps) {
      if (rest().starts_with(spelling.text)) {
        advance(spelling.text.size());
        return spelling.op;
      }
    }
    return std::nullopt;
  }

  bool at_word() const {
    if (at_end() || is_delimiter_byte(line_[pos_])) return false;
    for (const auto& spelling : kOps) {
      if (rest().starts_with(spelling.text)) return false;
    }
    return true;
  }

  /// Maximal identifier-like run; validated as an identifier.
  std::string word(const char* what) {
    if (!at_word()) fail(what);
    const std::size_t start = pos_;
    while (at_word()) advance(1);
    std::string w(line_.substr(start, pos_ - start));
    if (!is_valid_id(w)) throw MalformedId(w);
    return w;
  }

  void expect(char c) {
    if (at_end() || line_[pos_] != c) fail(std::string("'") + c + "'");
    advance(1);
  }

  void expect_end() {
    skip_ws();
    if (!at_end()) fail("end of line");
  }

  /// Non-negative integer or p/q.
  Rational rational() {
    const std::size_t start = pos_;
    const auto digits = [this] {
      const std::size_t from = pos_;
      while (!at_end() && std::isdigit(static_cast<unsigned char>(line_[pos_]))) advance(1);
      return pos_ > from;
    };
    if (!digits()) fail("a weight (integer or p/q)");
    if (!at_end() && line_[pos_] == '/') {
      advance(1);
      if (!digits()) fail("a denominator");
    }
    if (!at_end() && line_[pos_] != ' ' && line_[pos_] != '\t' && line_[pos_] != ',') fail("',' or end of line");
    const auto r = Rational::parse(line_.substr(start, pos_ - start));
    if (!r) fail("a nonzero denominator");
    return *r;
  }

 private:
  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
  std::size_t column_ = 1;
};

/// Calls `fn(line, line_no)` on every line with comments and CR removed.
template <typename Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const bool blank = std::all_of(line.begin(), line.end(), [](char c) { return c == ' ' || c == '\t'; });
    if (!blank) fn(line, line_no);
  }
}

LotteryDocument::Entry parse_lottery_line(Cursor& c) {
  LotteryDocument::Entry entry;
  c.skip_ws();
  entry.pos = c.position();
  entry.name = c.word("a lottery name");
  c.skip_ws();
  c.expect(':');
  for (;;) {
    c.skip_ws();
    Alternative alt(c.word("an alternative"));
    c.skip_ws();
    c.expect('@');
    c.skip_ws();
    entry.pairs.emplace_back(std::move(alt), c.rational());
    c.skip_ws();
    if (c.at_end()) break;
    c.expect(',');
  }
  return entry;
}

}  // namespace

std::vector<PrefFact> PrefDocument::fact_list() const {
  std::vector<PrefFact> out;
  out.reserve(facts.size());
  for (const auto& f : facts) out.push_back(f.fact);
  return out;
}

std::vector<Alternative> PrefDocument::universe() const {
  std::vector<Alternative> out;
  out.reserve(universe_decls.size());
  for (const auto& d : universe_decls) out.push_back(d.alternative);
  return out;
}

PrefDocument parse_prefs(std::string_view text) {
  PrefDocument doc;
  for_each_line(text, [&doc](std::string_view line, std::size_t line_no) {
    Cursor c(line, line_no);
    c.skip_ws();
    const Position start = c.position();
    std::string left = c.word("an identifier");
    c.skip_ws();
    if (left == "alt" && c.at_word()) {
      doc.universe_decls.push_back({Alternative(c.word("an identifier")), start});
      c.expect_end();
      return;
    }
    const auto op = c.match_op();
    if (!op) c.fail(left == "alt" ? "an identifier" : "'<', '<=' or '~'");
    c.skip_ws();
    std::string right = c.word("an identifier");
    c.expect_end();
    const FactKind kind = *op == Op::Strict ? FactKind::Strict : (*op == Op::Weak ? FactKind::Weak : FactKind::Equiv);
    doc.facts.push_back({{kind, Alternative(std::move(left)), Alternative(std::move(right))}, start});
  });
  return doc;
}

std::string render_prefs(const PrefDocument& doc) {
  std::string out;
  for (const auto& d : doc.universe_decls) out += "alt " + d.alternative.id() + "\n";
  for (const auto& f : doc.facts) {
    const char* op = f.fact.kind == FactKind::Strict ? " < " : (f.fact.kind == FactKind::Weak ? " <= " : " ~ ");
    out += f.fact.left.id() + op + f.fact.right.id() + "\n";
  }
  return out;
}

const LotteryDocument::Entry* LotteryDocument::find(std::string_view name) const {
  for (const auto& e : entries) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

std::vector<NamedLottery> LotteryDocument::materialize(Normalize normalize) const {
  std::vector<NamedLottery> out;
  out.reserve(entries.size());
  for (const auto& e : entries) out.push_back({e.name, Lottery::make(e.pairs, normalize)});
  return out;
}

LotteryDocument parse_lotteries(std::string_view text) {
  LotteryDocument doc;
  std::set<std::string> names;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    Cursor c(line, line_no);
    auto entry = parse_lottery_line(c);
    if (!names.insert(entry.name).second) throw DuplicateName(entry.name, line_no);
    doc.entries.push_back(std::move(entry));
  });
  return doc;
}

std::string render_lotteries(const LotteryDocument& doc) {
  std::string out;
  for (const auto& e : doc.entries) {
    out += e.name + " :";
    for (std::size_t i = 0; i < e.pairs.size(); ++i) {
      out += (i == 0 ? " " : ", ") + e.pairs[i].first.id() + "@" + e.pairs[i].second.str();
    }
    out += "\n";
  }
  return out;
}

ModelDocument parse_model(std::string_view text) {
  ModelDocument doc;
  std::set<std::string> names;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    Cursor c(line, line_no);
    if (line.find(':') != std::string_view::npos) {
      auto entry = parse_lottery_line(c);
      if (!names.insert(entry.name).second) throw DuplicateName(entry.name, line_no);
      doc.lotteries.entries.push_back(std::move(entry));
      return;
    }
    c.skip_ws();
    const Position start = c.position();
    std::string left = c.word("a lottery name");
    c.skip_ws();
    const auto op = c.match_op();
    if (!op || *op != Op::Weak) c.fail("'<='");
    c.skip_ws();
    std::string right = c.word("a lottery name");
    c.expect_end();
    doc.weak.push_back({std::move(left), std::move(right), start});
  });
  return doc;
}

FiniteModel ModelDocument::materialize(Normalize normalize) const {
  FiniteModel model;
  for (auto& named : lotteries.materialize(normalize)) {
    model.names.push_back(std::move(named.name));
    model.family.push_back(std::move(named.lottery));
  }
  const auto index = [&model](const Pair& p, const std::string& name) {
    const auto it = std::find(model.names.begin(), model.names.end(), name);
    if (it == model.names.end()) {
      throw ForeignLottery("'" + name + "' on line " + std::to_string(p.pos.line));
    }
    return static_cast<std::size_t>(it - model.names.begin());
  };
  for (const auto& p : weak) model.weak.emplace_back(index(p, p.left), index(p, p.right));
  return model;
}

std::string render_verdict(const AdmissibleSet& verdict, bool verbose) {
  std::string out = verdict.members.str();
  if (!verbose) return out;
  for (const auto& firing : verdict.provenance) {
    out += "\n  " + rule_name(firing.rule) + ": removes " + firing.removed.str();
    if (firing.plan) out += " [" + firing.plan->str() + "]";
  }
  return out;
}

}  // namespace pdt
