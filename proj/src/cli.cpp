#include "pdt/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include "pdt/axiomlab.hpp"
#include "pdt/engine.hpp"
#include "pdt/error.hpp"
#include "pdt/io.hpp"
#include "pdt/saturate.hpp"

namespace pdt {

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct CliConfig {
  std::string prefs_path;
  std::string lotteries_path;
  std::string model_path;
  std::string first;
  std::string second;
  std::string verify_path;
  bool emit = false;
  bool normalize = false;
  bool verbose = false;
  std::string format = "text";

  bool tsv() const { return format == "tsv"; }
  Normalize normalization() const { return normalize ? Normalize::Yes : Normalize::No; }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

BaseRelation load_relation(const CliConfig& cfg) { return parse_prefs(read_file(cfg.prefs_path)).relation(); }

std::vector<NamedLottery> load_lotteries(const CliConfig& cfg) {
  return parse_lotteries(read_file(cfg.lotteries_path)).materialize(cfg.normalization());
}

int cmd_validate(const CliConfig& cfg, std::ostream& out) {
  const auto doc = parse_prefs(read_file(cfg.prefs_path));
  try {
    const auto rel = doc.relation();
    if (cfg.tsv()) {
      out << "ok\t" << rel.size() << '\t' << rel.closure_size() << '\n';
    } else {
      out << "ok: " << rel.size() << " alternatives, " << rel.closure_size() << " pairs in closure\n";
    }
  } catch (const StrictViolation& e) {
    out << (cfg.tsv() ? "strict-violation\t" + e.left() + "\t" + e.right() : std::string(e.what())) << '\n';
    return exit_code::kStrictViolation;
  }
  return exit_code::kOk;
}

const Lottery& lookup(const std::vector<NamedLottery>& lotteries, const std::string& name) {
  for (const auto& l : lotteries) {
    if (l.name == name) return l.lottery;
  }
  throw UsageError("no lottery named '" + name + "'");
}

int cmd_compare(const CliConfig& cfg, std::ostream& out) {
  const auto rel = load_relation(cfg);
  const auto lotteries = load_lotteries(cfg);
  const auto& f = lookup(lotteries, cfg.first);
  const auto& g = lookup(lotteries, cfg.second);
  const auto verdict = compare(rel, f, g);
  if (cfg.tsv()) {
    out << cfg.first << '\t' << cfg.second << '\t' << verdict.members.str() << '\n';
  } else {
    out << render_verdict(verdict, cfg.verbose) << '\n';
  }
  return exit_code::kOk;
}

int cmd_filter(const CliConfig& cfg, std::ostream& out) {
  const auto rel = load_relation(cfg);
  const auto offers = load_lotteries(cfg);
  for (const auto& kept : maximal_filter(rel, offers)) out << kept.name << '\n';
  return exit_code::kOk;
}

int cmd_table(const CliConfig& cfg, std::ostream& out) {
  const auto rows = regenerate_table();
  if (cfg.verify_path.empty()) {
    if (cfg.tsv()) {
      for (const auto& row : rows) out << row.tuple.str() << '\t' << row.outcomes.str() << '\n';
    } else {
      out << render_table(rows);
    }
    return exit_code::kOk;
  }
  const auto expected = parse_table(read_file(cfg.verify_path));
  const auto diffs = diff_table(expected, rows);
  out << render_diff(diffs);
  return diffs.empty() ? exit_code::kOk : exit_code::kTableMismatch;
}

int cmd_check(const CliConfig& cfg, std::ostream& out) {
  const auto rel = load_relation(cfg);
  const auto model = parse_model(read_file(cfg.model_path)).materialize(cfg.normalization());
  const auto violations = check_axioms(model, rel);
  for (const auto& v : violations) {
    if (cfg.tsv()) {
      out << axiom_id(v.axiom);
      for (const auto w : v.witnesses) out << '\t' << model.name_of(w);
      if (v.alpha) out << "\talpha=" << *v.alpha;
      if (v.beta) out << "\tbeta=" << *v.beta;
      out << '\n';
    } else {
      out << v.describe(model) << '\n';
    }
  }
  if (violations.empty() && !cfg.tsv()) {
    out << "ok: no violations over " << model.family.size() << " lotteries\n";
  }
  return violations.empty() ? exit_code::kOk : exit_code::kAxiomViolation;
}

std::string display_name(const DerivedFacts& facts, const std::vector<NamedLottery>& named, std::size_t i) {
  const Lottery& l = facts.lotteries[i];
  for (const auto& n : named) {
    if (n.lottery == l) return n.name;
  }
  return "[" + l.str() + "]";
}

int cmd_saturate(const CliConfig& cfg, std::ostream& out) {
  const auto rel = load_relation(cfg);
  const auto named = load_lotteries(cfg);
  std::vector<Lottery> family;
  family.reserve(named.size());
  for (const auto& n : named) family.push_back(n.lottery);
  const auto facts = saturate(rel, family);

  for (std::size_t i = 0; i < facts.family_size; ++i) {
    for (std::size_t j = 0; j < facts.family_size; ++j) {
      if (i == j || !facts.is_weak(i, j)) continue;
      const bool strict = facts.is_strict(i, j);
      const std::string op = strict ? "<" : "<=";
      const std::string left = display_name(facts, named, i);
      const std::string right = display_name(facts, named, j);
      if (cfg.tsv()) {
        out << left << '\t' << op << '\t' << right << '\n';
        continue;
      }
      out << left << ' ' << op << ' ' << right << '\n';
      if (!cfg.verbose) continue;
      const auto& d = facts.derivations.at(Fact{i, j, strict});
      out << "  by " << derivation_rule_name(d.rule);
      if (!d.witnesses.empty()) {
        out << " on";
        for (const auto w : d.witnesses) out << ' ' << display_name(facts, named, w);
      }
      if (d.alpha) out << " alpha=" << *d.alpha;
      if (d.beta) out << " beta=" << *d.beta;
      if (d.plan) out << " [" << d.plan->str() << "]";
      out << '\n';
    }
  }
  return exit_code::kOk;
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  CLI::App app{"Partial-preference reasoning over lotteries with exact arithmetic", "pdt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--normalize", cfg.normalize, "Divide lottery weights by their sum");
  app.add_flag("-v,--verbose", cfg.verbose, "Show rule provenance");
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "tsv"}));

  auto* validate = app.add_subcommand("validate", "Close a preference file and report its size");
  validate->add_option("prefs", cfg.prefs_path)->required();

  auto* cmp = app.add_subcommand("compare", "Admissible judgments between two named lotteries");
  cmp->add_option("prefs", cfg.prefs_path)->required();
  cmp->add_option("lotteries", cfg.lotteries_path)->required();
  cmp->add_option("first", cfg.first)->required();
  cmp->add_option("second", cfg.second)->required();

  auto* filter = app.add_subcommand("filter", "Offers not certainly dominated by another offer");
  filter->add_option("prefs", cfg.prefs_path)->required();
  filter->add_option("lotteries", cfg.lotteries_path)->required();

  auto* table = app.add_subcommand("table", "Emit or verify the draw-tuple case table");
  auto* emit = table->add_flag("--emit", cfg.emit, "Print the regenerated table (default)");
  auto* verify = table->add_option("--verify", cfg.verify_path, "Diff against a transcription file");
  emit->excludes(verify);

  auto* check = app.add_subcommand("check", "Check an explicit finite model against the axioms");
  check->add_option("prefs", cfg.prefs_path)->required();
  check->add_option("model", cfg.model_path)->required();

  auto* sat = app.add_subcommand("saturate", "Derive weak and strict facts over a lottery family");
  sat->add_option("prefs", cfg.prefs_path)->required();
  sat->add_option("lotteries", cfg.lotteries_path)->required();

  std::vector<std::string> argv_storage{"pdt"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_code::kOk;
  } catch (const CLI::ParseError& e) {
    err << "pdt: " << e.what() << '\n';
    return exit_code::kUsage;
  }

  try {
    if (validate->parsed()) return cmd_validate(cfg, out);
    if (cmp->parsed()) return cmd_compare(cfg, out);
    if (filter->parsed()) return cmd_filter(cfg, out);
    if (table->parsed()) return cmd_table(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (sat->parsed()) return cmd_saturate(cfg, out);
  } catch (const StrictViolation& e) {
    err << "pdt: " << e.what() << '\n';
    return exit_code::kStrictViolation;
  } catch (const Error& e) {
    err << "pdt: " << e.what() << '\n';
    return exit_code::kUsage;
  }
  return exit_code::kUsage;
}

}  // namespace pdt
