#include "openfol/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <unistd.h>

#include "openfol/json_io.hpp"
#include "openfol/parser.hpp"

namespace openfol {

namespace {

struct CliConfig {
  std::optional<Mode> mode;
  Profile profile = Profile::Total;
  int max_size = 3;
  std::optional<int64_t> max_models;
  bool json = false;
  std::string color = "auto";

  bool colored() const {
    if (color == "on") return true;
    if (color == "off") return false;
    return isatty(STDOUT_FILENO);
  }
  std::string paint(const std::string& text, const char* code) const {
    if (!colored()) return text;
    return std::string("\033[") + code + "m" + text + "\033[0m";
  }
  std::string good(const std::string& t) const { return paint(t, "32"); }
  std::string bad(const std::string& t) const { return paint(t, "31"); }
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int cmd_check(const std::string& path, const CliConfig& cfg, std::ostream& out,
              std::ostream& err) {
  ProofScript script;
  try {
    script = parse_proof_script(read_file(path));
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Mode mode = resolve_mode(cfg.mode, script);
  ProofVerdict verdict = check_proof(script, mode);

  if (cfg.json) {
    out << check_json(path, mode, verdict).dump() << "\n";
  } else {
    out << path << " [mode: " << mode_name(mode) << "]\n";
    for (size_t i = 0; i < verdict.per_line.size(); ++i) {
      const LineResult& r = verdict.per_line[i];
      const ProofLine& line = script.lines[i];
      out << "  " << line.assumptions.to_string() << " (" << r.number << ") "
          << format_formula(line.formula);
      if (r.ok)
        out << "  " << cfg.good("ok") << "\n";
      else
        out << "  " << cfg.bad(line_error_kind_name(*r.error)) << ": "
            << r.message << "\n";
    }
    if (verdict.accepted) {
      out << cfg.good("accepted") << ": " << format_sequent(*verdict.sequent)
          << "\n";
      if (verdict.uses_identity_intro) out << "uses =I\n";
      if (verdict.uses_global_assumption) out << "uses GA\n";
    } else {
      out << cfg.bad("rejected") << "\n";
    }
  }
  return verdict.accepted ? 0 : 1;
}

int cmd_search(const std::vector<std::string>& premises,
               const std::string& conclusion, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
  Sequent sequent;
  try {
    for (const auto& p : premises) sequent.premises.push_back(parse_formula(p));
    sequent.conclusion = parse_formula(conclusion);
    std::vector<FormulaPtr> all = sequent.premises;
    all.push_back(sequent.conclusion);
    signature_of(all);  // arity consistency across the whole query
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  Bounds bounds;
  bounds.max_domain_size = cfg.max_size;
  bounds.max_models = cfg.max_models;
  CountermodelResult result;
  try {
    result = find_countermodel(sequent, bounds, cfg.profile);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.json) {
    out << search_json(sequent, cfg.profile, cfg.max_size, result).dump()
        << "\n";
  } else {
    out << format_sequent(sequent) << "\n";
    std::string status = search_status_name(result.status);
    out << (result.status == SearchStatus::Countermodel ? cfg.bad(status)
                                                        : cfg.good(status))
        << " (" << result.models_examined << " models examined, sizes <= "
        << cfg.max_size << ", profile " << profile_name(cfg.profile) << ")\n";
    if (result.model) out << model_json(*result.model).dump() << "\n";
  }
  switch (result.status) {
    case SearchStatus::ValidUpToBound: return 0;
    case SearchStatus::Countermodel: return 1;
    case SearchStatus::Inconclusive: return 3;
  }
  return 2;
}

int cmd_audit(const std::string& rule, bool all, const CliConfig& cfg,
              std::ostream& out, std::ostream& err) {
  std::vector<std::string> rules;
  if (all) {
    rules = auditable_rules();
  } else {
    rules.push_back(rule);
  }

  Bounds bounds;
  bounds.max_domain_size = cfg.max_size;
  std::vector<AuditReport> reports;
  try {
    for (const auto& r : rules)
      reports.push_back(audit_rule(r, bounds, cfg.profile));
  } catch (const UnknownRuleError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  bool any_counterexample = false;
  for (const auto& r : reports)
    if (r.status == AuditStatus::Counterexample) any_counterexample = true;

  if (cfg.json) {
    out << audit_json(cfg.profile, cfg.max_size, reports).dump() << "\n";
  } else {
    for (const auto& r : reports) {
      std::string status = audit_status_name(r.status);
      out << r.rule << ": "
          << (r.status == AuditStatus::SoundUpToBound ? cfg.good(status)
                                                      : cfg.bad(status))
          << " (" << r.instances_checked << " instances)\n";
      if (r.witness) {
        out << "  premises:";
        for (const auto& p : r.witness->premises)
          out << " '" << format_formula(p) << "'";
        out << "\n  conclusion: '" << format_formula(r.witness->conclusion)
            << "'\n  model: " << model_json(r.witness->model).dump() << "\n";
      }
    }
  }
  return any_counterexample ? 1 : 0;
}

int cmd_corpus(const std::string& manifest, const CliConfig& cfg,
               std::ostream& out, std::ostream& err) {
  std::set<Mode> modes;
  if (cfg.mode)
    modes = {*cfg.mode};
  else
    modes = {Mode::Classical, Mode::Open, Mode::Minimal};

  CorpusReport report;
  try {
    report = run_corpus(manifest, modes);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  if (cfg.json) {
    out << corpus_json(manifest, report).dump() << "\n";
  } else {
    for (const auto& r : report.rows) {
      out << (r.pass ? cfg.good("PASS") : cfg.bad("FAIL")) << "  " << r.entry
          << " " << r.check << ": expected " << r.expected;
      if (!r.pass) out << ", observed " << r.observed;
      out << "\n";
    }
    out << (report.all_pass ? cfg.good("all entries pass")
                            : cfg.bad("corpus failures"))
        << "\n";
  }
  return report.all_pass ? 0 : 1;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"proof checker and finite-model countermodel engine for "
               "first-order logic with assumption-based identity"};
  app.require_subcommand(1);

  std::string mode_str, profile_str = "total", output = "human",
              color = "auto";
  int max_size = 3;
  app.add_option("--mode", mode_str, "classical | open | minimal")
      ->check(CLI::IsMember({"classical", "open", "minimal"}));
  app.add_option("--profile", profile_str,
                 "total | null-strict | partial | null-padded")
      ->check(CLI::IsMember({"total", "null-strict", "partial", "null-padded"}));
  app.add_option("--max-size", max_size, "domain size bound (<= 4)");
  app.add_option("--output", output, "human | json")
      ->check(CLI::IsMember({"human", "json"}));
  app.add_option("--color", color, "auto | on | off")
      ->check(CLI::IsMember({"auto", "on", "off"}));

  std::string check_path;
  auto* check = app.add_subcommand("check", "check a .lfd proof script");
  check->add_option("path", check_path, "proof script")->required();
  check->fallthrough();

  std::vector<std::string> premises;
  std::string conclusion;
  int64_t max_models = 0;
  auto* search =
      app.add_subcommand("search", "look for a countermodel to a sequent");
  search->add_option("--premise", premises, "premise formula (repeatable)");
  search->add_option("--conclude", conclusion, "conclusion formula")
      ->required();
  auto* max_models_opt =
      search->add_option("--max-models", max_models, "cap on models examined");
  search->fallthrough();

  std::string rule;
  bool audit_all = false;
  auto* audit = app.add_subcommand("audit", "soundness-audit inference rules");
  audit->add_option("--rule", rule, "rule name (or '=I-schema')");
  audit->add_flag("--all", audit_all, "audit the whole rule table");
  audit->fallthrough();

  const char* env_manifest = std::getenv("OPENFOL_CORPUS");
  std::string manifest =
      env_manifest ? env_manifest : "corpus/manifest.txt";
  auto* corpus = app.add_subcommand("corpus", "run the bundled corpus");
  corpus->add_option("--manifest", manifest, "manifest path");
  corpus->fallthrough();

  std::vector<const char*> argv;
  argv.push_back("openfol");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  CliConfig cfg;
  if (!mode_str.empty()) cfg.mode = mode_from_name(mode_str);
  cfg.profile = *profile_from_name(profile_str);
  cfg.max_size = max_size;
  if (max_models_opt->count() > 0) cfg.max_models = max_models;
  cfg.json = output == "json";
  cfg.color = color;

  if (check->parsed()) return cmd_check(check_path, cfg, out, err);
  if (search->parsed()) return cmd_search(premises, conclusion, cfg, out, err);
  if (audit->parsed()) {
    if (audit_all == !rule.empty()) {
      // exactly one of --rule / --all
      err << "error: audit needs --rule NAME or --all\n";
      return 2;
    }
    return cmd_audit(rule, audit_all, cfg, out, err);
  }
  if (corpus->parsed()) return cmd_corpus(manifest, cfg, out, err);
  err << "error: no subcommand\n";
  return 2;
}

}  // namespace openfol
