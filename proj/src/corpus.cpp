#include "openfol/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "openfol/parser.hpp"

namespace openfol {

MissingEntryError::MissingEntryError(const std::vector<std::string>& ids)
    : Error([&] {
        std::string msg = "missing corpus entries:";
        for (const auto& id : ids) msg += " " + id;
        return msg;
      }()) {}

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_top_level_commas(const std::string& s) {
  std::vector<std::string> out;
  int depth = 0;
  std::string cur;
  for (char c : s) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

}  // namespace

Sequent parse_sequent_text(const std::string& text) {
  auto turnstile = text.find("|-");
  if (turnstile == std::string::npos)
    throw Error("sequent needs a '|-': " + text);
  Sequent s;
  std::string left = trim(text.substr(0, turnstile));
  if (!left.empty())
    for (const auto& part : split_top_level_commas(left))
      s.premises.push_back(parse_formula(trim(part)));
  s.conclusion = parse_formula(trim(text.substr(turnstile + 2)));
  return s;
}

std::string format_sequent(const Sequent& s) {
  std::string out;
  for (size_t i = 0; i < s.premises.size(); ++i) {
    if (i) out += ", ";
    out += format_formula(s.premises[i]);
  }
  if (!out.empty()) out += ' ';
  out += "|- " + format_formula(s.conclusion);
  if (s.global_identity) out += "  [G]";
  return out;
}

namespace {

std::string dir_of(const std::string& path) {
  auto slash = path.find_last_of('/');
  if (slash == std::string::npos) return ".";
  return path.substr(0, slash);
}

}  // namespace

CorpusManifest parse_corpus_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open manifest '" + path + "'");

  CorpusManifest manifest;
  manifest.directory = dir_of(path);
  CorpusEntry* current = nullptr;
  std::set<std::string> seen_ids;

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::string line = trim(raw);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']')
        throw ManifestError(line_no, "unterminated entry header");
      std::string id = trim(line.substr(1, line.size() - 2));
      if (id.empty()) throw ManifestError(line_no, "empty entry id");
      if (!seen_ids.insert(id).second)
        throw ManifestError(line_no, "duplicate entry id '" + id + "'");
      manifest.entries.push_back(CorpusEntry{});
      current = &manifest.entries.back();
      current->id = id;
      continue;
    }

    if (!current) throw ManifestError(line_no, "key outside any [entry]");
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ManifestError(line_no, "expected 'key = value'");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));

    try {
      if (key == "file") {
        current->file = value;
      } else if (key == "sequent") {
        current->sequent_query = parse_sequent_text(value);
      } else if (key.rfind("expect.", 0) == 0) {
        auto mode = mode_from_name(key.substr(7));
        if (!mode) throw ManifestError(line_no, "unknown mode in '" + key + "'");
        current->expect[*mode] = value;
      } else if (key == "establishes") {
        current->establishes = parse_sequent_text(value);
      } else if (key == "search") {
        SearchExpectation exp;
        std::string head = value;
        auto sep = value.find("::");
        if (sep != std::string::npos) {
          head = trim(value.substr(0, sep));
          exp.sequent = parse_sequent_text(trim(value.substr(sep + 2)));
        }
        std::istringstream hs(head);
        std::string profile, status;
        int size = 0;
        if (!(hs >> profile >> size >> status))
          throw ManifestError(line_no, "search needs '<profile> <size> <status>'");
        auto p = profile_from_name(profile);
        if (!p) throw ManifestError(line_no, "unknown profile '" + profile + "'");
        exp.profile = *p;
        exp.max_size = size;
        if (status == "VALID_UP_TO_BOUND") exp.status = SearchStatus::ValidUpToBound;
        else if (status == "COUNTERMODEL") exp.status = SearchStatus::Countermodel;
        else if (status == "INCONCLUSIVE") exp.status = SearchStatus::Inconclusive;
        else throw ManifestError(line_no, "unknown status '" + status + "'");
        current->searches.push_back(std::move(exp));
      } else if (key == "eval.empty" || key == "eval.padded") {
        auto arrow = value.find("=>");
        if (arrow == std::string::npos)
          throw ManifestError(line_no, "eval needs '<formula> => true|false'");
        EvalExpectation exp;
        exp.padded = key == "eval.padded";
        exp.formula = parse_formula(trim(value.substr(0, arrow)));
        std::string verdict = trim(value.substr(arrow + 2));
        if (verdict == "true") exp.expected = true;
        else if (verdict == "false") exp.expected = false;
        else throw ManifestError(line_no, "expected 'true' or 'false'");
        current->evals.push_back(std::move(exp));
      } else {
        throw ManifestError(line_no, "unknown key '" + key + "'");
      }
    } catch (const SyntaxError& e) {
      throw ManifestError(line_no, e.what());
    }
  }
  return manifest;
}

const std::vector<std::string>& mandatory_corpus_ids() {
  static const std::vector<std::string> ids = {
      "CG",   "CG-GA", "CGC",  "NEG",  "APP1", "APP2",
      "APP3", "APP4",  "APP4T", "APP5", "APP5B", "APP6",
      "APP7", "APP8",  "UNIQ", "EMPTY",
  };
  return ids;
}

namespace {

bool sequents_equal(const Sequent& a, const Sequent& b) {
  if (a.premises.size() != b.premises.size()) return false;
  for (size_t i = 0; i < a.premises.size(); ++i)
    if (!equal(a.premises[i], b.premises[i])) return false;
  return equal(a.conclusion, b.conclusion);
}

std::string describe_verdict(const ProofVerdict& v) {
  if (v.accepted) {
    if (v.sequent->premises.empty())
      return v.sequent->global_identity ? "theorem-ga" : "theorem";
    return "accepted";
  }
  for (const auto& line : v.per_line)
    if (!line.ok) return "rejected@" + std::to_string(line.number);
  return "rejected";
}

bool verdict_matches(const std::string& expected, const ProofVerdict& v) {
  if (expected == "accepted") return v.accepted;
  if (expected == "theorem")
    return v.accepted && v.sequent->premises.empty() &&
           !v.sequent->global_identity;
  if (expected == "theorem-ga")
    return v.accepted && v.sequent->premises.empty() &&
           v.sequent->global_identity;
  if (expected.rfind("rejected@", 0) == 0)
    return !v.accepted && describe_verdict(v) == expected;
  return false;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CorpusRunner {
 public:
  CorpusRunner(const CorpusManifest& manifest, const std::set<Mode>& modes)
      : manifest_(manifest), modes_(modes) {}

  CorpusReport run() {
    for (const auto& entry : manifest_.entries) run_entry(entry);
    std::stable_sort(report_.rows.begin(), report_.rows.end(),
                     [](const CorpusRow& a, const CorpusRow& b) {
                       return a.entry < b.entry;
                     });
    return report_;
  }

 private:
  const CorpusManifest& manifest_;
  const std::set<Mode>& modes_;
  CorpusReport report_;

  void row(const std::string& entry, const std::string& check,
           const std::string& expected, const std::string& observed) {
    bool pass = expected == observed;
    report_.rows.push_back({entry, check, expected, observed, pass});
    if (!pass) report_.all_pass = false;
  }

  void row_status(const std::string& entry, const std::string& check,
                  const std::string& expected, const std::string& observed,
                  bool pass) {
    report_.rows.push_back({entry, check, expected, observed, pass});
    if (!pass) report_.all_pass = false;
  }

  void run_entry(const CorpusEntry& entry) {
    std::optional<ProofScript> script;
    if (entry.file) {
      std::string path = entry.file->front() == '/'
                             ? *entry.file
                             : manifest_.directory + "/" + *entry.file;
      try {
        script = parse_proof_script(read_file(path));
      } catch (const Error& e) {
        row_status(entry.id, "parse", "parses", e.what(), false);
        return;
      }
    }

    std::optional<Sequent> established;
    if (script) {
      for (Mode mode : {Mode::Classical, Mode::Open, Mode::Minimal}) {
        auto it = entry.expect.find(mode);
        if (it == entry.expect.end() || !modes_.count(mode)) continue;
        ProofVerdict verdict = check_proof(*script, mode);
        row_status(entry.id, mode_name(mode), it->second,
                   describe_verdict(verdict),
                   verdict_matches(it->second, verdict));
        if (verdict.accepted) {
          if (!established) established = verdict.sequent;
          if (entry.establishes)
            row_status(entry.id, "sequent@" + mode_name(mode),
                       format_sequent(*entry.establishes),
                       format_sequent(*verdict.sequent),
                       sequents_equal(*entry.establishes, *verdict.sequent));
        }
      }
      // Bounded soundness: whatever checks under minimal mode must survive
      // countermodel search at desk scale.
      if (modes_.count(Mode::Minimal)) {
        ProofVerdict minimal = check_proof(*script, Mode::Minimal);
        if (minimal.accepted) {
          Bounds bounds;
          bounds.max_domain_size = 3;
          CountermodelResult r =
              find_countermodel(*minimal.sequent, bounds, Profile::Total);
          row(entry.id, "bounded-soundness", "VALID_UP_TO_BOUND",
              search_status_name(r.status));
        }
      }
    }

    for (size_t i = 0; i < entry.searches.size(); ++i) {
      const SearchExpectation& exp = entry.searches[i];
      std::optional<Sequent> target = exp.sequent;
      if (!target) target = entry.sequent_query;
      if (!target) target = established;
      std::string check = "search[" + std::to_string(i) + "]";
      if (!target) {
        row_status(entry.id, check, search_status_name(exp.status),
                   "no sequent to search", false);
        continue;
      }
      Bounds bounds;
      bounds.max_domain_size = exp.max_size;
      CountermodelResult r = find_countermodel(*target, bounds, exp.profile);
      row(entry.id, check, search_status_name(exp.status),
          search_status_name(r.status));
    }

    if (!entry.evals.empty()) run_evals(entry);
  }

  void run_evals(const CorpusEntry& entry) {
    std::vector<FormulaPtr> formulas;
    for (const auto& e : entry.evals) formulas.push_back(e.formula);
    Model empty = empty_partial_model(signature_of(formulas));
    Model padded = null_pad(empty);

    for (size_t i = 0; i < entry.evals.size(); ++i) {
      const EvalExpectation& e = entry.evals[i];
      const Model& m = e.padded ? padded : empty;
      Profile p = e.padded ? Profile::NullStrict : Profile::Partial;
      bool value = eval_formula(m, {}, e.formula, p);
      row(entry.id, std::string(e.padded ? "eval.padded[" : "eval.empty[") +
                        std::to_string(i) + "]",
          e.expected ? "true" : "false", value ? "true" : "false");
    }
    if (std::any_of(entry.evals.begin(), entry.evals.end(),
                    [](const EvalExpectation& e) { return e.padded; })) {
      auto violations = validate_model(padded, Profile::NullStrict);
      row_status(entry.id, "padded-null-strict", "valid",
                 violations.empty() ? "valid" : violations.front(),
                 violations.empty());
    }
  }
};

}  // namespace

CorpusReport run_corpus(const std::string& manifest_path,
                        const std::set<Mode>& modes) {
  CorpusManifest manifest = parse_corpus_manifest(manifest_path);
  std::set<std::string> present;
  for (const auto& e : manifest.entries) present.insert(e.id);
  std::vector<std::string> missing;
  for (const auto& id : mandatory_corpus_ids())
    if (!present.count(id)) missing.push_back(id);
  if (!missing.empty()) throw MissingEntryError(missing);
  return CorpusRunner(manifest, modes).run();
}

}  // namespace openfol
