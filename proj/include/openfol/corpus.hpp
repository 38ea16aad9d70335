// Bundled proof scripts and sequent queries with expected verdicts, driven
// by a plain-text manifest. Manifest grammar ('#' comments allowed):
//
//   [ID]
//   file = relative/path.lfd          (or: sequent = <sequent>)
//   expect.classical = accepted | rejected@N | theorem | theorem-ga
//   expect.open = ...
//   expect.minimal = ...
//   establishes = <sequent>           sequent the proof must establish
//   search = <profile> <max-size> <status> [:: <sequent>]
//   eval.empty = <formula> => true|false
//   eval.padded = <formula> => true|false
//
// A <sequent> is 'premise, premise |- conclusion' with an empty left side
// for theorems. eval.empty runs in the empty partial model over the entry's
// evaluation vocabulary; eval.padded runs in its null-padding. Every file
// entry accepted under minimal mode is additionally cross-checked for
// countermodels at domain size <= 3 under the total profile.

#ifndef OPENFOL_CORPUS_HPP
#define OPENFOL_CORPUS_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "openfol/kernel.hpp"
#include "openfol/search.hpp"
#include "openfol/semantics.hpp"

namespace openfol {

struct ManifestError : Error {
  ManifestError(int line, const std::string& what)
      : Error("manifest line " + std::to_string(line) + ": " + what) {}
};

struct MissingEntryError : Error {
  explicit MissingEntryError(const std::vector<std::string>& ids);
};

Sequent parse_sequent_text(const std::string& text);
std::string format_sequent(const Sequent& s);

struct SearchExpectation {
  Profile profile;
  int max_size;
  SearchStatus status;
  std::optional<Sequent> sequent;  // defaults to the entry's own sequent
};

struct EvalExpectation {
  bool padded = false;
  FormulaPtr formula;
  bool expected = false;
};

struct CorpusEntry {
  std::string id;
  std::optional<std::string> file;  // resolved against the manifest dir
  std::optional<Sequent> sequent_query;
  std::map<Mode, std::string> expect;
  std::optional<Sequent> establishes;
  std::vector<SearchExpectation> searches;
  std::vector<EvalExpectation> evals;
};

struct CorpusManifest {
  std::string directory;
  std::vector<CorpusEntry> entries;
};

CorpusManifest parse_corpus_manifest(const std::string& path);

// Entry ids a complete corpus must provide.
const std::vector<std::string>& mandatory_corpus_ids();

struct CorpusRow {
  std::string entry;
  std::string check;     // "classical", "sequent@open", "search[0]", ...
  std::string expected;
  std::string observed;
  bool pass = false;
};

struct CorpusReport {
  std::vector<CorpusRow> rows;
  bool all_pass = true;
};

// Runs every entry under the requested modes plus its search and evaluation
// expectations. Throws MissingEntryError when a mandatory id is absent.
CorpusReport run_corpus(const std::string& manifest_path,
                        const std::set<Mode>& modes);

}  // namespace openfol

#endif  // OPENFOL_CORPUS_HPP
