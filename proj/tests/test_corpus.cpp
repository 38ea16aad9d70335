#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "openfol/corpus.hpp"
#include "util.hpp"

using namespace openfol;

namespace {

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

void replace_first(std::string& text, const std::string& from,
                   const std::string& to) {
  auto at = text.find(from);
  REQUIRE(at != std::string::npos);
  text.replace(at, from.size(), to);
}

std::string absolute_manifest_text() {
  std::string text = test::read_file(test::corpus_dir() + "/manifest.txt");
  std::string needle = "file = ";
  std::string replacement = "file = " + test::corpus_dir() + "/";
  size_t at = 0;
  while ((at = text.find(needle, at)) != std::string::npos) {
    text.replace(at, needle.size(), replacement);
    at += replacement.size();
  }
  return text;
}

}  // namespace

TEST_CASE("sequent text parsing") {
  Sequent s = parse_sequent_text("a = b, P(a) |- P(b)");
  REQUIRE(s.premises.size() == 2);
  CHECK(format_formula(s.premises[1]) == "P(a)");
  CHECK(format_formula(s.conclusion) == "P(b)");

  // commas inside predicate arguments do not split premises
  Sequent r = parse_sequent_text("R(a,b) |- Q");
  CHECK(r.premises.size() == 1);

  Sequent t = parse_sequent_text("|- a = a");
  CHECK(t.premises.empty());

  CHECK_THROWS_AS(parse_sequent_text("a = a"), Error);
}

TEST_CASE("the bundled corpus passes in full") {
  CorpusReport report =
      run_corpus(test::corpus_dir() + "/manifest.txt",
                 {Mode::Classical, Mode::Open, Mode::Minimal});
  CHECK(report.all_pass);
  for (const auto& row : report.rows) {
    CAPTURE(row.entry);
    CAPTURE(row.check);
    CAPTURE(row.observed);
    CHECK(row.pass);
  }
  // every mandatory entry produced at least one row
  for (const auto& id : mandatory_corpus_ids()) {
    bool found = std::any_of(
        report.rows.begin(), report.rows.end(),
        [&](const CorpusRow& r) { return r.entry == id; });
    CAPTURE(id);
    CHECK(found);
  }
  // report order is by entry id
  CHECK(std::is_sorted(report.rows.begin(), report.rows.end(),
                       [](const CorpusRow& a, const CorpusRow& b) {
                         return a.entry < b.entry;
                       }));
}

TEST_CASE("a missing mandatory entry aborts the run") {
  std::string path = write_temp("openfol_manifest_missing.txt",
                                "[CG]\nfile = " + test::corpus_dir() +
                                    "/cg.lfd\nexpect.classical = theorem\n");
  CHECK_THROWS_AS(run_corpus(path, {Mode::Classical}), MissingEntryError);
}

TEST_CASE("a wrong expectation is reported, not swallowed") {
  std::string text = absolute_manifest_text();
  // claim the categorical inference survives open mode; it must not
  replace_first(text, "expect.open = rejected@1", "expect.open = accepted");
  std::string path = write_temp("openfol_manifest_flipped.txt", text);
  CorpusReport report =
      run_corpus(path, {Mode::Classical, Mode::Open, Mode::Minimal});
  CHECK_FALSE(report.all_pass);
  bool found = false;
  for (const auto& row : report.rows)
    if (row.entry == "CG" && row.check == "open" && !row.pass) {
      found = true;
      CHECK(row.observed == "rejected@1");
    }
  CHECK(found);
}

TEST_CASE("manifest grammar errors carry the line") {
  std::string path =
      write_temp("openfol_manifest_bad.txt", "[X]\nfile nope\n");
  CHECK_THROWS_AS(parse_corpus_manifest(path), ManifestError);
  std::string path2 = write_temp("openfol_manifest_bad2.txt",
                                 "stray = value\n");
  CHECK_THROWS_AS(parse_corpus_manifest(path2), ManifestError);
  std::string path3 = write_temp("openfol_manifest_bad3.txt",
                                 "[X]\nsearch = total nine VALID\n");
  CHECK_THROWS_AS(parse_corpus_manifest(path3), ManifestError);
}
