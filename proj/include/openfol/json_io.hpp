// JSON renderings used by the CLI and the report golden tests. Keys come out
// sorted (nlohmann keeps objects in a sorted map), pairs and tuples are
// emitted in their stored sorted order, so every rendering is byte-stable.

#ifndef OPENFOL_JSON_IO_HPP
#define OPENFOL_JSON_IO_HPP

#include <json.hpp>

#include "openfol/corpus.hpp"
#include "openfol/kernel.hpp"
#include "openfol/search.hpp"
#include "openfol/semantics.hpp"

namespace openfol {

nlohmann::json model_json(const Model& m);
nlohmann::json sequent_json(const Sequent& s);
nlohmann::json check_json(const std::string& file, Mode mode,
                          const ProofVerdict& verdict);
nlohmann::json search_json(const Sequent& s, Profile profile, int max_size,
                           const CountermodelResult& result);
nlohmann::json audit_json(Profile profile, int max_size,
                          const std::vector<AuditReport>& reports);
nlohmann::json corpus_json(const std::string& manifest,
                           const CorpusReport& report);

}  // namespace openfol

#endif  // OPENFOL_JSON_IO_HPP
