#include "openfol/json_io.hpp"

namespace openfol {

using nlohmann::json;

json model_json(const Model& m) {
  json j;
  j["domain_size"] = m.domain_size;
  json names = json::object();
  for (const auto& [name, e] : m.denotation) names[name] = e;
  j["names"] = names;
  json identity = json::array();
  for (const auto& [a, b] : m.identity) identity.push_back({a, b});
  j["identity"] = identity;
  if (!m.predicates.empty()) {
    json preds = json::object();
    for (const auto& [key, ext] : m.predicates) {
      std::string name = key.first + "/" + std::to_string(key.second);
      if (key.second == 0) {
        preds[name] = ext.count(Tuple{}) > 0;
      } else {
        json tuples = json::array();
        for (const auto& t : ext) tuples.push_back(t);
        preds[name] = tuples;
      }
    }
    j["predicates"] = preds;
  }
  return j;
}

json sequent_json(const Sequent& s) {
  json j;
  json premises = json::array();
  for (const auto& p : s.premises) premises.push_back(format_formula(p));
  j["premises"] = premises;
  j["conclusion"] = format_formula(s.conclusion);
  j["global_identity"] = s.global_identity;
  return j;
}

json check_json(const std::string& file, Mode mode, const ProofVerdict& v) {
  json j;
  j["file"] = file;
  j["mode"] = mode_name(mode);
  j["accepted"] = v.accepted;
  json lines = json::array();
  for (const auto& line : v.per_line) {
    json l;
    l["n"] = line.number;
    l["ok"] = line.ok;
    if (!line.ok)
      l["error"] = line_error_kind_name(*line.error) + ": " + line.message;
    lines.push_back(l);
  }
  j["lines"] = lines;
  if (v.sequent) j["sequent"] = sequent_json(*v.sequent);
  j["uses_identity_intro"] = v.uses_identity_intro;
  j["uses_global_assumption"] = v.uses_global_assumption;
  return j;
}

json search_json(const Sequent& s, Profile profile, int max_size,
                 const CountermodelResult& result) {
  json j;
  json premises = json::array();
  for (const auto& p : s.premises) premises.push_back(format_formula(p));
  j["premises"] = premises;
  j["conclusion"] = format_formula(s.conclusion);
  j["profile"] = profile_name(profile);
  j["max_size"] = max_size;
  j["status"] = search_status_name(result.status);
  j["models_examined"] = result.models_examined;
  if (result.model) j["model"] = model_json(*result.model);
  return j;
}

json audit_json(Profile profile, int max_size,
                const std::vector<AuditReport>& reports) {
  json j;
  j["profile"] = profile_name(profile);
  j["max_size"] = max_size;
  json list = json::array();
  for (const auto& r : reports) {
    json item;
    item["rule"] = r.rule;
    item["status"] = audit_status_name(r.status);
    item["instances_checked"] = r.instances_checked;
    if (r.witness) {
      json w;
      json premises = json::array();
      for (const auto& p : r.witness->premises)
        premises.push_back(format_formula(p));
      w["premises"] = premises;
      w["conclusion"] = format_formula(r.witness->conclusion);
      w["model"] = model_json(r.witness->model);
      item["witness"] = w;
    }
    list.push_back(item);
  }
  j["reports"] = list;
  return j;
}

json corpus_json(const std::string& manifest, const CorpusReport& report) {
  json j;
  j["manifest"] = manifest;
  j["all_pass"] = report.all_pass;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["entry"] = r.entry;
    row["check"] = r.check;
    row["expected"] = r.expected;
    row["observed"] = r.observed;
    row["pass"] = r.pass;
    rows.push_back(row);
  }
  j["rows"] = rows;
  return j;
}

}  // namespace openfol
