#include "openfol/proof.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "openfol/parser.hpp"

namespace openfol {

std::string rule_name(Rule r) {
  switch (r) {
    case Rule::A: return "A";
    case Rule::IdIntro: return "=I";
    case Rule::GA: return "GA";
    case Rule::IdElim: return "=E";
    case Rule::MPP: return "MPP";
    case Rule::MTT: return "MTT";
    case Rule::DN: return "DN";
    case Rule::CP: return "CP";
    case Rule::AndI: return "AndI";
    case Rule::AndE: return "AndE";
    case Rule::OrI: return "OrI";
    case Rule::OrE: return "OrE";
    case Rule::RAA: return "RAA";
    case Rule::IffI: return "IffI";
    case Rule::IffE: return "IffE";
    case Rule::UE: return "UE";
    case Rule::UI: return "UI";
    case Rule::EI: return "EI";
    case Rule::EE: return "EE";
    case Rule::QN: return "QN";
  }
  return "?";
}

std::optional<Rule> rule_from_name(const std::string& name) {
  static const std::map<std::string, Rule> table = {
      {"A", Rule::A},       {"=I", Rule::IdIntro}, {"GA", Rule::GA},
      {"=E", Rule::IdElim}, {"MPP", Rule::MPP},    {"MTT", Rule::MTT},
      {"DN", Rule::DN},     {"CP", Rule::CP},      {"AndI", Rule::AndI},
      {"&I", Rule::AndI},   {"AndE", Rule::AndE},  {"&E", Rule::AndE},
      {"OrI", Rule::OrI},   {"vI", Rule::OrI},     {"OrE", Rule::OrE},
      {"vE", Rule::OrE},    {"RAA", Rule::RAA},    {"IffI", Rule::IffI},
      {"IffE", Rule::IffE}, {"UE", Rule::UE},      {"UI", Rule::UI},
      {"EI", Rule::EI},     {"EE", Rule::EE},      {"QN", Rule::QN},
  };
  auto it = table.find(name);
  if (it == table.end()) return std::nullopt;
  return it->second;
}

int rule_citation_arity(Rule r) {
  switch (r) {
    case Rule::A:
    case Rule::IdIntro:
    case Rule::GA:
      return 0;
    case Rule::DN:
    case Rule::AndE:
    case Rule::OrI:
    case Rule::UE:
    case Rule::UI:
    case Rule::EI:
    case Rule::QN:
    case Rule::IffE:
      return 1;
    case Rule::MPP:
    case Rule::MTT:
    case Rule::CP:
    case Rule::AndI:
    case Rule::RAA:
    case Rule::IdElim:
    case Rule::IffI:
      return 2;
    case Rule::EE:
      return 3;
    case Rule::OrE:
      return 5;
  }
  return 0;
}

AssumptionSet AssumptionSet::unite(const AssumptionSet& o) const {
  AssumptionSet out = *this;
  out.lines.insert(o.lines.begin(), o.lines.end());
  out.marker_g = marker_g || o.marker_g;
  return out;
}

AssumptionSet AssumptionSet::without(int line) const {
  AssumptionSet out = *this;
  out.lines.erase(line);
  return out;
}

std::string AssumptionSet::to_string() const {
  if (lines.empty() && !marker_g) return "-";
  std::string out;
  for (int n : lines) {
    if (!out.empty()) out += ',';
    out += std::to_string(n);
  }
  if (marker_g) {
    if (!out.empty()) out += ',';
    out += 'G';
  }
  return out;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::Classical: return "classical";
    case Mode::Open: return "open";
    case Mode::Minimal: return "minimal";
  }
  return "?";
}

std::optional<Mode> mode_from_name(const std::string& name) {
  if (name == "classical") return Mode::Classical;
  if (name == "open") return Mode::Open;
  if (name == "minimal") return Mode::Minimal;
  return std::nullopt;
}

namespace {

std::string strip_comment(std::string line) {
  auto hash = line.find('#');
  if (hash != std::string::npos) line.erase(hash);
  return line;
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

int parse_int(const std::string& s, int file_line, const char* what) {
  if (s.empty() || s.size() > 8 ||
      !std::all_of(s.begin(), s.end(), [](char c) {
        return std::isdigit(static_cast<unsigned char>(c));
      }))
    throw ProofSyntaxError(file_line, std::string("expected ") + what +
                                          ", got '" + s + "'");
  int v = std::stoi(s);
  if (v <= 0)
    throw ProofSyntaxError(file_line, std::string(what) + " must be positive");
  return v;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

AssumptionSet parse_assumptions(const std::string& field, int file_line) {
  AssumptionSet set;
  if (field == "-") return set;
  for (const auto& item : split_commas(field)) {
    if (item == "G") {
      set.marker_g = true;
    } else {
      set.lines.insert(parse_int(item, file_line, "assumption line number"));
    }
  }
  return set;
}

Justification parse_justification(const std::string& text, int file_line) {
  auto tokens = split_ws(text);
  if (tokens.empty())
    throw ProofSyntaxError(file_line, "missing justification");
  size_t at = 0;
  Justification just;
  if (std::isdigit(static_cast<unsigned char>(tokens[0][0]))) {
    for (const auto& item : split_commas(tokens[at]))
      just.cited.push_back(parse_int(item, file_line, "cited line number"));
    ++at;
  }
  if (at >= tokens.size())
    throw ProofSyntaxError(file_line, "missing rule name");
  auto rule = rule_from_name(tokens[at]);
  if (!rule)
    throw ProofSyntaxError(file_line, "unknown rule '" + tokens[at] + "'");
  just.rule = *rule;
  ++at;

  auto need = [&](const char* what) -> const std::string& {
    if (at >= tokens.size())
      throw ProofSyntaxError(file_line, std::string("rule ") +
                                            rule_name(just.rule) +
                                            " needs " + what);
    return tokens[at++];
  };
  switch (just.rule) {
    case Rule::UE:
    case Rule::EI: {
      const std::string& t = need("a witnessing name");
      if (!std::islower(static_cast<unsigned char>(t[0])))
        throw ProofSyntaxError(file_line, "witnessing term must be a name");
      just.term = Term::name(t);
      break;
    }
    case Rule::IdElim: {
      const std::string& dir = need("a direction (ltr|rtl)");
      if (dir == "ltr") just.direction = Direction::LTR;
      else if (dir == "rtl") just.direction = Direction::RTL;
      else throw ProofSyntaxError(file_line, "direction must be ltr or rtl");
      const std::string& sel = need("an occurrence selector ('*' or indices)");
      if (sel == "*") {
        just.selector = Selector::every();
      } else {
        std::set<int> idx;
        for (const auto& item : split_commas(sel))
          idx.insert(parse_int(item, file_line, "occurrence index"));
        just.selector = Selector::at(std::move(idx));
      }
      break;
    }
    case Rule::IffE: {
      const std::string& dir = need("a direction (ltr|rtl)");
      if (dir == "ltr") just.direction = Direction::LTR;
      else if (dir == "rtl") just.direction = Direction::RTL;
      else throw ProofSyntaxError(file_line, "direction must be ltr or rtl");
      break;
    }
    case Rule::OrI: {
      const std::string& side = need("a side (left|right)");
      if (side == "left") just.side = OrSide::Left;
      else if (side == "right") just.side = OrSide::Right;
      else throw ProofSyntaxError(file_line, "side must be left or right");
      break;
    }
    default:
      break;
  }
  if (at < tokens.size())
    throw ProofSyntaxError(file_line,
                           "unexpected token '" + tokens[at] + "' after rule");
  return just;
}

}  // namespace

ProofScript parse_proof_script(std::string_view text) {
  ProofScript script;
  std::istringstream in{std::string(text)};
  std::string raw;
  int file_line = 0;
  bool saw_proof_line = false;
  std::set<int> seen_numbers;

  while (std::getline(in, raw)) {
    ++file_line;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;

    if (line.rfind("pragma", 0) == 0 &&
        (line.size() == 6 || std::isspace(static_cast<unsigned char>(line[6])))) {
      if (saw_proof_line)
        throw PragmaError(file_line, "pragma after first proof line");
      std::string rest = trim(line.substr(6));
      auto colon = rest.find(':');
      if (colon == std::string::npos)
        throw PragmaError(file_line, "malformed pragma (expected 'key: value')");
      std::string key = trim(rest.substr(0, colon));
      std::string value = trim(rest.substr(colon + 1));
      if (key == "mode") {
        auto m = mode_from_name(value);
        if (!m) throw PragmaError(file_line, "unknown mode '" + value + "'");
        script.pragma_mode = *m;
      } else if (key == "identity") {
        if (value != "global")
          throw PragmaError(file_line, "unknown identity value '" + value + "'");
        script.pragma_global_identity = true;
      } else {
        throw PragmaError(file_line, "unknown pragma '" + key + "'");
      }
      continue;
    }

    saw_proof_line = true;
    std::istringstream ls(line);
    std::string assumptions_field;
    ls >> assumptions_field;
    AssumptionSet declared = parse_assumptions(assumptions_field, file_line);
    if (declared.marker_g && !script.pragma_global_identity)
      throw PragmaError(file_line,
                        "marker G requires 'pragma identity: global'");

    std::string numbered;
    ls >> numbered;
    if (numbered.size() < 3 || numbered.front() != '(' || numbered.back() != ')')
      throw ProofSyntaxError(file_line, "expected line number in parentheses");
    int number =
        parse_int(numbered.substr(1, numbered.size() - 2), file_line, "line number");

    int expected = static_cast<int>(script.lines.size()) + 1;
    if (seen_numbers.count(number))
      throw DuplicateLineNumberError(file_line, number);
    if (number != expected)
      throw ProofSyntaxError(file_line, "expected line number (" +
                                            std::to_string(expected) +
                                            "), got (" +
                                            std::to_string(number) + ")");
    seen_numbers.insert(number);

    std::string rest;
    std::getline(ls, rest);
    size_t pos = 0;
    FormulaPtr formula;
    try {
      formula = parse_formula_prefix(rest, pos);
    } catch (const SyntaxError& e) {
      throw ProofSyntaxError(file_line, e.what());
    }
    Justification just = parse_justification(rest.substr(pos), file_line);
    for (int cited : just.cited)
      if (cited >= number) throw ForwardCitationError(file_line, cited);

    script.lines.push_back(ProofLine{std::move(declared), number,
                                     std::move(formula), std::move(just)});
  }

  if (script.lines.empty())
    throw ProofSyntaxError(file_line, "script has no proof lines");
  signature_of(script);  // flags inconsistent predicate arities
  return script;
}

Signature signature_of(const ProofScript& script) {
  std::vector<FormulaPtr> formulas;
  formulas.reserve(script.lines.size());
  for (const auto& l : script.lines) formulas.push_back(l.formula);
  return signature_of(formulas);
}

}  // namespace openfol
