#include "openfol/semantics.hpp"

#include <algorithm>

namespace openfol {

std::string profile_name(Profile p) {
  switch (p) {
    case Profile::Total: return "total";
    case Profile::NullStrict: return "null-strict";
    case Profile::Partial: return "partial";
    case Profile::NullPadded: return "null-padded";
  }
  return "?";
}

std::optional<Profile> profile_from_name(const std::string& name) {
  if (name == "total") return Profile::Total;
  if (name == "null-strict") return Profile::NullStrict;
  if (name == "partial") return Profile::Partial;
  if (name == "null-padded") return Profile::NullPadded;
  return std::nullopt;
}

bool Model::is_null(int element) const {
  for (const auto& [a, b] : identity)
    if (a == element || b == element) return false;
  return true;
}

namespace {

std::string pair_str(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

std::string pred_str(const PredKey& k) {
  return k.first + "/" + std::to_string(k.second);
}

}  // namespace

std::vector<std::string> validate_model(const Model& m, Profile p) {
  std::vector<std::string> out;
  auto in_range = [&](int e) { return e >= 0 && e < m.domain_size; };

  if (m.domain_size < 0) out.push_back("negative domain size");

  for (const auto& [name, e] : m.denotation) {
    if (!in_range(e)) {
      out.push_back("denotation of '" + name + "' out of range");
      break;
    }
  }
  for (const auto& [pr, ext] : m.predicates) {
    bool flagged = false;
    for (const auto& tuple : ext) {
      if (flagged) break;
      if (static_cast<int>(tuple.size()) != pr.second) {
        out.push_back("tuple of wrong arity in " + pred_str(pr));
        break;
      }
      for (int e : tuple)
        if (!in_range(e)) {
          out.push_back("element out of range in " + pred_str(pr));
          flagged = true;
          break;
        }
    }
  }
  for (const auto& [a, b] : m.identity)
    if (!in_range(a) || !in_range(b)) {
      out.push_back("identity pair " + pair_str(a, b) + " out of range");
      break;
    }

  if (p != Profile::Partial) {
    if (m.domain_size < 1)
      out.push_back("empty domain requires the partial profile");
    for (const auto& name : m.names)
      if (!m.denotation.count(name)) {
        out.push_back("name '" + name + "' does not denote");
        break;
      }
  }

  for (const auto& [a, b] : m.identity)
    if (!m.identity.count({b, a})) {
      out.push_back("not symmetric: " + pair_str(b, a) + " missing");
      break;
    }

  // Transitivity is judged over the symmetric closure so that a relation
  // missing only its converse pairs still reports the composite it lacks.
  {
    std::set<std::pair<int, int>> closure = m.identity;
    for (const auto& [a, b] : m.identity) closure.insert({b, a});
    bool done = false;
    for (const auto& [a, b] : closure) {
      if (done) break;
      for (const auto& [b2, c] : closure) {
        if (b2 != b) continue;
        if (!closure.count({a, c})) {
          out.push_back("not transitive: " + pair_str(a, c) + " missing");
          done = true;
          break;
        }
      }
    }
  }

  for (const auto& [pr, ext] : m.predicates) {
    bool flagged = false;
    for (const auto& [d, e] : m.identity) {
      if (flagged) break;
      if (d == e) continue;
      for (const auto& tuple : ext) {
        if (flagged) break;
        for (size_t i = 0; i < tuple.size(); ++i) {
          if (tuple[i] != d) continue;
          Tuple swapped = tuple;
          swapped[i] = e;
          if (!ext.count(swapped)) {
            out.push_back("not congruent: " + pred_str(pr) + " under " +
                          std::to_string(d) + " = " + std::to_string(e));
            flagged = true;
            break;
          }
        }
      }
    }
  }

  if (p == Profile::NullStrict) {
    for (const auto& [pr, ext] : m.predicates) {
      bool flagged = false;
      for (const auto& tuple : ext) {
        if (flagged) break;
        for (int e : tuple)
          if (m.is_null(e)) {
            out.push_back("null element " + std::to_string(e) +
                          " in predicate " + pr.first);
            flagged = true;
            break;
          }
      }
    }
  }

  return out;
}

namespace {

class Evaluator {
 public:
  Evaluator(const Model& m, Profile p) : m_(m), p_(p) {}

  bool eval(const FormulaPtr& f, Assignment& a) const {
    switch (f->kind) {
      case Formula::Kind::Pred: {
        PredKey key{f->symbol, static_cast<int>(f->terms.size())};
        auto ext = m_.predicates.find(key);
        if (ext == m_.predicates.end())
          throw UnknownSymbolError("predicate " + pred_str(key));
        Tuple tuple;
        tuple.reserve(f->terms.size());
        for (const auto& t : f->terms) {
          auto e = element_of(t, a);
          if (!e) return false;  // undenoting term: atom is false
          tuple.push_back(*e);
        }
        return ext->second.count(tuple) > 0;
      }
      case Formula::Kind::Eq: {
        auto l = element_of(f->terms[0], a);
        auto r = element_of(f->terms[1], a);
        if (!l || !r) return false;
        return m_.identity.count({*l, *r}) > 0;
      }
      case Formula::Kind::Not:
        return !eval(f->left, a);
      case Formula::Kind::And:
        return eval(f->left, a) && eval(f->right, a);
      case Formula::Kind::Or:
        return eval(f->left, a) || eval(f->right, a);
      case Formula::Kind::Imp:
        return !eval(f->left, a) || eval(f->right, a);
      case Formula::Kind::Iff:
        return eval(f->left, a) == eval(f->right, a);
      case Formula::Kind::Forall:
      case Formula::Kind::Exists: {
        bool want = f->kind == Formula::Kind::Exists;
        std::optional<int> saved;
        if (auto it = a.find(f->bound); it != a.end()) saved = it->second;
        bool result = !want;
        for (int d = 0; d < m_.domain_size; ++d) {
          a[f->bound] = d;
          if (eval(f->left, a) == want) {
            result = want;
            break;
          }
        }
        if (saved) a[f->bound] = *saved;
        else a.erase(f->bound);
        return result;
      }
    }
    return false;
  }

 private:
  const Model& m_;
  Profile p_;

  std::optional<int> element_of(const Term& t, const Assignment& a) const {
    if (t.kind == Term::Kind::Var) {
      auto it = a.find(t.id);
      if (it == a.end())
        throw Error("unbound variable '" + t.id + "' during evaluation");
      return it->second;
    }
    auto it = m_.denotation.find(t.id);
    if (it != m_.denotation.end()) return it->second;
    if (p_ == Profile::Partial) return std::nullopt;
    throw UnknownSymbolError("name " + t.id);
  }
};

FormulaPtr reflexivity_axiom() {
  return Formula::forall("x", Formula::eq(Term::var("x"), Term::var("x")));
}

}  // namespace

bool eval_formula(const Model& m, const Assignment& a, const FormulaPtr& f,
                  Profile p) {
  if (p == Profile::NullPadded)
    return eval_formula(null_pad(m), a, f, Profile::NullStrict);
  Assignment scratch = a;
  return Evaluator(m, p).eval(f, scratch);
}

bool eval_sequent(const Model& m, const Sequent& s, Profile p) {
  if (p == Profile::NullPadded)
    return eval_sequent(null_pad(m), s, Profile::NullStrict);
  Assignment scratch;
  Evaluator ev(m, p);
  if (s.global_identity) {
    if (!ev.eval(reflexivity_axiom(), scratch)) return true;
  }
  for (const auto& premise : s.premises)
    if (!ev.eval(premise, scratch)) return true;
  return ev.eval(s.conclusion, scratch);
}

Model null_pad(const Model& m) {
  Model out = m;
  int fresh = out.domain_size;
  out.domain_size += 1;
  for (const auto& name : out.names)
    out.denotation.emplace(name, fresh);  // no-op for denoting names
  return out;
}

Model empty_partial_model(const Signature& sig) {
  Model m;
  m.domain_size = 0;
  m.names = sig.names;
  for (const auto& pr : sig.predicates) m.predicates[pr];
  return m;
}

}  // namespace openfol
