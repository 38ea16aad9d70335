#include "openfol/search.hpp"

#include <algorithm>

namespace openfol {

std::string search_status_name(SearchStatus s) {
  switch (s) {
    case SearchStatus::ValidUpToBound: return "VALID_UP_TO_BOUND";
    case SearchStatus::Countermodel: return "COUNTERMODEL";
    case SearchStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

std::string audit_status_name(AuditStatus s) {
  switch (s) {
    case AuditStatus::SoundUpToBound: return "SOUND_UP_TO_BOUND";
    case AuditStatus::Counterexample: return "COUNTEREXAMPLE";
  }
  return "?";
}

namespace {

constexpr int kUndenoting = -1;

int64_t ipow(int base, int exp) {
  int64_t v = 1;
  while (exp-- > 0) v *= base;
  return v;
}

// Tuple with lexicographic rank `rank` over [0,n)^arity.
Tuple unrank_tuple(int64_t rank, int arity, int n) {
  Tuple t(arity, 0);
  for (int i = arity - 1; i >= 0; --i) {
    t[i] = static_cast<int>(rank % n);
    rank /= n;
  }
  return t;
}

bool is_per(const std::set<std::pair<int, int>>& rel) {
  for (const auto& [a, b] : rel)
    if (!rel.count({b, a})) return false;
  for (const auto& [a, b] : rel)
    for (const auto& [b2, c] : rel) {
      if (b2 != b) continue;
      if (!rel.count({a, c})) return false;
    }
  return true;
}

bool congruent(const std::set<Tuple>& ext,
               const std::set<std::pair<int, int>>& id) {
  for (const auto& [d, e] : id) {
    if (d == e) continue;
    for (const auto& tuple : ext)
      for (size_t i = 0; i < tuple.size(); ++i) {
        if (tuple[i] != d) continue;
        Tuple swapped = tuple;
        swapped[i] = e;
        if (!ext.count(swapped)) return false;
      }
  }
  return true;
}

struct IdentityCandidate {
  std::set<std::pair<int, int>> relation;
  std::vector<bool> null_element;  // per domain element
};

// PER survivors over a domain of size n, in ascending bitmask order.
std::vector<IdentityCandidate> per_relations(int n) {
  std::vector<IdentityCandidate> out;
  int bits = n * n;
  for (uint64_t mask = 0; mask < (uint64_t{1} << bits); ++mask) {
    std::set<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (mask & (uint64_t{1} << (i * n + j))) rel.insert({i, j});
    if (!is_per(rel)) continue;
    std::vector<bool> nulls(n, true);
    for (const auto& [a, b] : rel) {
      nulls[a] = false;
      nulls[b] = false;
    }
    out.push_back({std::move(rel), std::move(nulls)});
  }
  return out;
}

}  // namespace

int64_t for_each_model(const Signature& sig, const Bounds& b, Profile p,
                       const std::function<bool(const Model&)>& visit) {
  if (b.max_domain_size < 0 || b.max_domain_size > kMaxDomainSize)
    throw BoundsError("max domain size must be between 0 and " +
                      std::to_string(kMaxDomainSize));
  for (const auto& [sym, arity] : sig.predicates)
    if (ipow(std::max(b.max_domain_size, 1), arity) > 16)
      throw BoundsError("extension space of " + sym + "/" +
                        std::to_string(arity) + " too large to enumerate");

  int64_t yielded = 0;
  bool stopped = false;

  for (int n = 0; n <= b.max_domain_size && !stopped; ++n) {
    if (n == 0 && p != Profile::Partial) continue;

    auto identities = per_relations(n);

    // Denotation odometer, last name fastest; kUndenoting sorts after all
    // domain elements and is available only under the partial profile.
    int name_count = static_cast<int>(sig.names.size());
    std::vector<int> values(name_count, n == 0 ? kUndenoting : 0);
    bool denotations_left = true;
    while (denotations_left && !stopped) {
      for (const auto& id : identities) {
        if (stopped) break;

        // Predicate-extension odometer, last predicate fastest; skip
        // non-congruent extensions and, under null-strict, extensions
        // touching a null element.
        int pred_count = static_cast<int>(sig.predicates.size());
        std::vector<uint64_t> masks(pred_count, 0);
        std::vector<int64_t> mask_limit(pred_count);
        for (int i = 0; i < pred_count; ++i)
          mask_limit[i] = int64_t{1} << ipow(n, sig.predicates[i].second);

        bool exts_left = true;
        while (exts_left && !stopped) {
          Model m;
          m.domain_size = n;
          m.names = sig.names;
          for (int i = 0; i < name_count; ++i)
            if (values[i] != kUndenoting) m.denotation[sig.names[i]] = values[i];
          m.identity = id.relation;
          bool admissible = true;
          for (int i = 0; i < pred_count && admissible; ++i) {
            const auto& [sym, arity] = sig.predicates[i];
            std::set<Tuple> ext;
            for (int64_t t = 0; t < ipow(n, arity); ++t)
              if (masks[i] & (uint64_t{1} << t)) {
                Tuple tuple = unrank_tuple(t, arity, n);
                if (p == Profile::NullStrict)
                  for (int e : tuple)
                    if (id.null_element[e]) admissible = false;
                ext.insert(std::move(tuple));
              }
            if (admissible && !congruent(ext, id.relation)) admissible = false;
            m.predicates[{sym, arity}] = std::move(ext);
          }

          if (admissible) {
            ++yielded;
            if (!visit(m)) {
              stopped = true;
              break;
            }
          }

          // advance the extension odometer
          exts_left = false;
          for (int i = pred_count - 1; i >= 0; --i) {
            if (static_cast<int64_t>(++masks[i]) < mask_limit[i]) {
              exts_left = true;
              break;
            }
            masks[i] = 0;
          }
          if (pred_count == 0) exts_left = false;
        }
      }

      // advance the denotation odometer; digits run 0..n-1 and then, under
      // partial only, the undenoting marker
      denotations_left = false;
      for (int i = name_count - 1; i >= 0; --i) {
        if (values[i] != kUndenoting && values[i] + 1 < n) {
          ++values[i];
          denotations_left = true;
          break;
        }
        if (values[i] != kUndenoting && p == Profile::Partial) {
          values[i] = kUndenoting;
          denotations_left = true;
          break;
        }
        values[i] = n == 0 ? kUndenoting : 0;  // overflow, carry left
      }
    }
  }
  return yielded;
}

std::vector<Model> enumerate_models(const Signature& sig, const Bounds& b,
                                    Profile p) {
  std::vector<Model> out;
  for_each_model(sig, b, p, [&](const Model& m) {
    out.push_back(m);
    return true;
  });
  return out;
}

CountermodelResult find_countermodel(const Sequent& s, const Bounds& b,
                                     Profile p) {
  Signature query_sig = signature_of(s);
  Signature sig = b.signature.names.empty() && b.signature.predicates.empty()
                      ? query_sig
                      : b.signature;
  if (!sig.contains(query_sig))
    throw BoundsError("sequent uses symbols outside the bounds signature");

  CountermodelResult result;
  bool capped = false;
  for_each_model(sig, b, p, [&](const Model& m) {
    if (b.max_models && result.models_examined >= *b.max_models) {
      capped = true;
      return false;
    }
    ++result.models_examined;
    if (!eval_sequent(m, s, p)) {
      result.status = SearchStatus::Countermodel;
      result.model = m;
      return false;
    }
    return true;
  });
  if (result.status != SearchStatus::Countermodel && capped)
    result.status = SearchStatus::Inconclusive;
  return result;
}

namespace {

struct Instance {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
};

// Formula pool for schema instantiation: every atom over the signature's
// names plus one designated variable, the negations of those atoms, and
// their x-quantifications.
struct AuditPool {
  std::string var;
  std::vector<FormulaPtr> atoms_and_negations;  // may contain the variable free
  std::vector<FormulaPtr> closed;               // full pool, closed members
  std::vector<FormulaPtr> closed_small;         // closed atoms and negations
  std::vector<Term> names;
};

AuditPool build_pool(const Signature& sig) {
  AuditPool pool;
  for (const char* candidate : {"x", "y", "z", "w", "v"})
    if (!sig.has_name(candidate)) {
      pool.var = candidate;
      break;
    }
  for (const auto& n : sig.names) pool.names.push_back(Term::name(n));
  std::vector<Term> terms = pool.names;
  terms.push_back(Term::var(pool.var));

  std::vector<FormulaPtr> atoms;
  for (const auto& [sym, arity] : sig.predicates) {
    std::vector<int> idx(arity, 0);
    while (true) {
      std::vector<Term> args;
      for (int i : idx) args.push_back(terms[i]);
      atoms.push_back(Formula::pred(sym, args));
      int i = arity - 1;
      for (; i >= 0; --i) {
        if (++idx[i] < static_cast<int>(terms.size())) break;
        idx[i] = 0;
      }
      if (i < 0) break;
    }
  }
  for (const auto& s : terms)
    for (const auto& t : terms) atoms.push_back(Formula::eq(s, t));

  for (const auto& a : atoms) {
    pool.atoms_and_negations.push_back(a);
    pool.atoms_and_negations.push_back(Formula::negation(a));
  }
  for (const auto& f : pool.atoms_and_negations) {
    if (!has_free_variable(f)) {
      pool.closed.push_back(f);
      pool.closed_small.push_back(f);
    }
  }
  for (const auto& body : pool.atoms_and_negations) {
    pool.closed.push_back(Formula::forall(pool.var, body));
    pool.closed.push_back(Formula::exists(pool.var, body));
  }
  return pool;
}

FormulaPtr close_at(const FormulaPtr& body, const std::string& var, const Term& t) {
  return instantiate(Formula::forall(var, body), t);
}

std::vector<Instance> instances_for(Rule rule, const AuditPool& pool) {
  std::vector<Instance> out;
  const auto& closed = pool.closed;
  const auto& small = pool.closed_small;
  const auto& open = pool.atoms_and_negations;
  const std::string& x = pool.var;

  auto imp = Formula::implies;
  switch (rule) {
    case Rule::MPP:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{imp(a, b), a}, b});
      break;
    case Rule::MTT:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{imp(a, b), Formula::negation(b)}, Formula::negation(a)});
      break;
    case Rule::DN:
      for (const auto& a : closed) {
        FormulaPtr nn = Formula::negation(Formula::negation(a));
        out.push_back({{a}, nn});
        out.push_back({{nn}, a});
      }
      break;
    case Rule::CP:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{b}, imp(a, b)});
      break;
    case Rule::AndI:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{a, b}, Formula::conj(a, b)});
      break;
    case Rule::AndE:
      for (const auto& a : closed)
        for (const auto& b : closed) {
          FormulaPtr both = Formula::conj(a, b);
          out.push_back({{both}, a});
          out.push_back({{both}, b});
        }
      break;
    case Rule::OrI:
      for (const auto& a : closed)
        for (const auto& b : closed) {
          FormulaPtr either = Formula::disj(a, b);
          out.push_back({{a}, either});
          out.push_back({{b}, either});
        }
      break;
    case Rule::OrE:
      for (const auto& a : small)
        for (const auto& b : small)
          for (const auto& c : closed)
            out.push_back({{Formula::disj(a, b), imp(a, c), imp(b, c)}, c});
      break;
    case Rule::RAA:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{imp(a, Formula::conj(b, Formula::negation(b)))},
                         Formula::negation(a)});
      break;
    case Rule::IffI:
      for (const auto& a : closed)
        for (const auto& b : closed)
          out.push_back({{imp(a, b), imp(b, a)}, Formula::iff(a, b)});
      break;
    case Rule::IffE:
      for (const auto& a : closed)
        for (const auto& b : closed) {
          FormulaPtr bi = Formula::iff(a, b);
          out.push_back({{bi}, imp(a, b)});
          out.push_back({{bi}, imp(b, a)});
        }
      break;
    case Rule::UE:
      for (const auto& body : open)
        for (const auto& t : pool.names)
          out.push_back({{Formula::forall(x, body)}, close_at(body, x, t)});
      break;
    case Rule::UI:
      for (const auto& a : closed)
        out.push_back({{a}, Formula::forall(x, a)});
      break;
    case Rule::EI:
      for (const auto& body : open)
        for (const auto& t : pool.names)
          out.push_back({{close_at(body, x, t)}, Formula::exists(x, body)});
      break;
    case Rule::EE:
      for (const auto& body : open)
        for (const auto& c : small)
          out.push_back({{Formula::exists(x, body),
                          Formula::forall(x, imp(body, c))},
                         c});
      break;
    case Rule::QN:
      for (const auto& body : open) {
        FormulaPtr all = Formula::forall(x, body);
        FormulaPtr some = Formula::exists(x, body);
        FormulaPtr all_neg = Formula::forall(x, Formula::negation(body));
        FormulaPtr some_neg = Formula::exists(x, Formula::negation(body));
        out.push_back({{Formula::negation(all)}, some_neg});
        out.push_back({{some_neg}, Formula::negation(all)});
        out.push_back({{Formula::negation(some)}, all_neg});
        out.push_back({{all_neg}, Formula::negation(some)});
      }
      break;
    case Rule::IdElim:
      for (const auto& s : pool.names)
        for (const auto& t : pool.names)
          for (const auto& host : closed) {
            FormulaPtr eq = Formula::eq(s, t);
            out.push_back(
                {{eq, host}, replace_occurrences(host, s, t, Selector::every())});
            int occurrences = count_occurrences(host, s);
            for (int k = 1; k <= occurrences; ++k)
              out.push_back(
                  {{eq, host}, replace_occurrences(host, s, t, Selector::at({k}))});
          }
      break;
    default:
      break;
  }
  return out;
}

std::vector<Instance> id_intro_schema(const AuditPool& pool) {
  std::vector<Instance> out;
  for (const auto& t : pool.names)
    out.push_back({{}, Formula::eq(t, t)});
  out.push_back({{}, Formula::forall(pool.var,
                                     Formula::eq(Term::var(pool.var),
                                                 Term::var(pool.var)))});
  return out;
}

}  // namespace

Signature default_audit_signature() {
  Signature sig;
  sig.names = {"a", "b"};
  sig.predicates = {{"F", 1}};
  return sig;
}

std::vector<std::string> auditable_rules() {
  return {"=E", "MPP", "MTT", "DN",   "CP",   "AndI", "AndE", "OrI", "OrE",
          "RAA", "IffI", "IffE", "UE", "UI", "EI", "EE", "QN"};
}

AuditReport audit_rule(const std::string& rule, const Bounds& b, Profile p) {
  Signature sig = b.signature.names.empty() && b.signature.predicates.empty()
                      ? default_audit_signature()
                      : b.signature;
  AuditPool pool = build_pool(sig);

  std::vector<Instance> instances;
  std::string canonical;
  if (rule == "=I-schema") {
    canonical = rule;
    instances = id_intro_schema(pool);
  } else {
    auto r = rule_from_name(rule);
    if (!r || *r == Rule::A || *r == Rule::GA || *r == Rule::IdIntro)
      throw UnknownRuleError(rule);
    canonical = rule_name(*r);
    instances = instances_for(*r, pool);
  }

  std::vector<Model> models = enumerate_models(sig, b, p);

  AuditReport report;
  report.rule = canonical;
  for (const auto& inst : instances) {
    ++report.instances_checked;
    for (const auto& m : models) {
      bool premises_hold = true;
      for (const auto& premise : inst.premises)
        if (!eval_formula(m, {}, premise, p)) {
          premises_hold = false;
          break;
        }
      if (premises_hold && !eval_formula(m, {}, inst.conclusion, p)) {
        report.status = AuditStatus::Counterexample;
        report.witness = AuditWitness{inst.premises, inst.conclusion, m};
        return report;
      }
    }
  }
  return report;
}

}  // namespace openfol
