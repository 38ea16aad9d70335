#include "openfol/formula.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace openfol {

namespace {

FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

}  // namespace

FormulaPtr Formula::pred(std::string symbol, std::vector<Term> args) {
  Formula f;
  f.kind = Kind::Pred;
  f.symbol = std::move(symbol);
  f.terms = std::move(args);
  return node(std::move(f));
}

FormulaPtr Formula::eq(Term lhs, Term rhs) {
  Formula f;
  f.kind = Kind::Eq;
  f.terms = {std::move(lhs), std::move(rhs)};
  return node(std::move(f));
}

FormulaPtr Formula::negation(FormulaPtr operand) {
  Formula f;
  f.kind = Kind::Not;
  f.left = std::move(operand);
  return node(std::move(f));
}

namespace {
FormulaPtr binary(Formula::Kind k, FormulaPtr lhs, FormulaPtr rhs) {
  Formula f;
  f.kind = k;
  f.left = std::move(lhs);
  f.right = std::move(rhs);
  return node(std::move(f));
}
FormulaPtr quantifier(Formula::Kind k, std::string var, FormulaPtr body) {
  Formula f;
  f.kind = k;
  f.bound = std::move(var);
  f.left = std::move(body);
  return node(std::move(f));
}
}  // namespace

FormulaPtr Formula::conj(FormulaPtr l, FormulaPtr r) { return binary(Kind::And, std::move(l), std::move(r)); }
FormulaPtr Formula::disj(FormulaPtr l, FormulaPtr r) { return binary(Kind::Or, std::move(l), std::move(r)); }
FormulaPtr Formula::implies(FormulaPtr l, FormulaPtr r) { return binary(Kind::Imp, std::move(l), std::move(r)); }
FormulaPtr Formula::iff(FormulaPtr l, FormulaPtr r) { return binary(Kind::Iff, std::move(l), std::move(r)); }
FormulaPtr Formula::forall(std::string v, FormulaPtr b) { return quantifier(Kind::Forall, std::move(v), std::move(b)); }
FormulaPtr Formula::exists(std::string v, FormulaPtr b) { return quantifier(Kind::Exists, std::move(v), std::move(b)); }

bool equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Kind::Pred:
      return a->symbol == b->symbol && a->terms == b->terms;
    case Formula::Kind::Eq:
      return a->terms == b->terms;
    case Formula::Kind::Not:
      return equal(a->left, b->left);
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff:
      return equal(a->left, b->left) && equal(a->right, b->right);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      return a->bound == b->bound && equal(a->left, b->left);
  }
  return false;
}

namespace {

void render(const FormulaPtr& f, std::string& out);

// One layer of parentheses around f; binary nodes already carry their own.
void render_wrapped(const FormulaPtr& f, std::string& out) {
  if (f->is_binary()) {
    render(f, out);
  } else {
    out += '(';
    render(f, out);
    out += ')';
  }
}

void render(const FormulaPtr& f, std::string& out) {
  switch (f->kind) {
    case Formula::Kind::Pred:
      out += f->symbol;
      if (!f->terms.empty()) {
        out += '(';
        for (size_t i = 0; i < f->terms.size(); ++i) {
          if (i) out += ',';
          out += f->terms[i].id;
        }
        out += ')';
      }
      break;
    case Formula::Kind::Eq:
      out += f->terms[0].id;
      out += " = ";
      out += f->terms[1].id;
      break;
    case Formula::Kind::Not:
      out += '~';
      render_wrapped(f->left, out);
      break;
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: {
      const char* op = f->kind == Formula::Kind::And   ? " & "
                       : f->kind == Formula::Kind::Or  ? " | "
                       : f->kind == Formula::Kind::Imp ? " -> "
                                                       : " <-> ";
      out += '(';
      render(f->left, out);
      out += op;
      render(f->right, out);
      out += ')';
      break;
    }
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      out += f->kind == Formula::Kind::Forall ? "forall " : "exists ";
      out += f->bound;
      out += ' ';
      render_wrapped(f->left, out);
      break;
  }
}

}  // namespace

std::string format_formula(const FormulaPtr& f) {
  std::string out;
  render(f, out);
  return out;
}

bool Signature::has_name(const std::string& n) const {
  return std::binary_search(names.begin(), names.end(), n);
}

bool Signature::contains(const Signature& other) const {
  for (const auto& n : other.names)
    if (!has_name(n)) return false;
  for (const auto& p : other.predicates)
    if (!std::binary_search(predicates.begin(), predicates.end(), p))
      return false;
  return true;
}

void Signature::merge(const Signature& other) {
  std::set<std::string> ns(names.begin(), names.end());
  ns.insert(other.names.begin(), other.names.end());
  names.assign(ns.begin(), ns.end());
  std::map<std::string, int> ps(predicates.begin(), predicates.end());
  for (const auto& [sym, arity] : other.predicates) {
    auto [it, inserted] = ps.emplace(sym, arity);
    if (!inserted && it->second != arity) throw ArityError(sym, it->second, arity);
  }
  predicates.assign(ps.begin(), ps.end());
}

namespace {

void collect(const FormulaPtr& f, std::set<std::string>& names,
             std::map<std::string, int>& preds) {
  switch (f->kind) {
    case Formula::Kind::Pred: {
      int arity = static_cast<int>(f->terms.size());
      auto [it, inserted] = preds.emplace(f->symbol, arity);
      if (!inserted && it->second != arity)
        throw ArityError(f->symbol, it->second, arity);
      for (const auto& t : f->terms)
        if (t.is_name()) names.insert(t.id);
      break;
    }
    case Formula::Kind::Eq:
      for (const auto& t : f->terms)
        if (t.is_name()) names.insert(t.id);
      break;
    case Formula::Kind::Not:
    case Formula::Kind::Forall:
    case Formula::Kind::Exists:
      collect(f->left, names, preds);
      break;
    default:
      collect(f->left, names, preds);
      collect(f->right, names, preds);
  }
}

}  // namespace

Signature signature_of(const FormulaPtr& f) {
  return signature_of(std::vector<FormulaPtr>{f});
}

Signature signature_of(const std::vector<FormulaPtr>& fs) {
  std::set<std::string> names;
  std::map<std::string, int> preds;
  for (const auto& f : fs) collect(f, names, preds);
  Signature sig;
  sig.names.assign(names.begin(), names.end());
  sig.predicates.assign(preds.begin(), preds.end());
  return sig;
}

namespace {

FormulaPtr subst_var(const FormulaPtr& f, const std::string& var, const Term& t) {
  auto on_term = [&](const Term& term) {
    return (term.kind == Term::Kind::Var && term.id == var) ? t : term;
  };
  switch (f->kind) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f->terms.size());
      for (const auto& a : f->terms) args.push_back(on_term(a));
      return Formula::pred(f->symbol, std::move(args));
    }
    case Formula::Kind::Eq:
      return Formula::eq(on_term(f->terms[0]), on_term(f->terms[1]));
    case Formula::Kind::Not:
      return Formula::negation(subst_var(f->left, var, t));
    case Formula::Kind::And:
      return Formula::conj(subst_var(f->left, var, t), subst_var(f->right, var, t));
    case Formula::Kind::Or:
      return Formula::disj(subst_var(f->left, var, t), subst_var(f->right, var, t));
    case Formula::Kind::Imp:
      return Formula::implies(subst_var(f->left, var, t), subst_var(f->right, var, t));
    case Formula::Kind::Iff:
      return Formula::iff(subst_var(f->left, var, t), subst_var(f->right, var, t));
    case Formula::Kind::Forall:
      return Formula::forall(f->bound, subst_var(f->left, var, t));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound, subst_var(f->left, var, t));
  }
  return f;
}

}  // namespace

FormulaPtr instantiate(const FormulaPtr& f, const Term& t) {
  if (!f->is_quantifier()) throw NotQuantifiedError();
  return subst_var(f->left, f->bound, t);
}

namespace {

// Walks atoms in order, rewriting matching term occurrences through `fn`,
// which receives the 1-based occurrence index.
template <typename Fn>
FormulaPtr map_occurrences(const FormulaPtr& f, const Term& from, int& counter, Fn&& fn) {
  auto on_term = [&](const Term& term) {
    if (term == from) return fn(++counter, term);
    return term;
  };
  switch (f->kind) {
    case Formula::Kind::Pred: {
      std::vector<Term> args;
      args.reserve(f->terms.size());
      for (const auto& a : f->terms) args.push_back(on_term(a));
      return Formula::pred(f->symbol, std::move(args));
    }
    case Formula::Kind::Eq: {
      Term l = on_term(f->terms[0]);
      Term r = on_term(f->terms[1]);
      return Formula::eq(std::move(l), std::move(r));
    }
    case Formula::Kind::Not:
      return Formula::negation(map_occurrences(f->left, from, counter, fn));
    case Formula::Kind::And:
    case Formula::Kind::Or:
    case Formula::Kind::Imp:
    case Formula::Kind::Iff: {
      FormulaPtr l = map_occurrences(f->left, from, counter, fn);
      FormulaPtr r = map_occurrences(f->right, from, counter, fn);
      switch (f->kind) {
        case Formula::Kind::And: return Formula::conj(std::move(l), std::move(r));
        case Formula::Kind::Or: return Formula::disj(std::move(l), std::move(r));
        case Formula::Kind::Imp: return Formula::implies(std::move(l), std::move(r));
        default: return Formula::iff(std::move(l), std::move(r));
      }
    }
    case Formula::Kind::Forall:
      return Formula::forall(f->bound, map_occurrences(f->left, from, counter, fn));
    case Formula::Kind::Exists:
      return Formula::exists(f->bound, map_occurrences(f->left, from, counter, fn));
  }
  return f;
}

}  // namespace

FormulaPtr replace_occurrences(const FormulaPtr& f, const Term& from,
                               const Term& to, const Selector& sel) {
  int counter = 0;
  FormulaPtr result = map_occurrences(f, from, counter, [&](int idx, const Term&) {
    if (sel.all || sel.indices.count(idx)) return to;
    return from;
  });
  if (!sel.all) {
    for (int idx : sel.indices)
      if (idx < 1 || idx > counter) throw BadSelectorError(idx);
  }
  return result;
}

int count_occurrences(const FormulaPtr& f, const Term& t) {
  int counter = 0;
  map_occurrences(f, t, counter, [](int, const Term& term) { return term; });
  return counter;
}

std::set<std::string> names_of(const FormulaPtr& f) {
  std::set<std::string> out;
  std::vector<FormulaPtr> stack{f};
  while (!stack.empty()) {
    FormulaPtr cur = stack.back();
    stack.pop_back();
    for (const auto& t : cur->terms)
      if (t.is_name()) out.insert(t.id);
    if (cur->left) stack.push_back(cur->left);
    if (cur->right) stack.push_back(cur->right);
  }
  return out;
}

namespace {

bool free_var_walk(const FormulaPtr& f, std::set<std::string>& bound) {
  switch (f->kind) {
    case Formula::Kind::Pred:
    case Formula::Kind::Eq:
      for (const auto& t : f->terms)
        if (t.kind == Term::Kind::Var && !bound.count(t.id)) return true;
      return false;
    case Formula::Kind::Not:
      return free_var_walk(f->left, bound);
    case Formula::Kind::Forall:
    case Formula::Kind::Exists: {
      bool fresh = bound.insert(f->bound).second;
      bool result = free_var_walk(f->left, bound);
      if (fresh) bound.erase(f->bound);
      return result;
    }
    default:
      return free_var_walk(f->left, bound) || free_var_walk(f->right, bound);
  }
}

}  // namespace

bool has_free_variable(const FormulaPtr& f) {
  std::set<std::string> bound;
  return free_var_walk(f, bound);
}

}  // namespace openfol
