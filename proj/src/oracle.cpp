#include "labres/oracle.hpp"

#include <algorithm>
#include <functional>

#include "labres/printer.hpp"
#include "labres/substitution.hpp"

namespace labres {

std::vector<Disambiguation> enumerate_disambiguations(const AnnotateResult& annotated,
                                                      std::vector<std::string>* diagnostics) {
  for (const auto& id : annotated.pronoun_order) {
    if (annotated.pronoun_labels.at(id).empty()) {
      if (diagnostics)
        diagnostics->push_back("pronoun '" + id +
                               "' has an empty label; no disambiguation exists");
      return {};
    }
  }
  std::vector<Disambiguation> out{{}};
  for (const auto& id : annotated.pronoun_order) {
    const auto& label = annotated.pronoun_labels.at(id);
    std::vector<Disambiguation> next;
    next.reserve(out.size() * label.size());
    for (const auto& partial : out)
      for (const auto& name : label) {
        Disambiguation d = partial;
        d[id] = name;
        next.push_back(std::move(d));
      }
    out = std::move(next);
  }
  return out;
}

namespace {

int formula_size(const FormulaPtr& f) {
  if (!f) return 0;
  return 1 + formula_size(f->lhs) + formula_size(f->rhs);
}

int count_var_occurrences(const FormulaPtr& f, const std::string& name) {
  if (!f) return 0;
  int n = count_var_occurrences(f->lhs, name) + count_var_occurrences(f->rhs, name);
  if (f->kind == FormulaKind::Atom) {
    std::function<void(const Arg&)> walk = [&](const Arg& a) {
      if (a.is_pronoun()) return;
      if (a.term().is_var() && a.term().name == name) ++n;
      for (const auto& sub : a.term().args) walk(sub);
    };
    for (const auto& a : f->args) walk(a);
  }
  return n;
}

// Preorder search for a quantifier whose variable occurs outside its scope.
// Returns the binder name, or empty when every quantifier dominates all
// occurrences of its variable.
std::string find_stranded(const FormulaPtr& root, const FormulaPtr& f, bool& universal) {
  if (!f) return "";
  if (f->kind == FormulaKind::Forall || f->kind == FormulaKind::Exists) {
    int total = count_var_occurrences(root, f->var);
    int inside = count_var_occurrences(f->lhs, f->var);
    if (total > inside) {
      universal = f->kind == FormulaKind::Forall;
      return f->var;
    }
  }
  if (std::string r = find_stranded(root, f->lhs, universal); !r.empty()) return r;
  return find_stranded(root, f->rhs, universal);
}

bool is_exists(const FormulaPtr& f, const std::string& x) {
  return f && f->kind == FormulaKind::Exists && f->var == x;
}

// Lifts the existential binding x one level toward the root.
FormulaPtr float_up(const FormulaPtr& f, const std::string& x, bool& changed) {
  if (!f || changed) return f;
  switch (f->kind) {
    case FormulaKind::And:
      if (is_exists(f->lhs, x)) {
        changed = true;
        return mk_exists(x, mk_and(f->lhs->lhs, f->rhs));
      }
      if (is_exists(f->rhs, x)) {
        changed = true;
        return mk_exists(x, mk_and(f->lhs, f->rhs->lhs));
      }
      break;
    case FormulaKind::Implies:
      if (is_exists(f->lhs, x)) {
        changed = true;
        return mk_forall(x, mk_implies(f->lhs->lhs, f->rhs));
      }
      if (is_exists(f->rhs, x))
        throw RewriteStranded("existential for '" + x +
                              "' stuck in the consequent of an implication");
      break;
    case FormulaKind::Exists:
      if (is_exists(f->lhs, x)) {
        changed = true;
        return mk_exists(x, mk_exists(f->var, f->lhs->lhs));
      }
      break;
    case FormulaKind::Forall:
    case FormulaKind::Not:
    case FormulaKind::Or:
      if (is_exists(f->lhs, x) || is_exists(f->rhs, x))
        throw RewriteStranded("existential for '" + x + "' stuck under a binding barrier");
      break;
    default:
      break;
  }
  if (f->lhs) {
    FormulaPtr nl = float_up(f->lhs, x, changed);
    if (changed) {
      Formula g = *f;
      g.lhs = nl;
      return std::make_shared<const Formula>(std::move(g));
    }
  }
  if (f->rhs) {
    FormulaPtr nr = float_up(f->rhs, x, changed);
    if (changed) {
      Formula g = *f;
      g.rhs = nr;
      return std::make_shared<const Formula>(std::move(g));
    }
  }
  return f;
}

}  // namespace

FormulaPtr normal_binding_form(const FormulaPtr& f, const Disambiguation& d) {
  // Antecedents that are quantified somewhere become variables; the rest are
  // constants.
  std::vector<std::string> binders;
  collect_binders(f, binders);
  std::set<std::string> binder_set(binders.begin(), binders.end());

  // Replace each pronoun occurrence by its chosen antecedent: a variable
  // when the name is quantified somewhere, a constant otherwise.
  std::function<FormulaPtr(const FormulaPtr&)> strip = [&](const FormulaPtr& h) -> FormulaPtr {
    if (!h) return h;
    if (h->kind == FormulaKind::Atom) {
      std::vector<Arg> args;
      for (const auto& a : h->args) {
        if (a.is_pronoun() && d.count(a.pronoun().id)) {
          const std::string& name = d.at(a.pronoun().id);
          args.push_back(binder_set.count(name) ? Arg(Term::var(name))
                                                : Arg(Term::constant(name)));
        } else {
          args.push_back(a);
        }
      }
      return mk_atom(h->pred, std::move(args));
    }
    Formula copy = *h;
    copy.lhs = strip(h->lhs);
    copy.rhs = strip(h->rhs);
    return std::make_shared<const Formula>(std::move(copy));
  };
  FormulaPtr g = strip(f);

  int cap = 4 * formula_size(g) * formula_size(g) + 64;
  for (int iter = 0;; ++iter) {
    if (iter > cap)
      throw RewriteStranded("binding rewrite did not terminate within its step cap");
    bool universal = false;
    std::string x = find_stranded(g, g, universal);
    if (x.empty()) break;
    if (universal)
      throw RewriteStranded("universal for '" + x + "' has occurrences outside its scope");
    bool changed = false;
    g = float_up(g, x, changed);
    if (!changed)
      throw RewriteStranded("no rewrite applies to stranded existential '" + x + "'");
  }
  return g;
}

RefuteStatus classical_refute(const FormulaPtr& f, const SearchLimits& limits,
                              const ClausifyOptions& opts) {
  SymbolPool pool;
  pool.seed(f);
  std::vector<Clause> clauses = clausify_classical(f, pool);
  if (opts.nonempty_domain) add_nonempty_domain_axioms(clauses, pool);
  ProofResult r = prf_search(clauses, limits);
  return r.status == ProofStatus::Refuted ? RefuteStatus::Refuted
                                          : RefuteStatus::NotRefutedWithinLimits;
}

FormulaPtr oracle_refutation_input(const Sequent& s, const AnnotateResult& annotated,
                                   const Disambiguation& d) {
  (void)s;
  return normal_binding_form(mk_and_chain(annotated.formulas), d);
}

CompareResult compare_with_labeled(const Sequent& s, const SearchLimits& limits,
                                   const ClausifyOptions& opts) {
  CompareResult out;
  AnnotateResult annotated = annotate_sequent(s);
  for (const auto& diag : annotated.diagnostics) out.diagnostics.push_back(diag);

  for (const auto& d : enumerate_disambiguations(annotated, &out.diagnostics)) {
    FormulaPtr input = oracle_refutation_input(s, annotated, d);
    if (classical_refute(input, limits, opts) == RefuteStatus::Refuted)
      out.oracle_bindings.insert(d);
  }

  ClausifyResult cr = clausify_sequent(s, opts);
  for (const auto& report : enumerate_bindings(cr.clauses, limits))
    for (const auto& total : expand_report(report)) out.labeled_bindings.insert(total);

  out.agree = out.oracle_bindings == out.labeled_bindings;
  return out;
}

}  // namespace labres
