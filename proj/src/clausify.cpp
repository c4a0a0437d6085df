#include "labres/clausify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "labres/substitution.hpp"

namespace labres {

void SymbolPool::seed(const FormulaPtr& f) {
  if (!f) return;
  if (f->kind == FormulaKind::Atom) {
    used.insert(f->pred);
    std::function<void(const Arg&)> scan = [&](const Arg& a) {
      if (a.is_pronoun()) {
        used.insert(a.pronoun().id);
        return;
      }
      used.insert(a.term().name);
      for (const auto& sub : a.term().args) scan(sub);
    };
    for (const auto& a : f->args) scan(a);
  }
  if (f->kind == FormulaKind::Forall || f->kind == FormulaKind::Exists ||
      f->kind == FormulaKind::Pro)
    used.insert(f->var);
  seed(f->lhs);
  seed(f->rhs);
}

void SymbolPool::seed(const Sequent& s) {
  for (const auto& p : s.premises) seed(p);
  seed(s.conclusion);
}

static std::string next_fresh(std::set<std::string>& used, const char* base, int& count) {
  for (;;) {
    std::string cand = base + std::to_string(++count);
    if (used.insert(cand).second) return cand;
  }
}

std::string SymbolPool::fresh_fn() { return next_fresh(used, "f", fn_count); }
std::string SymbolPool::fresh_const() { return next_fresh(used, "c", const_count); }
std::string SymbolPool::fresh_witness() { return next_fresh(used, "h", witness_count); }

FormulaPtr to_nnf(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::And:
      return mk_and(to_nnf(f->lhs), to_nnf(f->rhs));
    case FormulaKind::Or:
      return mk_or(to_nnf(f->lhs), to_nnf(f->rhs));
    case FormulaKind::Implies:
      return mk_or(to_nnf(mk_not(f->lhs)), to_nnf(f->rhs));
    case FormulaKind::Forall:
      return mk_forall(f->var, to_nnf(f->lhs));
    case FormulaKind::Exists:
      return mk_exists(f->var, to_nnf(f->lhs));
    case FormulaKind::Pro:
      throw std::logic_error("to_nnf: unannotated pronoun binder");
    case FormulaKind::Not: {
      const FormulaPtr& g = f->lhs;
      switch (g->kind) {
        case FormulaKind::Atom:
          return f;
        case FormulaKind::Not:
          return to_nnf(g->lhs);
        case FormulaKind::And:
          return mk_or(to_nnf(mk_not(g->lhs)), to_nnf(mk_not(g->rhs)));
        case FormulaKind::Or:
          return mk_and(to_nnf(mk_not(g->lhs)), to_nnf(mk_not(g->rhs)));
        case FormulaKind::Implies:
          return mk_and(to_nnf(g->lhs), to_nnf(mk_not(g->rhs)));
        case FormulaKind::Forall:
          return mk_exists(g->var, to_nnf(mk_not(g->lhs)));
        case FormulaKind::Exists:
          return mk_forall(g->var, to_nnf(mk_not(g->lhs)));
        case FormulaKind::Pro:
          throw std::logic_error("to_nnf: unannotated pronoun binder");
      }
    }
  }
  return f;
}

namespace {

FormulaPtr skolemize_rec(const FormulaPtr& f, SymbolPool& pool,
                         std::vector<Term>& universals, Substitution& env) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return apply_substitution(env, f);
    case FormulaKind::Not:
      return mk_not(skolemize_rec(f->lhs, pool, universals, env));
    case FormulaKind::And:
      return mk_and(skolemize_rec(f->lhs, pool, universals, env),
                    skolemize_rec(f->rhs, pool, universals, env));
    case FormulaKind::Or:
      return mk_or(skolemize_rec(f->lhs, pool, universals, env),
                   skolemize_rec(f->rhs, pool, universals, env));
    case FormulaKind::Forall: {
      universals.push_back(Term::var(f->var));
      FormulaPtr body = skolemize_rec(f->lhs, pool, universals, env);
      universals.pop_back();
      return body;
    }
    case FormulaKind::Exists: {
      Term sk;
      if (universals.empty()) {
        sk = Term::constant(pool.fresh_const(), f->var);
      } else {
        std::vector<Arg> args(universals.begin(), universals.end());
        sk = Term::fun(pool.fresh_fn(), std::move(args), f->var);
      }
      env.proper.emplace(f->var, Arg(std::move(sk)));
      FormulaPtr body = skolemize_rec(f->lhs, pool, universals, env);
      env.proper.erase(f->var);
      return body;
    }
    default:
      throw std::logic_error("skolemize: input not in NNF");
  }
}

}  // namespace

FormulaPtr skolemize(const FormulaPtr& nnf, SymbolPool& pool) {
  std::vector<Term> universals;
  Substitution env;
  return skolemize_rec(nnf, pool, universals, env);
}

namespace {

void cnf_rec(const FormulaPtr& f, std::vector<Clause>& out) {
  switch (f->kind) {
    case FormulaKind::And:
      cnf_rec(f->lhs, out);
      cnf_rec(f->rhs, out);
      return;
    case FormulaKind::Or: {
      std::vector<Clause> left, right;
      cnf_rec(f->lhs, left);
      cnf_rec(f->rhs, right);
      for (const auto& a : left)
        for (const auto& b : right) {
          std::vector<Literal> lits = a.lits;
          lits.insert(lits.end(), b.lits.begin(), b.lits.end());
          out.push_back(Clause(std::move(lits)));
        }
      return;
    }
    case FormulaKind::Atom:
      out.push_back(Clause({Literal{true, f->pred, f->args}}));
      return;
    case FormulaKind::Not:
      if (f->lhs->kind != FormulaKind::Atom)
        throw std::logic_error("to_cnf_clauses: input not in NNF");
      out.push_back(Clause({Literal{false, f->lhs->pred, f->lhs->args}}));
      return;
    default:
      throw std::logic_error("to_cnf_clauses: input not quantifier-free");
  }
}

void append_unique(std::vector<Clause>& clauses, std::vector<Clause> more) {
  for (auto& c : more) {
    bool dup = false;
    for (const auto& existing : clauses)
      if (existing == c) {
        dup = true;
        break;
      }
    if (!dup) clauses.push_back(std::move(c));
  }
}

}  // namespace

std::vector<Clause> to_cnf_clauses(const FormulaPtr& qfree) {
  std::vector<Clause> raw;
  cnf_rec(qfree, raw);
  std::vector<Clause> out;
  append_unique(out, std::move(raw));
  return out;
}

void add_nonempty_domain_axioms(std::vector<Clause>& clauses, SymbolPool& pool) {
  std::map<std::string, std::pair<bool, bool>> seen;  // pred -> (pos, neg), unary only
  for (const auto& c : clauses)
    for (const auto& l : c.lits) {
      if (l.args.size() != 1) continue;
      auto& e = seen[l.pred];
      (l.positive ? e.first : e.second) = true;
    }
  for (const auto& [pred, occ] : seen) {
    if (occ.second && !occ.first) {
      std::string w = pool.fresh_witness();
      clauses.push_back(Clause({Literal{true, pred, {Arg(Term::constant(w))}}}));
    }
  }
}

ClausifyResult clausify_sequent(const Sequent& s, const ClausifyOptions& opts) {
  ClausifyResult out;
  out.annotation = annotate_sequent(s);
  SymbolPool pool;
  pool.seed(s);
  for (const auto& f : out.annotation.formulas) {
    FormulaPtr qfree = skolemize(to_nnf(f), pool);
    append_unique(out.clauses, to_cnf_clauses(qfree));
  }
  if (opts.nonempty_domain) add_nonempty_domain_axioms(out.clauses, pool);
  return out;
}

std::vector<Clause> clausify_classical(const FormulaPtr& f, SymbolPool& pool) {
  return to_cnf_clauses(skolemize(to_nnf(f), pool));
}

}  // namespace labres
