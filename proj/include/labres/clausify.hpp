#pragma once

#include <set>
#include <string>
#include <vector>

#include "labres/annotate.hpp"
#include "labres/clause.hpp"
#include "labres/formula.hpp"

namespace labres {

struct ClausifyOptions {
  // Adds a fresh witness clause {p(c^c)} for every unary predicate that
  // occurs only negatively in the clause set, asserting its domain nonempty.
  bool nonempty_domain = false;
};

// Fresh symbol source, seeded with every name already used in a sequent.
struct SymbolPool {
  std::set<std::string> used;
  int fn_count = 0;
  int const_count = 0;
  int witness_count = 0;

  void seed(const Sequent& s);
  void seed(const FormulaPtr& f);
  std::string fresh_fn();       // f1, f2, ...
  std::string fresh_const();    // c1, c2, ...
  std::string fresh_witness();  // h1, h2, ...
};

// Negation normal form; implications rewritten, negations pushed to atoms,
// quantifiers retained. Input must be annotation output (no ? binders).
FormulaPtr to_nnf(const FormulaPtr& f);

// Standard skolemization over NNF. Existentials under universals become
// skolem applications of exactly those universals in binding order; the
// skolem term keeps the existential variable as its tag. Universal variables
// become free variables tagged with their own name.
FormulaPtr skolemize(const FormulaPtr& nnf, SymbolPool& pool);

// Distributive CNF of a quantifier-free NNF formula.
std::vector<Clause> to_cnf_clauses(const FormulaPtr& qfree);

struct ClausifyResult {
  std::vector<Clause> clauses;
  AnnotateResult annotation;
};

// Full pipeline: annotate, NNF, skolemize, CNF, one shared symbol pool.
ClausifyResult clausify_sequent(const Sequent& s, const ClausifyOptions& opts = {});

// Clause form of a pronoun-free classical formula (no annotation step).
std::vector<Clause> clausify_classical(const FormulaPtr& f, SymbolPool& pool);

// Appends nonempty-domain witness clauses for unary predicates with only
// negative occurrences.
void add_nonempty_domain_axioms(std::vector<Clause>& clauses, SymbolPool& pool);

}  // namespace labres
