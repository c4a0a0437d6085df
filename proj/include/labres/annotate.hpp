#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "labres/formula.hpp"

namespace labres {

// Actively quantifying variables of a formula: the names a subformula
// exports as available antecedents. Conjunction collects both sides,
// existentials add their variable; negation, disjunction, implication and
// universal quantification export nothing. Atoms export the constants
// occurring in them, so proper names act as antecedents.
std::set<std::string> aqv(const FormulaPtr& f);

// Annotation with accessible variables: drops every ? binder and replaces
// the pronoun occurrences it binds with labeled pronoun variables. V is the
// set of antecedents accessible at the current position.
FormulaPtr annot(const std::set<std::string>& V, const FormulaPtr& f);

struct AnnotateResult {
  // Annotated premises in order, then the annotated negated conclusion.
  std::vector<FormulaPtr> formulas;
  // Pronoun ids in order of introduction, with their labels.
  std::vector<std::string> pronoun_order;
  std::map<std::string, std::set<std::string>> pronoun_labels;
  // One entry per pronoun whose label came out empty.
  std::vector<std::string> diagnostics;
};

// Annotates P1 & ... & Pn & ~conclusion as one conjunction in sequence
// order, then splits it back apart, so conclusion pronouns can reach
// premise antecedents.
AnnotateResult annotate_sequent(const Sequent& s);

// Annotation result for the premises alone (no negated conclusion).
AnnotateResult annotate_formulas(const std::vector<FormulaPtr>& fs);

}  // namespace labres
