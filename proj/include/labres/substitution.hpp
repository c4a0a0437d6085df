#pragma once

#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "labres/clause.hpp"
#include "labres/formula.hpp"
#include "labres/term.hpp"

namespace labres {

// Raised when applying or composing a substitution would break a label
// condition: a pronoun may only be sent to a term whose tag is in its label,
// or to a pronoun with a smaller-or-equal label.
struct SubstitutionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct PronBinding {
  std::set<std::string> label;  // label of the pronoun at binding time
  Arg image;
};

// Finite map from proper variables and pronouns to arguments. Kept in
// normalized (idempotent) form; compose() re-normalizes.
struct Substitution {
  std::map<std::string, Arg> proper;          // variable name -> term or pronoun
  std::map<std::string, PronBinding> pron;    // pronoun id -> image

  bool empty() const { return proper.empty() && pron.empty(); }
  bool has_pron() const { return !pron.empty(); }

  // Substitution containing only the pronoun bindings.
  Substitution pron_part() const;
};

Arg apply_substitution(const Substitution& s, const Arg& a);
Term apply_substitution_term(const Substitution& s, const Term& t);
Literal apply_substitution(const Substitution& s, const Literal& l);
Clause apply_substitution(const Substitution& s, const Clause& c);

// Formula application substitutes free occurrences only; quantifier binders
// shadow proper entries of the same name.
FormulaPtr apply_substitution(const Substitution& s, const FormulaPtr& f);

// compose(s1, s2): apply(result, x) == apply(s2, apply(s1, x)).
Substitution compose_substitutions(const Substitution& s1, const Substitution& s2);

// Fresh-name rename of the clause's proper variables away from `avoid`.
// Tags, pronoun ids and labels are untouched.
std::pair<Clause, Substitution> rename_apart_with(const Clause& c,
                                                  const std::set<std::string>& avoid);
Clause rename_apart(const Clause& c, const std::set<std::string>& avoid);

}  // namespace labres
