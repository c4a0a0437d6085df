#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "labres/annotate.hpp"
#include "labres/clausify.hpp"
#include "labres/formula.hpp"
#include "labres/resolve.hpp"

namespace labres {

// A total choice of antecedent for every pronoun; each choice must be a
// member of the pronoun's label.
using Disambiguation = std::map<std::string, std::string>;

// Cartesian product over the labels, in pronoun introduction order. A
// pronoun with an empty label admits no disambiguation at all and yields an
// empty result plus a diagnostic.
std::vector<Disambiguation> enumerate_disambiguations(const AnnotateResult& annotated,
                                                      std::vector<std::string>* diagnostics);

// Raised when a substituted pronoun occurrence cannot be captured by the
// quantifier of its antecedent. Must not happen for label-respecting
// disambiguations.
struct RewriteStranded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Substitutes each pronoun by its chosen antecedent and restores classical
// binding: existentials float up through conjunctions, antecedent
// existentials become universals at implications, and adjacent existentials
// commute, until every quantifier dominates all occurrences of its variable.
// Negation, disjunction and universals are left in place.
FormulaPtr normal_binding_form(const FormulaPtr& f, const Disambiguation& d);

enum class RefuteStatus { Refuted, NotRefutedWithinLimits };

// Standard clausification and resolution on a pronoun-free formula. The
// options control the same nonempty-domain witnesses used on the labeled
// side.
RefuteStatus classical_refute(const FormulaPtr& f, const SearchLimits& limits = {},
                              const ClausifyOptions& opts = {});

struct CompareResult {
  std::set<Disambiguation> oracle_bindings;
  std::set<Disambiguation> labeled_bindings;
  bool agree = false;
  std::vector<std::string> diagnostics;
};

// Runs both pipelines on a sequent: brute-force disambiguation followed by
// classical refutation, versus labeled resolution with binding enumeration
// (underspecified reports expanded over their residual labels).
CompareResult compare_with_labeled(const Sequent& s, const SearchLimits& limits = {},
                                   const ClausifyOptions& opts = {});

// The conjunction premises & ~conclusion with pronouns disambiguated and
// rebracketed; the formula handed to classical_refute.
FormulaPtr oracle_refutation_input(const Sequent& s, const AnnotateResult& annotated,
                                   const Disambiguation& d);

}  // namespace labres
