#pragma once

#include <optional>
#include <string>
#include <vector>

#include "labres/clause.hpp"
#include "labres/substitution.hpp"
#include "labres/term.hpp"

namespace labres {

// Oriented equation between terms and/or labeled pronoun variables.
struct Equation {
  Arg lhs, rhs;
};

using EquationSet = std::vector<Equation>;

enum class UnifyStatus {
  Solved,
  Clash,            // distinct function symbols or arities
  OccursCheck,      // variable or pronoun occurs in the opposite side
  Inaccessible,     // pronoun equated with a term tagged outside its label
  DisjointLabels,   // pronoun pair with no common antecedent
  StepLimit,
};

struct PronounMerge {
  std::set<std::string> left_label, right_label, kept;
};

struct UnifyStats {
  long steps = 0;
  std::vector<PronounMerge> merges;
};

struct UnifyResult {
  UnifyStatus status = UnifyStatus::Solved;
  EquationSet solved;
  UnifyStats stats;
  bool ok() const { return status == UnifyStatus::Solved; }
};

// Labeled unification: rewrites the equation multiset to a solved set or
// fails. Deterministic leftmost-applicable rule application; failure checks
// run first. step_limit < 0 means no limit.
UnifyResult unify_star(EquationSet E, long step_limit = -1);

// Both solved-set conditions: left sides are variables or pronouns, pairwise
// distinct, and no left side occurs in any right side.
bool is_solved_set(const EquationSet& E);

// Reads a solved set as a substitution with the left sides as domain.
Substitution solved_to_substitution(const EquationSet& E);

struct MguResult {
  UnifyStatus status = UnifyStatus::Solved;
  Substitution mgu;
  UnifyStats stats;
  bool ok() const { return status == UnifyStatus::Solved; }
};

// Most general labeled unifier making all literals' argument lists equal.
// All literals must share predicate and arity (signs are ignored).
MguResult mgu_star(const std::vector<Literal>& lits);

// Does sigma unify every equation of E while respecting the label
// conditions? Used as a direct certificate check on unify_star output.
bool is_unifier_star(const Substitution& sigma, const EquationSet& E);

}  // namespace labres
