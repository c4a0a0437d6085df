#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "labres/clause.hpp"
#include "labres/substitution.hpp"
#include "labres/unify.hpp"

namespace labres {

struct SearchLimits {
  int max_depth = 12;       // resolution steps along one derivation
  long max_steps = 200000;  // total step attempts across the search
};

struct SearchOptions {
  // When false, pronoun parts of unifiers are applied to the resolvent only
  // instead of to every clause. Unsound; kept for regression tests showing
  // why global instantiation is needed.
  bool global_pronouns = true;
};

struct ProofStep {
  int neg_parent = -1;             // clause holding the negative literals
  int pos_parent = -1;
  std::vector<int> neg_lits;       // literal indices at step time
  std::vector<int> pos_lits;
  Substitution renaming;           // applied to the positive parent
  Substitution mgu;
  int resolvent_id = -1;
  Clause resolvent;
};

// Outcome for one pronoun: either committed to an antecedent (the tag of the
// term it was bound to) or left underspecified over the residual label.
struct BindingOutcome {
  bool bound = false;
  std::string antecedent;          // tag, when bound
  std::set<std::string> residual;  // remaining label, when underspecified
  std::string group;               // representative pronoun id of its merge group
};

bool operator<(const BindingOutcome& a, const BindingOutcome& b);
bool operator==(const BindingOutcome& a, const BindingOutcome& b);

using BindingReport = std::map<std::string, BindingOutcome>;

enum class ProofStatus { Refuted, Saturated, DepthExhausted };

struct ProofResult {
  ProofStatus status = ProofStatus::DepthExhausted;
  std::vector<ProofStep> trace;    // derivation path; ends in the empty clause
  BindingReport report;
  std::vector<Clause> clauses;     // input clauses as indexed by the trace
  long steps_used = 0;
  long binding_contexts = 0;       // distinct global pronoun contexts entered
};

struct StepResult {
  UnifyStatus status = UnifyStatus::Solved;
  Clause resolvent;
  Substitution renaming;
  Substitution mgu;
  bool ok() const { return status == UnifyStatus::Solved; }
};

// One res_p application: the selected negative literals of c are resolved
// against the selected positive literals of d. d is renamed apart on proper
// variables (pronouns are shared). The pronoun part of the unifier is
// returned for global application by the caller.
StepResult resolve_step(const Clause& c, const std::vector<int>& neg_lits, const Clause& d,
                        const std::vector<int>& pos_lits, const std::set<std::string>& avoid_vars);

// Iterative-deepening refutation search with chronological backtracking.
// Pronoun bindings are applied to all clauses and undone on backtrack.
ProofResult prf_search(const std::vector<Clause>& clauses, const SearchLimits& limits = {},
                       const SearchOptions& options = {});

// Backtracks past every refutation and collects the distinct binding
// reports. Reports containing a pronoun with an empty residual label are
// dropped: they admit no disambiguation.
std::vector<BindingReport> enumerate_bindings(const std::vector<Clause>& clauses,
                                              const SearchLimits& limits = {});

// Expands a report to every total pronoun-to-antecedent assignment it
// covers; pronouns merged into one group co-vary.
std::vector<std::map<std::string, std::string>> expand_report(const BindingReport& r);

// Re-runs every step of a trace against the initial clauses and checks that
// each recorded resolvent is re-derived bit-exactly.
bool replay_trace(const std::vector<Clause>& initial, const std::vector<ProofStep>& trace,
                  const SearchOptions& options = {});

std::string print_report(const BindingReport& r);

}  // namespace labres
