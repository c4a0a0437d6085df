#pragma once

#include <functional>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "labres/term.hpp"

namespace labres {

// AST for dynamic first-order formulas. The pronoun binder Pro(u, body)
// marks where a pronoun is introduced; annotation removes Pro nodes and
// leaves labeled Pronoun arguments behind.
enum class FormulaKind { Atom, Not, And, Or, Implies, Forall, Exists, Pro };

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  FormulaKind kind;
  std::string pred;        // Atom
  std::vector<Arg> args;   // Atom
  std::string var;         // Forall/Exists binder name, Pro pronoun id
  FormulaPtr lhs, rhs;     // children; unary nodes use lhs only
};

FormulaPtr mk_atom(std::string pred, std::vector<Arg> args = {});
FormulaPtr mk_not(FormulaPtr f);
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_forall(std::string var, FormulaPtr body);
FormulaPtr mk_exists(std::string var, FormulaPtr body);
FormulaPtr mk_pro(std::string id, FormulaPtr body);

// Right-associated conjunction of a nonempty list.
FormulaPtr mk_and_chain(const std::vector<FormulaPtr>& fs);

bool contains_pro(const FormulaPtr& f);

// All quantifier binder names, in preorder. Pro binders are not included.
void collect_binders(const FormulaPtr& f, std::vector<std::string>& out);

// Constant symbols (0-ary Fun terms) occurring in atoms.
void collect_constants(const FormulaPtr& f, std::set<std::string>& out);

// Pronoun ids occurring as binders or as occurrences.
void collect_pronoun_ids(const FormulaPtr& f, std::set<std::string>& out);

void visit_atoms(const FormulaPtr& f, const std::function<void(const Formula&)>& fn);

// Structural equality modulo renaming of quantifier binders and pronoun
// binder ids. When flatten_conj is set, conjunction grouping is ignored
// (order still matters).
bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b, bool flatten_conj = false);

// A sequent: ordered premises and one conclusion. Order is significant.
struct Sequent {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
};

// Lists every quantifier binder name that is reused anywhere across the
// sequent, plus binder names that collide with constant symbols.
std::vector<std::string> check_binder_disjointness(const Sequent& s);

}  // namespace labres
