#pragma once

#include <set>
#include <string>
#include <variant>
#include <vector>

namespace labres {

// Names of proper variables, constants and predicates are plain symbols.
// Every term carries a tag: the source-variable name it originated from.
// Tags survive renaming and skolemization; they are what pronoun labels
// refer to.
using VarName = std::string;

enum class TermKind { Var, Fun };

struct Arg;

struct Term {
  TermKind kind = TermKind::Var;
  std::string name;       // variable name or function/constant symbol
  std::string tag;        // source-variable annotation (printed name^tag)
  std::vector<Arg> args;  // empty for variables and constants

  static Term var(std::string name, std::string tag);
  static Term var(const std::string& name) { return var(name, name); }
  static Term constant(std::string name, std::string tag);
  static Term constant(const std::string& name) { return constant(name, name); }
  static Term fun(std::string name, std::vector<Arg> args, std::string tag);

  bool is_var() const { return kind == TermKind::Var; }
  bool is_fun() const { return kind == TermKind::Fun; }
};

// A pronoun variable with its accessibility label: the set of source-variable
// names it may be bound to. Labels only ever shrink.
struct Pronoun {
  std::string id;                  // globally unique per source pronoun
  std::set<VarName> label;
};

// Argument position of a predicate or function symbol.
struct Arg {
  std::variant<Term, Pronoun> v;

  Arg() : v(Term{}) {}
  Arg(Term t) : v(std::move(t)) {}
  Arg(Pronoun p) : v(std::move(p)) {}

  bool is_term() const { return std::holds_alternative<Term>(v); }
  bool is_pronoun() const { return std::holds_alternative<Pronoun>(v); }
  const Term& term() const { return std::get<Term>(v); }
  const Pronoun& pronoun() const { return std::get<Pronoun>(v); }
  Term& term() { return std::get<Term>(v); }
  Pronoun& pronoun() { return std::get<Pronoun>(v); }
};

int compare(const Term& a, const Term& b);
int compare(const Pronoun& a, const Pronoun& b);
int compare(const Arg& a, const Arg& b);

bool operator==(const Term& a, const Term& b);
bool operator!=(const Term& a, const Term& b);
bool operator<(const Term& a, const Term& b);
bool operator==(const Pronoun& a, const Pronoun& b);
bool operator!=(const Pronoun& a, const Pronoun& b);
bool operator<(const Pronoun& a, const Pronoun& b);
bool operator==(const Arg& a, const Arg& b);
bool operator!=(const Arg& a, const Arg& b);
bool operator<(const Arg& a, const Arg& b);

// Does proper variable `name` occur anywhere in the term/argument?
bool occurs_var(const std::string& name, const Term& t);
bool occurs_var(const std::string& name, const Arg& a);

// Does pronoun `id` occur anywhere (top level or inside function args)?
bool occurs_pronoun(const std::string& id, const Term& t);
bool occurs_pronoun(const std::string& id, const Arg& a);

void collect_vars(const Term& t, std::set<std::string>& out);
void collect_vars(const Arg& a, std::set<std::string>& out);
void collect_pronoun_ids(const Arg& a, std::set<std::string>& out);

}  // namespace labres
