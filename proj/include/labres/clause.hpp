#pragma once

#include <set>
#include <string>
#include <vector>

#include "labres/term.hpp"

namespace labres {

struct Literal {
  bool positive = true;
  std::string pred;
  std::vector<Arg> args;
};

int compare(const Literal& a, const Literal& b);
bool operator==(const Literal& a, const Literal& b);
bool operator<(const Literal& a, const Literal& b);

// A clause is a duplicate-free set of literals, interpreted as a disjunction.
// Literals are kept sorted; the empty clause is the contradiction.
struct Clause {
  std::vector<Literal> lits;

  Clause() = default;
  explicit Clause(std::vector<Literal> ls);

  bool empty() const { return lits.empty(); }
  size_t size() const { return lits.size(); }
};

bool operator==(const Clause& a, const Clause& b);
bool operator!=(const Clause& a, const Clause& b);
bool operator<(const Clause& a, const Clause& b);

std::set<std::string> clause_vars(const Clause& c);
std::set<std::string> clause_pronoun_ids(const Clause& c);

// Key identifying the clause up to renaming of its proper variables.
// Tags and pronouns are kept verbatim.
std::string clause_key(const Clause& c);

}  // namespace labres
