#pragma once

#include <string>
#include <vector>

#include "labres/clause.hpp"
#include "labres/formula.hpp"
#include "labres/substitution.hpp"
#include "labres/term.hpp"

namespace labres {

// Term/argument display. Clause contexts print every term with its ^tag
// (x^x, b^b, f1(x^x)^y); formula contexts print surface syntax without tags.
std::string print_term(const Term& t, bool with_tags = true);
std::string print_arg(const Arg& a, bool with_tags = true);
std::string print_literal(const Literal& l);

// The empty clause prints as the contradiction box.
std::string print_clause(const Clause& c);

// Surface syntax; reparsing yields an alpha-equivalent formula. Annotated
// pronoun occurrences (no enclosing ? binder) print as {x,y}:u.
std::string pretty_print(const FormulaPtr& f);

std::string print_substitution(const Substitution& s);

}  // namespace labres
