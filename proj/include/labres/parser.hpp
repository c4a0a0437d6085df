#pragma once

#include <stdexcept>
#include <string>

#include "labres/formula.hpp"

namespace labres {

struct SourceSpan {
  size_t begin = 0;
  size_t end = 0;
};

struct ParseError : std::runtime_error {
  SourceSpan span;
  ParseError(const std::string& msg, SourceSpan sp)
      : std::runtime_error(msg), span(sp) {}
};

// Parses one formula. Identifiers are classified by their innermost binder:
// forall/exists-bound names become proper variables, ?-bound names become
// pronouns, unbound nullary identifiers become constants. Pronoun binder ids
// are made unique within the parse.
FormulaPtr parse_formula(const std::string& text);

// Sequent file: '#' comments, one premise formula per line, final line
// "|= <formula>". Binder disjointness is enforced across the whole sequent.
Sequent parse_sequent(const std::string& text);

}  // namespace labres
