#include "labres/printer.hpp"

#include <set>
#include <sstream>

namespace labres {

namespace {

std::string print_label(const std::set<std::string>& label) {
  std::string out = "{";
  bool first = true;
  for (const auto& n : label) {
    if (!first) out += ",";
    out += n;
    first = false;
  }
  return out + "}";
}

}  // namespace

std::string print_term(const Term& t, bool with_tags) {
  std::string out = t.name;
  if (!t.args.empty()) {
    out += "(";
    for (size_t i = 0; i < t.args.size(); ++i) {
      if (i) out += ",";
      out += print_arg(t.args[i], with_tags);
    }
    out += ")";
  }
  if (with_tags) out += "^" + t.tag;
  return out;
}

std::string print_arg(const Arg& a, bool with_tags) {
  if (a.is_pronoun()) return print_label(a.pronoun().label) + ":" + a.pronoun().id;
  return print_term(a.term(), with_tags);
}

std::string print_literal(const Literal& l) {
  std::string out = l.positive ? "" : "~";
  out += l.pred;
  if (!l.args.empty()) {
    out += "(";
    for (size_t i = 0; i < l.args.size(); ++i) {
      if (i) out += ",";
      out += print_arg(l.args[i]);
    }
    out += ")";
  }
  return out;
}

std::string print_clause(const Clause& c) {
  if (c.empty()) return "□";  // box
  std::string out = "{";
  for (size_t i = 0; i < c.lits.size(); ++i) {
    if (i) out += ", ";
    out += print_literal(c.lits[i]);
  }
  return out + "}";
}

namespace {

// Precedence: ~ and binders > & > | > ->
int prec(FormulaKind k) {
  switch (k) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    default: return 4;
  }
}

void print_formula_rec(std::ostringstream& os, const FormulaPtr& f,
                       std::set<std::string>& active_pro, int parent_prec) {
  int p = prec(f->kind);
  bool parens = p < parent_prec;
  switch (f->kind) {
    case FormulaKind::Atom: {
      os << f->pred;
      if (!f->args.empty()) {
        os << "(";
        for (size_t i = 0; i < f->args.size(); ++i) {
          if (i) os << ",";
          const Arg& a = f->args[i];
          if (a.is_pronoun() && active_pro.count(a.pronoun().id))
            os << a.pronoun().id;  // still under its ? binder
          else
            os << print_arg(a, /*with_tags=*/false);
        }
        os << ")";
      }
      return;
    }
    case FormulaKind::Not:
      os << "~";
      print_formula_rec(os, f->lhs, active_pro, 5);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies: {
      const char* op = f->kind == FormulaKind::And ? " & "
                       : f->kind == FormulaKind::Or ? " | "
                                                    : " -> ";
      if (parens) os << "(";
      // -> is right-associative; & and | associate left.
      int lp = f->kind == FormulaKind::Implies ? p + 1 : p;
      int rp = f->kind == FormulaKind::Implies ? p : p + 1;
      print_formula_rec(os, f->lhs, active_pro, lp);
      os << op;
      print_formula_rec(os, f->rhs, active_pro, rp);
      if (parens) os << ")";
      return;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists:
    case FormulaKind::Pro: {
      if (f->kind == FormulaKind::Pro) {
        os << "?" << f->var << " ";
        active_pro.insert(f->var);
      } else {
        os << (f->kind == FormulaKind::Forall ? "forall " : "exists ") << f->var << " ";
      }
      // Binder bodies are printed parenthesized unless atomic, so that the
      // prefix operator reparses with the same scope.
      bool wrap = f->lhs->kind != FormulaKind::Atom;
      if (wrap) os << "(";
      print_formula_rec(os, f->lhs, active_pro, wrap ? 0 : 5);
      if (wrap) os << ")";
      if (f->kind == FormulaKind::Pro) active_pro.erase(f->var);
      return;
    }
  }
}

}  // namespace

std::string pretty_print(const FormulaPtr& f) {
  std::ostringstream os;
  std::set<std::string> active;
  print_formula_rec(os, f, active, 0);
  return os.str();
}

std::string print_substitution(const Substitution& s) {
  std::string out = "[";
  bool first = true;
  for (const auto& [name, img] : s.proper) {
    if (!first) out += ", ";
    out += name + "/" + print_arg(img);
    first = false;
  }
  for (const auto& [id, pb] : s.pron) {
    if (!first) out += ", ";
    out += print_label(pb.label) + ":" + id + "/" + print_arg(pb.image);
    first = false;
  }
  return out + "]";
}

}  // namespace labres
