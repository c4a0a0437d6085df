#include "labres/term.hpp"

namespace labres {

Term Term::var(std::string name, std::string tag) {
  Term t;
  t.kind = TermKind::Var;
  t.name = std::move(name);
  t.tag = std::move(tag);
  return t;
}

Term Term::constant(std::string name, std::string tag) {
  Term t;
  t.kind = TermKind::Fun;
  t.name = std::move(name);
  t.tag = std::move(tag);
  return t;
}

Term Term::fun(std::string name, std::vector<Arg> args, std::string tag) {
  Term t;
  t.kind = TermKind::Fun;
  t.name = std::move(name);
  t.tag = std::move(tag);
  t.args = std::move(args);
  return t;
}

static int compare_str(const std::string& a, const std::string& b) {
  return a.compare(b);
}

int compare(const Term& a, const Term& b) {
  if (a.kind != b.kind) return a.kind == TermKind::Var ? -1 : 1;
  if (int c = compare_str(a.name, b.name)) return c < 0 ? -1 : 1;
  if (int c = compare_str(a.tag, b.tag)) return c < 0 ? -1 : 1;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i])) return c;
  return 0;
}

int compare(const Pronoun& a, const Pronoun& b) {
  if (int c = compare_str(a.id, b.id)) return c < 0 ? -1 : 1;
  if (a.label != b.label) return a.label < b.label ? -1 : 1;
  return 0;
}

int compare(const Arg& a, const Arg& b) {
  if (a.is_term() != b.is_term()) return a.is_term() ? -1 : 1;
  if (a.is_term()) return compare(a.term(), b.term());
  return compare(a.pronoun(), b.pronoun());
}

bool operator==(const Term& a, const Term& b) { return compare(a, b) == 0; }
bool operator!=(const Term& a, const Term& b) { return compare(a, b) != 0; }
bool operator<(const Term& a, const Term& b) { return compare(a, b) < 0; }
bool operator==(const Pronoun& a, const Pronoun& b) { return compare(a, b) == 0; }
bool operator!=(const Pronoun& a, const Pronoun& b) { return compare(a, b) != 0; }
bool operator<(const Pronoun& a, const Pronoun& b) { return compare(a, b) < 0; }
bool operator==(const Arg& a, const Arg& b) { return compare(a, b) == 0; }
bool operator!=(const Arg& a, const Arg& b) { return compare(a, b) != 0; }
bool operator<(const Arg& a, const Arg& b) { return compare(a, b) < 0; }

bool occurs_var(const std::string& name, const Term& t) {
  if (t.is_var()) return t.name == name;
  for (const auto& a : t.args)
    if (occurs_var(name, a)) return true;
  return false;
}

bool occurs_var(const std::string& name, const Arg& a) {
  return a.is_term() && occurs_var(name, a.term());
}

bool occurs_pronoun(const std::string& id, const Term& t) {
  for (const auto& a : t.args)
    if (occurs_pronoun(id, a)) return true;
  return false;
}

bool occurs_pronoun(const std::string& id, const Arg& a) {
  if (a.is_pronoun()) return a.pronoun().id == id;
  return occurs_pronoun(id, a.term());
}

void collect_vars(const Term& t, std::set<std::string>& out) {
  if (t.is_var()) {
    out.insert(t.name);
    return;
  }
  for (const auto& a : t.args) collect_vars(a, out);
}

void collect_vars(const Arg& a, std::set<std::string>& out) {
  if (a.is_term()) collect_vars(a.term(), out);
}

void collect_pronoun_ids(const Arg& a, std::set<std::string>& out) {
  if (a.is_pronoun()) {
    out.insert(a.pronoun().id);
    return;
  }
  for (const auto& sub : a.term().args) collect_pronoun_ids(sub, out);
}

}  // namespace labres
