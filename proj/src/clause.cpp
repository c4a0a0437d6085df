#include "labres/clause.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace labres {

int compare(const Literal& a, const Literal& b) {
  if (int c = a.pred.compare(b.pred)) return c;
  if (a.args.size() != b.args.size()) return a.args.size() < b.args.size() ? -1 : 1;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (int c = compare(a.args[i], b.args[i])) return c;
  if (a.positive != b.positive) return a.positive ? 1 : -1;  // negative sorts first
  return 0;
}

bool operator==(const Literal& a, const Literal& b) { return compare(a, b) == 0; }
bool operator<(const Literal& a, const Literal& b) { return compare(a, b) < 0; }

Clause::Clause(std::vector<Literal> ls) : lits(std::move(ls)) {
  std::sort(lits.begin(), lits.end());
  lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
}

bool operator==(const Clause& a, const Clause& b) { return a.lits == b.lits; }
bool operator!=(const Clause& a, const Clause& b) { return !(a == b); }

bool operator<(const Clause& a, const Clause& b) {
  return std::lexicographical_compare(a.lits.begin(), a.lits.end(), b.lits.begin(), b.lits.end());
}

std::set<std::string> clause_vars(const Clause& c) {
  std::set<std::string> out;
  for (const auto& l : c.lits)
    for (const auto& a : l.args) collect_vars(a, out);
  return out;
}

std::set<std::string> clause_pronoun_ids(const Clause& c) {
  std::set<std::string> out;
  for (const auto& l : c.lits)
    for (const auto& a : l.args) collect_pronoun_ids(a, out);
  return out;
}

namespace {

void key_arg(std::ostream& os, const Arg& a, std::map<std::string, int>& renaming) {
  if (a.is_pronoun()) {
    const Pronoun& p = a.pronoun();
    os << 'P' << p.id << '{';
    for (const auto& n : p.label) os << n << ',';
    os << '}';
    return;
  }
  const Term& t = a.term();
  if (t.is_var()) {
    auto [it, fresh] = renaming.emplace(t.name, renaming.size());
    os << 'v' << it->second << '^' << t.tag;
    return;
  }
  os << t.name << '^' << t.tag << '(';
  for (const auto& sub : t.args) {
    key_arg(os, sub, renaming);
    os << ',';
  }
  os << ')';
}

void key_literal(std::ostream& os, const Literal& l, std::map<std::string, int>& renaming) {
  os << (l.positive ? '+' : '-') << l.pred << '(';
  for (const auto& a : l.args) {
    key_arg(os, a, renaming);
    os << ',';
  }
  os << ')';
}

// Literal ordering that ignores proper variable names, so alpha-variants
// sort identically before canonical renaming.
std::string blind_key(const Literal& l) {
  std::ostringstream os;
  struct Blind {
    static void arg(std::ostream& o, const Arg& a) {
      if (a.is_pronoun()) {
        o << 'P' << a.pronoun().id;
        return;
      }
      const Term& t = a.term();
      if (t.is_var()) {
        o << "v^" << t.tag;
        return;
      }
      o << t.name << '(';
      for (const auto& s : t.args) {
        arg(o, s);
        o << ',';
      }
      o << ')';
    }
  };
  os << (l.positive ? '+' : '-') << l.pred << '(';
  for (const auto& a : l.args) {
    Blind::arg(os, a);
    os << ',';
  }
  os << ')';
  return os.str();
}

}  // namespace

std::string clause_key(const Clause& c) {
  std::vector<const Literal*> order;
  order.reserve(c.lits.size());
  for (const auto& l : c.lits) order.push_back(&l);
  std::stable_sort(order.begin(), order.end(), [](const Literal* a, const Literal* b) {
    return blind_key(*a) < blind_key(*b);
  });
  std::map<std::string, int> renaming;
  std::ostringstream os;
  for (const Literal* l : order) {
    key_literal(os, *l, renaming);
    os << ';';
  }
  return os.str();
}

}  // namespace labres
