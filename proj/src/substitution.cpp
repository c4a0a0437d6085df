#include "labres/substitution.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace labres {

Substitution Substitution::pron_part() const {
  Substitution out;
  out.pron = pron;
  return out;
}

namespace {

bool label_subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

// Legality of sending a pronoun with label `label` to `img`: a term image
// must be tagged by a label element, a pronoun image must not widen it.
void check_pron_image(const std::set<std::string>& label, const Arg& img,
                      const std::string& id) {
  if (img.is_term()) {
    if (!label.count(img.term().tag))
      throw SubstitutionError("pronoun " + id + " bound to term tagged '" + img.term().tag +
                              "' outside its label");
  } else {
    if (!label_subset(img.pronoun().label, label))
      throw SubstitutionError("pronoun " + id + " bound to pronoun with larger label");
  }
}

}  // namespace

Arg apply_substitution(const Substitution& s, const Arg& a) {
  if (a.is_pronoun()) {
    const Pronoun& p = a.pronoun();
    auto it = s.pron.find(p.id);
    if (it == s.pron.end()) return a;
    check_pron_image(p.label, it->second.image, p.id);
    return it->second.image;
  }
  const Term& t = a.term();
  if (t.is_var()) {
    auto it = s.proper.find(t.name);
    if (it == s.proper.end()) return a;
    return it->second;
  }
  Term out = t;
  for (auto& sub : out.args) sub = apply_substitution(s, sub);
  return Arg(std::move(out));
}

Term apply_substitution_term(const Substitution& s, const Term& t) {
  Arg out = apply_substitution(s, Arg(t));
  if (out.is_pronoun())
    throw SubstitutionError("term position replaced by pronoun " + out.pronoun().id);
  return out.term();
}

Literal apply_substitution(const Substitution& s, const Literal& l) {
  Literal out = l;
  for (auto& a : out.args) a = apply_substitution(s, a);
  return out;
}

Clause apply_substitution(const Substitution& s, const Clause& c) {
  std::vector<Literal> lits;
  lits.reserve(c.lits.size());
  for (const auto& l : c.lits) lits.push_back(apply_substitution(s, l));
  return Clause(std::move(lits));
}

FormulaPtr apply_substitution(const Substitution& s, const FormulaPtr& f) {
  if (!f) return f;
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::vector<Arg> args;
      args.reserve(f->args.size());
      for (const auto& a : f->args) args.push_back(apply_substitution(s, a));
      return mk_atom(f->pred, std::move(args));
    }
    case FormulaKind::Not:
      return mk_not(apply_substitution(s, f->lhs));
    case FormulaKind::And:
      return mk_and(apply_substitution(s, f->lhs), apply_substitution(s, f->rhs));
    case FormulaKind::Or:
      return mk_or(apply_substitution(s, f->lhs), apply_substitution(s, f->rhs));
    case FormulaKind::Implies:
      return mk_implies(apply_substitution(s, f->lhs), apply_substitution(s, f->rhs));
    case FormulaKind::Forall:
    case FormulaKind::Exists: {
      FormulaPtr body;
      if (s.proper.count(f->var)) {
        Substitution shadowed = s;
        shadowed.proper.erase(f->var);
        body = apply_substitution(shadowed, f->lhs);
      } else {
        body = apply_substitution(s, f->lhs);
      }
      return f->kind == FormulaKind::Forall ? mk_forall(f->var, body) : mk_exists(f->var, body);
    }
    case FormulaKind::Pro:
      return mk_pro(f->var, apply_substitution(s, f->lhs));
  }
  return f;
}

Substitution compose_substitutions(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [name, img] : s1.proper) {
    Arg composed = apply_substitution(s2, img);
    if (composed.is_term() && composed.term().is_var() && composed.term().name == name) continue;
    out.proper.emplace(name, std::move(composed));
  }
  for (const auto& [name, img] : s2.proper) {
    if (!s1.proper.count(name)) out.proper.emplace(name, img);
  }
  for (const auto& [id, pb] : s1.pron) {
    Arg composed = apply_substitution(s2, pb.image);
    check_pron_image(pb.label, composed, id);  // label-shrink invariant
    out.pron.emplace(id, PronBinding{pb.label, std::move(composed)});
  }
  for (const auto& [id, pb] : s2.pron) {
    if (!s1.pron.count(id)) out.pron.emplace(id, pb);
  }
  return out;
}

std::pair<Clause, Substitution> rename_apart_with(const Clause& c,
                                                  const std::set<std::string>& avoid) {
  std::set<std::string> vars = clause_vars(c);
  std::set<std::string> taken = avoid;
  taken.insert(vars.begin(), vars.end());

  // Tags of the clause's variables, recovered from their occurrences.
  std::map<std::string, std::string> tag_of;
  std::function<void(const Arg&)> scan = [&](const Arg& a) {
    if (a.is_pronoun()) return;
    const Term& t = a.term();
    if (t.is_var()) {
      tag_of.emplace(t.name, t.tag);
      return;
    }
    for (const auto& sub : t.args) scan(sub);
  };
  for (const auto& l : c.lits)
    for (const auto& a : l.args) scan(a);

  Substitution pi;
  for (const auto& v : vars) {
    if (!avoid.count(v)) continue;
    for (int i = 1;; ++i) {
      std::string cand = v + std::to_string(i);
      if (!taken.count(cand)) {
        taken.insert(cand);
        pi.proper.emplace(v, Arg(Term::var(cand, tag_of.at(v))));
        break;
      }
    }
  }
  return {apply_substitution(pi, c), pi};
}

Clause rename_apart(const Clause& c, const std::set<std::string>& avoid) {
  return rename_apart_with(c, avoid).first;
}

}  // namespace labres
