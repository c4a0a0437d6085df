#include "labres/annotate.hpp"

#include <functional>

namespace labres {

std::set<std::string> aqv(const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::set<std::string> out;
      std::function<void(const Arg&)> scan = [&](const Arg& a) {
        if (a.is_pronoun()) return;
        const Term& t = a.term();
        if (t.is_fun() && t.args.empty()) out.insert(t.name);
        for (const auto& sub : t.args) scan(sub);
      };
      for (const auto& a : f->args) scan(a);
      return out;
    }
    case FormulaKind::And: {
      std::set<std::string> out = aqv(f->lhs);
      std::set<std::string> r = aqv(f->rhs);
      out.insert(r.begin(), r.end());
      return out;
    }
    case FormulaKind::Exists: {
      std::set<std::string> out = aqv(f->lhs);
      out.insert(f->var);
      return out;
    }
    case FormulaKind::Pro:
      return aqv(f->lhs);
    case FormulaKind::Not:
    case FormulaKind::Or:
    case FormulaKind::Implies:
    case FormulaKind::Forall:
      return {};
  }
  return {};
}

namespace {

// Replace every occurrence of pronoun `id` with its labeled counterpart.
FormulaPtr label_pronoun(const FormulaPtr& f, const std::string& id,
                         const std::set<std::string>& label) {
  switch (f->kind) {
    case FormulaKind::Atom: {
      std::vector<Arg> args = f->args;
      bool changed = false;
      std::function<void(Arg&)> walk = [&](Arg& a) {
        if (a.is_pronoun()) {
          if (a.pronoun().id == id) {
            a.pronoun().label = label;
            changed = true;
          }
          return;
        }
        for (auto& sub : a.term().args) walk(sub);
      };
      for (auto& a : args) walk(a);
      return changed ? mk_atom(f->pred, std::move(args)) : f;
    }
    case FormulaKind::Not:
      return mk_not(label_pronoun(f->lhs, id, label));
    case FormulaKind::And:
      return mk_and(label_pronoun(f->lhs, id, label), label_pronoun(f->rhs, id, label));
    case FormulaKind::Or:
      return mk_or(label_pronoun(f->lhs, id, label), label_pronoun(f->rhs, id, label));
    case FormulaKind::Implies:
      return mk_implies(label_pronoun(f->lhs, id, label), label_pronoun(f->rhs, id, label));
    case FormulaKind::Forall:
      return mk_forall(f->var, label_pronoun(f->lhs, id, label));
    case FormulaKind::Exists:
      return mk_exists(f->var, label_pronoun(f->lhs, id, label));
    case FormulaKind::Pro:
      return mk_pro(f->var, label_pronoun(f->lhs, id, label));
  }
  return f;
}

std::set<std::string> with(std::set<std::string> V, const std::string& x) {
  V.insert(x);
  return V;
}

std::set<std::string> merged(std::set<std::string> V, const std::set<std::string>& more) {
  V.insert(more.begin(), more.end());
  return V;
}

}  // namespace

FormulaPtr annot(const std::set<std::string>& V, const FormulaPtr& f) {
  switch (f->kind) {
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Not:
      return mk_not(annot(V, f->lhs));
    case FormulaKind::And:
      return mk_and(annot(V, f->lhs), annot(merged(V, aqv(f->lhs)), f->rhs));
    case FormulaKind::Implies:
      return mk_implies(annot(V, f->lhs), annot(merged(V, aqv(f->lhs)), f->rhs));
    case FormulaKind::Or:
      return mk_or(annot(V, f->lhs), annot(V, f->rhs));
    case FormulaKind::Forall:
      return mk_forall(f->var, annot(with(V, f->var), f->lhs));
    case FormulaKind::Exists:
      return mk_exists(f->var, annot(with(V, f->var), f->lhs));
    case FormulaKind::Pro:
      return annot(V, label_pronoun(f->lhs, f->var, V));
  }
  return f;
}

namespace {

void record_pronouns(const FormulaPtr& f, AnnotateResult& out) {
  visit_atoms(f, [&](const Formula& atom) {
    std::function<void(const Arg&)> walk = [&](const Arg& a) {
      if (a.is_pronoun()) {
        const Pronoun& p = a.pronoun();
        if (!out.pronoun_labels.count(p.id)) {
          out.pronoun_order.push_back(p.id);
          out.pronoun_labels[p.id] = p.label;
          if (p.label.empty())
            out.diagnostics.push_back("pronoun '" + p.id + "' has no accessible antecedents");
        }
        return;
      }
      for (const auto& sub : a.term().args) walk(sub);
    };
    for (const auto& a : atom.args) walk(a);
  });
}

AnnotateResult annotate_list(const std::vector<FormulaPtr>& fs) {
  AnnotateResult out;
  std::set<std::string> V;
  for (const auto& f : fs) {
    FormulaPtr ann = annot(V, f);
    V = merged(std::move(V), aqv(f));
    out.formulas.push_back(ann);
    record_pronouns(ann, out);
  }
  return out;
}

}  // namespace

AnnotateResult annotate_formulas(const std::vector<FormulaPtr>& fs) {
  return annotate_list(fs);
}

AnnotateResult annotate_sequent(const Sequent& s) {
  std::vector<FormulaPtr> fs = s.premises;
  fs.push_back(mk_not(s.conclusion));
  return annotate_list(fs);
}

}  // namespace labres
