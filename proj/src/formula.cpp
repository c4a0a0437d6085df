#include "labres/formula.hpp"

#include <map>

namespace labres {

static FormulaPtr node(Formula f) { return std::make_shared<const Formula>(std::move(f)); }

FormulaPtr mk_atom(std::string pred, std::vector<Arg> args) {
  Formula f;
  f.kind = FormulaKind::Atom;
  f.pred = std::move(pred);
  f.args = std::move(args);
  return node(std::move(f));
}

FormulaPtr mk_not(FormulaPtr c) {
  Formula f;
  f.kind = FormulaKind::Not;
  f.lhs = std::move(c);
  return node(std::move(f));
}

static FormulaPtr binary(FormulaKind k, FormulaPtr a, FormulaPtr b) {
  Formula f;
  f.kind = k;
  f.lhs = std::move(a);
  f.rhs = std::move(b);
  return node(std::move(f));
}

FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::And, std::move(a), std::move(b)); }
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) { return binary(FormulaKind::Or, std::move(a), std::move(b)); }
FormulaPtr mk_implies(FormulaPtr a, FormulaPtr b) {
  return binary(FormulaKind::Implies, std::move(a), std::move(b));
}

static FormulaPtr binder(FormulaKind k, std::string var, FormulaPtr body) {
  Formula f;
  f.kind = k;
  f.var = std::move(var);
  f.lhs = std::move(body);
  return node(std::move(f));
}

FormulaPtr mk_forall(std::string var, FormulaPtr body) {
  return binder(FormulaKind::Forall, std::move(var), std::move(body));
}
FormulaPtr mk_exists(std::string var, FormulaPtr body) {
  return binder(FormulaKind::Exists, std::move(var), std::move(body));
}
FormulaPtr mk_pro(std::string id, FormulaPtr body) {
  return binder(FormulaKind::Pro, std::move(id), std::move(body));
}

FormulaPtr mk_and_chain(const std::vector<FormulaPtr>& fs) {
  FormulaPtr acc = fs.back();
  for (size_t i = fs.size() - 1; i-- > 0;) acc = mk_and(fs[i], acc);
  return acc;
}

bool contains_pro(const FormulaPtr& f) {
  if (!f) return false;
  if (f->kind == FormulaKind::Pro) return true;
  return contains_pro(f->lhs) || contains_pro(f->rhs);
}

void collect_binders(const FormulaPtr& f, std::vector<std::string>& out) {
  if (!f) return;
  if (f->kind == FormulaKind::Forall || f->kind == FormulaKind::Exists) out.push_back(f->var);
  collect_binders(f->lhs, out);
  collect_binders(f->rhs, out);
}

static void collect_constants_arg(const Arg& a, std::set<std::string>& out) {
  if (a.is_pronoun()) return;
  const Term& t = a.term();
  if (t.is_fun() && t.args.empty()) out.insert(t.name);
  for (const auto& sub : t.args) collect_constants_arg(sub, out);
}

void collect_constants(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == FormulaKind::Atom)
    for (const auto& a : f->args) collect_constants_arg(a, out);
  collect_constants(f->lhs, out);
  collect_constants(f->rhs, out);
}

void collect_pronoun_ids(const FormulaPtr& f, std::set<std::string>& out) {
  if (!f) return;
  if (f->kind == FormulaKind::Pro) out.insert(f->var);
  if (f->kind == FormulaKind::Atom)
    for (const auto& a : f->args) collect_pronoun_ids(a, out);
  collect_pronoun_ids(f->lhs, out);
  collect_pronoun_ids(f->rhs, out);
}

void visit_atoms(const FormulaPtr& f, const std::function<void(const Formula&)>& fn) {
  if (!f) return;
  if (f->kind == FormulaKind::Atom) fn(*f);
  visit_atoms(f->lhs, fn);
  visit_atoms(f->rhs, fn);
}

namespace {

struct AlphaCtx {
  std::map<std::string, std::string> vmap;   // binder names, a -> b
  std::map<std::string, std::string> pmap;   // pronoun ids, a -> b
};

bool names_match(const std::map<std::string, std::string>& m, const std::string& a,
                 const std::string& b) {
  auto it = m.find(a);
  if (it != m.end()) return it->second == b;
  return a == b;  // free names must match literally
}

bool labels_match(const AlphaCtx& ctx, const std::set<std::string>& a,
                  const std::set<std::string>& b) {
  if (a.size() != b.size()) return false;
  std::set<std::string> mapped;
  for (const auto& n : a) {
    auto it = ctx.vmap.find(n);
    mapped.insert(it != ctx.vmap.end() ? it->second : n);
  }
  return mapped == b;
}

bool alpha_term(const AlphaCtx& ctx, const Term& a, const Term& b);

bool alpha_arg(const AlphaCtx& ctx, const Arg& a, const Arg& b) {
  if (a.is_term() != b.is_term()) return false;
  if (a.is_term()) return alpha_term(ctx, a.term(), b.term());
  const Pronoun &pa = a.pronoun(), &pb = b.pronoun();
  if (!names_match(ctx.pmap, pa.id, pb.id)) return false;
  return labels_match(ctx, pa.label, pb.label);
}

bool alpha_term(const AlphaCtx& ctx, const Term& a, const Term& b) {
  if (a.kind != b.kind || a.args.size() != b.args.size()) return false;
  if (a.is_var()) {
    if (!names_match(ctx.vmap, a.name, b.name)) return false;
    return names_match(ctx.vmap, a.tag, b.tag);
  }
  if (a.name != b.name) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!alpha_arg(ctx, a.args[i], b.args[i])) return false;
  return true;
}

void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == FormulaKind::And) {
    flatten_and(f->lhs, out);
    flatten_and(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

bool alpha_rec(AlphaCtx ctx, const FormulaPtr& a, const FormulaPtr& b, bool flat);

bool alpha_children(const AlphaCtx& ctx, const FormulaPtr& a, const FormulaPtr& b, bool flat) {
  if (flat && a->kind == FormulaKind::And) {
    std::vector<FormulaPtr> as, bs;
    flatten_and(a, as);
    flatten_and(b, bs);
    if (as.size() != bs.size()) return false;
    for (size_t i = 0; i < as.size(); ++i)
      if (!alpha_rec(ctx, as[i], bs[i], flat)) return false;
    return true;
  }
  if (a->lhs && !alpha_rec(ctx, a->lhs, b->lhs, flat)) return false;
  if (a->rhs && !alpha_rec(ctx, a->rhs, b->rhs, flat)) return false;
  return true;
}

bool alpha_rec(AlphaCtx ctx, const FormulaPtr& a, const FormulaPtr& b, bool flat) {
  if (!a || !b) return a == b;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case FormulaKind::Atom: {
      if (a->pred != b->pred || a->args.size() != b->args.size()) return false;
      for (size_t i = 0; i < a->args.size(); ++i)
        if (!alpha_arg(ctx, a->args[i], b->args[i])) return false;
      return true;
    }
    case FormulaKind::Forall:
    case FormulaKind::Exists:
      ctx.vmap[a->var] = b->var;
      return alpha_rec(ctx, a->lhs, b->lhs, flat);
    case FormulaKind::Pro:
      ctx.pmap[a->var] = b->var;
      return alpha_rec(ctx, a->lhs, b->lhs, flat);
    default:
      return alpha_children(ctx, a, b, flat);
  }
}

}  // namespace

bool alpha_equal(const FormulaPtr& a, const FormulaPtr& b, bool flatten_conj) {
  return alpha_rec(AlphaCtx{}, a, b, flatten_conj);
}

std::vector<std::string> check_binder_disjointness(const Sequent& s) {
  std::vector<FormulaPtr> all = s.premises;
  if (s.conclusion) all.push_back(s.conclusion);
  std::vector<std::string> binders;
  std::set<std::string> constants;
  for (const auto& f : all) {
    collect_binders(f, binders);
    collect_constants(f, constants);
  }
  std::vector<std::string> violations;
  std::set<std::string> seen, reported;
  for (const auto& n : binders) {
    bool dup = !seen.insert(n).second;
    if ((dup || constants.count(n)) && reported.insert(n).second) violations.push_back(n);
  }
  return violations;
}

}  // namespace labres
