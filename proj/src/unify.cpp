#include "labres/unify.hpp"

#include <algorithm>
#include <stdexcept>

namespace labres {

namespace {

enum class Cls { Var, Pron, Fun };

Cls classify(const Arg& a) {
  if (a.is_pronoun()) return Cls::Pron;
  return a.term().is_var() ? Cls::Var : Cls::Fun;
}

// Occurrence by identity: pronoun occurrences match by id, so elimination
// rewrites every occurrence of the pronoun.
bool occurs_in(const Arg& what, const Arg& in) {
  if (what.is_pronoun()) return occurs_pronoun(what.pronoun().id, in);
  if (what.term().is_var()) return occurs_var(what.term().name, in);
  return false;
}

// Occurrence by value: a label-shrunk pronoun does not count as an
// occurrence of its wider-labeled original, so {V:v ~ V':v} is solved.
bool occurs_value(const Arg& what, const Arg& in) {
  if (what == in) return true;
  if (in.is_term())
    for (const auto& sub : in.term().args)
      if (occurs_value(what, sub)) return true;
  return false;
}

bool occurs_elsewhere(const EquationSet& E, size_t skip, const Arg& what) {
  for (size_t i = 0; i < E.size(); ++i) {
    if (i == skip) continue;
    if (occurs_in(what, E[i].lhs) || occurs_in(what, E[i].rhs)) return true;
  }
  return false;
}

void substitute_others(EquationSet& E, size_t skip, const Substitution& s) {
  for (size_t i = 0; i < E.size(); ++i) {
    if (i == skip) continue;
    E[i].lhs = apply_substitution(s, E[i].lhs);
    E[i].rhs = apply_substitution(s, E[i].rhs);
  }
}

std::set<std::string> intersect(const std::set<std::string>& a, const std::set<std::string>& b) {
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(out, out.begin()));
  return out;
}

std::set<std::string> merged_labels(std::set<std::string> a, const std::set<std::string>& b) {
  a.insert(b.begin(), b.end());
  return a;
}

Substitution single_var(const std::string& name, const Arg& img) {
  Substitution s;
  s.proper.emplace(name, img);
  return s;
}

Substitution single_pron(const std::string& id, const std::set<std::string>& label,
                         const Arg& img) {
  Substitution s;
  s.pron.emplace(id, PronBinding{label, img});
  return s;
}

}  // namespace

UnifyResult unify_star(EquationSet E, long step_limit) {
  UnifyResult res;
  auto step = [&]() -> bool {
    ++res.stats.steps;
    return step_limit >= 0 && res.stats.steps > step_limit;
  };

  for (;;) {
    bool acted = false;
    for (size_t i = 0; i < E.size() && !acted; ++i) {
      Arg& l = E[i].lhs;
      Arg& r = E[i].rhs;

      if (l == r) {  // trivial equation, also covers identical pronoun pairs
        if (step()) { res.status = UnifyStatus::StepLimit; return res; }
        E.erase(E.begin() + i);
        acted = true;
        break;
      }

      Cls cl = classify(l), cr = classify(r);

      // Orient: variables to the left of anything else, pronouns to the
      // left of function terms.
      if ((cr == Cls::Var && cl != Cls::Var) || (cr == Cls::Pron && cl == Cls::Fun)) {
        if (step()) { res.status = UnifyStatus::StepLimit; return res; }
        std::swap(l, r);
        acted = true;
        break;
      }

      if (cl == Cls::Fun && cr == Cls::Fun) {
        const Term &ft = l.term(), &gt = r.term();
        if (ft.name != gt.name || ft.args.size() != gt.args.size()) {
          res.status = UnifyStatus::Clash;
          return res;
        }
        if (step()) { res.status = UnifyStatus::StepLimit; return res; }
        EquationSet pairs;
        for (size_t k = 0; k < ft.args.size(); ++k)
          pairs.push_back({ft.args[k], gt.args[k]});
        E.erase(E.begin() + i);
        E.insert(E.begin() + i, pairs.begin(), pairs.end());
        acted = true;
        break;
      }

      if (cl == Cls::Var) {
        const std::string& x = l.term().name;
        if (r.is_term() && occurs_var(x, r.term())) {
          res.status = UnifyStatus::OccursCheck;
          return res;
        }
        if (occurs_elsewhere(E, i, l)) {
          if (step()) { res.status = UnifyStatus::StepLimit; return res; }
          substitute_others(E, i, single_var(x, r));
          acted = true;
          break;
        }
        continue;  // solved-shaped
      }

      if (cl == Cls::Pron && cr == Cls::Fun) {
        const Pronoun& p = l.pronoun();
        if (occurs_pronoun(p.id, r.term())) {
          res.status = UnifyStatus::OccursCheck;
          return res;
        }
        if (!p.label.count(r.term().tag)) {
          res.status = UnifyStatus::Inaccessible;
          return res;
        }
        if (occurs_elsewhere(E, i, l)) {
          if (step()) { res.status = UnifyStatus::StepLimit; return res; }
          substitute_others(E, i, single_pron(p.id, p.label, r));
          acted = true;
          break;
        }
        continue;
      }

      if (cl == Cls::Pron && cr == Cls::Pron) {
        const Pronoun& pu = l.pronoun();
        const Pronoun& pv = r.pronoun();
        if (pu.id == pv.id) {
          // Same pronoun under diverging labels: trivially equal, but the
          // labels are reconciled to their intersection throughout.
          if (step()) { res.status = UnifyStatus::StepLimit; return res; }
          Arg shrunk = Arg(Pronoun{pu.id, intersect(pu.label, pv.label)});
          Substitution s =
              single_pron(pu.id, merged_labels(pu.label, pv.label), shrunk);
          substitute_others(E, i, s);
          E[i].lhs = shrunk;
          E[i].rhs = shrunk;
          acted = true;
          break;
        }
        std::set<std::string> common = intersect(pu.label, pv.label);
        if (common.empty()) {
          res.status = UnifyStatus::DisjointLabels;
          return res;
        }
        if (common == pv.label) {
          // rhs label already minimal: bind lhs pronoun to rhs.
          if (occurs_elsewhere(E, i, l)) {
            if (step()) { res.status = UnifyStatus::StepLimit; return res; }
            substitute_others(E, i, single_pron(pu.id, pu.label, r));
            acted = true;
            break;
          }
          continue;
        }
        if (common == pu.label) {
          // Symmetric case: orient the smaller-label pronoun to the right.
          if (step()) { res.status = UnifyStatus::StepLimit; return res; }
          std::swap(l, r);
          acted = true;
          break;
        }
        // Proper merge: both pronouns identified at the label intersection.
        if (step()) { res.status = UnifyStatus::StepLimit; return res; }
        res.stats.merges.push_back({pu.label, pv.label, common});
        Arg merged = Arg(Pronoun{pv.id, common});
        Substitution s;
        s.pron.emplace(pu.id, PronBinding{pu.label, merged});
        s.pron.emplace(pv.id, PronBinding{pv.label, merged});
        Equation left_bind{l, merged};
        Equation right_bind{r, merged};
        substitute_others(E, i, s);
        E.erase(E.begin() + i);
        E.insert(E.begin() + i, {left_bind, right_bind});
        acted = true;
        break;
      }

      // Var on the left with a pronoun right side and no other occurrence,
      // or any remaining solved-shaped equation: nothing to do.
    }
    if (!acted) break;
  }
  res.solved = std::move(E);
  res.status = UnifyStatus::Solved;
  return res;
}

bool is_solved_set(const EquationSet& E) {
  for (size_t i = 0; i < E.size(); ++i) {
    Cls c = classify(E[i].lhs);
    if (c == Cls::Fun) return false;
    for (size_t j = 0; j < E.size(); ++j) {
      if (i != j && E[i].lhs == E[j].lhs) return false;
      if (occurs_value(E[i].lhs, E[j].rhs)) return false;
    }
  }
  return true;
}

Substitution solved_to_substitution(const EquationSet& E) {
  if (!is_solved_set(E)) throw std::logic_error("solved_to_substitution: set not solved");
  Substitution out;
  for (const auto& eq : E) {
    if (eq.lhs.is_pronoun()) {
      const Pronoun& p = eq.lhs.pronoun();
      if (!out.pron.emplace(p.id, PronBinding{p.label, eq.rhs}).second)
        throw std::logic_error("solved_to_substitution: duplicate pronoun binding");
    } else {
      if (!out.proper.emplace(eq.lhs.term().name, eq.rhs).second)
        throw std::logic_error("solved_to_substitution: duplicate variable binding");
    }
  }
  return out;
}

MguResult mgu_star(const std::vector<Literal>& lits) {
  MguResult out;
  if (lits.size() < 2) return out;
  for (size_t i = 0; i + 1 < lits.size(); ++i) {
    if (lits[i].pred != lits[i + 1].pred || lits[i].args.size() != lits[i + 1].args.size())
      throw std::logic_error("mgu_star: literals differ in predicate or arity");
  }
  EquationSet E;
  for (size_t i = 0; i + 1 < lits.size(); ++i)
    for (size_t k = 0; k < lits[i].args.size(); ++k)
      E.push_back({lits[i].args[k], lits[i + 1].args[k]});
  UnifyResult u = unify_star(std::move(E));
  out.status = u.status;
  out.stats = std::move(u.stats);
  if (u.ok()) out.mgu = solved_to_substitution(u.solved);
  return out;
}

bool is_unifier_star(const Substitution& sigma, const EquationSet& E) {
  // Label legality of the substitution itself (Def 3 conditions 2 and 3).
  for (const auto& [id, pb] : sigma.pron) {
    if (pb.image.is_term()) {
      if (!pb.label.count(pb.image.term().tag)) return false;
    } else if (pb.image.pronoun().id != id || pb.image.pronoun().label != pb.label) {
      const auto& il = pb.image.pronoun().label;
      if (!std::includes(pb.label.begin(), pb.label.end(), il.begin(), il.end())) return false;
    }
  }
  try {
    for (const auto& eq : E) {
      if (apply_substitution(sigma, eq.lhs) != apply_substitution(sigma, eq.rhs)) return false;
    }
  } catch (const SubstitutionError&) {
    return false;
  }
  return true;
}

}  // namespace labres
