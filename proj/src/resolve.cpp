#include "labres/resolve.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>
#include <unordered_map>

#include "labres/printer.hpp"

namespace labres {

bool operator<(const BindingOutcome& a, const BindingOutcome& b) {
  if (a.bound != b.bound) return !a.bound;
  if (a.antecedent != b.antecedent) return a.antecedent < b.antecedent;
  if (a.residual != b.residual) return a.residual < b.residual;
  return a.group < b.group;
}

bool operator==(const BindingOutcome& a, const BindingOutcome& b) {
  return a.bound == b.bound && a.antecedent == b.antecedent && a.residual == b.residual &&
         a.group == b.group;
}

StepResult resolve_step(const Clause& c, const std::vector<int>& neg_lits, const Clause& d,
                        const std::vector<int>& pos_lits,
                        const std::set<std::string>& avoid_vars) {
  StepResult out;
  std::set<std::string> avoid = avoid_vars;
  auto cv = clause_vars(c);
  avoid.insert(cv.begin(), cv.end());
  auto [dr, pi] = rename_apart_with(d, avoid);
  out.renaming = pi;

  std::vector<Literal> selected;
  for (int k : neg_lits) selected.push_back(c.lits[k]);
  for (int k : pos_lits) selected.push_back(dr.lits[k]);

  MguResult m = mgu_star(selected);
  out.status = m.status;
  if (!m.ok()) return out;
  out.mgu = std::move(m.mgu);

  std::vector<Literal> rest;
  for (int k = 0; k < static_cast<int>(c.lits.size()); ++k)
    if (std::find(neg_lits.begin(), neg_lits.end(), k) == neg_lits.end())
      rest.push_back(c.lits[k]);
  for (int k = 0; k < static_cast<int>(dr.lits.size()); ++k)
    if (std::find(pos_lits.begin(), pos_lits.end(), k) == pos_lits.end())
      rest.push_back(dr.lits[k]);
  for (auto& l : rest) l = apply_substitution(out.mgu, l);
  out.resolvent = Clause(std::move(rest));
  return out;
}

namespace {

struct Candidate {
  int i, j;
  std::vector<int> negs, poss;
  StepResult step;
  int cls;  // 0: no pronouns touched, 1: merges only, 2: binds a term
};

int classify_step(const Substitution& mgu) {
  if (mgu.pron.empty()) return 0;
  for (const auto& [id, pb] : mgu.pron)
    if (pb.image.is_term()) return 2;
  return 1;
}

void subsets_of(const std::vector<int>& xs, std::vector<std::vector<int>>& out) {
  size_t n = xs.size();
  for (size_t mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> s;
    for (size_t b = 0; b < n; ++b)
      if (mask & (1u << b)) s.push_back(xs[b]);
    out.push_back(std::move(s));
  }
}

struct SearchCtx {
  SearchLimits limits;
  SearchOptions options;
  long steps_used = 0;
  bool refuted = false;
  std::vector<ProofStep> trace;
  Substitution refut_global;
  std::set<std::string> contexts;
  // state key -> (max depth fully explored at, saturated without cutoff)
  std::unordered_map<std::string, std::pair<int, bool>> memo;
  // enumeration mode
  bool enumerate = false;
  std::map<std::string, BindingReport> found;  // keyed by printed form
  std::map<std::string, std::set<std::string>> original_labels;
};

struct State {
  std::vector<Clause> clauses;
  std::set<std::string> keys;  // clause_key of every clause, for dedup
  Substitution global_pron;
  std::set<std::string> vars;  // every proper variable name in use
};

std::string pron_key(const Substitution& s) {
  std::string out;
  for (const auto& [id, pb] : s.pron) out += id + "=" + print_arg(pb.image) + ";";
  return out;
}

std::string state_key(const State& st) {
  std::string out = pron_key(st.global_pron) + "|";
  for (const auto& k : st.keys) out += k + "\n";
  return out;
}

std::vector<Candidate> enumerate_candidates(const State& st) {
  std::vector<Candidate> out;
  int n = static_cast<int>(st.clauses.size());
  for (int i = 0; i < n; ++i) {
    // predicate -> indices of negative / positive literals
    std::map<std::string, std::vector<int>> neg_by_pred;
    for (int k = 0; k < static_cast<int>(st.clauses[i].lits.size()); ++k)
      if (!st.clauses[i].lits[k].positive) neg_by_pred[st.clauses[i].lits[k].pred].push_back(k);
    if (neg_by_pred.empty()) continue;
    for (int j = 0; j < n; ++j) {
      std::map<std::string, std::vector<int>> pos_by_pred;
      for (int k = 0; k < static_cast<int>(st.clauses[j].lits.size()); ++k)
        if (st.clauses[j].lits[k].positive) pos_by_pred[st.clauses[j].lits[k].pred].push_back(k);
      for (const auto& [pred, negs] : neg_by_pred) {
        auto it = pos_by_pred.find(pred);
        if (it == pos_by_pred.end()) continue;
        std::vector<std::vector<int>> nsubs, psubs;
        subsets_of(negs, nsubs);
        subsets_of(it->second, psubs);
        for (const auto& ns : nsubs)
          for (const auto& ps : psubs) {
            Candidate cand;
            cand.i = i;
            cand.j = j;
            cand.negs = ns;
            cand.poss = ps;
            cand.step = resolve_step(st.clauses[i], ns, st.clauses[j], ps, st.vars);
            if (!cand.step.ok()) continue;
            cand.cls = classify_step(cand.step.mgu);
            out.push_back(std::move(cand));
          }
      }
    }
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Candidate& a, const Candidate& b) { return a.cls < b.cls; });
  return out;
}

bool clause_present(const State& st, const Clause& c) {
  return st.keys.count(clause_key(c)) != 0;
}

State apply_candidate(const State& st, const Candidate& cand, const SearchOptions& opts) {
  State next = st;
  Substitution pron = cand.step.mgu.pron_part();
  if (opts.global_pronouns && !pron.empty()) {
    next.keys.clear();
    for (auto& c : next.clauses) {
      c = apply_substitution(pron, c);
      next.keys.insert(clause_key(c));
    }
    next.global_pron = compose_substitutions(next.global_pron, pron);
  }
  next.clauses.push_back(cand.step.resolvent);
  next.keys.insert(clause_key(cand.step.resolvent));
  auto rv = clause_vars(cand.step.resolvent);
  next.vars.insert(rv.begin(), rv.end());
  for (const auto& [v, img] : cand.step.renaming.proper) {
    (void)v;
    if (img.is_term()) next.vars.insert(img.term().name);
  }
  return next;
}

BindingOutcome chase(const Substitution& global, const std::string& id,
                     const std::set<std::string>& original) {
  BindingOutcome out;
  Arg cur = Arg(Pronoun{id, original});
  for (int guard = 0; guard < 64; ++guard) {
    if (cur.is_term()) break;
    auto it = global.pron.find(cur.pronoun().id);
    if (it == global.pron.end()) break;
    if (it->second.image == cur) break;
    cur = it->second.image;
  }
  if (cur.is_term()) {
    out.bound = true;
    out.antecedent = cur.term().tag;
    out.group = id;
  } else {
    out.bound = false;
    out.residual = cur.pronoun().label;
    out.group = cur.pronoun().id;
  }
  return out;
}

BindingReport make_report(const SearchCtx& ctx, const Substitution& global) {
  BindingReport rep;
  for (const auto& [id, label] : ctx.original_labels)
    rep.emplace(id, chase(global, id, label));
  return rep;
}

bool report_has_empty_residual(const BindingReport& r) {
  for (const auto& [id, o] : r)
    if (!o.bound && o.residual.empty()) return true;
  return false;
}

struct SubtreeResult {
  bool cutoff = false;  // some branch was stopped by depth or budget
};

SubtreeResult dfs(SearchCtx& ctx, State& st, int depth_left) {
  std::string key = state_key(st);
  auto it = ctx.memo.find(key);
  if (it != ctx.memo.end()) {
    if (it->second.second) return {false};                    // fully saturated below
    if (it->second.first >= depth_left) return {true};        // explored at least this deep
  }

  std::vector<Candidate> cands = enumerate_candidates(st);
  std::vector<Candidate> viable;
  for (auto& cand : cands) {
    if (cand.step.resolvent.empty() || !clause_present(st, cand.step.resolvent))
      viable.push_back(std::move(cand));
  }
  if (viable.empty()) {
    auto& e = ctx.memo[key];
    e.first = std::max(e.first, depth_left);
    e.second = true;
    return {false};
  }

  SubtreeResult res;
  for (const auto& cand : viable) {
    if (ctx.steps_used >= ctx.limits.max_steps) {
      res.cutoff = true;
      break;
    }
    ++ctx.steps_used;

    if (cand.step.resolvent.empty()) {
      Substitution final_global = st.global_pron;
      if (ctx.options.global_pronouns && cand.step.mgu.has_pron())
        final_global = compose_substitutions(final_global, cand.step.mgu.pron_part());
      ProofStep step;
      step.neg_parent = cand.i;
      step.pos_parent = cand.j;
      step.neg_lits = cand.negs;
      step.pos_lits = cand.poss;
      step.renaming = cand.step.renaming;
      step.mgu = cand.step.mgu;
      step.resolvent_id = static_cast<int>(st.clauses.size());
      step.resolvent = cand.step.resolvent;
      if (ctx.enumerate) {
        BindingReport rep = make_report(ctx, final_global);
        if (!report_has_empty_residual(rep)) ctx.found.emplace(print_report(rep), rep);
        continue;  // backtrack past the refutation
      }
      ctx.refuted = true;
      ctx.trace.push_back(std::move(step));
      ctx.refut_global = std::move(final_global);
      return res;
    }

    if (depth_left == 0) {
      res.cutoff = true;
      continue;
    }

    State next = apply_candidate(st, cand, ctx.options);
    ctx.contexts.insert(pron_key(next.global_pron));

    SubtreeResult sub = dfs(ctx, next, depth_left - 1);
    if (ctx.refuted) {
      ProofStep step;
      step.neg_parent = cand.i;
      step.pos_parent = cand.j;
      step.neg_lits = cand.negs;
      step.pos_lits = cand.poss;
      step.renaming = cand.step.renaming;
      step.mgu = cand.step.mgu;
      step.resolvent_id = static_cast<int>(st.clauses.size());
      step.resolvent = cand.step.resolvent;
      ctx.trace.push_back(std::move(step));
      return res;
    }
    res.cutoff |= sub.cutoff;
  }

  auto& entry = ctx.memo[key];
  if (!res.cutoff) {
    entry.second = true;
    entry.first = std::max(entry.first, depth_left);
  } else {
    entry.first = std::max(entry.first, depth_left);
  }
  return res;
}

State initial_state(const std::vector<Clause>& clauses) {
  State st;
  st.clauses = clauses;
  for (const auto& c : clauses) {
    st.keys.insert(clause_key(c));
    auto cv = clause_vars(c);
    st.vars.insert(cv.begin(), cv.end());
  }
  return st;
}

void collect_original_labels(const std::vector<Clause>& clauses, SearchCtx& ctx) {
  for (const auto& c : clauses)
    for (const auto& l : c.lits)
      for (const auto& a : l.args) {
        std::function<void(const Arg&)> walk = [&](const Arg& arg) {
          if (arg.is_pronoun()) {
            ctx.original_labels.emplace(arg.pronoun().id, arg.pronoun().label);
            return;
          }
          for (const auto& sub : arg.term().args) walk(sub);
        };
        walk(a);
      }
}

}  // namespace

ProofResult prf_search(const std::vector<Clause>& clauses, const SearchLimits& limits,
                       const SearchOptions& options) {
  ProofResult out;
  out.clauses = clauses;
  SearchCtx ctx;
  ctx.limits = limits;
  ctx.options = options;
  collect_original_labels(clauses, ctx);

  bool any_cutoff = false;
  for (int depth = 1; depth <= limits.max_depth; ++depth) {
    State st = initial_state(clauses);
    ctx.contexts.insert(pron_key(st.global_pron));
    SubtreeResult r = dfs(ctx, st, depth);
    if (ctx.refuted) {
      std::reverse(ctx.trace.begin(), ctx.trace.end());
      out.status = ProofStatus::Refuted;
      out.trace = std::move(ctx.trace);
      out.report = make_report(ctx, ctx.refut_global);
      out.steps_used = ctx.steps_used;
      out.binding_contexts = static_cast<long>(ctx.contexts.size());
      return out;
    }
    any_cutoff = r.cutoff;
    if (!r.cutoff) break;  // choice space exhausted
    if (ctx.steps_used >= limits.max_steps) break;
  }
  out.status = any_cutoff ? ProofStatus::DepthExhausted : ProofStatus::Saturated;
  out.steps_used = ctx.steps_used;
  out.binding_contexts = static_cast<long>(ctx.contexts.size());
  return out;
}

std::vector<BindingReport> enumerate_bindings(const std::vector<Clause>& clauses,
                                              const SearchLimits& limits) {
  SearchCtx ctx;
  ctx.limits = limits;
  ctx.enumerate = true;
  collect_original_labels(clauses, ctx);
  State st = initial_state(clauses);
  dfs(ctx, st, limits.max_depth);
  std::vector<BindingReport> out;
  for (auto& [key, rep] : ctx.found) out.push_back(rep);
  return out;
}

std::vector<std::map<std::string, std::string>> expand_report(const BindingReport& r) {
  // Merge groups co-vary: each group picks one antecedent from its residual.
  std::map<std::string, std::vector<std::string>> group_members;
  std::map<std::string, std::set<std::string>> group_residual;
  std::map<std::string, std::string> fixed;
  for (const auto& [id, o] : r) {
    if (o.bound) {
      fixed[id] = o.antecedent;
    } else {
      group_members[o.group].push_back(id);
      group_residual[o.group] = o.residual;
    }
  }
  std::vector<std::map<std::string, std::string>> out{fixed};
  for (const auto& [group, members] : group_members) {
    const auto& choices = group_residual[group];
    std::vector<std::map<std::string, std::string>> next;
    for (const auto& partial : out)
      for (const auto& choice : choices) {
        auto extended = partial;
        for (const auto& m : members) extended[m] = choice;
        next.push_back(std::move(extended));
      }
    out = std::move(next);
  }
  return out;
}

bool replay_trace(const std::vector<Clause>& initial, const std::vector<ProofStep>& trace,
                  const SearchOptions& options) {
  std::vector<Clause> clauses = initial;
  for (const auto& step : trace) {
    if (step.neg_parent < 0 || step.neg_parent >= static_cast<int>(clauses.size())) return false;
    if (step.pos_parent < 0 || step.pos_parent >= static_cast<int>(clauses.size())) return false;
    const Clause& c = clauses[step.neg_parent];
    Clause dr = apply_substitution(step.renaming, clauses[step.pos_parent]);

    // The recorded unifier must make all selected atoms identical.
    std::vector<Literal> selected;
    for (int k : step.neg_lits) {
      if (k >= static_cast<int>(c.lits.size()) || c.lits[k].positive) return false;
      selected.push_back(c.lits[k]);
    }
    for (int k : step.pos_lits) {
      if (k >= static_cast<int>(dr.lits.size()) || !dr.lits[k].positive) return false;
      selected.push_back(dr.lits[k]);
    }
    std::optional<Literal> first;
    for (auto l : selected) {
      l.positive = true;
      Literal after = apply_substitution(step.mgu, l);
      if (!first)
        first = after;
      else if (!(*first == after))
        return false;
    }

    std::vector<Literal> rest;
    for (int k = 0; k < static_cast<int>(c.lits.size()); ++k)
      if (std::find(step.neg_lits.begin(), step.neg_lits.end(), k) == step.neg_lits.end())
        rest.push_back(c.lits[k]);
    for (int k = 0; k < static_cast<int>(dr.lits.size()); ++k)
      if (std::find(step.pos_lits.begin(), step.pos_lits.end(), k) == step.pos_lits.end())
        rest.push_back(dr.lits[k]);
    for (auto& l : rest) l = apply_substitution(step.mgu, l);
    Clause resolvent(std::move(rest));
    if (resolvent != step.resolvent) return false;
    if (static_cast<int>(clauses.size()) != step.resolvent_id) return false;

    clauses.push_back(resolvent);
    if (options.global_pronouns && step.mgu.has_pron()) {
      Substitution pron = step.mgu.pron_part();
      for (auto& cl : clauses) cl = apply_substitution(pron, cl);
    }
  }
  return !trace.empty() && trace.back().resolvent.empty();
}

std::string print_report(const BindingReport& r) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [id, o] : r) {
    if (!first) os << ", ";
    first = false;
    if (o.bound) {
      os << id << " -> " << o.antecedent;
    } else {
      os << id << " in {";
      bool f2 = true;
      for (const auto& n : o.residual) {
        if (!f2) os << ",";
        os << n;
        f2 = false;
      }
      os << "}";
      if (o.group != id) os << " (=" << o.group << ")";
    }
  }
  if (first) os << "(no pronouns)";
  return os.str();
}

}  // namespace labres
