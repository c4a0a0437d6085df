#include "labres/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "labres/clausify.hpp"
#include "labres/oracle.hpp"

namespace labres {

Sequent bench_sequent(int k) {
  // exists x1 (m1(x1) & exists x2 (m2(x2) & ... mk(xk)))
  // ?u ?v like(u,v)
  // |= exists w1 (exists w2 (ma(w1) & mb(w2) & like(w1,w2)))
  auto var = [](const std::string& n) { return Arg(Term::var(n)); };
  auto pred = [&](int i, const std::string& v) {
    return mk_atom("m" + std::to_string(i), {var(v)});
  };

  FormulaPtr chain = pred(k, "x" + std::to_string(k));
  for (int i = k - 1; i >= 1; --i) {
    chain = mk_and(pred(i, "x" + std::to_string(i)),
                   mk_exists("x" + std::to_string(i + 1), chain));
  }
  FormulaPtr premise1 = mk_exists("x1", chain);

  FormulaPtr premise2 =
      mk_pro("u", mk_pro("v", mk_atom("like", {Arg(Pronoun{"u", {}}), Arg(Pronoun{"v", {}})})));

  int a = (k + 1) / 2, b = std::min(k, a + 1);
  FormulaPtr concl = mk_exists(
      "w1", mk_exists("w2", mk_and(pred(a, "w1"), mk_and(pred(b, "w2"),
                                                         mk_atom("like", {var("w1"), var("w2")})))));

  Sequent s;
  s.premises = {premise1, premise2};
  s.conclusion = concl;
  return s;
}

BenchRow run_bench(int k, const SearchLimits& limits) {
  using clock = std::chrono::steady_clock;
  BenchRow row;
  row.k = k;
  Sequent s = bench_sequent(k);

  AnnotateResult annotated = annotate_sequent(s);
  auto t0 = clock::now();
  long refuted = 0;
  std::vector<Disambiguation> ds = enumerate_disambiguations(annotated, nullptr);
  for (const auto& d : ds) {
    FormulaPtr input = oracle_refutation_input(s, annotated, d);
    if (classical_refute(input, limits) == RefuteStatus::Refuted) ++refuted;
  }
  auto t1 = clock::now();
  row.eager_instances = static_cast<long>(ds.size());
  row.eager_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();

  auto t2 = clock::now();
  ClausifyResult cr = clausify_sequent(s);
  ProofResult pr = prf_search(cr.clauses, limits);
  auto t3 = clock::now();
  row.labeled_instances = pr.binding_contexts;
  row.labeled_ms = std::chrono::duration<double, std::milli>(t3 - t2).count();
  row.both_refute = refuted > 0 && pr.status == ProofStatus::Refuted;
  return row;
}

std::string bench_header() {
  return "k\teager_instances\tlabeled_instances\teager_ms\tlabeled_ms";
}

std::string format_row(const BenchRow& row) {
  std::ostringstream os;
  os << row.k << "\t" << row.eager_instances << "\t" << row.labeled_instances << "\t"
     << row.eager_ms << "\t" << row.labeled_ms;
  return os.str();
}

}  // namespace labres
