#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "labres/printer.hpp"
#include "labres/substitution.hpp"

using namespace labres;

namespace {

Arg var(const std::string& n) { return Arg(Term::var(n)); }
Arg var(const std::string& n, const std::string& tag) { return Arg(Term::var(n, tag)); }
Arg cst(const std::string& n) { return Arg(Term::constant(n)); }
Arg fn(const std::string& n, std::vector<Arg> args, const std::string& tag) {
  return Arg(Term::fun(n, std::move(args), tag));
}
Arg pron(const std::string& id, std::set<std::string> label) {
  return Arg(Pronoun{id, std::move(label)});
}

Literal lit(bool pos, const std::string& pred, std::vector<Arg> args) {
  return Literal{pos, pred, std::move(args)};
}

}  // namespace

TEST_CASE("apply: single variable replacement") {
  // [x -> f^y] applied to p(x^x) is p(f^y)
  Substitution s;
  s.proper.emplace("x", fn("f", {}, "y"));
  Literal before = lit(true, "p", {var("x")});
  Literal after = apply_substitution(s, before);
  CHECK(after == lit(true, "p", {fn("f", {}, "y")}));
}

TEST_CASE("apply: empty substitution is the identity on clauses") {
  Clause c({lit(true, "p", {var("x")}), lit(false, "q", {cst("b"), pron("u", {"x"})})});
  CHECK(apply_substitution(Substitution{}, c) == c);
}

TEST_CASE("apply: pronoun-to-pronoun with label shrink") {
  // [{b,x}:u -> {b}:v] applied to h(f^y, {b,x}:u) gives h(f^y, {b}:v)
  Substitution s;
  s.pron.emplace("u", PronBinding{{"b", "x"}, pron("v", {"b"})});
  Literal before = lit(true, "h", {fn("f", {}, "y"), pron("u", {"b", "x"})});
  Literal after = apply_substitution(s, before);
  CHECK(after == lit(true, "h", {fn("f", {}, "y"), pron("v", {"b"})}));
}

TEST_CASE("apply: rejects a pronoun image tagged outside the label") {
  Substitution s;
  s.pron.emplace("u", PronBinding{{"x", "y"}, fn("g", {}, "z")});
  Literal l = lit(true, "p", {pron("u", {"x", "y"})});
  CHECK_THROWS_AS(apply_substitution(s, l), SubstitutionError);
}

TEST_CASE("apply is idempotent on normalized substitutions") {
  Substitution a;
  a.proper.emplace("x", var("z"));
  Substitution b;
  b.proper.emplace("z", fn("f", {}, "y"));
  Substitution s = compose_substitutions(a, b);
  Clause c({lit(true, "p", {var("x"), var("z"), fn("g", {var("x")}, "w")})});
  Clause once = apply_substitution(s, c);
  CHECK(apply_substitution(s, once) == once);
}

TEST_CASE("compose: identity on the left") {
  Substitution s;
  s.proper.emplace("x", fn("f", {}, "y"));
  Substitution c = compose_substitutions(Substitution{}, s);
  CHECK(c.proper.size() == 1);
  CHECK(apply_substitution(c, var("x")) == fn("f", {}, "y"));
}

TEST_CASE("compose: chained variable replacement") {
  Substitution s1, s2;
  s1.proper.emplace("x", var("z"));
  s2.proper.emplace("z", fn("f", {}, "y"));
  Substitution c = compose_substitutions(s1, s2);
  CHECK(apply_substitution(c, var("x")) == fn("f", {}, "y"));
}

TEST_CASE("compose: pronoun chain lands on an accessible constant") {
  // compose([{b,x}:u -> {b}:v], [{b}:v -> b^b]) maps u to b^b; legal since
  // b is in {b,x}.
  Substitution s1, s2;
  s1.pron.emplace("u", PronBinding{{"b", "x"}, pron("v", {"b"})});
  s2.pron.emplace("v", PronBinding{{"b"}, cst("b")});
  Substitution c = compose_substitutions(s1, s2);
  CHECK(apply_substitution(c, pron("u", {"b", "x"})) == cst("b"));
  CHECK(apply_substitution(c, pron("v", {"b"})) == cst("b"));
}

TEST_CASE("compose: rejects label-growing pronoun chains") {
  Substitution s1, s2;
  s1.pron.emplace("u", PronBinding{{"b"}, pron("v", {"b"})});
  s2.pron.emplace("v", PronBinding{{"b"}, fn("g", {}, "x")});  // x not in {b}
  CHECK_THROWS_AS(compose_substitutions(s1, s2), SubstitutionError);
}

TEST_CASE("labels never grow along substitution chains") {
  // Each application of a merge-style substitution shrinks or keeps labels.
  Substitution s;
  s.pron.emplace("u", PronBinding{{"a", "b", "c"}, pron("v", {"a", "b"})});
  s.pron.emplace("v", PronBinding{{"a", "b"}, pron("v", {"a", "b"})});
  Arg cur = pron("u", {"a", "b", "c"});
  size_t prev = cur.pronoun().label.size();
  for (int i = 0; i < 4; ++i) {
    cur = apply_substitution(s, cur);
    CHECK(cur.pronoun().label.size() <= prev);
    prev = cur.pronoun().label.size();
  }
}

TEST_CASE("rename_apart: fresh name keeps the tag") {
  Clause c({lit(true, "p", {var("x")})});
  Clause r = rename_apart(c, {"x"});
  REQUIRE(r.lits.size() == 1);
  const Term& t = r.lits[0].args[0].term();
  CHECK(t.name == "x1");
  CHECK(t.tag == "x");
}

TEST_CASE("rename_apart: clause without proper variables is unchanged") {
  Clause c({lit(true, "p", {cst("b")}), lit(false, "q", {})});
  CHECK(rename_apart(c, {"x", "y"}) == c);
}

TEST_CASE("rename_apart: pronouns are never renamed") {
  // Shared pronouns across clauses stay shared; only proper variables move.
  Clause c({lit(false, "a", {pron("z", {"x", "y"})}), lit(true, "b", {})});
  Clause r = rename_apart(c, {"x", "y"});
  CHECK(r == c);
}

TEST_CASE("rename_apart avoids collisions and preserves meaning up to renaming") {
  Clause c({lit(true, "p", {var("x"), var("x1")})});
  Clause r = rename_apart(c, {"x", "x1"});
  auto vars = clause_vars(r);
  CHECK(vars.count("x") == 0);
  CHECK(vars.count("x1") == 0);
  CHECK(clause_key(r) == clause_key(c));  // alpha-equivalent
}

TEST_CASE("binder disjointness: reuse across premises and conclusion") {
  Sequent s;
  s.premises = {mk_exists("x", mk_atom("p", {var("x")}))};
  s.conclusion = mk_exists("x", mk_atom("q", {var("x")}));
  auto v = check_binder_disjointness(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "x");
}

TEST_CASE("binder disjointness: distinct binders pass") {
  Sequent s;
  s.premises = {mk_exists("x", mk_atom("p", {var("x")}))};
  s.conclusion = mk_exists("y", mk_atom("q", {var("y")}));
  CHECK(check_binder_disjointness(s).empty());
}

TEST_CASE("binder disjointness: reuse inside one formula") {
  Sequent s;
  s.premises = {};
  s.conclusion = mk_and(mk_exists("x", mk_atom("p", {var("x")})),
                        mk_exists("x", mk_atom("q", {var("x")})));
  auto v = check_binder_disjointness(s);
  REQUIRE(v.size() == 1);
  CHECK(v[0] == "x");
}

TEST_CASE("clause literals are kept sorted and duplicate-free") {
  Literal a = lit(false, "f", {var("x")});
  Clause c({a, lit(true, "b", {var("x")}), a});
  CHECK(c.lits.size() == 2);
  CHECK(c.lits[0].pred == "b");
  CHECK(c.lits[1].pred == "f");
}
