#include "labres/parser.hpp"

#include <map>
#include <set>
#include <vector>

namespace labres {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, And, Or, Implies, Not, Question, Forall, Exists, Turnstile, End };

struct Token {
  Tok kind;
  std::string text;
  SourceSpan span;
};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  explicit Lexer(const std::string& s) : src(s) {}

  // Unicode connectives are accepted as aliases for the ASCII keywords.
  bool match_utf8(const char* pat, Tok kind, std::vector<Token>& out) {
    size_t n = std::char_traits<char>::length(pat);
    if (src.compare(pos, n, pat) != 0) return false;
    Tok k = kind;
    out.push_back({k, pat, {pos, pos + n}});
    pos += n;
    return true;
  }

  std::vector<Token> run() {
    std::vector<Token> out;
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
        ++pos;
        continue;
      }
      if (c == '#') {  // comment to end of line
        while (pos < src.size() && src[pos] != '\n') ++pos;
        continue;
      }
      size_t start = pos;
      if (c == '(') { out.push_back({Tok::LParen, "(", {pos, pos + 1}}); ++pos; continue; }
      if (c == ')') { out.push_back({Tok::RParen, ")", {pos, pos + 1}}); ++pos; continue; }
      if (c == ',') { out.push_back({Tok::Comma, ",", {pos, pos + 1}}); ++pos; continue; }
      if (c == '&') { out.push_back({Tok::And, "&", {pos, pos + 1}}); ++pos; continue; }
      if (c == '~') { out.push_back({Tok::Not, "~", {pos, pos + 1}}); ++pos; continue; }
      if (c == '?') { out.push_back({Tok::Question, "?", {pos, pos + 1}}); ++pos; continue; }
      if (c == '-' && pos + 1 < src.size() && src[pos + 1] == '>') {
        out.push_back({Tok::Implies, "->", {pos, pos + 2}});
        pos += 2;
        continue;
      }
      if (c == '|') {
        if (pos + 1 < src.size() && src[pos + 1] == '=') {
          out.push_back({Tok::Turnstile, "|=", {pos, pos + 2}});
          pos += 2;
        } else {
          out.push_back({Tok::Or, "|", {pos, pos + 1}});
          ++pos;
        }
        continue;
      }
      if (match_utf8("∀", Tok::Forall, out)) continue;   // forall
      if (match_utf8("∃", Tok::Exists, out)) continue;   // exists
      if (match_utf8("∧", Tok::And, out)) continue;      // and
      if (match_utf8("∨", Tok::Or, out)) continue;       // or
      if (match_utf8("→", Tok::Implies, out)) continue;  // arrow
      if (match_utf8("¬", Tok::Not, out)) continue;      // negation
      if (match_utf8("⊨", Tok::Turnstile, out)) continue;
      if (c >= 'a' && c <= 'z') {
        size_t end = pos;
        while (end < src.size() &&
               ((src[end] >= 'a' && src[end] <= 'z') || (src[end] >= 'A' && src[end] <= 'Z') ||
                (src[end] >= '0' && src[end] <= '9') || src[end] == '_'))
          ++end;
        std::string word = src.substr(pos, end - pos);
        SourceSpan sp{pos, end};
        pos = end;
        if (word == "forall") out.push_back({Tok::Forall, word, sp});
        else if (word == "exists") out.push_back({Tok::Exists, word, sp});
        else out.push_back({Tok::Ident, word, sp});
        continue;
      }
      throw ParseError("unexpected character '" + std::string(1, c) + "'", {start, start + 1});
    }
    out.push_back({Tok::End, "", {src.size(), src.size()}});
    return out;
  }
};

enum class BinderKind { Forall, Exists, Pro };

struct ScopeEntry {
  std::string name;
  BinderKind kind;
  std::string pro_id;  // for Pro entries
};

struct Parser {
  std::vector<Token> toks;
  size_t i = 0;
  std::vector<ScopeEntry> scope;
  std::map<std::string, int>* pro_counter;  // shared across a sequent parse

  const Token& peek() const { return toks[i]; }
  Token eat() { return toks[i++]; }

  [[noreturn]] void fail(const std::string& msg, const Token& at) {
    throw ParseError(msg, at.span);
  }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) fail(std::string("expected ") + what, peek());
    eat();
  }

  const ScopeEntry* lookup(const std::string& name) const {
    for (auto it = scope.rbegin(); it != scope.rend(); ++it)
      if (it->name == name) return &*it;
    return nullptr;
  }

  std::string fresh_pro_id(const std::string& surface) {
    int& n = (*pro_counter)[surface];
    ++n;
    return n == 1 ? surface : surface + std::to_string(n);
  }

  FormulaPtr parse_implies() {
    FormulaPtr lhs = parse_or();
    if (peek().kind == Tok::Implies) {
      eat();
      return mk_implies(lhs, parse_implies());
    }
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr lhs = parse_and();
    while (peek().kind == Tok::Or) {
      eat();
      lhs = mk_or(lhs, parse_and());
    }
    return lhs;
  }

  FormulaPtr parse_and() {
    FormulaPtr lhs = parse_unary();
    while (peek().kind == Tok::And) {
      eat();
      lhs = mk_and(lhs, parse_unary());
    }
    return lhs;
  }

  FormulaPtr parse_unary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Not:
        eat();
        return mk_not(parse_unary());
      case Tok::Forall:
      case Tok::Exists: {
        Tok k = eat().kind;
        if (peek().kind != Tok::Ident) fail("expected variable after quantifier", peek());
        Token var = eat();
        if (lookup(var.text)) fail("rebinding of in-scope name '" + var.text + "'", var);
        scope.push_back({var.text, k == Tok::Forall ? BinderKind::Forall : BinderKind::Exists, ""});
        FormulaPtr body = parse_unary();
        scope.pop_back();
        return k == Tok::Forall ? mk_forall(var.text, body) : mk_exists(var.text, body);
      }
      case Tok::Question: {
        eat();
        if (peek().kind != Tok::Ident) fail("expected pronoun name after '?'", peek());
        Token var = eat();
        if (lookup(var.text)) fail("rebinding of in-scope name '" + var.text + "'", var);
        std::string id = fresh_pro_id(var.text);
        scope.push_back({var.text, BinderKind::Pro, id});
        FormulaPtr body = parse_unary();
        scope.pop_back();
        return mk_pro(id, body);
      }
      case Tok::LParen: {
        eat();
        FormulaPtr f = parse_implies();
        expect(Tok::RParen, "')'");
        return f;
      }
      case Tok::Ident:
        return parse_atom();
      default:
        fail("expected formula", t);
    }
  }

  Arg parse_term_arg() {
    if (peek().kind != Tok::Ident) fail("expected term", peek());
    Token t = eat();
    if (const ScopeEntry* e = lookup(t.text)) {
      if (e->kind == BinderKind::Pro) return Arg(Pronoun{e->pro_id, {}});
      return Arg(Term::var(t.text));
    }
    return Arg(Term::constant(t.text));
  }

  FormulaPtr parse_atom() {
    Token name = eat();
    std::vector<Arg> args;
    if (peek().kind == Tok::LParen) {
      eat();
      args.push_back(parse_term_arg());
      while (peek().kind == Tok::Comma) {
        eat();
        args.push_back(parse_term_arg());
      }
      expect(Tok::RParen, "')'");
    }
    return mk_atom(name.text, std::move(args));
  }
};

FormulaPtr parse_one(const std::string& text, std::map<std::string, int>& pro_counter) {
  Parser p;
  p.toks = Lexer(text).run();
  p.pro_counter = &pro_counter;
  FormulaPtr f = p.parse_implies();
  if (p.peek().kind != Tok::End) p.fail("trailing input after formula", p.peek());
  return f;
}

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  std::map<std::string, int> counter;
  return parse_one(text, counter);
}

Sequent parse_sequent(const std::string& text) {
  // Split into logical lines, dropping comments and blanks. Offsets are
  // preserved so error spans refer to the original text.
  std::vector<std::pair<std::string, size_t>> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    size_t end = nl == std::string::npos ? text.size() : nl;
    std::string line = text.substr(start, end - start);
    size_t hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
    if (!blank) lines.emplace_back(line, start);
    if (nl == std::string::npos) break;
    start = nl + 1;
  }

  std::map<std::string, int> pro_counter;
  Sequent s;
  bool saw_conclusion = false;
  for (const auto& [line, offset] : lines) {
    size_t t = line.find_first_not_of(" \t");
    bool is_conclusion = line.compare(t, 2, "|=") == 0 || line.compare(t, 3, "⊨") == 0;
    try {
      if (is_conclusion) {
        if (saw_conclusion)
          throw ParseError("duplicate conclusion line", {t, t + 2});
        saw_conclusion = true;
        size_t skip = line.compare(t, 2, "|=") == 0 ? 2 : 3;
        s.conclusion = parse_one(line.substr(t + skip), pro_counter);
      } else {
        if (saw_conclusion) throw ParseError("premise after conclusion line", {t, t + 1});
        s.premises.push_back(parse_one(line, pro_counter));
      }
    } catch (const ParseError& e) {
      throw ParseError(e.what(), {offset + e.span.begin, offset + e.span.end});
    }
  }
  if (!saw_conclusion)
    throw ParseError("missing conclusion line (|= <formula>)", {text.size(), text.size()});

  auto violations = check_binder_disjointness(s);
  if (!violations.empty()) {
    std::string names;
    for (const auto& v : violations) names += (names.empty() ? "" : ", ") + v;
    throw ParseError("binder disjointness violated for: " + names, {0, text.size()});
  }
  return s;
}

}  // namespace labres
