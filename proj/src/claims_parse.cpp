// Ledger lexer and recursive-descent parser.
//
// entry  = ("claim" | "axiom") id quoted-anchor { "forall" param "in" domain } ":" pred
// domain = "[" int ".." int "]" | "primepowers[" .. "]" | "primes[" .. "]"
//        | "powersof(" int ")[" .. "]"
// pred   = expr relop expr | [!]divides(e,e) | [!]subset(pi(g),pi(g))
//        | [!]member(l(e,e),pi(g))
// expr   = + - * exact-/ ^ (right assoc), phi/ppart/factorial/order/l calls,
//          integer literals, single-lowercase parameters.

#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "chardeg/claims.hpp"
#include "chardeg/groups.hpp"

namespace chardeg::claims {

namespace {

enum class Tk { Id, Fam, Num, Str, Sym, End };

struct Token {
  Tk kind{};
  std::string text;
  int line = 0, col = 0;
};

const std::vector<std::string> kDigitFams = {"2B2", "2G2", "2F4", "3D4", "2E6"};

struct Lexer {
  const std::string& src;
  size_t pos = 0;
  int line = 1, col = 1;
  std::vector<Token> toks;

  [[noreturn]] void fail(const std::string& msg, int l, int c) const {
    throw Error(Err::SyntaxError,
                msg + " at line " + std::to_string(l) + ", column " + std::to_string(c));
  }

  void advance(size_t k = 1) {
    for (size_t i = 0; i < k && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  }

  void push(Tk kind, std::string text, int l, int c) {
    toks.push_back({kind, std::move(text), l, c});
  }

  void run() {
    while (pos < src.size()) {
      char ch = src[pos];
      int l = line, c = col;
      if (ch == ' ' || ch == '\t' || ch == '\r' || ch == '\n') {
        advance();
        continue;
      }
      if (ch == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      if (ch == '"') {
        advance();
        std::string s;
        while (pos < src.size() && src[pos] != '"' && src[pos] != '\n') {
          s += src[pos];
          advance();
        }
        if (pos >= src.size() || src[pos] != '"') fail("unterminated string", l, c);
        advance();
        push(Tk::Str, s, l, c);
        continue;
      }
      // Digit-leading family names come before numbers.
      bool fam = false;
      for (const auto& f : kDigitFams) {
        if (src.compare(pos, f.size(), f) == 0) {
          size_t after = pos + f.size();
          if (after >= src.size() || !isalnum((unsigned char)src[after])) {
            push(Tk::Fam, f, l, c);
            advance(f.size());
            fam = true;
            break;
          }
        }
      }
      if (fam) continue;
      if (isdigit((unsigned char)ch)) {
        std::string num;
        while (pos < src.size() && isdigit((unsigned char)src[pos])) {
          num += src[pos];
          advance();
        }
        push(Tk::Num, num, l, c);
        continue;
      }
      if (isalpha((unsigned char)ch)) {
        std::string id;
        while (pos < src.size() &&
               (isalnum((unsigned char)src[pos]) || src[pos] == '_')) {
          id += src[pos];
          advance();
        }
        // O+ / O- are family tokens; '+'/'-' never follow an identifier
        // in expressions without whitespace mattering, but the grammar has
        // no identifier-minus juxtaposition except these two families.
        if (id == "O" && pos < src.size() && (src[pos] == '+' || src[pos] == '-')) {
          id += src[pos];
          advance();
          push(Tk::Fam, id, l, c);
        } else {
          push(Tk::Id, id, l, c);
        }
        continue;
      }
      static const std::vector<std::string> two = {"!=", "<=", ">=", ".."};
      bool hit = false;
      for (const auto& t : two) {
        if (src.compare(pos, 2, t) == 0) {
          push(Tk::Sym, t, l, c);
          advance(2);
          hit = true;
          break;
        }
      }
      if (hit) continue;
      if (std::string("()[],:^*/+-=<>!").find(ch) != std::string::npos) {
        push(Tk::Sym, std::string(1, ch), l, c);
        advance();
        continue;
      }
      fail(std::string("unexpected character '") + ch + "'", l, c);
    }
    push(Tk::End, "", line, col);
  }
};

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek(size_t k = 0) const {
    return toks[std::min(pos + k, toks.size() - 1)];
  }
  const Token& next() { return toks[std::min(pos++, toks.size() - 1)]; }

  [[noreturn]] void fail(const std::string& msg, const Token& t) const {
    throw Error(Err::SyntaxError, msg + " at line " + std::to_string(t.line) +
                                      ", column " + std::to_string(t.col) +
                                      (t.text.empty() ? "" : " (near '" + t.text + "')"));
  }

  const Token& expect_sym(const std::string& s) {
    const Token& t = next();
    if (t.kind != Tk::Sym || t.text != s) fail("expected '" + s + "'", t);
    return t;
  }
  const Token& expect_id(const std::string& s = "") {
    const Token& t = next();
    if (t.kind != Tk::Id || (!s.empty() && t.text != s))
      fail(s.empty() ? "expected an identifier" : ("expected '" + s + "'"), t);
    return t;
  }

  bool at_sym(const std::string& s) const {
    return peek().kind == Tk::Sym && peek().text == s;
  }
  bool at_id(const std::string& s) const {
    return peek().kind == Tk::Id && peek().text == s;
  }

  long integer() {
    const Token& t = next();
    if (t.kind != Tk::Num) fail("expected an integer", t);
    try {
      return std::stol(t.text);
    } catch (const std::exception&) {
      fail("integer out of range", t);
    }
  }

  // ---- expressions ----

  ExprP lit(Int v) {
    auto e = std::make_shared<Expr>();
    e->k = Ek::Lit;
    e->lit = std::move(v);
    return e;
  }
  ExprP bin(Ek k, ExprP a, ExprP b) {
    auto e = std::make_shared<Expr>();
    e->k = k;
    e->a = std::move(a);
    e->b = std::move(b);
    return e;
  }

  bool is_group_start() const {
    const Token& t = peek();
    if (t.kind == Tk::Fam) return true;
    if (t.kind != Tk::Id) return false;
    static const std::set<std::string> fams = {"L", "U", "S", "O", "A",
                                               "G2", "F4", "E6", "E7", "E8"};
    if (fams.count(t.text) && peek(1).kind == Tk::Sym && peek(1).text == "(")
      return true;
    for (const auto& s : sporadic_names())
      if (s == t.text) return true;
    return false;
  }

  GroupTpl group_tpl() {
    const Token& t = next();
    GroupTpl g;
    if (t.kind == Tk::Id) {
      bool sporadic = false;
      for (const auto& s : sporadic_names())
        if (s == t.text) {
          sporadic = true;
          break;
        }
      if (sporadic && !(peek().kind == Tk::Sym && peek().text == "(")) {
        g.fam = t.text;
        return g;
      }
    }
    if (t.kind != Tk::Fam && t.kind != Tk::Id) fail("expected a group name", t);
    g.fam = t.text;
    expect_sym("(");
    g.args.push_back(expr());
    while (at_sym(",")) {
      next();
      g.args.push_back(expr());
    }
    expect_sym(")");
    return g;
  }

  ExprP call2(Ek k) {
    expect_sym("(");
    ExprP a = expr();
    expect_sym(",");
    ExprP b = expr();
    expect_sym(")");
    return bin(k, std::move(a), std::move(b));
  }

  ExprP atom() {
    const Token& t = peek();
    if (t.kind == Tk::Num) {
      next();
      return lit(Int(t.text));
    }
    if (t.kind == Tk::Sym && t.text == "(") {
      next();
      ExprP e = expr();
      expect_sym(")");
      return e;
    }
    if (t.kind == Tk::Id) {
      if (t.text == "phi") {
        next();
        return call2(Ek::Phi);
      }
      if (t.text == "ppart") {
        next();
        return call2(Ek::Ppart);
      }
      if (t.text == "l") {
        next();
        return call2(Ek::L);
      }
      if (t.text == "factorial") {
        next();
        expect_sym("(");
        auto e = std::make_shared<Expr>();
        e->k = Ek::Factorial;
        e->a = expr();
        expect_sym(")");
        return e;
      }
      if (t.text == "order") {
        next();
        expect_sym("(");
        auto e = std::make_shared<Expr>();
        e->k = Ek::Order;
        e->g = group_tpl();
        expect_sym(")");
        return e;
      }
      if (t.text.size() == 1 && islower((unsigned char)t.text[0])) {
        next();
        auto e = std::make_shared<Expr>();
        e->k = Ek::Param;
        e->param = t.text;
        return e;
      }
      fail("unexpected identifier in expression", t);
    }
    fail("expected an expression", t);
  }

  ExprP power() {
    ExprP base = atom();
    if (at_sym("^")) {
      next();
      return bin(Ek::Pow, std::move(base), power());  // right-assoc
    }
    return base;
  }

  ExprP term() {
    ExprP e = power();
    while (at_sym("*") || at_sym("/")) {
      Ek k = peek().text == "*" ? Ek::Mul : Ek::Div;
      next();
      e = bin(k, std::move(e), power());
    }
    return e;
  }

  ExprP expr() {
    ExprP e = term();
    while (at_sym("+") || at_sym("-")) {
      Ek k = peek().text == "+" ? Ek::Add : Ek::Sub;
      next();
      e = bin(k, std::move(e), term());
    }
    return e;
  }

  // ---- predicates ----

  GroupTpl pi_group() {
    expect_id("pi");
    expect_sym("(");
    GroupTpl g = group_tpl();
    expect_sym(")");
    return g;
  }

  Pred pred() {
    Pred p;
    bool neg = false;
    if (at_sym("!")) {
      // "!=" lexes as one token, so a bare '!' can only start !divides etc.
      next();
      neg = true;
    }
    if (peek().kind == Tk::Id &&
        (peek().text == "divides" || peek().text == "subset" || peek().text == "member")) {
      std::string kw = next().text;
      p.neg = neg;
      if (kw == "divides") {
        p.k = Pk::Divides;
        expect_sym("(");
        p.a = expr();
        expect_sym(",");
        p.b = expr();
        expect_sym(")");
        return p;
      }
      if (kw == "subset") {
        p.k = Pk::Subset;
        expect_sym("(");
        p.g1 = pi_group();
        expect_sym(",");
        p.g2 = pi_group();
        expect_sym(")");
        return p;
      }
      p.k = Pk::Member;
      expect_sym("(");
      expect_id("l");
      p.a = call2(Ek::L);
      expect_sym(",");
      p.g1 = pi_group();
      expect_sym(")");
      return p;
    }
    if (neg) fail("expected divides/subset/member after '!'", peek());
    p.k = Pk::Rel;
    p.a = expr();
    const Token& op = next();
    if (op.kind != Tk::Sym) fail("expected a relational operator", op);
    if (op.text == "=") p.rel = RelOp::Eq;
    else if (op.text == "!=") p.rel = RelOp::Ne;
    else if (op.text == "<") p.rel = RelOp::Lt;
    else if (op.text == "<=") p.rel = RelOp::Le;
    else if (op.text == ">") p.rel = RelOp::Gt;
    else if (op.text == ">=") p.rel = RelOp::Ge;
    else fail("expected a relational operator", op);
    p.b = expr();
    return p;
  }

  Quant quant() {
    expect_id("forall");
    const Token& pt = next();
    if (pt.kind != Tk::Id || pt.text.size() != 1 || !islower((unsigned char)pt.text[0]) ||
        pt.text == "l")
      fail("quantified parameter must be a single lowercase letter (not 'l')", pt);
    Quant q;
    q.param = pt.text;
    expect_id("in");
    if (at_sym("[")) {
      q.dom = Dom::Range;
    } else {
      const Token& d = next();
      if (d.kind != Tk::Id) fail("expected a domain", d);
      if (d.text == "primepowers") q.dom = Dom::PrimePowers;
      else if (d.text == "primes") q.dom = Dom::Primes;
      else if (d.text == "powersof") {
        q.dom = Dom::PowersOf;
        expect_sym("(");
        q.base = integer();
        if (q.base < 2) fail("powersof base must be >= 2", d);
        expect_sym(")");
      } else {
        fail("unknown domain '" + d.text + "'", d);
      }
    }
    expect_sym("[");
    q.lo = integer();
    expect_sym("..");
    q.hi = integer();
    expect_sym("]");
    return q;
  }

  // ---- entries ----

  void collect_params(const ExprP& e, std::set<std::string>& out) {
    if (!e) return;
    if (e->k == Ek::Param) out.insert(e->param);
    collect_params(e->a, out);
    collect_params(e->b, out);
    for (const auto& a : e->g.args) collect_params(a, out);
  }

  std::vector<Claim> ledger() {
    std::vector<Claim> out;
    std::set<std::string> ids;
    while (peek().kind != Tk::End) {
      const Token& kw = next();
      if (kw.kind != Tk::Id || (kw.text != "claim" && kw.text != "axiom"))
        fail("expected 'claim' or 'axiom'", kw);
      Claim c;
      c.axiom = kw.text == "axiom";
      c.line = kw.line;
      const Token& idt = next();
      if (idt.kind != Tk::Id) fail("expected a claim id", idt);
      c.id = idt.text;
      if (!ids.insert(c.id).second)
        throw Error(Err::DuplicateId, "claim id '" + c.id + "' appears twice (line " +
                                          std::to_string(idt.line) + ")");
      const Token& anch = next();
      if (anch.kind != Tk::Str) fail("expected a quoted anchor", anch);
      c.anchor = anch.text;
      std::set<std::string> bound;
      while (at_id("forall")) {
        Quant q = quant();
        if (!bound.insert(q.param).second)
          fail("parameter '" + q.param + "' bound twice", idt);
        c.quants.push_back(q);
      }
      expect_sym(":");
      c.pred = pred();

      std::set<std::string> used;
      collect_params(c.pred.a, used);
      collect_params(c.pred.b, used);
      for (const auto* g : {&c.pred.g1, &c.pred.g2})
        for (const auto& a : g->args) collect_params(a, used);
      for (const auto& pname : used)
        if (!bound.count(pname))
          throw Error(Err::UnboundParameter,
                      "parameter '" + pname + "' in claim '" + c.id + "' is not quantified");
      out.push_back(std::move(c));
    }
    return out;
  }
};

}  // namespace

const char* status_name(Status s) {
  switch (s) {
    case Status::Verified: return "verified";
    case Status::Refuted: return "refuted";
    case Status::Skipped: return "skipped";
    case Status::Assumed: return "assumed";
  }
  return "?";
}

std::vector<Claim> parse_ledger(const std::string& text) {
  Lexer lx{text};
  lx.run();
  Parser ps{std::move(lx.toks)};
  return ps.ledger();
}

std::vector<Claim> parse_ledger_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open ledger " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_ledger(ss.str());
}

}  // namespace chardeg::claims
