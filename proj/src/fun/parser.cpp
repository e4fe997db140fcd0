#include "funcore/fun/parser.hpp"

#include <cctype>

namespace funcore::fun {

std::string ParseError::message() const {
  return "line " + std::to_string(line) + ", column " + std::to_string(col) +
         ": expected " + expected + ", found " + found;
}

namespace {

enum class Tok {
  Ident, Int, KwDef, KwLet, KwIn, KwIfz, KwCase, KwOf, KwCocase, KwLabel,
  KwGoto, KwLetcc, KwCallcc, KwCc, KwLabelC, KwNil, KwCons, KwTup,
  KwHd, KwTl, KwFst, KwSnd,
  KwTyInt, KwTyList, KwTyPair, KwTyStream, KwTyLPair,
  LParen, RParen, LBrace, RBrace, Comma, Semi, Colon, ColonEq, FatArrow,
  Arrow, Plus, Minus, Star, Dot, Backslash, Eq, End, Bad
};

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

struct LexError {
  int line, col;
  std::string found;
};

bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool ident_cont(char c) { return std::isalnum((unsigned char)c) || c == '_' || c == '\''; }

Tok keyword(const std::string& s) {
  if (s == "def") return Tok::KwDef;
  if (s == "let") return Tok::KwLet;
  if (s == "in") return Tok::KwIn;
  if (s == "ifz") return Tok::KwIfz;
  if (s == "case") return Tok::KwCase;
  if (s == "of") return Tok::KwOf;
  if (s == "cocase") return Tok::KwCocase;
  if (s == "label") return Tok::KwLabel;
  if (s == "goto") return Tok::KwGoto;
  if (s == "letcc") return Tok::KwLetcc;
  if (s == "callcc") return Tok::KwCallcc;
  if (s == "cc") return Tok::KwCc;
  if (s == "labelC") return Tok::KwLabelC;
  if (s == "Nil") return Tok::KwNil;
  if (s == "Cons") return Tok::KwCons;
  if (s == "Tup") return Tok::KwTup;
  if (s == "hd") return Tok::KwHd;
  if (s == "tl") return Tok::KwTl;
  if (s == "fst") return Tok::KwFst;
  if (s == "snd") return Tok::KwSnd;
  if (s == "Int") return Tok::KwTyInt;
  if (s == "List") return Tok::KwTyList;
  if (s == "Pair") return Tok::KwTyPair;
  if (s == "Stream") return Tok::KwTyStream;
  if (s == "LPair") return Tok::KwTyLPair;
  return Tok::Ident;
}

// An atom-ending token means a following `-digit` is subtraction, not a
// negative literal.
bool ends_atom(Tok k) {
  switch (k) {
    case Tok::Ident: case Tok::Int: case Tok::RParen: case Tok::RBrace:
    case Tok::KwNil: case Tok::KwCons: case Tok::KwTup:
    case Tok::KwHd: case Tok::KwTl: case Tok::KwFst: case Tok::KwSnd:
      return true;
    default:
      return false;
  }
}

std::variant<std::vector<Token>, LexError> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k) {
      if (src[i + k] == '\n') { ++line; col = 1; }
      else ++col;
    }
    i += n;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(1); continue; }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    Token t;
    t.line = line;
    t.col = col;
    if (std::isdigit((unsigned char)c) ||
        (c == '-' && i + 1 < src.size() && std::isdigit((unsigned char)src[i + 1]) &&
         (out.empty() || !ends_atom(out.back().kind)))) {
      size_t j = i + (c == '-' ? 1 : 0);
      while (j < src.size() && std::isdigit((unsigned char)src[j])) ++j;
      t.kind = Tok::Int;
      t.text = src.substr(i, j - i);
      t.value = std::stoll(t.text);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    if (ident_start(c)) {
      size_t j = i;
      while (j < src.size() && ident_cont(src[j])) ++j;
      t.text = src.substr(i, j - i);
      t.kind = keyword(t.text);
      advance(j - i);
      out.push_back(t);
      continue;
    }
    auto two = [&](char a, char b) {
      return c == a && i + 1 < src.size() && src[i + 1] == b;
    };
    if (two(':', '=')) { t.kind = Tok::ColonEq; t.text = ":="; advance(2); }
    else if (two('=', '>')) { t.kind = Tok::FatArrow; t.text = "=>"; advance(2); }
    else if (two('-', '>')) { t.kind = Tok::Arrow; t.text = "->"; advance(2); }
    else {
      switch (c) {
        case '(': t.kind = Tok::LParen; break;
        case ')': t.kind = Tok::RParen; break;
        case '{': t.kind = Tok::LBrace; break;
        case '}': t.kind = Tok::RBrace; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case ':': t.kind = Tok::Colon; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '.': t.kind = Tok::Dot; break;
        case '\\': t.kind = Tok::Backslash; break;
        case '=': t.kind = Tok::Eq; break;
        default:
          return LexError{line, col, std::string(1, c)};
      }
      t.text = std::string(1, c);
      advance(1);
    }
    out.push_back(t);
  }
  Token end;
  end.kind = Tok::End;
  end.text = "<end of input>";
  end.line = line;
  end.col = col;
  out.push_back(end);
  return out;
}

struct Parser {
  std::vector<Token> toks;
  size_t pos = 0;

  const Token& peek(size_t off = 0) const {
    size_t p = pos + off;
    return p < toks.size() ? toks[p] : toks.back();
  }
  const Token& next() { return toks[pos < toks.size() - 1 ? pos++ : pos]; }
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (at(k)) { next(); return true; }
    return false;
  }

  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    throw ParseError{t.line, t.col, expected, t.text.empty() ? "<?>" : t.text};
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return toks[pos++];
  }

  // Distinguishes `f(args; coargs)` calls from application of a
  // parenthesized term: a call has `;` at the top paren level.
  bool call_ahead() const {
    if (peek(1).kind != Tok::LParen) return false;
    int depth = 0;
    for (size_t p = pos + 1; p < toks.size(); ++p) {
      Tok k = toks[p].kind;
      if (k == Tok::LParen || k == Tok::LBrace) ++depth;
      else if (k == Tok::RParen || k == Tok::RBrace) {
        if (--depth == 0) return false;
      } else if (k == Tok::Semi && depth == 1) return true;
      else if (k == Tok::End) return false;
    }
    return false;
  }

  TypePtr type() {
    TypePtr lhs = type_atom();
    if (accept(Tok::Arrow)) return t_arrow(lhs, type());
    return lhs;
  }

  TypePtr type_atom() {
    if (accept(Tok::KwTyInt)) return t_int();
    if (accept(Tok::KwTyList)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::RParen, "')'");
      return t_list(a);
    }
    if (accept(Tok::KwTyPair)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::Comma, "','");
      TypePtr b = type();
      expect(Tok::RParen, "')'");
      return t_pair(a, b);
    }
    if (accept(Tok::KwTyStream)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::RParen, "')'");
      return t_stream(a);
    }
    if (accept(Tok::KwTyLPair)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::Comma, "','");
      TypePtr b = type();
      expect(Tok::RParen, "')'");
      return t_lpair(a, b);
    }
    if (accept(Tok::LParen)) {
      TypePtr a = type();
      expect(Tok::RParen, "')'");
      return a;
    }
    fail("a type");
  }

  TermPtr term() {
    if (accept(Tok::Backslash)) {
      std::string x = expect(Tok::Ident, "a variable name").text;
      TypePtr annot;
      if (accept(Tok::Colon)) annot = type();
      expect(Tok::FatArrow, "'=>'");
      return mk(Lam{x, annot, term()});
    }
    if (accept(Tok::KwLet)) {
      std::string x = expect(Tok::Ident, "a variable name").text;
      expect(Tok::Eq, "'='");
      TermPtr bound = term();
      expect(Tok::KwIn, "'in'");
      return mk(Let{x, bound, term()});
    }
    return additive();
  }

  TermPtr additive() {
    TermPtr lhs = multiplicative();
    for (;;) {
      if (accept(Tok::Plus)) lhs = mk(Bin{BinOp::Add, lhs, multiplicative()});
      else if (accept(Tok::Minus)) lhs = mk(Bin{BinOp::Sub, lhs, multiplicative()});
      else return lhs;
    }
  }

  TermPtr multiplicative() {
    TermPtr lhs = application();
    while (accept(Tok::Star)) lhs = mk(Bin{BinOp::Mul, lhs, application()});
    return lhs;
  }

  bool atom_ahead() const {
    switch (peek().kind) {
      case Tok::Ident: case Tok::Int: case Tok::LParen:
      case Tok::KwNil: case Tok::KwCons: case Tok::KwTup:
      case Tok::KwIfz: case Tok::KwCase: case Tok::KwCocase:
      case Tok::KwLabel: case Tok::KwGoto: case Tok::KwLetcc:
      case Tok::KwCallcc: case Tok::KwCc: case Tok::KwLabelC:
        return true;
      default:
        return false;
    }
  }

  TermPtr application() {
    TermPtr t = postfix();
    // Juxtaposition never spans a line break; otherwise a trailing main
    // term would be parsed as an argument of the last definition's body.
    while (atom_ahead() && pos > 0 && peek().line == toks[pos - 1].line)
      t = mk(App{t, postfix()});
    return t;
  }

  TermPtr postfix() {
    TermPtr t = atom();
    while (accept(Tok::Dot)) {
      if (accept(Tok::KwHd)) t = mk(Destruct{t, Dtor::Hd});
      else if (accept(Tok::KwTl)) t = mk(Destruct{t, Dtor::Tl});
      else if (accept(Tok::KwFst)) t = mk(Destruct{t, Dtor::Fst});
      else if (accept(Tok::KwSnd)) t = mk(Destruct{t, Dtor::Snd});
      else fail("a destructor (hd, tl, fst, snd)");
    }
    return t;
  }

  std::vector<TermPtr> comma_terms(Tok stop) {
    std::vector<TermPtr> out;
    if (at(stop)) return out;
    out.push_back(term());
    while (accept(Tok::Comma)) out.push_back(term());
    return out;
  }

  CaseClause case_clause() {
    if (accept(Tok::KwNil)) {
      if (accept(Tok::LParen)) expect(Tok::RParen, "')'");
      expect(Tok::FatArrow, "'=>'");
      return {Ctor::Nil, {}, term()};
    }
    Ctor k;
    if (accept(Tok::KwCons)) k = Ctor::Cons;
    else if (accept(Tok::KwTup)) k = Ctor::Tup;
    else fail("a constructor pattern");
    expect(Tok::LParen, "'('");
    std::string a = expect(Tok::Ident, "a variable name").text;
    expect(Tok::Comma, "','");
    std::string b = expect(Tok::Ident, "a variable name").text;
    expect(Tok::RParen, "')'");
    expect(Tok::FatArrow, "'=>'");
    return {k, {a, b}, term()};
  }

  CoTarget cotarget() {
    return CoTarget{expect(Tok::Ident, "a covariable name").text, nullptr};
  }

  TermPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        next();
        return mk(Lit{t.value});
      case Tok::Ident: {
        if (call_ahead()) {
          std::string f = next().text;
          expect(Tok::LParen, "'('");
          std::vector<TermPtr> args = comma_terms(Tok::Semi);
          expect(Tok::Semi, "';'");
          std::vector<CoTarget> coargs;
          if (!at(Tok::RParen)) {
            coargs.push_back(cotarget());
            while (accept(Tok::Comma)) coargs.push_back(cotarget());
          }
          expect(Tok::RParen, "')'");
          return mk(Call{f, args, coargs});
        }
        next();
        return mk(Var{t.text});
      }
      case Tok::KwNil:
        next();
        if (accept(Tok::LParen)) expect(Tok::RParen, "')'");
        return mk(Construct{Ctor::Nil, {}});
      case Tok::KwCons:
      case Tok::KwTup: {
        Ctor k = t.kind == Tok::KwCons ? Ctor::Cons : Ctor::Tup;
        next();
        expect(Tok::LParen, "'('");
        TermPtr a = term();
        expect(Tok::Comma, "','");
        TermPtr b = term();
        expect(Tok::RParen, "')'");
        return mk(Construct{k, {a, b}});
      }
      case Tok::KwIfz: {
        next();
        expect(Tok::LParen, "'('");
        TermPtr s = term();
        expect(Tok::Comma, "','");
        TermPtr z = term();
        expect(Tok::Comma, "','");
        TermPtr nz = term();
        expect(Tok::RParen, "')'");
        return mk(IfZ{s, z, nz});
      }
      case Tok::KwCase: {
        next();
        TermPtr s = term();
        expect(Tok::KwOf, "'of'");
        expect(Tok::LBrace, "'{'");
        std::vector<CaseClause> cls;
        cls.push_back(case_clause());
        while (accept(Tok::Comma)) cls.push_back(case_clause());
        expect(Tok::RBrace, "'}'");
        return mk(Case{s, cls});
      }
      case Tok::KwCocase: {
        next();
        expect(Tok::LBrace, "'{'");
        std::vector<CocaseClause> cls;
        do {
          Dtor d;
          if (accept(Tok::KwHd)) d = Dtor::Hd;
          else if (accept(Tok::KwTl)) d = Dtor::Tl;
          else if (accept(Tok::KwFst)) d = Dtor::Fst;
          else if (accept(Tok::KwSnd)) d = Dtor::Snd;
          else fail("a destructor (hd, tl, fst, snd)");
          expect(Tok::FatArrow, "'=>'");
          cls.push_back({d, term()});
        } while (accept(Tok::Comma));
        expect(Tok::RBrace, "'}'");
        return mk(Cocase{cls});
      }
      case Tok::KwLabel: {
        next();
        std::string a = expect(Tok::Ident, "a label name").text;
        expect(Tok::LBrace, "'{'");
        TermPtr body = term();
        expect(Tok::RBrace, "'}'");
        return mk(Label{a, body});
      }
      case Tok::KwGoto: {
        next();
        expect(Tok::LParen, "'('");
        TermPtr arg = term();
        expect(Tok::Semi, "';'");
        CoTarget ct = cotarget();
        expect(Tok::RParen, "')'");
        return mk(Goto{arg, ct});
      }
      case Tok::KwLetcc: {
        next();
        std::string k = expect(Tok::Ident, "a variable name").text;
        expect(Tok::LBrace, "'{'");
        TermPtr body = term();
        expect(Tok::RBrace, "'}'");
        return mk(LetCC{k, body});
      }
      case Tok::KwCallcc: {
        next();
        expect(Tok::LParen, "'('");
        TermPtr f = term();
        expect(Tok::RParen, "')'");
        return mk(CallCC{f});
      }
      case Tok::KwCc: {
        next();
        expect(Tok::LParen, "'('");
        TermPtr f = term();
        expect(Tok::RParen, "')'");
        return mk(Control{f});
      }
      case Tok::KwLabelC: {
        next();
        std::string a = expect(Tok::Ident, "a label name").text;
        expect(Tok::LBrace, "'{'");
        TermPtr body = term();
        expect(Tok::RBrace, "'}'");
        return mk(LabelTop{a, body});
      }
      case Tok::LParen: {
        next();
        TermPtr inner = term();
        if (accept(Tok::Colon)) {
          TypePtr ty = type();
          expect(Tok::RParen, "')'");
          return mk(Ascribe{inner, ty});
        }
        expect(Tok::RParen, "')'");
        return inner;
      }
      default:
        fail("a term");
    }
  }

  Param param() {
    std::string n = expect(Tok::Ident, "a parameter name").text;
    expect(Tok::Colon, "':'");
    return {n, type()};
  }

  Definition definition() {
    expect(Tok::KwDef, "'def'");
    std::string name = expect(Tok::Ident, "a definition name").text;
    expect(Tok::LParen, "'('");
    Definition d;
    d.name = name;
    if (!at(Tok::Semi) && !at(Tok::RParen)) {
      d.params.push_back(param());
      while (accept(Tok::Comma)) d.params.push_back(param());
    }
    if (accept(Tok::Semi) && !at(Tok::RParen)) {
      d.coparams.push_back(param());
      while (accept(Tok::Comma)) d.coparams.push_back(param());
    }
    expect(Tok::RParen, "')'");
    expect(Tok::Colon, "':'");
    d.ret = type();
    expect(Tok::ColonEq, "':='");
    d.body = term();
    return d;
  }

  Program program() {
    Program p;
    while (at(Tok::KwDef)) p.defs.push_back(definition());
    if (!at(Tok::End)) p.main = term();
    expect(Tok::End, "end of input");
    return p;
  }
};

} // namespace

std::variant<Program, ParseError> parse_program(const std::string& text) {
  auto lexed = lex(text);
  if (auto* err = std::get_if<LexError>(&lexed))
    return ParseError{err->line, err->col, "a token", err->found};
  Parser p{std::get<std::vector<Token>>(std::move(lexed))};
  try {
    return p.program();
  } catch (ParseError& e) {
    return e;
  }
}

std::variant<TermPtr, ParseError> parse_term(const std::string& text) {
  auto lexed = lex(text);
  if (auto* err = std::get_if<LexError>(&lexed))
    return ParseError{err->line, err->col, "a token", err->found};
  Parser p{std::get<std::vector<Token>>(std::move(lexed))};
  try {
    TermPtr t = p.term();
    p.expect(Tok::End, "end of input");
    return t;
  } catch (ParseError& e) {
    return e;
  }
}

} // namespace funcore::fun
