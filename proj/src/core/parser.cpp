#include "funcore/core/parser.hpp"

#include <cctype>

namespace funcore::core {

namespace {

enum class Tok {
  Ident, Int, KwDef, KwMu, KwIfz, KwCase, KwCocase, KwNil, KwCons, KwTup,
  KwHd, KwTl, KwFst, KwSnd, KwAp,
  KwTyInt, KwTyList, KwTyPair, KwTyStream, KwTyLPair,
  LParen, RParen, LBrace, RBrace, LAngle, RAngle, Pipe, Comma, Semi, Colon,
  ColonEq, FatArrow, Arrow, Plus, Minus, Star, Dot, Tilde, End
};

struct Token {
  Tok kind;
  std::string text;
  long long value = 0;
  int line = 1, col = 1;
};

bool ident_start(char c) { return std::isalpha((unsigned char)c) || c == '_'; }
bool ident_cont(char c) { return std::isalnum((unsigned char)c) || c == '_' || c == '\''; }

Tok keyword(const std::string& s) {
  if (s == "def") return Tok::KwDef;
  if (s == "mu") return Tok::KwMu;
  if (s == "ifz") return Tok::KwIfz;
  if (s == "case") return Tok::KwCase;
  if (s == "cocase") return Tok::KwCocase;
  if (s == "Nil") return Tok::KwNil;
  if (s == "Cons") return Tok::KwCons;
  if (s == "Tup") return Tok::KwTup;
  if (s == "hd") return Tok::KwHd;
  if (s == "tl") return Tok::KwTl;
  if (s == "fst") return Tok::KwFst;
  if (s == "snd") return Tok::KwSnd;
  if (s == "ap") return Tok::KwAp;
  if (s == "Int") return Tok::KwTyInt;
  if (s == "List") return Tok::KwTyList;
  if (s == "Pair") return Tok::KwTyPair;
  if (s == "Stream") return Tok::KwTyStream;
  if (s == "LPair") return Tok::KwTyLPair;
  return Tok::Ident;
}

bool ends_atom(Tok k) {
  switch (k) {
    case Tok::Ident: case Tok::Int: case Tok::RParen: case Tok::RBrace:
    case Tok::RAngle: case Tok::KwNil:
      return true;
    default:
      return false;
  }
}

std::variant<std::vector<Token>, ParseError> lex(const std::string& src) {
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
        case '<': t.kind = Tok::LAngle; break;
        case '>': t.kind = Tok::RAngle; break;
        case '|': t.kind = Tok::Pipe; break;
        case ',': t.kind = Tok::Comma; break;
        case ';': t.kind = Tok::Semi; break;
        case ':': t.kind = Tok::Colon; break;
        case '+': t.kind = Tok::Plus; break;
        case '-': t.kind = Tok::Minus; break;
        case '*': t.kind = Tok::Star; break;
        case '.': t.kind = Tok::Dot; break;
        case '~': t.kind = Tok::Tilde; break;
        default:
          return ParseError{line, col, "a token", std::string(1, c)};
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
  bool at(Tok k) const { return peek().kind == k; }
  bool accept(Tok k) {
    if (at(k)) { ++pos; return true; }
    return false;
  }
  [[noreturn]] void fail(const std::string& expected) {
    const Token& t = peek();
    throw ParseError{t.line, t.col, expected, t.text};
  }
  Token expect(Tok k, const std::string& what) {
    if (!at(k)) fail(what);
    return toks[pos++];
  }

  TypePtr type() {
    TypePtr lhs = type_atom();
    if (accept(Tok::Arrow)) return t_arrow(lhs, type());
    return lhs;
  }

  TypePtr type_atom() {
    if (accept(Tok::KwTyInt)) return t_int();
    auto unary = [&](TypePtr (*mkT)(TypePtr)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::RParen, "')'");
      return mkT(std::move(a));
    };
    auto binary = [&](TypePtr (*mkT)(TypePtr, TypePtr)) {
      expect(Tok::LParen, "'('");
      TypePtr a = type();
      expect(Tok::Comma, "','");
      TypePtr b = type();
      expect(Tok::RParen, "')'");
      return mkT(std::move(a), std::move(b));
    };
    if (accept(Tok::KwTyList)) return unary(t_list);
    if (accept(Tok::KwTyStream)) return unary(t_stream);
    if (accept(Tok::KwTyPair)) return binary(t_pair);
    if (accept(Tok::KwTyLPair)) return binary(t_lpair);
    if (accept(Tok::LParen)) {
      TypePtr a = type();
      expect(Tok::RParen, "')'");
      return a;
    }
    fail("a type");
  }

  std::optional<Dtor> dtor_ahead() const {
    switch (peek().kind) {
      case Tok::KwHd: return Dtor::Hd;
      case Tok::KwTl: return Dtor::Tl;
      case Tok::KwFst: return Dtor::Fst;
      case Tok::KwSnd: return Dtor::Snd;
      case Tok::KwAp: return Dtor::Ap;
      default: return std::nullopt;
    }
  }

  bool statement_ahead() const {
    switch (peek().kind) {
      case Tok::LAngle:
      case Tok::KwIfz:
        return true;
      case Tok::Star:
      case Tok::Plus:
      case Tok::Minus:
        return peek(1).kind == Tok::LParen;
      case Tok::Ident:
        return peek(1).kind == Tok::LParen;
      default:
        return false;
    }
  }

  StatementPtr statement() {
    if (accept(Tok::LAngle)) {
      ProducerPtr p = producer();
      expect(Tok::Pipe, "'|'");
      ConsumerPtr c = consumer();
      expect(Tok::RAngle, "'>'");
      return mks(Cut{p, c});
    }
    if (at(Tok::Star) || at(Tok::Plus) || at(Tok::Minus)) {
      BinOp op = at(Tok::Star) ? BinOp::Mul : at(Tok::Plus) ? BinOp::Add : BinOp::Sub;
      ++pos;
      expect(Tok::LParen, "'('");
      ProducerPtr l = producer();
      expect(Tok::Comma, "','");
      ProducerPtr r = producer();
      expect(Tok::Semi, "';'");
      ConsumerPtr c = consumer();
      expect(Tok::RParen, "')'");
      return mks(OpStmt{op, l, r, c});
    }
    if (accept(Tok::KwIfz)) {
      expect(Tok::LParen, "'('");
      ProducerPtr s = producer();
      expect(Tok::Comma, "','");
      StatementPtr z = statement();
      expect(Tok::Comma, "','");
      StatementPtr nz = statement();
      expect(Tok::RParen, "')'");
      return mks(IfZStmt{s, z, nz});
    }
    if (at(Tok::Ident) && peek(1).kind == Tok::LParen) {
      std::string name = expect(Tok::Ident, "a definition name").text;
      expect(Tok::LParen, "'('");
      std::vector<ProducerPtr> args;
      if (!at(Tok::Semi) && !at(Tok::RParen)) {
        args.push_back(producer());
        while (accept(Tok::Comma)) args.push_back(producer());
      }
      std::vector<ConsumerPtr> coargs;
      if (accept(Tok::Semi) && !at(Tok::RParen)) {
        coargs.push_back(consumer());
        while (accept(Tok::Comma)) coargs.push_back(consumer());
      }
      expect(Tok::RParen, "')'");
      return mks(CallStmt{name, args, coargs});
    }
    fail("a statement");
  }

  CocaseClause cocase_clause() {
    auto d = dtor_ahead();
    if (!d) fail("a destructor");
    ++pos;
    CocaseClause cl;
    cl.dtor = *d;
    expect(Tok::LParen, "'('");
    if (*d == Dtor::Ap) {
      cl.binders.push_back(expect(Tok::Ident, "a variable name").text);
      expect(Tok::Semi, "';'");
    }
    cl.cobinders.push_back(expect(Tok::Ident, "a covariable name").text);
    expect(Tok::RParen, "')'");
    expect(Tok::FatArrow, "'=>'");
    cl.body = statement();
    return cl;
  }

  CaseClause case_clause() {
    CaseClause cl;
    if (accept(Tok::KwNil)) {
      cl.ctor = Ctor::Nil;
      if (accept(Tok::LParen)) expect(Tok::RParen, "')'");
    } else {
      if (accept(Tok::KwCons)) cl.ctor = Ctor::Cons;
      else if (accept(Tok::KwTup)) cl.ctor = Ctor::Tup;
      else fail("a constructor pattern");
      expect(Tok::LParen, "'('");
      cl.binders.push_back(expect(Tok::Ident, "a variable name").text);
      expect(Tok::Comma, "','");
      cl.binders.push_back(expect(Tok::Ident, "a variable name").text);
      expect(Tok::RParen, "')'");
    }
    expect(Tok::FatArrow, "'=>'");
    cl.body = statement();
    return cl;
  }

  ProducerPtr producer() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int:
        ++pos;
        return mkp(PLit{t.value});
      case Tok::KwMu: {
        ++pos;
        std::string a = expect(Tok::Ident, "a covariable name").text;
        if (!accept(Tok::Dot)) fail("'.'");
        return mkp(Mu{a, statement()});
      }
      case Tok::KwNil: {
        ++pos;
        if (accept(Tok::LParen)) expect(Tok::RParen, "')'");
        return mkp(CtorApp{Ctor::Nil, {}, {}});
      }
      case Tok::KwCons:
      case Tok::KwTup: {
        Ctor k = t.kind == Tok::KwCons ? Ctor::Cons : Ctor::Tup;
        ++pos;
        expect(Tok::LParen, "'('");
        std::vector<ProducerPtr> args;
        args.push_back(producer());
        expect(Tok::Comma, "','");
        args.push_back(producer());
        std::vector<ConsumerPtr> coargs;
        if (accept(Tok::Semi) && !at(Tok::RParen)) {
          coargs.push_back(consumer());
          while (accept(Tok::Comma)) coargs.push_back(consumer());
        }
        expect(Tok::RParen, "')'");
        return mkp(CtorApp{k, args, coargs});
      }
      case Tok::KwCocase: {
        ++pos;
        expect(Tok::LBrace, "'{'");
        std::vector<CocaseClause> cls;
        cls.push_back(cocase_clause());
        while (accept(Tok::Comma)) cls.push_back(cocase_clause());
        expect(Tok::RBrace, "'}'");
        return mkp(CocaseP{cls});
      }
      case Tok::Ident:
        ++pos;
        return mkp(PVar{t.text});
      case Tok::LParen: {
        ++pos;
        ProducerPtr p = producer();
        expect(Tok::RParen, "')'");
        return p;
      }
      default:
        fail("a producer");
    }
  }

  ConsumerPtr consumer() {
    const Token& t = peek();
    if (t.kind == Tok::KwMu) {
      ++pos;
      expect(Tok::Tilde, "'~'");
      std::string x = expect(Tok::Ident, "a variable name").text;
      if (!accept(Tok::Dot)) fail("'.'");
      return mkc(MuTilde{x, statement()});
    }
    if (t.kind == Tok::KwCase) {
      ++pos;
      expect(Tok::LBrace, "'{'");
      std::vector<CaseClause> cls;
      cls.push_back(case_clause());
      while (accept(Tok::Comma)) cls.push_back(case_clause());
      expect(Tok::RBrace, "'}'");
      return mkc(CaseC{cls});
    }
    if (auto d = dtor_ahead()) {
      ++pos;
      expect(Tok::LParen, "'('");
      DtorApp app;
      app.dtor = *d;
      if (*d == Dtor::Ap) {
        app.args.push_back(producer());
        expect(Tok::Semi, "';'");
      }
      app.coargs.push_back(consumer());
      expect(Tok::RParen, "')'");
      return mkc(app);
    }
    if (t.kind == Tok::Ident) {
      ++pos;
      return mkc(Covar{t.text});
    }
    if (t.kind == Tok::LParen) {
      ++pos;
      ConsumerPtr c = consumer();
      expect(Tok::RParen, "')'");
      return c;
    }
    fail("a consumer");
  }

  Param param() {
    std::string n = expect(Tok::Ident, "a parameter name").text;
    expect(Tok::Colon, "':'");
    return {n, type()};
  }

  CoreDefinition definition() {
    expect(Tok::KwDef, "'def'");
    CoreDefinition d;
    d.name = expect(Tok::Ident, "a definition name").text;
    expect(Tok::LParen, "'('");
    if (!at(Tok::Semi) && !at(Tok::RParen)) {
      d.params.push_back(param());
      while (accept(Tok::Comma)) d.params.push_back(param());
    }
    if (accept(Tok::Semi) && !at(Tok::RParen)) {
      d.coparams.push_back(param());
      while (accept(Tok::Comma)) d.coparams.push_back(param());
    }
    expect(Tok::RParen, "')'");
    expect(Tok::ColonEq, "':='");
    d.body = statement();
    return d;
  }

  CoreProgram program() {
    CoreProgram p;
    while (at(Tok::KwDef)) p.defs.push_back(definition());
    if (!at(Tok::End)) {
      if (statement_ahead()) p.main_stmt = statement();
      else p.main_prod = producer();
    }
    expect(Tok::End, "end of input");
    return p;
  }
};

template <class T, class F>
std::variant<T, ParseError> run(const std::string& text, F f) {
  auto lexed = lex(text);
  if (auto* err = std::get_if<ParseError>(&lexed)) return *err;
  Parser p{std::get<std::vector<Token>>(std::move(lexed))};
  try {
    T out = f(p);
    p.expect(Tok::End, "end of input");
    return out;
  } catch (ParseError& e) {
    return e;
  }
}

} // namespace

std::variant<CoreProgram, ParseError> parse_core_program(const std::string& text) {
  auto lexed = lex(text);
  if (auto* err = std::get_if<ParseError>(&lexed)) return *err;
  Parser p{std::get<std::vector<Token>>(std::move(lexed))};
  try {
    return p.program();
  } catch (ParseError& e) {
    return e;
  }
}

std::variant<StatementPtr, ParseError> parse_core_statement(const std::string& text) {
  return run<StatementPtr>(text, [](Parser& p) { return p.statement(); });
}

std::variant<ProducerPtr, ParseError> parse_core_producer(const std::string& text) {
  return run<ProducerPtr>(text, [](Parser& p) { return p.producer(); });
}

} // namespace funcore::core
