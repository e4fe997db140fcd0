#include "funcore/gen.hpp"

#include <functional>
#include <random>
#include <stdexcept>

#include "funcore/fun/typing.hpp"

namespace funcore {

namespace ff = funcore::fun;

const ff::Program& gen_library() {
  static const ff::Program lib = [] {
    ff::Program p;
    // def rep(x: Int;) : Stream(Int) := cocase { hd => x, tl => rep(x;) }
    {
      ff::Definition d;
      d.name = "rep";
      d.params = {{"x", t_int()}};
      d.ret = t_stream(t_int());
      ff::Cocase cc;
      cc.clauses.push_back({Dtor::Hd, ff::mk(ff::Var{"x"})});
      cc.clauses.push_back({Dtor::Tl, ff::mk(ff::Call{"rep", {ff::mk(ff::Var{"x"})}, {}})});
      d.body = ff::mk(cc);
      p.defs.push_back(std::move(d));
    }
    // def double(x: Int;) : Int := x + x
    {
      ff::Definition d;
      d.name = "double";
      d.params = {{"x", t_int()}};
      d.ret = t_int();
      d.body = ff::mk(ff::Bin{BinOp::Add, ff::mk(ff::Var{"x"}), ff::mk(ff::Var{"x"})});
      p.defs.push_back(std::move(d));
    }
    // def sumpair(p: Pair(Int, Int);) : Int := case p of { Tup(a, b) => a + b }
    {
      ff::Definition d;
      d.name = "sumpair";
      d.params = {{"p", t_pair(t_int(), t_int())}};
      d.ret = t_int();
      ff::Case cs;
      cs.scrut = ff::mk(ff::Var{"p"});
      cs.clauses.push_back(
          {Ctor::Tup, {"a", "b"},
           ff::mk(ff::Bin{BinOp::Add, ff::mk(ff::Var{"a"}), ff::mk(ff::Var{"b"})})});
      d.body = ff::mk(cs);
      p.defs.push_back(std::move(d));
    }
    // def escape(x: Int; k: Int) : Int := ifz(x, goto(1; k), x * 2)
    {
      ff::Definition d;
      d.name = "escape";
      d.params = {{"x", t_int()}};
      d.coparams = {{"k", t_int()}};
      d.ret = t_int();
      d.body = ff::mk(ff::IfZ{
          ff::mk(ff::Var{"x"}),
          ff::mk(ff::Goto{ff::mk(ff::Lit{1}), ff::CoTarget{"k", nullptr}}),
          ff::mk(ff::Bin{BinOp::Mul, ff::mk(ff::Var{"x"}), ff::mk(ff::Lit{2})})});
      p.defs.push_back(std::move(d));
    }
    return p;
  }();
  return lib;
}

ff::TermPtr canonical_inhabitant(const TypePtr& tau) {
  switch (tau->kind) {
  case TypeKind::Int:
    return ff::mk(ff::Lit{0});
  case TypeKind::List:
    return ff::mk(ff::Construct{Ctor::Nil, {}});
  case TypeKind::Pair:
    return ff::mk(ff::Construct{Ctor::Tup,
                                {canonical_inhabitant(tau->a), canonical_inhabitant(tau->b)}});
  case TypeKind::Stream:
    // No closed non-recursive stream exists; use the library's rep.
    if (tau->a->kind != TypeKind::Int)
      throw std::invalid_argument("no canonical inhabitant for " + show_type(tau));
    return ff::mk(ff::Call{"rep", {ff::mk(ff::Lit{0})}, {}});
  case TypeKind::LPair: {
    ff::Cocase cc;
    cc.clauses.push_back({Dtor::Fst, canonical_inhabitant(tau->a)});
    cc.clauses.push_back({Dtor::Snd, canonical_inhabitant(tau->b)});
    return ff::mk(cc);
  }
  case TypeKind::Arrow:
    return ff::mk(ff::Lam{"w", tau->a, canonical_inhabitant(tau->b)});
  default:
    throw std::invalid_argument("no canonical inhabitant for " + show_type(tau));
  }
}

namespace {

// Fraction of choices spent on label/goto when they are available.
constexpr double kControlWeight = 0.15;

struct Gen {
  std::mt19937_64 rng;
  int counter = 0;
  TypingContext ctx;
  std::vector<std::pair<std::string, TypePtr>> labels; // targetable, typed

  explicit Gen(std::uint64_t seed, const TypingContext& start) : rng(seed), ctx(start) {}

  size_t pick(size_t n) { return (size_t)(rng() % n); }
  bool chance(double p) { return (double)(rng() % 1000) < p * 1000.0; }

  std::string fresh(const char* prefix) {
    for (;;) {
      std::string cand = prefix + std::to_string(counter++);
      bool taken = false;
      for (auto& b : ctx.bindings)
        if (b.name == cand) taken = true;
      if (!taken) return cand;
    }
  }

  TypePtr rand_type() {
    switch (pick(8)) {
    case 0: return t_list(t_int());
    case 1: return t_pair(t_int(), t_int());
    case 2: return t_stream(t_int());
    case 3: return t_lpair(t_int(), t_int());
    case 4: return t_arrow(t_int(), t_int());
    default: return t_int();
    }
  }

  ff::TermPtr var_or_null(const TypePtr& tau) {
    std::vector<const Binding*> hits;
    for (auto& b : ctx.bindings)
      if (b.mode == Mode::Prd && b.type && type_eq(b.type, tau)) hits.push_back(&b);
    if (hits.empty()) return nullptr;
    return ff::mk(ff::Var{hits[pick(hits.size())]->name});
  }

  // Leaves. must_infer rules out bare Nil.
  ff::TermPtr leaf(const TypePtr& tau, bool must_infer) {
    if (ff::TermPtr v = var_or_null(tau); v && chance(0.5)) return v;
    switch (tau->kind) {
    case TypeKind::Int:
      return ff::mk(ff::Lit{(long long)pick(10)});
    case TypeKind::List:
      if (must_infer)
        return ff::mk(ff::Construct{
            Ctor::Cons, {leaf(tau->a, true), ff::mk(ff::Construct{Ctor::Nil, {}})}});
      return chance(0.5)
                 ? ff::mk(ff::Construct{Ctor::Nil, {}})
                 : ff::mk(ff::Construct{Ctor::Cons,
                                        {leaf(tau->a, false),
                                         ff::mk(ff::Construct{Ctor::Nil, {}})}});
    case TypeKind::Pair:
      return ff::mk(ff::Construct{Ctor::Tup,
                                  {leaf(tau->a, must_infer), leaf(tau->b, must_infer)}});
    case TypeKind::Stream:
      return ff::mk(ff::Call{"rep", {leaf(tau->a, false)}, {}});
    case TypeKind::LPair: {
      ff::Cocase cc;
      cc.clauses.push_back({Dtor::Fst, leaf(tau->a, must_infer)});
      cc.clauses.push_back({Dtor::Snd, leaf(tau->b, must_infer)});
      return ff::mk(cc);
    }
    case TypeKind::Arrow:
      return ff::mk(ff::Lam{"w", tau->a, leaf(tau->b, must_infer)});
    default:
      return canonical_inhabitant(tau);
    }
  }

  ff::TermPtr gen(const TypePtr& tau, int depth, bool must_infer) {
    if (depth <= 0) return leaf(tau, must_infer);

    // Control constructs only make sense where the checker sees the
    // expected type; goto needs a typed enclosing label.
    if (!must_infer && chance(kControlWeight)) {
      if (!labels.empty() && chance(0.5)) {
        auto& [name, ty] = labels[pick(labels.size())];
        return ff::mk(ff::Goto{gen(ty, depth - 1, true), ff::CoTarget{name, nullptr}});
      }
      std::string l = fresh("l");
      ctx.bind(l, Mode::Cns, tau);
      labels.push_back({l, tau});
      ff::TermPtr body = gen(tau, depth - 1, false);
      labels.pop_back();
      ctx.bindings.pop_back();
      return ff::mk(ff::Label{l, body});
    }

    std::vector<std::function<ff::TermPtr()>> opts;

    if (ff::TermPtr v = var_or_null(tau)) opts.push_back([v] { return v; });
    opts.push_back([&] { return leaf(tau, must_infer); });

    opts.push_back([&, tau] { // ifz
      return ff::mk(ff::IfZ{gen(t_int(), depth - 1, false), gen(tau, depth - 1, must_infer),
                            gen(tau, depth - 1, must_infer)});
    });
    opts.push_back([&, tau] { // let
      TypePtr sigma = rand_type();
      ff::TermPtr bound = gen(sigma, depth - 1, true);
      std::string x = fresh("v");
      ctx.bind(x, Mode::Prd, sigma);
      ff::TermPtr body = gen(tau, depth - 1, must_infer);
      ctx.bindings.pop_back();
      return ff::mk(ff::Let{x, bound, body});
    });
    opts.push_back([&, tau] { // case on a list
      ff::TermPtr scrut = gen(t_list(t_int()), depth - 1, true);
      ff::TermPtr nil_body = gen(tau, depth - 1, must_infer);
      std::string h = fresh("v");
      std::string tl = fresh("v");
      ctx.bind(h, Mode::Prd, t_int());
      ctx.bind(tl, Mode::Prd, t_list(t_int()));
      ff::TermPtr cons_body = gen(tau, depth - 1, must_infer);
      ctx.bindings.pop_back();
      ctx.bindings.pop_back();
      ff::Case cs;
      cs.scrut = scrut;
      cs.clauses.push_back({Ctor::Nil, {}, nil_body});
      cs.clauses.push_back({Ctor::Cons, {h, tl}, cons_body});
      return ff::mk(cs);
    });
    opts.push_back([&, tau] { // case on a pair
      ff::TermPtr scrut = gen(t_pair(t_int(), t_int()), depth - 1, true);
      std::string a = fresh("v");
      std::string b = fresh("v");
      ctx.bind(a, Mode::Prd, t_int());
      ctx.bind(b, Mode::Prd, t_int());
      ff::TermPtr body = gen(tau, depth - 1, must_infer);
      ctx.bindings.pop_back();
      ctx.bindings.pop_back();
      ff::Case cs;
      cs.scrut = scrut;
      cs.clauses.push_back({Ctor::Tup, {a, b}, body});
      return ff::mk(cs);
    });
    opts.push_back([&, tau] { // fst of a lazy pair
      return ff::mk(ff::Destruct{gen(t_lpair(tau, t_int()), depth - 1, true), Dtor::Fst});
    });
    opts.push_back([&, tau] { // snd of a lazy pair
      return ff::mk(ff::Destruct{gen(t_lpair(t_int(), tau), depth - 1, true), Dtor::Snd});
    });
    opts.push_back([&, tau] { // apply a lambda
      TypePtr sigma = rand_type();
      ff::TermPtr fn = gen(t_arrow(sigma, tau), depth - 1, true);
      return ff::mk(ff::App{fn, gen(sigma, depth - 1, false)});
    });

    switch (tau->kind) {
    case TypeKind::Int:
      opts.push_back([&] {
        BinOp op = pick(3) == 0 ? BinOp::Mul : (pick(2) == 0 ? BinOp::Add : BinOp::Sub);
        return ff::mk(ff::Bin{op, gen(t_int(), depth - 1, false), gen(t_int(), depth - 1, false)});
      });
      opts.push_back([&] {
        return ff::mk(ff::Destruct{gen(t_stream(t_int()), depth - 1, must_infer), Dtor::Hd});
      });
      opts.push_back([&] {
        return ff::mk(ff::Call{"double", {gen(t_int(), depth - 1, false)}, {}});
      });
      opts.push_back([&] {
        return ff::mk(ff::Call{"sumpair", {gen(t_pair(t_int(), t_int()), depth - 1, false)}, {}});
      });
      for (auto& [name, ty] : labels)
        if (ty->kind == TypeKind::Int) {
          std::string l = name;
          opts.push_back([&, l] {
            return ff::mk(ff::Call{"escape", {gen(t_int(), depth - 1, false)},
                                   {ff::CoTarget{l, nullptr}}});
          });
          break;
        }
      break;
    case TypeKind::List:
      opts.push_back([&, tau] {
        return ff::mk(ff::Construct{
            Ctor::Cons, {gen(tau->a, depth - 1, must_infer), gen(tau, depth - 1, false)}});
      });
      break;
    case TypeKind::Pair:
      opts.push_back([&, tau] {
        return ff::mk(ff::Construct{
            Ctor::Tup, {gen(tau->a, depth - 1, must_infer), gen(tau->b, depth - 1, must_infer)}});
      });
      break;
    case TypeKind::Stream:
      opts.push_back([&, tau] {
        ff::Cocase cc;
        cc.clauses.push_back({Dtor::Hd, gen(tau->a, depth - 1, must_infer)});
        cc.clauses.push_back({Dtor::Tl, gen(tau, depth - 1, must_infer)});
        return ff::mk(cc);
      });
      if (tau->a->kind == TypeKind::Int) {
        opts.push_back([&] {
          return ff::mk(ff::Call{"rep", {gen(t_int(), depth - 1, false)}, {}});
        });
        opts.push_back([&, tau] {
          return ff::mk(ff::Destruct{gen(tau, depth - 1, must_infer), Dtor::Tl});
        });
      }
      break;
    case TypeKind::LPair:
      opts.push_back([&, tau] {
        ff::Cocase cc;
        cc.clauses.push_back({Dtor::Fst, gen(tau->a, depth - 1, must_infer)});
        cc.clauses.push_back({Dtor::Snd, gen(tau->b, depth - 1, must_infer)});
        return ff::mk(cc);
      });
      break;
    case TypeKind::Arrow:
      opts.push_back([&, tau] {
        std::string x = fresh("v");
        ctx.bind(x, Mode::Prd, tau->a);
        ff::TermPtr body = gen(tau->b, depth - 1, must_infer);
        ctx.bindings.pop_back();
        return ff::mk(ff::Lam{x, tau->a, body});
      });
      break;
    default:
      break;
    }

    return opts[pick(opts.size())]();
  }
};

} // namespace

fun::TermPtr gen_typed_term(std::uint64_t seed, const TypingContext& ctx, const TypePtr& tau,
                            int depth) {
  Gen g(seed, ctx);
  ff::TermPtr t;
  try {
    t = g.gen(tau, depth, true);
    fun::check(ctx, gen_library(), t, tau);
    return t;
  } catch (const TypeError&) {
    return canonical_inhabitant(tau);
  } catch (const std::invalid_argument&) {
    return canonical_inhabitant(tau);
  }
}

TypePtr gen_type(std::uint64_t seed) {
  Gen g(seed, {});
  return g.rand_type();
}

} // namespace funcore
