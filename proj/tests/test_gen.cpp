#include "doctest.h"

#include "funcore/fun/printer.hpp"
#include "funcore/fun/typing.hpp"
#include "funcore/gen.hpp"
#include "helpers.hpp"

using namespace funcore;
using namespace funcore::fun;

TEST_CASE("the generator library typechecks") {
  CHECK_NOTHROW(check_program(gen_library()));
}

TEST_CASE("canonical inhabitants check at their type") {
  for (TypePtr tau : {t_int(), t_list(t_int()), t_pair(t_int(), t_int()),
                      t_stream(t_int()), t_lpair(t_int(), t_int()),
                      t_arrow(t_int(), t_int()), t_list(t_pair(t_int(), t_int()))}) {
    CAPTURE(show_type(tau));
    TermPtr t = canonical_inhabitant(tau);
    CHECK_NOTHROW(check({}, gen_library(), t, tau));
  }
  CHECK_THROWS_AS(canonical_inhabitant(t_stream(t_list(t_int()))), std::invalid_argument);
}

TEST_CASE("generated terms are deterministic in the seed") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    TypePtr tau = gen_type(seed * 7919);
    TermPtr a = gen_typed_term(seed, {}, tau, 4);
    TermPtr b = gen_typed_term(seed, {}, tau, 4);
    CHECK(alpha_eq(a, b));
  }
}

TEST_CASE("different seeds explore different terms") {
  int distinct = 0;
  TermPtr prev;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TermPtr t = gen_typed_term(seed, {}, t_int(), 4);
    if (prev && !alpha_eq(prev, t)) ++distinct;
    prev = t;
  }
  CHECK(distinct > 20);
}

TEST_CASE("generated terms infer and check at the requested type") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    TypePtr tau = gen_type(seed ^ 0x9e3779b97f4a7c15ull);
    TermPtr t = gen_typed_term(seed, {}, tau, 4);
    CAPTURE(seed);
    CAPTURE(show_type(tau));
    CAPTURE(show_term(t));
    CHECK_NOTHROW(check({}, gen_library(), t, tau));
    TypePtr inferred = infer({}, gen_library(), t);
    CHECK(type_eq(inferred, tau));
    CHECK(free_vars(t).empty());
    CHECK(free_covars(t).empty());
  }
}

TEST_CASE("generation respects a nonempty context") {
  TypingContext ctx;
  ctx.bind("v", Mode::Prd, t_int());
  bool used = false;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    TermPtr t = gen_typed_term(seed, ctx, t_int(), 3);
    CHECK_NOTHROW(check(ctx, gen_library(), t, t_int()));
    if (free_vars(t).count("v")) used = true;
  }
  CHECK(used);
}

TEST_CASE("depth zero produces leaves") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    TermPtr t = gen_typed_term(seed, {}, t_int(), 0);
    CHECK((as<Lit>(t) != nullptr || as<Var>(t) != nullptr));
  }
}

TEST_CASE("gen_type stays in the generator universe") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    TypePtr tau = gen_type(seed);
    REQUIRE(tau);
    if (tau->kind == TypeKind::Stream) CHECK(type_eq(tau->a, t_int()));
    CHECK(tau->kind != TypeKind::Meta);
  }
}
