#include <doctest.h>

#include "castkit/compile.hpp"
#include "castkit/harness.hpp"

using namespace castkit;

namespace {
const Type kUnk = Type::unknown();
const Type kNat = Type::nat();
const BlameLabel l1(1);

GTerm nat(uint64_t n) { return GTerm::constant(PrimConst::nat(n)); }
}  // namespace

TEST_CASE("cons compiles without casts") {
  CompileOutput out =
      compile(TypingCtx(), GTerm::cons(nat(2), nat(3)), Discipline::Eda, CCMode::CC);
  CHECK(out.term == CTerm::cons(CTerm::constant(PrimConst::nat(2)),
                                CTerm::constant(PrimConst::nat(3))));
  CHECK(out.type == Type::pair(kNat, kNat));
}

TEST_CASE("application casts the function through its matched head") {
  GTerm g = GTerm::app(GTerm::lam(kUnk, GTerm::var(0)), nat(4), l1);
  CompileOutput out = compile(TypingCtx(), g, Discipline::Eda, CCMode::CC);
  REQUIRE(out.term.kind() == CTermKind::App);
  CTerm fn = out.term.child(0);
  CTerm arg = out.term.child(1);
  REQUIRE(fn.kind() == CTermKind::Cast);
  // The function already has type ? -> ?, so the head cast is identity-shaped
  // but still inserted.
  CHECK(fn.cast_of().source() == Type::fun(kUnk, kUnk));
  CHECK(fn.cast_of().target() == Type::fun(kUnk, kUnk));
  REQUIRE(arg.kind() == CTermKind::Cast);
  CHECK(arg.cast_of().source() == kNat);
  CHECK(arg.cast_of().target() == kUnk);
  CHECK(out.type == kUnk);
}

TEST_CASE("projection from ? casts through the matched pair type") {
  GTerm dyn = GTerm::app(GTerm::lam(kUnk, GTerm::var(0)),
                         GTerm::cons(nat(1), nat(2)), l1);
  GTerm g = GTerm::proj(1, dyn, BlameLabel(2));
  CompileOutput out = compile(TypingCtx(), g, Discipline::Eda, CCMode::CC);
  REQUIRE(out.term.kind() == CTermKind::Proj);
  CTerm inner = out.term.child(0);
  REQUIRE(inner.kind() == CTermKind::Cast);
  CHECK(inner.cast_of().source() == kUnk);
  CHECK(inner.cast_of().target() == Type::pair(kUnk, kUnk));
}

TEST_CASE("case compiles to function branches in CC and binders in CC'") {
  GTerm g = GTerm::case_(GTerm::inl(Type::bool_(), nat(1)), kNat, Type::bool_(),
                         GTerm::var(0), nat(9), l1);
  CompileOutput cc = compile(TypingCtx(), g, Discipline::Eda, CCMode::CC);
  CHECK(cc.term.kind() == CTermKind::CaseFn);
  CHECK(cc.term.child(1).kind() == CTermKind::Lam);
  CompileOutput ccp = compile(TypingCtx(), g, Discipline::Eda, CCMode::CCPrime);
  CHECK(ccp.term.kind() == CTermKind::CaseBind);
  CHECK(ccp.term.child(1).kind() == CTermKind::Cast);
}

TEST_CASE("compilation preserves types on fuzzed inputs") {
  GenConfig cfg;
  cfg.max_depth = 5;
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    cfg.seed = seed;
    cfg.dyn_bias = (seed % 3) * 0.5;
    GTerm g = gen_typed_program(cfg);
    Type src = typecheck_gtlc(TypingCtx(), g);
    for (Discipline d : {Discipline::Eda, Discipline::LambdaB1, Discipline::Edc,
                         Discipline::Ldc, Discipline::LambdaC, Discipline::LambdaS,
                         Discipline::Hyper}) {
      CompileOutput out = compile(TypingCtx(), g, d, CCMode::CC);
      CHECK(out.type == src);
      CHECK(typecheck_cc(TypingCtx(), out.term, CCMode::CC, d) == src);
      if (!supports_compose(d)) {
        CompileOutput outp = compile(TypingCtx(), g, d, CCMode::CCPrime);
        CHECK(typecheck_cc(TypingCtx(), outp.term, CCMode::CCPrime, d) == src);
      }
    }
  }
}

TEST_CASE("compilation preserves precision into lambda-B'") {
  for (const GTerm& m : enumerate_closed_gterms(2)) {
    for (auto& [less, more] : loosening_pairs(m, 64)) {
      for (Discipline d : {Discipline::LambdaB1, Discipline::LambdaB2}) {
        CompileOutput lo = compile(TypingCtx(), less, d, CCMode::CCPrime);
        CompileOutput hi = compile(TypingCtx(), more, d, CCMode::CCPrime);
        CHECK(type_precision(lo.type, hi.type));
        CHECK(cterm_precision(TypingCtx(), lo.term, TypingCtx(), hi.term, d));
      }
    }
  }
}

TEST_CASE("compiled terms satisfy the size predicate with count at most 1") {
  GenConfig cfg;
  cfg.max_depth = 5;
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    cfg.seed = seed;
    cfg.dyn_bias = (seed % 3) * 0.5;
    GTerm g = gen_typed_program(cfg);
    for (Discipline d : {Discipline::LambdaS, Discipline::Hyper, Discipline::Eda}) {
      CompileOutput out = compile(TypingCtx(), g, d, CCMode::CC);
      auto n = size_ok(out.term, false);
      REQUIRE(n);
      CHECK(*n <= 1);
      auto nd = size_ok(out.term, true);
      REQUIRE(nd);
      CHECK(*nd <= 1);
    }
  }
}
