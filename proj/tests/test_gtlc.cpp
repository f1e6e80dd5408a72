#include <doctest.h>

#include "castkit/gtlc.hpp"
#include "castkit/harness.hpp"

using namespace castkit;

namespace {
GTerm nat(uint64_t n) { return GTerm::constant(PrimConst::nat(n)); }
GTerm tru() { return GTerm::constant(PrimConst::bool_(true)); }
const BlameLabel l1(1), l2(2);
}  // namespace

TEST_CASE("primitive constants have primitive types") {
  CHECK(is_prim_type(PrimConst::fun(PrimOp::Add).type()));
  CHECK(is_prim_type(PrimConst::nat(3).type()));
  CHECK(!is_prim_type(Type::fun(Type::fun(Type::nat(), Type::nat()), Type::nat())));
  CHECK(PrimConst::fun(PrimOp::Add).type() ==
        Type::fun(Type::nat(), Type::fun(Type::nat(), Type::nat())));
}

TEST_CASE("delta covers the primitive table") {
  CHECK(delta(PrimConst::fun(PrimOp::Inc), PrimConst::nat(1))->nat_value() == 2);
  CHECK(delta(PrimConst::fun(PrimOp::Not), PrimConst::bool_(true))->bool_value() == false);
  CHECK(delta(PrimConst::fun(PrimOp::Neg), PrimConst::int_(-4))->int_value() == 4);
  CHECK(delta(PrimConst::fun(PrimOp::IsZero), PrimConst::nat(0))->bool_value());
  auto partial = delta(PrimConst::fun(PrimOp::Add), PrimConst::nat(2));
  REQUIRE(partial);
  CHECK(partial->type() == Type::fun(Type::nat(), Type::nat()));
  CHECK(delta(*partial, PrimConst::nat(3))->nat_value() == 5);
}

TEST_CASE("typechecking examples") {
  // cons $2 $3 : Nat * Nat
  CHECK(typecheck_gtlc(TypingCtx(), GTerm::cons(nat(2), nat(3))) ==
        Type::pair(Type::nat(), Type::nat()));

  // ((lam[?] `0) $4) : Nat -- matching gives ? |> ? -> ?, then join keeps ?.
  GTerm app = GTerm::app(GTerm::lam(Type::unknown(), GTerm::var(0)), nat(4), l1);
  CHECK(typecheck_gtlc(TypingCtx(), app) == Type::unknown());

  // ($true $1) fails: Bool matches no function type.
  CHECK_THROWS_AS(typecheck_gtlc(TypingCtx(), GTerm::app(tru(), nat(1), l1)), TypeError);
}

TEST_CASE("application types through matching") {
  // (lam (x : ? -> Nat) (x $1)) applied under matching.
  GTerm inner = GTerm::app(GTerm::var(0), nat(1), l2);
  GTerm lam = GTerm::lam(Type::fun(Type::unknown(), Type::nat()), inner);
  CHECK(typecheck_gtlc(TypingCtx(), lam) ==
        Type::fun(Type::fun(Type::unknown(), Type::nat()), Type::nat()));
}

TEST_CASE("if joins branch types") {
  GTerm dyn_body = GTerm::app(GTerm::lam(Type::unknown(), GTerm::var(0)), nat(4), l1);
  GTerm m = GTerm::if_(tru(), dyn_body, nat(1), l2);
  CHECK(typecheck_gtlc(TypingCtx(), m) == Type::nat());
}

TEST_CASE("case joins branch types and checks annotations") {
  GTerm scrut = GTerm::inr(Type::bool_(), tru());  // Bool + Bool
  GTerm m = GTerm::case_(scrut, Type::bool_(), Type::bool_(), GTerm::var(0), GTerm::var(0), l1);
  CHECK(typecheck_gtlc(TypingCtx(), m) == Type::bool_());

  GTerm bad = GTerm::case_(scrut, Type::nat(), Type::bool_(), GTerm::var(0), GTerm::var(0), l1);
  CHECK_THROWS_AS(typecheck_gtlc(TypingCtx(), bad), TypeError);
}

TEST_CASE("term precision ignores labels and compares annotations") {
  GTerm loose = GTerm::app(GTerm::lam(Type::unknown(), GTerm::var(0)), nat(42), l1);
  GTerm tight = GTerm::app(GTerm::lam(Type::nat(), GTerm::var(0)), nat(42), l2);
  CHECK(gterm_precision(loose, tight));
  CHECK(!gterm_precision(tight, loose));
  CHECK(gterm_precision(tight, tight));
  CHECK(!gterm_precision(nat(1), nat(2)));
}

TEST_CASE("static gradual guarantee on enumerated pairs") {
  for (const GTerm& m : enumerate_closed_gterms(2)) {
    Type a2 = typecheck_gtlc(TypingCtx(), m);
    for (auto& [less, more] : loosening_pairs(m)) {
      REQUIRE(gterm_precision(less, more));
      Type more_t = typecheck_gtlc(TypingCtx(), more);
      Type less_t = typecheck_gtlc(TypingCtx(), less);  // must stay well-typed
      CHECK(type_precision(less_t, more_t));
      (void)a2;
    }
  }
}

TEST_CASE("generated programs always typecheck") {
  for (uint64_t seed = 1; seed <= 60; ++seed) {
    for (double bias : {0.0, 0.5, 1.0}) {
      GenConfig cfg;
      cfg.seed = seed;
      cfg.max_depth = 4;
      cfg.dyn_bias = bias;
      GTerm m = gen_typed_program(cfg);
      CHECK_NOTHROW(typecheck_gtlc(TypingCtx(), m));
    }
  }
}

TEST_CASE("depth-zero generation yields a constant at base goals") {
  GenConfig cfg;
  cfg.max_depth = 0;
  cfg.dyn_bias = 0.0;
  cfg.goals = {Type::nat()};
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    cfg.seed = seed;
    GTerm m = gen_typed_program(cfg);
    CHECK(typecheck_gtlc(TypingCtx(), m) == Type::nat());
    CHECK(m.depth() <= 2);  // a constant or one primitive application
  }
}

TEST_CASE("generation is deterministic by seed") {
  GenConfig cfg;
  cfg.seed = 12;
  cfg.max_depth = 5;
  GTerm a = gen_typed_program(cfg);
  GTerm b = gen_typed_program(cfg);
  CHECK(a.str() == b.str());
}

TEST_CASE("full bias loosens every binder annotation") {
  GenConfig cfg;
  cfg.seed = 3;
  cfg.max_depth = 4;
  cfg.dyn_bias = 1.0;
  GTerm m = gen_typed_program(cfg);
  std::function<void(const GTerm&)> walk = [&](const GTerm& t) {
    if (t.kind() == GTermKind::Lam || t.kind() == GTermKind::Inl || t.kind() == GTermKind::Inr)
      CHECK(t.annot().is_unknown());
    if (t.kind() == GTermKind::Case) {
      CHECK(t.annot().is_unknown());
      CHECK(t.annot2().is_unknown());
    }
    for (int i = 0; i < 3; ++i)
      if (t.child(i).valid()) walk(t.child(i));
  };
  walk(m);
}
