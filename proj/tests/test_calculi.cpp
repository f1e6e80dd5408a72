#include <doctest.h>

#include "castkit/cc.hpp"
#include "castkit/harness.hpp"
#include "castkit/parser.hpp"

using namespace castkit;

namespace {
const Type kUnk = Type::unknown();
const Type kNat = Type::nat();
const Type kInt = Type::int_();
const Type kBool = Type::bool_();
const BlameLabel l1(1), l2(2), l3(3);

CTerm cnat(uint64_t n) { return CTerm::constant(PrimConst::nat(n)); }
CTerm ctrue() { return CTerm::constant(PrimConst::bool_(true)); }

CTerm applied(const CTerm& v, const Cast& c, CCMode mode = CCMode::CC) {
  auto a = active_witness(c);
  REQUIRE(a);
  return apply_cast(v, c, *a, mode);
}
}  // namespace

TEST_CASE("EDA projection recasts or blames") {
  CTerm v = CTerm::cast(ctrue(), make_cast(Discipline::Eda, kBool, kUnk, l1));
  CTerm out = applied(v, make_cast(Discipline::Eda, kUnk, kNat, l2));
  REQUIRE(out.kind() == CTermKind::Blame);
  CHECK(out.blame_label() == l2);

  CTerm v2 = CTerm::cast(cnat(1), make_cast(Discipline::Eda, kNat, kUnk, l1));
  CTerm out2 = applied(v2, make_cast(Discipline::Eda, kUnk, kNat, l2));
  REQUIRE(out2.kind() == CTermKind::Cast);
  CHECK(out2.child(0) == cnat(1));
  CHECK(out2.cast_of().source() == kNat);
  CHECK(out2.cast_of().target() == kNat);
  CHECK(out2.cast_of().as_type_pair().label == l2);
}

TEST_CASE("lambda-B injections factor through ground types") {
  Type nb = Type::fun(kNat, kBool);
  CTerm v = CTerm::lam(kNat, ctrue());
  CTerm out = applied(v, make_cast(Discipline::LambdaB1, nb, kUnk, l1));
  // <<V>(Nat->Bool => ?->?)>(?->? => ?)
  REQUIRE(out.kind() == CTermKind::Cast);
  CHECK(out.cast_of().source() == Type::fun(kUnk, kUnk));
  CHECK(out.cast_of().target() == kUnk);
  REQUIRE(out.child(0).kind() == CTermKind::Cast);
  CHECK(out.child(0).cast_of().source() == nb);
  CHECK(out.child(0).cast_of().target() == Type::fun(kUnk, kUnk));
  CHECK(out.child(0).child(0) == v);
  // The factored injection starts from a ground type.
  CHECK(is_ground(out.cast_of().source()));
}

TEST_CASE("lambda-B projection compares ground tags") {
  Type g = Type::fun(kUnk, kUnk);
  CTerm w = CTerm::lam(kUnk, CTerm::var(0));
  CTerm v = CTerm::cast(w, make_cast(Discipline::LambdaB1, g, kUnk, l1));

  // Equal ground: unwrap.
  CHECK(applied(v, make_cast(Discipline::LambdaB1, kUnk, g, l2)) == w);

  // Both ground, unequal: blame the projection label.
  CTerm blame = applied(v, make_cast(Discipline::LambdaB1, kUnk, kNat, l2));
  REQUIRE(blame.kind() == CTermKind::Blame);
  CHECK(blame.blame_label() == l2);

  // Non-ground target factors through its ground type at the same label.
  Type nn = Type::fun(kNat, kNat);
  CTerm out = applied(v, make_cast(Discipline::LambdaB1, kUnk, nn, l2));
  // <<V> (? => ?->?)> (?->? => Nat->Nat), V kept whole underneath.
  REQUIRE(out.kind() == CTermKind::Cast);
  CHECK(out.cast_of().source() == g);
  CHECK(out.cast_of().target() == nn);
  REQUIRE(out.child(0).kind() == CTermKind::Cast);
  CHECK(out.child(0).cast_of().source() == kUnk);
  CHECK(out.child(0).cast_of().target() == g);
  CHECK(out.child(0).child(0) == v);
}

TEST_CASE("coerce for EDC") {
  CHECK(coerce_edc(ConsistencyProof::base(BaseType::Nat), l1).kind() == SimpleCoKind::Id);
  SimpleCo inj = coerce_edc(ConsistencyProof::unk_r(kNat), l1);
  CHECK(inj.kind() == SimpleCoKind::Inj);
  CHECK(inj.source() == kNat);
  // Fun case complements the label on the domain side.
  auto p = consistent(Type::fun(kNat, kBool), Type::fun(kUnk, kBool));
  REQUIRE(p);
  SimpleCo f = coerce_edc(*p, l1);
  REQUIRE(f.kind() == SimpleCoKind::Fun);
  CHECK(f.child(0).kind() == SimpleCoKind::Proj);
  CHECK(f.child(0).label() == l1.complement());
  CHECK(f.child(0).target() == kNat);
  CHECK(f.child(1).kind() == SimpleCoKind::Id);
}

TEST_CASE("shallow consistency and the LDC constructor") {
  CHECK(!shallow_consistent(kNat, kBool));
  SimpleCo fail = coerce_ldc(kNat, kBool, l1);
  REQUIRE(fail.kind() == SimpleCoKind::Fail);
  CHECK(fail.label() == l1);
  CHECK(fail.source() == kNat);
  CHECK(fail.target() == kBool);

  // Heads match, the domain pushes a failure inward at the complement label.
  SimpleCo f = coerce_ldc(Type::fun(kNat, kNat), Type::fun(kBool, kNat), l1);
  REQUIRE(f.kind() == SimpleCoKind::Fun);
  CHECK(f.child(0).kind() == SimpleCoKind::Fail);
  CHECK(f.child(0).label() == l1.complement());
  CHECK(f.child(1).kind() == SimpleCoKind::Id);

  SimpleCo proj = coerce_ldc(kUnk, kInt, l1);
  CHECK(proj.kind() == SimpleCoKind::Proj);
  CHECK(proj.target() == kInt);
}

TEST_CASE("coerce for lambda-C factors through ground types") {
  SeqCo p = coerce_lc(kUnk, kInt, l1);
  CHECK(p.kind() == SeqCoKind::ProjG);
  CHECK(p.target() == kInt);

  SeqCo c = coerce_lc(Type::fun(kNat, kBool), kUnk, l1);
  REQUIRE(c.kind() == SeqCoKind::Seq);
  CHECK(c.child(0).kind() == SeqCoKind::Fun);
  CHECK(c.child(1).kind() == SeqCoKind::InjG);
  CHECK(c.child(1).source() == Type::fun(kUnk, kUnk));
  // Components cast to and from ? with the same label on both sides.
  CHECK(c.child(0).child(0).kind() == SeqCoKind::ProjG);
  CHECK(c.child(0).child(0).label() == l1);

  CHECK(coerce_lc(kInt, kInt, l1).kind() == SeqCoKind::Id);
  CHECK_THROWS_AS(coerce_lc(kNat, kBool, l1), ContractViolation);
}

TEST_CASE("coercion endpoints match their inputs") {
  auto ts = enumerate_types(2, {kUnk, kNat, kBool}, 5);
  for (const Type& a : ts)
    for (const Type& b : ts) {
      auto p = consistent(a, b);
      if (p) {
        SimpleCo c = coerce_edc(*p, l1);
        CHECK(c.source() == a);
        CHECK(c.target() == b);
        SeqCo q = coerce_lc(a, b, l1);
        CHECK(q.source() == a);
        CHECK(q.target() == b);
      }
      SimpleCo lc = coerce_ldc(a, b, l1);
      CHECK(lc.source() == a);
      CHECK(lc.target() == b);
    }
}

TEST_CASE("coercion applyCast examples") {
  // lambda-C: mismatched ground tags blame the projection.
  CTerm f = CTerm::lam(kUnk, CTerm::var(0));
  CTerm v = CTerm::cast(f, Cast::seq(SeqCo::inj(Type::fun(kUnk, kUnk))));
  CTerm out = applied(v, Cast::seq(SeqCo::proj(Type::pair(kUnk, kUnk), l3)));
  REQUIRE(out.kind() == CTermKind::Blame);
  CHECK(out.blame_label() == l3);

  // LDC: failure blames immediately.
  CTerm out2 = applied(cnat(1), Cast::simple(Discipline::Ldc, SimpleCo::fail(l2, kNat, kBool)));
  REQUIRE(out2.kind() == CTermKind::Blame);
  CHECK(out2.blame_label() == l2);

  // EDC: identity returns the value.
  CHECK(applied(cnat(1), Cast::simple(Discipline::Edc, SimpleCo::id(kNat))) == cnat(1));

  // lambda-C: sequences split into nested casts.
  SeqCo seq = coerce_lc(Type::fun(kNat, kBool), kUnk, l1);
  CTerm fn = CTerm::lam(kNat, ctrue());
  CTerm split = applied(fn, Cast::seq(seq));
  REQUIRE(split.kind() == CTermKind::Cast);
  CHECK(split.child(0).kind() == CTermKind::Cast);
}

TEST_CASE("lambda-B applyCast keeps injections ground along evaluation") {
  // Any injection reaching a value position is from a ground type.
  GenConfig cfg;
  cfg.max_depth = 4;
  cfg.dyn_bias = 0.7;
  for (uint64_t seed = 200; seed < 230; ++seed) {
    cfg.seed = seed;
    GTerm g = gen_typed_program(cfg);
    for (Discipline d : {Discipline::LambdaB1, Discipline::LambdaB2}) {
      CompileOutput out = compile(TypingCtx(), g, d, CCMode::CC);
      CTerm cur = out.term;
      for (int s = 0; s < 300; ++s) {
        StepResult r = step_cc(cur, d, CCMode::CC);
        if (r.kind() != StepResult::Kind::Stepped) break;
        cur = r.info().next;
        std::function<void(const CTerm&, bool)> walk = [&](const CTerm& t, bool value_pos) {
          if (t.kind() == CTermKind::Cast && value_pos && value_of(t, CCMode::CC) &&
              t.cast_of().target().is_unknown())
            CHECK(is_ground(t.cast_of().source()));
          for (int i = 0; i < 3; ++i)
            if (t.child(i).valid()) walk(t.child(i), true);
        };
        walk(cur, false);
      }
    }
  }
}

TEST_CASE("complement labels are not source-site safety claims") {
  // When a projection fires, the deep coercion materializes and its function
  // case complements the projection label on the domain side. That fresh
  // complement label was nowhere in the compiled program, so blame safety
  // quantifies over the program's own (positive) cast-site labels only.
  GTerm prog = parse_program(
      "((lam (g : (-> Dyn Nat)) (g true)@2) "
      "((lam (x : Dyn) x) (lam (y : Nat) ((lam (z : Dyn) z) y)@4))@3)@1");
  CompileOutput edc = compile(TypingCtx(), prog, Discipline::Edc, CCMode::CCPrime);
  BlameLabel comp = BlameLabel(1).complement();
  CHECK(safe_for(edc.term, comp, Discipline::Edc));  // not yet in the term
  Outcome o = eval(edc.term, Discipline::Edc, CCMode::CCPrime);
  REQUIRE(o.is_blame());
  CHECK(o.label == comp);  // blamed regardless: the context is at fault

  // The type-pair disciplines reuse the projection label on both sides, so
  // the same program blames the positive site there.
  CompileOutput eda = compile(TypingCtx(), prog, Discipline::Eda, CCMode::CCPrime);
  Outcome o2 = eval(eda.term, Discipline::Eda, CCMode::CCPrime);
  REQUIRE(o2.is_blame());
  CHECK(o2.label == BlameLabel(1));

  // Positive labels judged safe stay safe along the same trace.
  for (int i = 1; i <= 4; ++i) {
    BlameLabel l(i);
    if (!safe_for(edc.term, l, Discipline::Edc)) continue;
    CTerm cur = edc.term;
    for (int s = 0; s < 200; ++s) {
      StepResult r = step_cc(cur, Discipline::Edc, CCMode::CCPrime);
      if (r.kind() != StepResult::Kind::Stepped) break;
      cur = r.info().next;
      CHECK(safe_for(cur, l, Discipline::Edc));
    }
  }
}

// ---------------------------------------------------------------------------
// Simulation-support fields of the lambda-B precision structure, checked over
// small enumerated value/cast pairs.
// ---------------------------------------------------------------------------

namespace {

std::vector<CTerm> values_at(const Type& t, Discipline d) {
  std::vector<CTerm> out;
  switch (t.kind()) {
    case TypeKind::Base:
      if (t == kNat) out = {cnat(1), cnat(2)};
      if (t == kBool) out = {ctrue()};
      if (t == kInt) out = {CTerm::constant(PrimConst::int_(1))};
      if (t == Type::unit()) out = {CTerm::constant(PrimConst::unit())};
      break;
    case TypeKind::Unknown: {
      auto inj = inert_witness(make_cast(d, kNat, kUnk, l1));
      if (inj) out.push_back(CTerm::wrap(cnat(1), *inj));
      auto injf = inert_witness(make_cast(d, Type::fun(kUnk, kUnk), kUnk, l2));
      if (injf)
        out.push_back(CTerm::wrap(CTerm::lam(kUnk, CTerm::var(0)), *injf));
      break;
    }
    case TypeKind::Fun: {
      for (const CTerm& body : values_at(t.rhs(), d)) {
        bool closed = !body.is(CTermKind::Var);
        if (closed) out.push_back(CTerm::lam(t.lhs(), body));
      }
      auto w = inert_witness(make_cast(d, Type::fun(kUnk, kUnk), t, l2));
      if (w) out.push_back(CTerm::wrap(CTerm::lam(kUnk, CTerm::var(0)), *w));
      break;
    }
    case TypeKind::Pair:
      for (const CTerm& a : values_at(t.lhs(), d))
        for (const CTerm& b : values_at(t.rhs(), d)) out.push_back(CTerm::cons(a, b));
      break;
    case TypeKind::Sum:
      for (const CTerm& a : values_at(t.lhs(), d)) out.push_back(CTerm::inl(t.rhs(), a));
      for (const CTerm& b : values_at(t.rhs(), d)) out.push_back(CTerm::inr(t.lhs(), b));
      break;
  }
  return out;
}

// Reduce m until some prefix point is precision-below target; empty on failure.
bool reduces_below(const CTerm& m, const CTerm& target, Discipline d, int fuel) {
  TypingCtx empty;
  CTerm cur = m;
  for (int i = 0; i <= fuel; ++i) {
    if (cterm_precision(empty, cur, empty, target, d)) return true;
    StepResult r = step_cc(cur, d, CCMode::CCPrime);
    if (r.kind() != StepResult::Kind::Stepped) return false;
    cur = r.info().next;
  }
  return false;
}

}  // namespace

TEST_CASE("lambda-B simulation support lemmas") {
  TypingCtx empty;
  std::vector<Type> pool = {kUnk,
                            kNat,
                            kBool,
                            Type::fun(kUnk, kUnk),
                            Type::fun(kNat, kNat),
                            Type::pair(kNat, kNat),
                            Type::pair(kUnk, kUnk),
                            Type::sum(kNat, kBool),
                            Type::sum(kUnk, kUnk)};
  for (Discipline d : {Discipline::LambdaB1, Discipline::LambdaB2}) {
    for (const Type& a : pool)
      for (const Type& a2 : pool) {
        if (!type_precision(a, a2)) continue;
        for (const CTerm& v : values_at(a, d))
          for (const CTerm& v2 : values_at(a2, d)) {
            if (!value_of(v, CCMode::CCPrime) || !value_of(v2, CCMode::CCPrime)) continue;
            if (!cterm_precision(empty, v, empty, v2, d)) continue;
            for (const Type& b : pool) {
              if (!consistent(a, b)) continue;
              Cast c = make_cast(d, a, b, l1);
              // applyCast catches up to the right.
              if (auto act = active_witness(c)) {
                if (type_precision(b, a2)) {
                  CTerm w = apply_cast(v, c, *act, CCMode::CCPrime);
                  Outcome o = eval(w, d, CCMode::CCPrime, 100);
                  REQUIRE(o.is_value());
                  CHECK(cterm_precision(empty, o.value, empty, v2, d));
                }
              }
              for (const Type& b2 : pool) {
                if (!consistent(a2, b2) || !type_precision(b, b2)) continue;
                Cast c2 = make_cast(d, a2, b2, l2);
                if (auto act2 = active_witness(c2)) {
                  // Cast simulates applyCast.
                  CTerm rhs = apply_cast(v2, c2, *act2, CCMode::CCPrime);
                  CHECK(reduces_below(CTerm::cast(v, c), rhs, d, 50));
                  // A bare value simulates applyCast when it sits below both
                  // endpoint types.
                  if (type_precision(a, a2) && type_precision(a, b2))
                    CHECK(cterm_precision(empty, v, empty, rhs, d));
                } else {
                  auto i2 = inert_witness(c2);
                  REQUIRE(i2);
                  CTerm rhs = CTerm::wrap(v2, *i2);
                  CHECK(reduces_below(CTerm::cast(v, c), rhs, d, 50));
                  if (type_precision(a, a2) && type_precision(a, b2))
                    CHECK(cterm_precision(empty, v, empty, rhs, d));
                }
              }
            }
          }
      }
  }
}
