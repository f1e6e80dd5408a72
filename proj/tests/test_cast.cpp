#include <doctest.h>

#include "castkit/cast.hpp"
#include "castkit/harness.hpp"

using namespace castkit;

namespace {

const Type kUnk = Type::unknown();
const Type kNat = Type::nat();
const Type kBool = Type::bool_();
const BlameLabel l1(1), l2(2);

std::vector<Type> table_types() { return enumerate_types(2, {kUnk, kNat, kBool}, 5); }

// Independent transcription of the published Active/Inert tables for the
// type-pair disciplines, used as an oracle against classify().
enum class Table { Active, Inert };

Table table_type_pair(Discipline d, const Type& a, const Type& b) {
  bool cross = !a.is_atomic() && a.kind() == b.kind();
  switch (d) {
    case Discipline::Eda:
      if (a.is_atomic() && a == b) return Table::Active;       // ActId
      if (b.is_unknown()) return Table::Inert;                 // InInj
      if (a.is_unknown()) return Table::Active;                // ActProj
      return cross ? Table::Active : Table::Inert;             // ActCross
    case Discipline::Edi:
      if (a.is_atomic() && a == b) return Table::Active;
      if (b.is_unknown()) return Table::Inert;
      if (a.is_unknown()) return Table::Active;
      return Table::Inert;                                     // InCross
    case Discipline::LambdaB1:
      if (a.is_atomic() && a == b) return Table::Active;
      if (b.is_unknown()) return is_ground(a) ? Table::Inert : Table::Active;
      if (a.is_unknown()) return Table::Active;
      return Table::Inert;
    case Discipline::LambdaB2:
      if (a.is_atomic() && a == b) return Table::Active;
      if (b.is_unknown()) return is_ground(a) ? Table::Inert : Table::Active;
      if (a.is_unknown()) return Table::Active;
      return a.kind() == TypeKind::Fun ? Table::Inert : Table::Active;
    default:
      throw std::logic_error("not a type-pair discipline");
  }
}

}  // namespace

TEST_CASE("classification follows the published tables") {
  auto ts = table_types();
  for (Discipline d :
       {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1, Discipline::LambdaB2}) {
    for (const Type& a : ts)
      for (const Type& b : ts) {
        if (!consistent(a, b)) continue;
        Cast c = make_cast(d, a, b, l1);
        Table want = table_type_pair(d, a, b);
        CHECK((classify(c) == CastClass::Active) == (want == Table::Active));
      }
  }
}

TEST_CASE("classification examples") {
  CHECK(classify(make_cast(Discipline::Eda, kNat, kUnk, l1)) == CastClass::Inert);
  Cast fun_cast = make_cast(Discipline::Eda, Type::fun(kNat, kNat), Type::fun(kUnk, kUnk), l1);
  CHECK(classify(fun_cast) == CastClass::Active);
  Cast fun_cast_edi =
      make_cast(Discipline::Edi, Type::fun(kNat, kNat), Type::fun(kUnk, kUnk), l1);
  CHECK(classify(fun_cast_edi) == CastClass::Inert);
  // Composite identity casts go through the cross rules, not ActId.
  Cast comp_id = make_cast(Discipline::Eda, Type::fun(kNat, kNat), Type::fun(kNat, kNat), l1);
  CHECK(classify(comp_id) == CastClass::Active);
  CHECK(classify(make_cast(Discipline::Edi, Type::fun(kNat, kNat), Type::fun(kNat, kNat), l1)) ==
        CastClass::Inert);
}

TEST_CASE("no cast into a base type is inert") {
  auto ts = table_types();
  for (Discipline d :
       {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1, Discipline::LambdaB2,
        Discipline::Edc, Discipline::Ldc, Discipline::LambdaC, Discipline::LambdaS,
        Discipline::Hyper}) {
    for (const Type& a : ts)
      for (const Type& b : ts) {
        if (!b.is_base()) continue;
        if (d != Discipline::Ldc && !consistent(a, b)) continue;
        CHECK(classify(make_cast(d, a, b, l1)) == CastClass::Active);
      }
    // Grammar-enumerated coercions, same check on the target type.
    if (d == Discipline::Edc || d == Discipline::Ldc || d == Discipline::LambdaC ||
        d == Discipline::LambdaS || d == Discipline::Hyper) {
      for (const Cast& c : enumerate_coercions(d, 1))
        if (c.target().is_base()) CHECK(classify(c) == CastClass::Active);
    }
  }
}

TEST_CASE("inert casts into constructor heads are cross casts") {
  auto ts = table_types();
  for (Discipline d :
       {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1, Discipline::LambdaB2}) {
    for (const Type& a : ts)
      for (const Type& b : ts) {
        if (b.is_atomic() || !consistent(a, b)) continue;
        Cast c = make_cast(d, a, b, l1);
        if (classify(c) != CastClass::Inert) continue;
        auto x = cross_witness(c);
        REQUIRE(x);
        CHECK(a.kind() == b.kind());
      }
  }
  for (Discipline d : {Discipline::Edc, Discipline::Ldc, Discipline::LambdaC,
                       Discipline::LambdaS, Discipline::Hyper}) {
    for (const Cast& c : enumerate_coercions(d, 1)) {
      if (c.target().is_atomic()) continue;
      if (classify(c) != CastClass::Inert) continue;
      auto x = cross_witness(c);
      REQUIRE(x);
      CHECK(c.source().kind() == c.target().kind());
    }
  }
}

TEST_CASE("decomposition examples") {
  // dom is contravariant: (Int->Bool) => (?->?) decomposes to ? => Int.
  Cast c = make_cast(Discipline::Eda, Type::fun(Type::int_(), kBool),
                     Type::fun(kUnk, kUnk), l1);
  auto x = cross_witness(c);
  REQUIRE(x);
  Cast dom = decompose(c, *x, CrossField::Dom);
  CHECK(dom.source() == kUnk);
  CHECK(dom.target() == Type::int_());
  Cast cod = decompose(c, *x, CrossField::Cod);
  CHECK(cod.source() == kBool);
  CHECK(cod.target() == kUnk);

  // lambda-C: cod (c -> d) = d.
  SeqCo lc = coerce_lc(Type::fun(kNat, kNat), Type::fun(kUnk, kUnk), l1);
  Cast lcc = Cast::seq(lc);
  auto x2 = cross_witness(lcc);
  REQUIRE(x2);
  CHECK(decompose(lcc, *x2, CrossField::Cod).target() == kUnk);

  // Hypercoercions: fst (id ; c * d ; id) = c.
  HCo h = coerce_h(Type::pair(kNat, kBool), Type::pair(kUnk, kUnk), l1);
  Cast hc = Cast::hyper(h);
  auto x3 = cross_witness(hc);
  REQUIRE(x3);
  CHECK(decompose(hc, *x3, CrossField::Fst).source() == kNat);

  // Head mismatch is a caller error.
  CHECK_THROWS_AS(decompose(c, *x, CrossField::Fst), ContractViolation);
}

TEST_CASE("decomposition endpoints are componentwise on enumerated cross casts") {
  auto ts = table_types();
  for (Discipline d :
       {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1, Discipline::LambdaB2,
        Discipline::Edc, Discipline::Ldc, Discipline::LambdaC}) {
    for (const Type& a : ts)
      for (const Type& b : ts) {
        if (a.is_atomic() || a.kind() != b.kind()) continue;
        if (!consistent(a, b) && d != Discipline::Ldc) continue;
        Cast c = make_cast(d, a, b, l1);
        auto x = cross_witness(c);
        if (!x) continue;
        switch (x->head) {
          case TypeHead::Fun: {
            Cast dom = decompose(c, *x, CrossField::Dom);
            CHECK(dom.source() == b.lhs());
            CHECK(dom.target() == a.lhs());
            Cast cod = decompose(c, *x, CrossField::Cod);
            CHECK(cod.source() == a.rhs());
            CHECK(cod.target() == b.rhs());
            break;
          }
          case TypeHead::Pair: {
            CHECK(decompose(c, *x, CrossField::Fst).source() == a.lhs());
            CHECK(decompose(c, *x, CrossField::Fst).target() == b.lhs());
            CHECK(decompose(c, *x, CrossField::Snd).source() == a.rhs());
            break;
          }
          case TypeHead::Sum: {
            CHECK(decompose(c, *x, CrossField::InL).source() == a.lhs());
            CHECK(decompose(c, *x, CrossField::InR).target() == b.rhs());
            break;
          }
        }
      }
  }
}

TEST_CASE("blame safety examples") {
  CHECK(cast_blame_safe(make_cast(Discipline::Eda, Type::int_(), kUnk, l1), l1));
  Cast ii = make_cast(Discipline::LambdaB1, Type::fun(Type::int_(), Type::int_()), kUnk, l1);
  CHECK(!cast_blame_safe(ii, l1));
  CHECK(cast_blame_safe(ii, l2));
  Cast proj = Cast::simple(Discipline::Edc, SimpleCo::proj(kNat, l1));
  CHECK(!cast_blame_safe(proj, l1));
  CHECK(cast_blame_safe(proj, l2));
  Cast fail = Cast::simple(Discipline::Ldc, SimpleCo::fail(l1, kNat, kBool));
  CHECK(!cast_blame_safe(fail, l1));
  CHECK(cast_blame_safe(fail, l2));
}

TEST_CASE("blame safety closes under decomposition") {
  auto ts = table_types();
  std::vector<Cast> pool;
  for (Discipline d :
       {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1, Discipline::LambdaB2,
        Discipline::Edc, Discipline::Ldc, Discipline::LambdaC}) {
    pool.clear();
    for (const Type& a : ts)
      for (const Type& b : ts)
        if (consistent(a, b) || d == Discipline::Ldc) pool.push_back(make_cast(d, a, b, l1));
    if (d == Discipline::Edc || d == Discipline::Ldc || d == Discipline::LambdaC) {
      auto extra = enumerate_coercions(d, 1);
      pool.insert(pool.end(), extra.begin(), extra.end());
    }
    for (const Cast& c : pool) {
      auto x = cross_witness(c);
      if (!x) continue;
      for (BlameLabel l : {l1, l2, l1.complement()}) {
        if (!cast_blame_safe(c, l)) continue;
        std::vector<CrossField> fields;
        if (x->head == TypeHead::Fun) fields = {CrossField::Dom, CrossField::Cod};
        if (x->head == TypeHead::Pair) fields = {CrossField::Fst, CrossField::Snd};
        if (x->head == TypeHead::Sum) fields = {CrossField::InL, CrossField::InR};
        for (CrossField f : fields) CHECK(cast_blame_safe(decompose(c, *x, f), l));
      }
    }
  }
}

TEST_CASE("lambda-B cast precision relations") {
  Type g = Type::fun(kUnk, kUnk);
  auto inj = [&](BlameLabel l) {
    return *inert_witness(make_cast(Discipline::LambdaB1, g, kUnk, l));
  };
  // Same ground, any labels.
  CHECK(lb_precision_ii(inj(l1), inj(l2)));
  // Injections at different grounds are unrelated.
  auto pair_inj =
      *inert_witness(make_cast(Discipline::LambdaB1, Type::pair(kUnk, kUnk), kUnk, l2));
  CHECK(!lb_precision_ii(inj(l1), pair_inj));
  // Injection below a type iff its ground is.
  CHECK(lb_precision_it(inj(l1), Type::fun(kNat, kNat)));
  CHECK(!lb_precision_it(inj(l1), kNat));
  // No type sits below an injection.
  CHECK(!lb_precision_ti(Type::fun(kNat, kNat), pair_inj));

  // Cross casts relate pointwise.
  auto w1 = *inert_witness(
      make_cast(Discipline::LambdaB1, Type::fun(kUnk, kUnk), Type::fun(kUnk, kNat), l1));
  auto w2 = *inert_witness(
      make_cast(Discipline::LambdaB1, Type::fun(kNat, kUnk), Type::fun(kNat, kNat), l2));
  CHECK(lb_precision_ii(w1, w2));
  CHECK(!lb_precision_ii(w2, w1));
  CHECK(lb_precision_it(w1, Type::fun(kNat, kNat)));
  // A type sits below an inert cross cast when it is below both endpoints.
  auto w3 = *inert_witness(make_cast(Discipline::LambdaB1, Type::fun(kUnk, kNat),
                                     Type::fun(kNat, kNat), l1));
  CHECK(lb_precision_ti(Type::fun(kUnk, kNat), w3));
  CHECK(!lb_precision_ti(Type::fun(kNat, kNat), w3));  // Nat is not below ?
}

TEST_CASE("lambda-B precision structure lemmas on enumerated inert casts") {
  auto ts = table_types();
  for (Discipline d : {Discipline::LambdaB1, Discipline::LambdaB2}) {
    std::vector<InertWitness> inerts;
    for (const Type& a : ts)
      for (const Type& b : ts)
        if (consistent(a, b))
          if (auto i = inert_witness(make_cast(d, a, b, l1))) inerts.push_back(*i);

    for (const auto& i : inerts) {
      const auto& tp = i.cast.as_type_pair();
      // Type precision implies cast-type precision.
      for (const Type& a2 : ts)
        if (type_precision(tp.source, a2) && type_precision(tp.target, a2))
          CHECK(lb_precision_it(i, a2));
      // Cast-type precision implies type precision.
      for (const Type& a2 : ts)
        if (lb_precision_it(i, a2)) {
          CHECK(type_precision(tp.source, a2));
          CHECK(type_precision(tp.target, a2));
        }
      // Cast-cast precision implies type precision.
      for (const auto& i2 : inerts)
        if (lb_precision_ii(i, i2)) {
          CHECK(type_precision(tp.source, i2.cast.as_type_pair().source));
          CHECK(type_precision(tp.target, i2.cast.as_type_pair().target));
        }
      // Type-cast precision implies type precision.
      for (const Type& a : ts)
        if (lb_precision_ti(a, i)) {
          CHECK(type_precision(a, tp.source));
          CHECK(type_precision(a, tp.target));
        }
    }
  }
}

TEST_CASE("witness tokens validate at construction") {
  Cast inert = make_cast(Discipline::Eda, kNat, kUnk, l1);
  CHECK(inert_witness(inert));
  CHECK(!active_witness(inert));
  Cast active = make_cast(Discipline::Eda, kUnk, kNat, l1);
  CHECK(active_witness(active));
  CHECK(!inert_witness(active));
  CHECK(!cross_witness(active));
}
