#include "castkit/cc.hpp"

namespace castkit {

namespace {

// Canonical form at type ?: the consumed value must be a cast (CC) or wrap
// (CC') of a value through an inert cast into ?. Anything else signals an
// evaluator bug, not a user error.
struct DynValue {
  CTerm inner;
  Cast inj;
};

DynValue canonical_dyn(const CTerm& v) {
  if (!v.is(CTermKind::Cast) && !v.is(CTermKind::Wrap))
    throw InvariantViolation("value of type ? is not an injection: " + v.str());
  const Cast& c = v.cast_of();
  if (!c.target().is_unknown() || classify(c) != CastClass::Inert)
    throw InvariantViolation("value of type ? wraps a non-inert or non-? cast: " + v.str());
  return {v.child(0), c};
}

CTerm eta_by_head(const CTerm& v, const Cast& c, CCMode mode) {
  auto x = cross_witness(c);
  if (!x) throw ContractViolation("eta on a non-cross cast");
  switch (x->head) {
    case TypeHead::Fun: return eta_fun(v, c, *x);
    case TypeHead::Pair: return eta_pair(v, c, *x);
    case TypeHead::Sum: return eta_sum(v, c, *x, mode);
  }
  throw ContractViolation("eta: unreachable");
}

CTerm apply_type_pair(const CTerm& v, const Cast& c, CCMode mode) {
  Discipline d = c.discipline();
  const TypePairCast& tp = c.as_type_pair();
  const Type& a = tp.source;
  const Type& b = tp.target;

  // Identity on atomic types.
  if (a.is_atomic() && a == b) return v;

  // Projection out of ?.
  if (a.is_unknown()) {
    DynValue dv = canonical_dyn(v);
    Type src = dv.inj.source();
    switch (d) {
      case Discipline::Eda:
      case Discipline::Edi:
        if (consistent(src, b)) return CTerm::cast(dv.inner, Cast::type_pair(d, src, b, tp.label));
        return CTerm::blame(tp.label, b);
      case Discipline::LambdaB1:
      case Discipline::LambdaB2: {
        if (is_ground(b)) {
          if (src == b) return dv.inner;
          return CTerm::blame(tp.label, b);
        }
        Type h = gnd(b);
        // Factor through the ground type: ? => gnd B => B, both at l2.
        return CTerm::cast(CTerm::cast(v, Cast::type_pair(d, Type::unknown(), h, tp.label)),
                           Cast::type_pair(d, h, b, tp.label));
      }
      default:
        break;
    }
  }

  // Injection into ? from a non-ground type (lambda-B only; EDA/EDI
  // injections are inert).
  if (b.is_unknown()) {
    Type g = gnd(a);
    return CTerm::cast(CTerm::cast(v, Cast::type_pair(d, a, g, tp.label)),
                       Cast::type_pair(d, g, Type::unknown(), tp.label));
  }

  // Active cross casts on pairs and sums in the primed lambda-B variant
  // distribute componentwise over the value instead of eta-expanding it;
  // eta expansion would put the value out of precision with itself, which
  // the simulation machinery cannot tolerate.
  if (d == Discipline::LambdaB2 && mode == CCMode::CCPrime) {
    auto x = cross_witness(c);
    if (!x) throw ContractViolation("cross applyCast on a non-cross cast");
    if (x->head == TypeHead::Pair) {
      if (!v.is(CTermKind::Cons))
        throw InvariantViolation("pair cast applied to a non-pair value");
      return CTerm::cons(CTerm::cast(v.child(0), decompose(c, *x, CrossField::Fst)),
                         CTerm::cast(v.child(1), decompose(c, *x, CrossField::Snd)));
    }
    if (x->head == TypeHead::Sum) {
      if (v.is(CTermKind::Inl))
        return CTerm::inl(b.rhs(), CTerm::cast(v.child(0), decompose(c, *x, CrossField::InL)));
      if (v.is(CTermKind::Inr))
        return CTerm::inr(b.lhs(), CTerm::cast(v.child(0), decompose(c, *x, CrossField::InR)));
      throw InvariantViolation("sum cast applied to a non-injection value");
    }
  }

  // Active cross casts reduce by eta expansion.
  return eta_by_head(v, c, mode);
}

CTerm apply_simple(const CTerm& v, const Cast& c, CCMode mode) {
  const SimpleCo& co = c.as_simple();
  switch (co.kind()) {
    case SimpleCoKind::Id:
      return v;
    case SimpleCoKind::Proj: {
      DynValue dv = canonical_dyn(v);
      Type a = dv.inj.source();
      Type b = co.target();
      if (c.discipline() == Discipline::Edc) {
        auto p = consistent(a, b);
        if (!p) return CTerm::blame(co.label(), b);
        return CTerm::cast(dv.inner, Cast::simple(Discipline::Edc, coerce_edc(*p, co.label())));
      }
      return CTerm::cast(dv.inner,
                         Cast::simple(Discipline::Ldc, coerce_ldc(a, b, co.label())));
    }
    case SimpleCoKind::Fail:
      return CTerm::blame(co.label(), co.target());
    case SimpleCoKind::Fun:
    case SimpleCoKind::Pair:
    case SimpleCoKind::Sum:
      return eta_by_head(v, c, mode);
    case SimpleCoKind::Inj:
      break;
  }
  throw ContractViolation("applyCast on an inert coercion");
}

CTerm apply_seq(const CTerm& v, const Cast& c, CCMode mode) {
  const SeqCo& co = c.as_seq();
  switch (co.kind()) {
    case SeqCoKind::Id:
      return v;
    case SeqCoKind::ProjG: {
      DynValue dv = canonical_dyn(v);
      if (dv.inj.as_seq().source() == co.target()) return dv.inner;
      return CTerm::blame(co.label(), co.target());
    }
    case SeqCoKind::Seq:
      return CTerm::cast(CTerm::cast(v, Cast::seq(co.child(0))), Cast::seq(co.child(1)));
    case SeqCoKind::Pair:
    case SeqCoKind::Sum:
      return eta_by_head(v, c, mode);
    default:
      break;
  }
  throw ContractViolation("applyCast on an inert coercion");
}

CTerm apply_lambda_s(const CTerm& v, const Cast& c) {
  const SCo& co = c.as_lambda_s();
  switch (co.kind()) {
    case STopKind::IdDyn:
      return v;
    case STopKind::ProjSeq: {
      DynValue dv = canonical_dyn(v);
      return CTerm::cast(dv.inner, compose_casts(dv.inj, c));
    }
    case STopKind::Mid: {
      SInt i = co.intermediate();
      if (i.kind() == SIntKind::Fail) return CTerm::blame(i.label(), i.target());
      if (i.kind() == SIntKind::Grd) {
        SGnd g = i.ground();
        switch (g.kind()) {
          case SGndKind::IdBase:
            return v;
          case SGndKind::Pair:
            if (!v.is(CTermKind::Cons))
              throw InvariantViolation("pair cast applied to a non-pair simple value");
            return CTerm::cons(CTerm::cast(v.child(0), Cast::lambda_s(g.child(0))),
                               CTerm::cast(v.child(1), Cast::lambda_s(g.child(1))));
          case SGndKind::Sum:
            if (v.is(CTermKind::Inl))
              return CTerm::inl(g.target().rhs(),
                                CTerm::cast(v.child(0), Cast::lambda_s(g.child(0))));
            if (v.is(CTermKind::Inr))
              return CTerm::inr(g.target().lhs(),
                                CTerm::cast(v.child(0), Cast::lambda_s(g.child(1))));
            throw InvariantViolation("sum cast applied to a non-injection simple value");
          case SGndKind::Fun:
            break;
        }
      }
      break;
    }
  }
  throw ContractViolation("applyCast on an inert coercion");
}

CTerm apply_hyper(const CTerm& v, const Cast& c) {
  const HCo& co = c.as_hyper();
  if (co.is_id_dyn()) return v;
  if (co.proj_kind() == HProjKind::Proj) {
    DynValue dv = canonical_dyn(v);
    return CTerm::cast(dv.inner, compose_casts(dv.inj, c));
  }
  if (co.end_kind() == HEndKind::Fail) return CTerm::blame(co.end_label(), co.target());
  // p = id, i = id: middle decides.
  const HMid& m = co.middle();
  switch (m.kind()) {
    case HMidKind::IdBase:
      return v;
    case HMidKind::Pair:
      if (!v.is(CTermKind::Cons))
        throw InvariantViolation("pair cast applied to a non-pair simple value");
      return CTerm::cons(CTerm::cast(v.child(0), Cast::hyper(m.child(0))),
                         CTerm::cast(v.child(1), Cast::hyper(m.child(1))));
    case HMidKind::Sum:
      if (v.is(CTermKind::Inl))
        return CTerm::inl(m.target().rhs(), CTerm::cast(v.child(0), Cast::hyper(m.child(0))));
      if (v.is(CTermKind::Inr))
        return CTerm::inr(m.target().lhs(), CTerm::cast(v.child(0), Cast::hyper(m.child(1))));
      throw InvariantViolation("sum cast applied to a non-injection simple value");
    case HMidKind::Fun:
      break;
  }
  throw ContractViolation("applyCast on an inert coercion");
}

}  // namespace

CTerm apply_cast(const CTerm& v, const Cast& c, const ActiveWitness& a, CCMode mode) {
  if (!(a.cast == c)) throw ContractViolation("active witness does not certify this cast");
  switch (c.discipline()) {
    case Discipline::Eda:
    case Discipline::Edi:
    case Discipline::LambdaB1:
    case Discipline::LambdaB2:
      return apply_type_pair(v, c, mode);
    case Discipline::Edc:
    case Discipline::Ldc:
      return apply_simple(v, c, mode);
    case Discipline::LambdaC:
      return apply_seq(v, c, mode);
    case Discipline::LambdaS:
      return apply_lambda_s(v, c);
    case Discipline::Hyper:
      return apply_hyper(v, c);
  }
  throw ContractViolation("apply_cast: unreachable");
}

}  // namespace castkit
