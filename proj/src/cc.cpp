#include "castkit/cc.hpp"

namespace castkit {

// Typechecking ----------------------------------------------------------

namespace {

Type check(const TypingCtx& ctx, const CTerm& m, CCMode mode, Discipline d,
           const std::string& path) {
  switch (m.kind()) {
    case CTermKind::Const: {
      Type t = m.prim().type();
      if (!is_prim_type(t))
        throw TypeError("const", path, "constant type is not primitive: " + t.str());
      return t;
    }
    case CTermKind::Var: {
      auto t = ctx.lookup(m.var_index());
      if (!t) throw TypeError("var", path, "unbound index " + std::to_string(m.var_index()));
      return *t;
    }
    case CTermKind::Lam:
      return Type::fun(m.annot(), check(ctx.extended(m.annot()), m.child(0), mode, d,
                                        path + "/lam.body"));
    case CTermKind::App: {
      Type f = check(ctx, m.child(0), mode, d, path + "/app.fn");
      Type a = check(ctx, m.child(1), mode, d, path + "/app.arg");
      if (f.kind() != TypeKind::Fun)
        throw TypeError("app", path, "operator is not a function: " + f.str());
      if (f.lhs() != a)
        throw TypeError("app", path, "argument type " + a.str() + " != domain " + f.lhs().str());
      return f.rhs();
    }
    case CTermKind::If: {
      Type c = check(ctx, m.child(0), mode, d, path + "/if.cond");
      if (c != Type::bool_())
        throw TypeError("if", path, "condition is not Bool: " + c.str());
      Type t1 = check(ctx, m.child(1), mode, d, path + "/if.then");
      Type t2 = check(ctx, m.child(2), mode, d, path + "/if.else");
      if (t1 != t2)
        throw TypeError("if", path, "branch types differ: " + t1.str() + " vs " + t2.str());
      return t1;
    }
    case CTermKind::Cons:
      return Type::pair(check(ctx, m.child(0), mode, d, path + "/cons.fst"),
                        check(ctx, m.child(1), mode, d, path + "/cons.snd"));
    case CTermKind::Proj: {
      Type t = check(ctx, m.child(0), mode, d, path + "/proj.arg");
      if (t.kind() != TypeKind::Pair)
        throw TypeError("proj", path, "operand is not a pair: " + t.str());
      return m.proj_index() == 1 ? t.lhs() : t.rhs();
    }
    case CTermKind::Inl:
      return Type::sum(check(ctx, m.child(0), mode, d, path + "/inl.arg"), m.annot());
    case CTermKind::Inr:
      return Type::sum(m.annot(), check(ctx, m.child(0), mode, d, path + "/inr.arg"));
    case CTermKind::CaseFn: {
      if (mode != CCMode::CC)
        throw TypeError("case", path, "function-branch case outside CC mode");
      Type s = check(ctx, m.child(0), mode, d, path + "/case.scrut");
      if (s.kind() != TypeKind::Sum)
        throw TypeError("case", path, "scrutinee is not a sum: " + s.str());
      Type f1 = check(ctx, m.child(1), mode, d, path + "/case.left");
      Type f2 = check(ctx, m.child(2), mode, d, path + "/case.right");
      if (f1.kind() != TypeKind::Fun || f2.kind() != TypeKind::Fun)
        throw TypeError("case", path, "case branches must be functions");
      if (f1.lhs() != s.lhs() || f2.lhs() != s.rhs())
        throw TypeError("case", path, "branch domains do not match the scrutinee");
      if (f1.rhs() != f2.rhs())
        throw TypeError("case", path, "branch results differ");
      return f1.rhs();
    }
    case CTermKind::CaseBind: {
      if (mode != CCMode::CCPrime)
        throw TypeError("case", path, "binding case outside CC' mode");
      Type s = check(ctx, m.child(0), mode, d, path + "/case.scrut");
      if (s.kind() != TypeKind::Sum)
        throw TypeError("case", path, "scrutinee is not a sum: " + s.str());
      if (s.lhs() != m.annot() || s.rhs() != m.annot2())
        throw TypeError("case", path, "binder annotations do not match the scrutinee");
      Type b1 = check(ctx.extended(m.annot()), m.child(1), mode, d, path + "/case.left");
      Type b2 = check(ctx.extended(m.annot2()), m.child(2), mode, d, path + "/case.right");
      if (b1 != b2) throw TypeError("case", path, "branch results differ");
      return b1;
    }
    case CTermKind::Cast: {
      const Cast& c = m.cast_of();
      if (c.discipline() != d)
        throw TypeError("cast", path, "cast from a different discipline");
      Type t = check(ctx, m.child(0), mode, d, path + "/cast.arg");
      if (t != c.source())
        throw TypeError("cast", path,
                        "cast source " + c.source().str() + " != term type " + t.str());
      return c.target();
    }
    case CTermKind::Wrap: {
      if (mode != CCMode::CCPrime)
        throw TypeError("wrap", path, "wrap outside CC' mode");
      const Cast& c = m.cast_of();
      if (c.discipline() != d)
        throw TypeError("wrap", path, "cast from a different discipline");
      if (classify(c) != CastClass::Inert)
        throw TypeError("wrap", path, "wrapped cast is not inert");
      Type t = check(ctx, m.child(0), mode, d, path + "/wrap.arg");
      if (t != c.source())
        throw TypeError("wrap", path,
                        "cast source " + c.source().str() + " != term type " + t.str());
      return c.target();
    }
    case CTermKind::Blame:
      return m.blame_type();
  }
  throw TypeError("?", path, "malformed term");
}

}  // namespace

Type typecheck_cc(const TypingCtx& ctx, const CTerm& m, CCMode mode, Discipline d) {
  return check(ctx, m, mode, d, "root");
}

// Values ------------------------------------------------------------------

std::optional<ValueWitness> value_of(const CTerm& m, CCMode mode) {
  switch (m.kind()) {
    case CTermKind::Const:
    case CTermKind::Lam:
      return ValueWitness{m};
    case CTermKind::Cons:
      if (value_of(m.child(0), mode) && value_of(m.child(1), mode)) return ValueWitness{m};
      return std::nullopt;
    case CTermKind::Inl:
    case CTermKind::Inr:
      if (value_of(m.child(0), mode)) return ValueWitness{m};
      return std::nullopt;
    case CTermKind::Cast:
      if (mode == CCMode::CC && classify(m.cast_of()) == CastClass::Inert &&
          value_of(m.child(0), mode))
        return ValueWitness{m};
      return std::nullopt;
    case CTermKind::Wrap:
      if (mode == CCMode::CCPrime && value_of(m.child(0), mode)) return ValueWitness{m};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

// Eta expansion ---------------------------------------------------------

CTerm eta_fun(const CTerm& m, const Cast& c, const CrossWitness& x) {
  if (x.head != TypeHead::Fun) throw ContractViolation("eta_fun needs a function cross cast");
  Renaming shift = [](int y) { return y + 1; };
  CTerm inner = CTerm::cast(CTerm::var(0), decompose(c, x, CrossField::Dom));
  CTerm body = CTerm::cast(CTerm::app(rename(shift, m), inner), decompose(c, x, CrossField::Cod));
  return CTerm::lam(c.target().lhs(), body);
}

CTerm eta_pair(const CTerm& m, const Cast& c, const CrossWitness& x) {
  if (x.head != TypeHead::Pair) throw ContractViolation("eta_pair needs a pair cross cast");
  return CTerm::cons(CTerm::cast(CTerm::proj(1, m), decompose(c, x, CrossField::Fst)),
                     CTerm::cast(CTerm::proj(2, m), decompose(c, x, CrossField::Snd)));
}

CTerm eta_sum(const CTerm& m, const Cast& c, const CrossWitness& x, CCMode mode) {
  if (x.head != TypeHead::Sum) throw ContractViolation("eta_sum needs a sum cross cast");
  Type a1 = c.source().lhs();
  Type a2 = c.source().rhs();
  Type tl = c.target().lhs();
  Type tr = c.target().rhs();
  CTerm body_l = CTerm::inl(tr, CTerm::cast(CTerm::var(0), decompose(c, x, CrossField::InL)));
  CTerm body_r = CTerm::inr(tl, CTerm::cast(CTerm::var(0), decompose(c, x, CrossField::InR)));
  if (mode == CCMode::CC)
    return CTerm::case_fn(m, CTerm::lam(a1, body_l), CTerm::lam(a2, body_r));
  return CTerm::case_bind(m, a1, a2, body_l, body_r);
}

// Stepping ------------------------------------------------------------------

namespace {

Type closed_type(const CTerm& m, CCMode mode, Discipline d) {
  return typecheck_cc(TypingCtx(), m, mode, d);
}

StepResult lift_blame(const CTerm& parent, BlameLabel l, CCMode mode, Discipline d,
                      const std::string& path) {
  return StepResult::stepped({CTerm::blame(l, closed_type(parent, mode, d)), "xi-blame", path});
}

std::optional<CrossWitness> inert_cross(const Cast& c) {
  // An inert cast whose target has a constructor head must be a cross cast.
  if (classify(c) != CastClass::Inert) return std::nullopt;
  return cross_witness(c);
}

StepResult step(const CTerm& m, Discipline d, CCMode mode, const std::string& path) {
  switch (m.kind()) {
    case CTermKind::Const:
    case CTermKind::Lam:
      return StepResult::is_value();
    case CTermKind::Var:
      throw ContractViolation("step on an open term");
    case CTermKind::Blame:
      return StepResult::is_blame(m.blame_label());

    case CTermKind::App: {
      CTerm fn = m.child(0), arg = m.child(1);
      StepResult r = step(fn, d, mode, path + "/app.fn");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::app(i.next, arg);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      StepResult r2 = step(arg, d, mode, path + "/app.arg");
      if (r2.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r2.info();
        i.next = CTerm::app(fn, i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r2.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r2.label(), mode, d, path);
      // Both operands are values.
      if (fn.is(CTermKind::Lam))
        return StepResult::stepped({beta_subst(fn.child(0), arg), "beta", path});
      if (fn.is(CTermKind::Const)) {
        if (!arg.is(CTermKind::Const))
          throw InvariantViolation("delta applied to a non-constant argument");
        auto k = delta(fn.prim(), arg.prim());
        if (!k) throw InvariantViolation("delta undefined on " + fn.str() + " " + arg.str());
        return StepResult::stepped({CTerm::constant(*k), "delta", path});
      }
      CTermKind vkind = mode == CCMode::CC ? CTermKind::Cast : CTermKind::Wrap;
      if (fn.is(vkind)) {
        auto x = inert_cross(fn.cast_of());
        if (!x) throw InvariantViolation("function value wraps a non-cross cast");
        CTerm inner = CTerm::app(
            fn.child(0), CTerm::cast(arg, decompose(fn.cast_of(), *x, CrossField::Dom)));
        return StepResult::stepped(
            {CTerm::cast(inner, decompose(fn.cast_of(), *x, CrossField::Cod)), "fun-cast", path});
      }
      throw InvariantViolation("application of a non-function value");
    }

    case CTermKind::If: {
      CTerm cond = m.child(0);
      StepResult r = step(cond, d, mode, path + "/if.cond");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::if_(i.next, m.child(1), m.child(2));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      if (cond.is(CTermKind::Const) && cond.prim().kind() == PrimConst::Kind::Bool)
        return cond.prim().bool_value()
                   ? StepResult::stepped({m.child(1), "if-true", path})
                   : StepResult::stepped({m.child(2), "if-false", path});
      throw InvariantViolation("if condition is not a boolean constant");
    }

    case CTermKind::Cons: {
      CTerm a = m.child(0), b = m.child(1);
      StepResult r = step(a, d, mode, path + "/cons.fst");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::cons(i.next, b);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      StepResult r2 = step(b, d, mode, path + "/cons.snd");
      if (r2.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r2.info();
        i.next = CTerm::cons(a, i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r2.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r2.label(), mode, d, path);
      return StepResult::is_value();
    }

    case CTermKind::Proj: {
      CTerm e = m.child(0);
      StepResult r = step(e, d, mode, path + "/proj.arg");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::proj(m.proj_index(), i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      if (e.is(CTermKind::Cons))
        return StepResult::stepped(
            {m.proj_index() == 1 ? e.child(0) : e.child(1),
             m.proj_index() == 1 ? "fst" : "snd", path});
      CTermKind vkind = mode == CCMode::CC ? CTermKind::Cast : CTermKind::Wrap;
      if (e.is(vkind)) {
        auto x = inert_cross(e.cast_of());
        if (!x) throw InvariantViolation("pair value wraps a non-cross cast");
        CrossField f = m.proj_index() == 1 ? CrossField::Fst : CrossField::Snd;
        return StepResult::stepped(
            {CTerm::cast(CTerm::proj(m.proj_index(), e.child(0)), decompose(e.cast_of(), *x, f)),
             m.proj_index() == 1 ? "fst-cast" : "snd-cast", path});
      }
      throw InvariantViolation("projection from a non-pair value");
    }

    case CTermKind::Inl:
    case CTermKind::Inr: {
      CTerm e = m.child(0);
      StepResult r = step(e, d, mode, path + (m.is(CTermKind::Inl) ? "/inl.arg" : "/inr.arg"));
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = m.is(CTermKind::Inl) ? CTerm::inl(m.annot(), i.next)
                                      : CTerm::inr(m.annot(), i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      return StepResult::is_value();
    }

    case CTermKind::CaseFn: {
      CTerm scrut = m.child(0);
      StepResult r = step(scrut, d, mode, path + "/case.scrut");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::case_fn(i.next, m.child(1), m.child(2));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      if (scrut.is(CTermKind::Inl))
        return StepResult::stepped({CTerm::app(m.child(1), scrut.child(0)), "case-left", path});
      if (scrut.is(CTermKind::Inr))
        return StepResult::stepped({CTerm::app(m.child(2), scrut.child(0)), "case-right", path});
      if (scrut.is(CTermKind::Cast)) {
        auto x = inert_cross(scrut.cast_of());
        if (!x) throw InvariantViolation("sum value wraps a non-cross cast");
        const Cast& c = scrut.cast_of();
        Type a1 = c.source().lhs(), a2 = c.source().rhs();
        Renaming shift = [](int y) { return y + 1; };
        CTerm w1 = CTerm::lam(
            a1, CTerm::app(rename(shift, m.child(1)),
                           CTerm::cast(CTerm::var(0), decompose(c, *x, CrossField::InL))));
        CTerm w2 = CTerm::lam(
            a2, CTerm::app(rename(shift, m.child(2)),
                           CTerm::cast(CTerm::var(0), decompose(c, *x, CrossField::InR))));
        return StepResult::stepped({CTerm::case_fn(scrut.child(0), w1, w2), "case-cast", path});
      }
      throw InvariantViolation("case on a non-sum value");
    }

    case CTermKind::CaseBind: {
      CTerm scrut = m.child(0);
      StepResult r = step(scrut, d, mode, path + "/case.scrut");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::case_bind(i.next, m.annot(), m.annot2(), m.child(1), m.child(2));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      if (scrut.is(CTermKind::Inl))
        return StepResult::stepped({beta_subst(m.child(1), scrut.child(0)), "case-left", path});
      if (scrut.is(CTermKind::Inr))
        return StepResult::stepped({beta_subst(m.child(2), scrut.child(0)), "case-right", path});
      if (scrut.is(CTermKind::Wrap)) {
        // Substitutes the cast variable into the branch bodies.
        auto x = inert_cross(scrut.cast_of());
        if (!x) throw InvariantViolation("sum value wraps a non-cross cast");
        const Cast& c = scrut.cast_of();
        Type a1 = c.source().lhs(), a2 = c.source().rhs();
        Renaming shift = [](int y) { return y + 1; };
        CTerm m1 = beta_subst(rename(ext(shift), m.child(1)),
                              CTerm::cast(CTerm::var(0), decompose(c, *x, CrossField::InL)));
        CTerm m2 = beta_subst(rename(ext(shift), m.child(2)),
                              CTerm::cast(CTerm::var(0), decompose(c, *x, CrossField::InR)));
        return StepResult::stepped(
            {CTerm::case_bind(scrut.child(0), a1, a2, m1, m2), "case-cast", path});
      }
      throw InvariantViolation("case on a non-sum value");
    }

    case CTermKind::Cast: {
      CTerm e = m.child(0);
      StepResult r = step(e, d, mode, path + "/cast.arg");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::cast(i.next, m.cast_of());
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      if (auto a = active_witness(m.cast_of()))
        return StepResult::stepped({apply_cast(e, m.cast_of(), *a, mode), "cast", path});
      if (mode == CCMode::CC) return StepResult::is_value();
      return StepResult::stepped(
          {CTerm::wrap(e, *inert_witness(m.cast_of())), "wrap", path});
    }

    case CTermKind::Wrap: {
      if (mode != CCMode::CCPrime) throw ContractViolation("wrap outside CC' mode");
      CTerm e = m.child(0);
      StepResult r = step(e, d, mode, path + "/wrap.arg");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::wrap(i.next, *inert_witness(m.cast_of()));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        return lift_blame(m, r.label(), mode, d, path);
      return StepResult::is_value();
    }
  }
  throw ContractViolation("step: unreachable");
}

}  // namespace

StepResult step_cc(const CTerm& m, Discipline d, CCMode mode) {
  return step(m, d, mode, "root");
}

Outcome eval(const CTerm& m, Discipline d, CCMode mode, int fuel, const TraceHook& trace,
             bool check_invariants) {
  Type t0 = typecheck_cc(TypingCtx(), m, mode, d);
  CTerm cur = m;
  for (int i = 0; i < fuel; ++i) {
    StepResult r = step_cc(cur, d, mode);
    if (r.kind() == StepResult::Kind::IsValue) {
      Outcome o;
      o.kind = Outcome::Kind::Value;
      o.value = cur;
      o.steps = i;
      return o;
    }
    if (r.kind() == StepResult::Kind::IsBlame) {
      Outcome o;
      o.kind = Outcome::Kind::Blamed;
      o.label = r.label();
      o.steps = i;
      return o;
    }
    cur = r.info().next;
    if (check_invariants) {
      Type t = typecheck_cc(TypingCtx(), cur, mode, d);
      if (t != t0)
        throw InvariantViolation("preservation failed: " + t0.str() + " became " + t.str() +
                                 " after " + r.info().rule);
    }
    if (trace) trace(i, r.info(), cur);
  }
  Outcome o;
  o.kind = Outcome::Kind::Timeout;
  o.steps = fuel;
  return o;
}

// Blame safety -----------------------------------------------------------------

bool safe_for(const CTerm& m, BlameLabel l, Discipline d) {
  switch (m.kind()) {
    case CTermKind::Const:
    case CTermKind::Var:
      return true;
    case CTermKind::Blame:
      return m.blame_label() != l;
    case CTermKind::Cast:
    case CTermKind::Wrap:
      return cast_blame_safe(m.cast_of(), l) && safe_for(m.child(0), l, d);
    default: {
      for (int i = 0; i < 3; ++i) {
        CTerm c = m.child(i);
        if (c.valid() && !safe_for(c, l, d)) return false;
      }
      return true;
    }
  }
}

// Term precision ------------------------------------------------------------------

namespace {

bool prec(const TypingCtx& g, const CTerm& m, const TypingCtx& g2, const CTerm& m2,
          Discipline d);

Type type_in(const TypingCtx& g, const CTerm& m, Discipline d) {
  return typecheck_cc(g, m, CCMode::CCPrime, d);
}

// Structural rules where both sides have the same constructor.
bool prec_structural(const TypingCtx& g, const CTerm& m, const TypingCtx& g2, const CTerm& m2,
                     Discipline d) {
  if (m.kind() != m2.kind()) return false;
  switch (m.kind()) {
    case CTermKind::Const: return m.prim() == m2.prim();
    case CTermKind::Var: return m.var_index() == m2.var_index();
    case CTermKind::Lam:
      return type_precision(m.annot(), m2.annot()) &&
             prec(g.extended(m.annot()), m.child(0), g2.extended(m2.annot()), m2.child(0), d);
    case CTermKind::App:
    case CTermKind::Cons:
      return prec(g, m.child(0), g2, m2.child(0), d) && prec(g, m.child(1), g2, m2.child(1), d);
    case CTermKind::If:
      return prec(g, m.child(0), g2, m2.child(0), d) &&
             prec(g, m.child(1), g2, m2.child(1), d) && prec(g, m.child(2), g2, m2.child(2), d);
    case CTermKind::Proj:
      return m.proj_index() == m2.proj_index() && prec(g, m.child(0), g2, m2.child(0), d);
    case CTermKind::Inl:
    case CTermKind::Inr:
      return type_precision(m.annot(), m2.annot()) && prec(g, m.child(0), g2, m2.child(0), d);
    case CTermKind::CaseBind:
      return type_precision(m.annot(), m2.annot()) &&
             type_precision(m.annot2(), m2.annot2()) &&
             prec(g, m.child(0), g2, m2.child(0), d) &&
             prec(g.extended(m.annot()), m.child(1), g2.extended(m2.annot()), m2.child(1), d) &&
             prec(g.extended(m.annot2()), m.child(2), g2.extended(m2.annot2()), m2.child(2), d);
    case CTermKind::CaseFn:
      return prec(g, m.child(0), g2, m2.child(0), d) &&
             prec(g, m.child(1), g2, m2.child(1), d) && prec(g, m.child(2), g2, m2.child(2), d);
    default:
      return false;
  }
}

bool prec(const TypingCtx& g, const CTerm& m, const TypingCtx& g2, const CTerm& m2,
          Discipline d) {
  // Anything is below blame, provided the types are related.
  if (m2.is(CTermKind::Blame))
    return type_precision(type_in(g, m, d), m2.blame_type());

  // Cast-on-both-sides and one-sided cast rules.
  if (m.is(CTermKind::Cast) && m2.is(CTermKind::Cast)) {
    const Cast& c = m.cast_of();
    const Cast& c2 = m2.cast_of();
    if (type_precision(c.source(), c2.source()) && type_precision(c.target(), c2.target()) &&
        prec(g, m.child(0), g2, m2.child(0), d))
      return true;
  }
  if (m.is(CTermKind::Cast)) {
    Type a2 = type_in(g2, m2, d);
    const Cast& c = m.cast_of();
    if (type_precision(c.source(), a2) && type_precision(c.target(), a2) &&
        prec(g, m.child(0), g2, m2, d))
      return true;
  }
  if (m2.is(CTermKind::Cast)) {
    Type a = type_in(g, m, d);
    const Cast& c2 = m2.cast_of();
    if (type_precision(a, c2.source()) && type_precision(a, c2.target()) &&
        prec(g, m, g2, m2.child(0), d))
      return true;
  }

  // Wrap rules require the discipline's cast precision relations.
  if (m.is(CTermKind::Wrap) && m2.is(CTermKind::Wrap)) {
    auto i = inert_witness(m.cast_of());
    auto i2 = inert_witness(m2.cast_of());
    if (i && i2 && lb_precision_ii(*i, *i2) &&
        (!m.cast_of().target().is_unknown() || m2.cast_of().target().is_unknown()) &&
        prec(g, m.child(0), g2, m2.child(0), d))
      return true;
  }
  if (m.is(CTermKind::Wrap)) {
    auto i = inert_witness(m.cast_of());
    Type a2 = type_in(g2, m2, d);
    if (i && lb_precision_it(*i, a2) && prec(g, m.child(0), g2, m2, d)) return true;
  }
  if (m2.is(CTermKind::Wrap)) {
    auto i2 = inert_witness(m2.cast_of());
    Type a = type_in(g, m, d);
    if (i2 && !a.is_unknown() && lb_precision_ti(a, *i2) && prec(g, m, g2, m2.child(0), d))
      return true;
  }

  return prec_structural(g, m, g2, m2, d);
}

}  // namespace

bool cterm_precision(const TypingCtx& ctx, const CTerm& m, const TypingCtx& ctx2,
                     const CTerm& m2, Discipline d) {
  if (!supports_precision(d))
    throw ContractViolation("term precision requires a discipline with cast precision");
  return prec(ctx, m, ctx2, m2, d);
}

}  // namespace castkit
