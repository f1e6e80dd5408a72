#include "castkit/sc.hpp"

#include <algorithm>

namespace castkit {

// Values --------------------------------------------------------------------

std::optional<SimpleValueWitness> simple_value_of(const CTerm& m) {
  switch (m.kind()) {
    case CTermKind::Const:
    case CTermKind::Lam:
      return SimpleValueWitness{m};
    case CTermKind::Cons:
      if (sc_value_of(m.child(0)) && sc_value_of(m.child(1))) return SimpleValueWitness{m};
      return std::nullopt;
    case CTermKind::Inl:
    case CTermKind::Inr:
      if (sc_value_of(m.child(0))) return SimpleValueWitness{m};
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

std::optional<ValueWitness> sc_value_of(const CTerm& m) {
  if (simple_value_of(m)) return ValueWitness{m};
  if (m.is(CTermKind::Cast) && classify(m.cast_of()) == CastClass::Inert &&
      simple_value_of(m.child(0)))
    return ValueWitness{m};
  return std::nullopt;
}

// Measures ---------------------------------------------------------------------

int term_size(const CTerm& m) {
  if (m.is(CTermKind::Cast) || m.is(CTermKind::Wrap)) return 1 + term_size(m.child(0));
  int s = 1;
  for (int i = 0; i < 3; ++i)
    if (m.child(i).valid()) s += term_size(m.child(i));
  return s;
}

int ideal_size(const CTerm& m) {
  if (m.is(CTermKind::Cast) || m.is(CTermKind::Wrap)) return ideal_size(m.child(0));
  int s = 1;
  for (int i = 0; i < 3; ++i)
    if (m.child(i).valid()) s += ideal_size(m.child(i));
  return s;
}

int real_size(const CTerm& m) {
  if (m.is(CTermKind::Cast) || m.is(CTermKind::Wrap))
    return cast_size(m.cast_of()) + real_size(m.child(0));
  int s = 1;
  for (int i = 0; i < 3; ++i)
    if (m.child(i).valid()) s += real_size(m.child(i));
  return s;
}

int c_height(const CTerm& m) {
  int h = 0;
  if (m.is(CTermKind::Cast) || m.is(CTermKind::Wrap)) h = cast_height(m.cast_of());
  for (int i = 0; i < 3; ++i)
    if (m.child(i).valid()) h = std::max(h, c_height(m.child(i)));
  return h;
}

namespace {
int adjacency_walk(const CTerm& m, int* max_chain) {
  if (m.is(CTermKind::Cast) || m.is(CTermKind::Wrap)) {
    int below = adjacency_walk(m.child(0), max_chain);
    *max_chain = std::max(*max_chain, below + 1);
    return below + 1;
  }
  for (int i = 0; i < 3; ++i)
    if (m.child(i).valid()) adjacency_walk(m.child(i), max_chain);
  return 0;
}
}  // namespace

int adjacency(const CTerm& m) {
  int mx = 0;
  adjacency_walk(m, &mx);
  return mx;
}

std::optional<int> size_ok(const CTerm& m, bool delayed) {
  auto ok0 = [&](std::initializer_list<std::optional<int>> parts) -> std::optional<int> {
    for (const auto& p : parts)
      if (!p) return std::nullopt;
    return 0;
  };
  switch (m.kind()) {
    case CTermKind::Cast:
    case CTermKind::Wrap: {
      auto n = size_ok(m.child(0), delayed);
      if (!n) return std::nullopt;
      if (*n > (delayed ? 1 : 2)) return std::nullopt;
      return *n + 1;
    }
    case CTermKind::Var: return 1;
    case CTermKind::Const:
    case CTermKind::Blame:
      return 0;
    case CTermKind::Lam:
      return ok0({size_ok(m.child(0), true)});
    case CTermKind::App:
    case CTermKind::Cons:
      return ok0({size_ok(m.child(0), delayed), size_ok(m.child(1), delayed)});
    case CTermKind::Proj:
    case CTermKind::Inl:
    case CTermKind::Inr:
      return ok0({size_ok(m.child(0), delayed)});
    case CTermKind::If:
      return ok0({size_ok(m.child(0), delayed), size_ok(m.child(1), true),
                  size_ok(m.child(2), true)});
    case CTermKind::CaseFn:
    case CTermKind::CaseBind:
      return ok0({size_ok(m.child(0), delayed), size_ok(m.child(1), true),
                  size_ok(m.child(2), true)});
  }
  return std::nullopt;
}

// Reduction ------------------------------------------------------------------

namespace {

Type closed_type_sc(const CTerm& m, Discipline d) {
  return typecheck_cc(TypingCtx(), m, CCMode::CC, d);
}

RedCtx preferred_ctx(const CTerm& m) {
  return m.is(CTermKind::Cast) ? RedCtx::NonCast : RedCtx::Any;
}

StepResult step(RedCtx ctx, const CTerm& m, Discipline d, const std::string& path);

StepResult step_child(const CTerm& m, Discipline d, const std::string& path) {
  return step(preferred_ctx(m), m, d, path);
}

StepResult lift_blame_sc(const CTerm& parent, BlameLabel l, Discipline d,
                         const std::string& path) {
  return StepResult::stepped({CTerm::blame(l, closed_type_sc(parent, d)), "xi-blame", path});
}

StepResult step(RedCtx ctx, const CTerm& m, Discipline d, const std::string& path) {
  switch (m.kind()) {
    case CTermKind::Const:
    case CTermKind::Lam:
      return StepResult::is_value();
    case CTermKind::Var:
      throw ContractViolation("step on an open term");
    case CTermKind::Blame:
      return StepResult::is_blame(m.blame_label());
    case CTermKind::Wrap:
    case CTermKind::CaseBind:
      throw ContractViolation("the space-efficient calculus has no wrap / binding case");

    case CTermKind::Cast: {
      if (ctx != RedCtx::NonCast) {
        if (sc_value_of(m)) return StepResult::is_value();
        throw ContractViolation("cast redex requires a NonCast context");
      }
      CTerm inner = m.child(0);
      const Cast& c = m.cast_of();
      // Outside-in compression: two adjacent casts compose before anything
      // can happen underneath them.
      if (inner.is(CTermKind::Cast))
        return StepResult::stepped(
            {CTerm::cast(inner.child(0), compose_casts(inner.cast_of(), c)), "compose", path});
      if (inner.is(CTermKind::Blame))
        return StepResult::stepped(
            {CTerm::blame(inner.blame_label(), c.target()), "xi-cast-blame", path});
      StepResult r = step(RedCtx::Any, inner, d, path + "/cast.arg");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::cast(i.next, c);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame)
        throw InvariantViolation("blame not handled by the cast congruence");
      // Inner is a simple value (it is not a cast).
      if (auto a = active_witness(c))
        return StepResult::stepped({apply_cast(inner, c, *a, CCMode::CC), "cast", path});
      return StepResult::is_value();
    }

    case CTermKind::App: {
      CTerm fn = m.child(0), arg = m.child(1);
      StepResult r = step_child(fn, d, path + "/app.fn");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::app(i.next, arg);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      StepResult r2 = step_child(arg, d, path + "/app.arg");
      if (r2.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r2.info();
        i.next = CTerm::app(fn, i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r2.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r2.label(), d, path);
      if (fn.is(CTermKind::Lam))
        return StepResult::stepped({beta_subst(fn.child(0), arg), "beta", path});
      if (fn.is(CTermKind::Const)) {
        if (!arg.is(CTermKind::Const))
          throw InvariantViolation("delta applied to a non-constant argument");
        auto k = delta(fn.prim(), arg.prim());
        if (!k) throw InvariantViolation("delta undefined on " + fn.str() + " " + arg.str());
        return StepResult::stepped({CTerm::constant(*k), "delta", path});
      }
      if (fn.is(CTermKind::Cast)) {
        auto x = cross_witness(fn.cast_of());
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
      StepResult r = step_child(cond, d, path + "/if.cond");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::if_(i.next, m.child(1), m.child(2));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      if (cond.is(CTermKind::Const) && cond.prim().kind() == PrimConst::Kind::Bool)
        return cond.prim().bool_value()
                   ? StepResult::stepped({m.child(1), "if-true", path})
                   : StepResult::stepped({m.child(2), "if-false", path});
      throw InvariantViolation("if condition is not a boolean constant");
    }

    case CTermKind::Cons: {
      CTerm a = m.child(0), b = m.child(1);
      StepResult r = step_child(a, d, path + "/cons.fst");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::cons(i.next, b);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      StepResult r2 = step_child(b, d, path + "/cons.snd");
      if (r2.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r2.info();
        i.next = CTerm::cons(a, i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r2.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r2.label(), d, path);
      return StepResult::is_value();
    }

    case CTermKind::Proj: {
      CTerm e = m.child(0);
      StepResult r = step_child(e, d, path + "/proj.arg");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::proj(m.proj_index(), i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      if (e.is(CTermKind::Cons))
        return StepResult::stepped({m.proj_index() == 1 ? e.child(0) : e.child(1),
                                    m.proj_index() == 1 ? "fst" : "snd", path});
      if (e.is(CTermKind::Cast)) {
        auto x = cross_witness(e.cast_of());
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
      StepResult r = step_child(e, d, path + (m.is(CTermKind::Inl) ? "/inl.arg" : "/inr.arg"));
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = m.is(CTermKind::Inl) ? CTerm::inl(m.annot(), i.next)
                                      : CTerm::inr(m.annot(), i.next);
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      return StepResult::is_value();
    }

    case CTermKind::CaseFn: {
      CTerm scrut = m.child(0);
      StepResult r = step_child(scrut, d, path + "/case.scrut");
      if (r.kind() == StepResult::Kind::Stepped) {
        StepInfo i = r.info();
        i.next = CTerm::case_fn(i.next, m.child(1), m.child(2));
        return StepResult::stepped(std::move(i));
      }
      if (r.kind() == StepResult::Kind::IsBlame) return lift_blame_sc(m, r.label(), d, path);
      if (scrut.is(CTermKind::Inl))
        return StepResult::stepped({CTerm::app(m.child(1), scrut.child(0)), "case-left", path});
      if (scrut.is(CTermKind::Inr))
        return StepResult::stepped({CTerm::app(m.child(2), scrut.child(0)), "case-right", path});
      if (scrut.is(CTermKind::Cast)) {
        auto x = cross_witness(scrut.cast_of());
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
  }
  throw ContractViolation("step_sc: unreachable");
}

}  // namespace

StepResult step_sc(RedCtx ctx, const CTerm& m, Discipline d) {
  if (!supports_compose(d))
    throw ContractViolation("the space-efficient calculus needs a composable discipline");
  return step(ctx, m, d, "root");
}

Outcome eval_sc(const CTerm& m, Discipline d, int fuel, const ReportHook& report,
                bool check_invariants, const TraceHook& trace) {
  if (!supports_compose(d))
    throw ContractViolation("the space-efficient calculus needs a composable discipline");
  Type t0 = typecheck_cc(TypingCtx(), m, CCMode::CC, d);
  bool track_ok = size_ok(m, false).has_value();
  int prev_height = c_height(m);
  CTerm cur = m;
  if (report) {
    SizeReport r{0, "init", term_size(cur), ideal_size(cur), real_size(cur),
                 prev_height, adjacency(cur), size_ok(cur, false)};
    report(r);
  }
  for (int i = 0; i < fuel; ++i) {
    StepResult r = step_sc(preferred_ctx(cur), cur, d);
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
    auto ok = size_ok(cur, false);
    int height = c_height(cur);
    if (check_invariants) {
      Type t = typecheck_cc(TypingCtx(), cur, CCMode::CC, d);
      if (t != t0) throw InvariantViolation("preservation failed after " + r.info().rule);
      if (track_ok && !ok)
        throw InvariantViolation("size predicate lost after " + r.info().rule);
      if (height > prev_height)
        throw InvariantViolation("cast height increased after " + r.info().rule);
    }
    prev_height = height;
    if (trace) trace(i, r.info(), cur);
    if (report) {
      SizeReport rep{i + 1, r.info().rule, term_size(cur), ideal_size(cur), real_size(cur),
                     height, adjacency(cur), ok};
      report(rep);
    }
  }
  Outcome o;
  o.kind = Outcome::Kind::Timeout;
  o.steps = fuel;
  return o;
}

}  // namespace castkit
