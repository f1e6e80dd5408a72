#include "castkit/compile.hpp"

namespace castkit {

namespace {

CTerm go(const TypingCtx& ctx, const GTerm& m, Discipline d, CCMode mode, Type* out_type) {
  switch (m.kind()) {
    case GTermKind::Const:
      *out_type = m.prim().type();
      return CTerm::constant(m.prim());
    case GTermKind::Var: {
      auto t = ctx.lookup(m.var_index());
      if (!t) throw ContractViolation("compile of an ill-typed term (unbound variable)");
      *out_type = *t;
      return CTerm::var(m.var_index());
    }
    case GTermKind::Lam: {
      Type body_t;
      CTerm body = go(ctx.extended(m.annot()), m.child(0), d, mode, &body_t);
      *out_type = Type::fun(m.annot(), body_t);
      return CTerm::lam(m.annot(), body);
    }
    case GTermKind::App: {
      Type a, b;
      CTerm fn = go(ctx, m.child(0), d, mode, &a);
      CTerm arg = go(ctx, m.child(1), d, mode, &b);
      auto match = match_head(a, TypeHead::Fun);
      if (!match) throw ContractViolation("compile of an ill-typed term (app head)");
      Type fn_t = Type::fun(match->first, match->second);
      CTerm cfn = CTerm::cast(fn, make_cast(d, a, fn_t, m.label()));
      CTerm carg = CTerm::cast(arg, make_cast(d, b, match->first, m.label()));
      *out_type = match->second;
      return CTerm::app(cfn, carg);
    }
    case GTermKind::If: {
      Type a, b1, b2;
      CTerm cond = go(ctx, m.child(0), d, mode, &a);
      CTerm thn = go(ctx, m.child(1), d, mode, &b1);
      CTerm els = go(ctx, m.child(2), d, mode, &b2);
      auto cn = consistent(b1, b2);
      if (!cn) throw ContractViolation("compile of an ill-typed term (if branches)");
      Type j = join_of(*cn);
      *out_type = j;
      return CTerm::if_(CTerm::cast(cond, make_cast(d, a, Type::bool_(), m.label())),
                        CTerm::cast(thn, make_cast(d, b1, j, m.label())),
                        CTerm::cast(els, make_cast(d, b2, j, m.label())));
    }
    case GTermKind::Cons: {
      Type a, b;
      CTerm fst = go(ctx, m.child(0), d, mode, &a);
      CTerm snd = go(ctx, m.child(1), d, mode, &b);
      *out_type = Type::pair(a, b);
      return CTerm::cons(fst, snd);
    }
    case GTermKind::Proj: {
      Type a;
      CTerm e = go(ctx, m.child(0), d, mode, &a);
      auto match = match_head(a, TypeHead::Pair);
      if (!match) throw ContractViolation("compile of an ill-typed term (proj head)");
      Type pair_t = Type::pair(match->first, match->second);
      *out_type = m.proj_index() == 1 ? match->first : match->second;
      return CTerm::proj(m.proj_index(), CTerm::cast(e, make_cast(d, a, pair_t, m.label())));
    }
    case GTermKind::Inl: {
      Type a;
      CTerm e = go(ctx, m.child(0), d, mode, &a);
      *out_type = Type::sum(a, m.annot());
      return CTerm::inl(m.annot(), e);
    }
    case GTermKind::Inr: {
      Type b;
      CTerm e = go(ctx, m.child(0), d, mode, &b);
      *out_type = Type::sum(m.annot(), b);
      return CTerm::inr(m.annot(), e);
    }
    case GTermKind::Case: {
      Type a, b2, c2;
      CTerm scrut = go(ctx, m.child(0), d, mode, &a);
      Type b1 = m.annot(), c1 = m.annot2();
      CTerm left = go(ctx.extended(b1), m.child(1), d, mode, &b2);
      CTerm right = go(ctx.extended(c1), m.child(2), d, mode, &c2);
      auto bc = consistent(b2, c2);
      if (!bc) throw ContractViolation("compile of an ill-typed term (case branches)");
      Type j = join_of(*bc);
      Type sum_t = Type::sum(b1, c1);
      CTerm cscrut = CTerm::cast(scrut, make_cast(d, a, sum_t, m.label()));
      CTerm cleft = CTerm::cast(left, make_cast(d, b2, j, m.label()));
      CTerm cright = CTerm::cast(right, make_cast(d, c2, j, m.label()));
      *out_type = j;
      if (mode == CCMode::CC)
        return CTerm::case_fn(cscrut, CTerm::lam(b1, cleft), CTerm::lam(c1, cright));
      return CTerm::case_bind(cscrut, b1, c1, cleft, cright);
    }
  }
  throw ContractViolation("compile: unreachable");
}

}  // namespace

CompileOutput compile(const TypingCtx& ctx, const GTerm& m, Discipline d, CCMode mode) {
  typecheck_gtlc(ctx, m);  // precondition, with a proper error
  CompileOutput out;
  out.mode = mode;
  out.term = go(ctx, m, d, mode, &out.type);
  return out;
}

}  // namespace castkit
