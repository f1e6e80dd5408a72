#include "castkit/gtlc.hpp"

#include <algorithm>

namespace castkit {

namespace {
std::shared_ptr<GTermNode> node(GTermKind k) {
  auto n = std::make_shared<GTermNode>();
  n->kind = k;
  return n;
}
}  // namespace

GTerm GTerm::constant(const PrimConst& k) {
  auto n = node(GTermKind::Const);
  n->prim = k;
  return GTerm(n);
}

GTerm GTerm::var(int index) {
  auto n = node(GTermKind::Var);
  n->index = index;
  return GTerm(n);
}

GTerm GTerm::lam(const Type& annot, const GTerm& body) {
  auto n = node(GTermKind::Lam);
  n->annot = annot;
  n->child[0] = body.node_;
  return GTerm(n);
}

GTerm GTerm::app(const GTerm& fn, const GTerm& arg, BlameLabel l) {
  auto n = node(GTermKind::App);
  n->child[0] = fn.node_;
  n->child[1] = arg.node_;
  n->label = l;
  return GTerm(n);
}

GTerm GTerm::if_(const GTerm& cond, const GTerm& thn, const GTerm& els, BlameLabel l) {
  auto n = node(GTermKind::If);
  n->child[0] = cond.node_;
  n->child[1] = thn.node_;
  n->child[2] = els.node_;
  n->label = l;
  return GTerm(n);
}

GTerm GTerm::cons(const GTerm& fst, const GTerm& snd) {
  auto n = node(GTermKind::Cons);
  n->child[0] = fst.node_;
  n->child[1] = snd.node_;
  return GTerm(n);
}

GTerm GTerm::proj(int i, const GTerm& e, BlameLabel l) {
  if (i != 1 && i != 2) throw ContractViolation("proj index must be 1 or 2");
  auto n = node(GTermKind::Proj);
  n->proj = i;
  n->child[0] = e.node_;
  n->label = l;
  return GTerm(n);
}

GTerm GTerm::inl(const Type& right_annot, const GTerm& e) {
  auto n = node(GTermKind::Inl);
  n->annot = right_annot;
  n->child[0] = e.node_;
  return GTerm(n);
}

GTerm GTerm::inr(const Type& left_annot, const GTerm& e) {
  auto n = node(GTermKind::Inr);
  n->annot = left_annot;
  n->child[0] = e.node_;
  return GTerm(n);
}

GTerm GTerm::case_(const GTerm& scrut, const Type& left_annot, const Type& right_annot,
                   const GTerm& left_body, const GTerm& right_body, BlameLabel l) {
  auto n = node(GTermKind::Case);
  n->child[0] = scrut.node_;
  n->child[1] = left_body.node_;
  n->child[2] = right_body.node_;
  n->annot = left_annot;
  n->annot2 = right_annot;
  n->label = l;
  return GTerm(n);
}

int GTerm::depth() const {
  int d = 0;
  for (int i = 0; i < 3; ++i)
    if (node_->child[i]) d = std::max(d, GTerm(node_->child[i]).depth());
  return 1 + d;
}

std::string GTerm::str() const {
  switch (kind()) {
    case GTermKind::Const: return "$" + prim().str();
    case GTermKind::Var: return "`" + std::to_string(var_index());
    case GTermKind::Lam: return "(lam[" + annot().str() + "] " + child(0).str() + ")";
    case GTermKind::App:
      return "(" + child(0).str() + " " + child(1).str() + ")@" + to_string(label());
    case GTermKind::If:
      return "(if " + child(0).str() + " " + child(1).str() + " " + child(2).str() + ")@" +
             to_string(label());
    case GTermKind::Cons: return "(cons " + child(0).str() + " " + child(1).str() + ")";
    case GTermKind::Proj:
      return "(" + std::string(proj_index() == 1 ? "fst " : "snd ") + child(0).str() + ")@" +
             to_string(label());
    case GTermKind::Inl: return "(inl[" + annot().str() + "] " + child(0).str() + ")";
    case GTermKind::Inr: return "(inr[" + annot().str() + "] " + child(0).str() + ")";
    case GTermKind::Case:
      return "(case " + child(0).str() + " [" + annot().str() + "] " + child(1).str() + " [" +
             annot2().str() + "] " + child(2).str() + ")@" + to_string(label());
  }
  return "?";
}

namespace {

Type check(const TypingCtx& ctx, const GTerm& m, const std::string& path) {
  switch (m.kind()) {
    case GTermKind::Const: {
      Type t = m.prim().type();
      if (!is_prim_type(t))
        throw TypeError("const", path, "constant type is not primitive: " + t.str());
      return t;
    }
    case GTermKind::Var: {
      auto t = ctx.lookup(m.var_index());
      if (!t)
        throw TypeError("var", path, "unbound index " + std::to_string(m.var_index()));
      return *t;
    }
    case GTermKind::Lam: {
      Type body = check(ctx.extended(m.annot()), m.child(0), path + "/lam.body");
      return Type::fun(m.annot(), body);
    }
    case GTermKind::App: {
      Type a = check(ctx, m.child(0), path + "/app.fn");
      Type b = check(ctx, m.child(1), path + "/app.arg");
      auto match = match_head(a, TypeHead::Fun);
      if (!match)
        throw TypeError("app", path, "operator type matches no function type: " + a.str());
      if (!consistent(match->first, b))
        throw TypeError("app", path,
                        "argument type " + b.str() + " not consistent with " + match->first.str());
      return match->second;
    }
    case GTermKind::If: {
      Type a = check(ctx, m.child(0), path + "/if.cond");
      if (!consistent(a, Type::bool_()))
        throw TypeError("if", path, "condition type " + a.str() + " not consistent with Bool");
      Type b = check(ctx, m.child(1), path + "/if.then");
      Type c = check(ctx, m.child(2), path + "/if.else");
      auto cn = consistent(b, c);
      if (!cn)
        throw TypeError("if", path, "branch types inconsistent: " + b.str() + " vs " + c.str());
      return join_of(*cn);
    }
    case GTermKind::Cons: {
      Type a = check(ctx, m.child(0), path + "/cons.fst");
      Type b = check(ctx, m.child(1), path + "/cons.snd");
      return Type::pair(a, b);
    }
    case GTermKind::Proj: {
      Type a = check(ctx, m.child(0), path + "/proj.arg");
      auto match = match_head(a, TypeHead::Pair);
      if (!match)
        throw TypeError("proj", path, "operand type matches no pair type: " + a.str());
      return m.proj_index() == 1 ? match->first : match->second;
    }
    case GTermKind::Inl: {
      Type a = check(ctx, m.child(0), path + "/inl.arg");
      return Type::sum(a, m.annot());
    }
    case GTermKind::Inr: {
      Type b = check(ctx, m.child(0), path + "/inr.arg");
      return Type::sum(m.annot(), b);
    }
    case GTermKind::Case: {
      Type a = check(ctx, m.child(0), path + "/case.scrut");
      auto match = match_head(a, TypeHead::Sum);
      if (!match)
        throw TypeError("case", path, "scrutinee type matches no sum type: " + a.str());
      if (!consistent(match->first, m.annot()) || !consistent(match->second, m.annot2()))
        throw TypeError("case", path,
                        "scrutinee components not consistent with branch annotations");
      Type b2 = check(ctx.extended(m.annot()), m.child(1), path + "/case.left");
      Type c2 = check(ctx.extended(m.annot2()), m.child(2), path + "/case.right");
      auto bc = consistent(b2, c2);
      if (!bc)
        throw TypeError("case", path, "branch types inconsistent: " + b2.str() + " vs " + c2.str());
      return join_of(*bc);
    }
  }
  throw TypeError("?", path, "malformed term");
}

}  // namespace

Type typecheck_gtlc(const TypingCtx& ctx, const GTerm& m) { return check(ctx, m, "root"); }

bool gterm_precision(const GTerm& m, const GTerm& m2) {
  if (m.kind() != m2.kind()) return false;
  switch (m.kind()) {
    case GTermKind::Const: return m.prim() == m2.prim();
    case GTermKind::Var: return m.var_index() == m2.var_index();
    case GTermKind::Lam:
      return type_precision(m.annot(), m2.annot()) && gterm_precision(m.child(0), m2.child(0));
    case GTermKind::App:
      return gterm_precision(m.child(0), m2.child(0)) && gterm_precision(m.child(1), m2.child(1));
    case GTermKind::If:
      return gterm_precision(m.child(0), m2.child(0)) &&
             gterm_precision(m.child(1), m2.child(1)) && gterm_precision(m.child(2), m2.child(2));
    case GTermKind::Cons:
      return gterm_precision(m.child(0), m2.child(0)) && gterm_precision(m.child(1), m2.child(1));
    case GTermKind::Proj:
      return m.proj_index() == m2.proj_index() && gterm_precision(m.child(0), m2.child(0));
    case GTermKind::Inl:
    case GTermKind::Inr:
      return type_precision(m.annot(), m2.annot()) && gterm_precision(m.child(0), m2.child(0));
    case GTermKind::Case:
      return type_precision(m.annot(), m2.annot()) && type_precision(m.annot2(), m2.annot2()) &&
             gterm_precision(m.child(0), m2.child(0)) &&
             gterm_precision(m.child(1), m2.child(1)) && gterm_precision(m.child(2), m2.child(2));
  }
  return false;
}

}  // namespace castkit
