#include "castkit/cterm.hpp"

#include <algorithm>

namespace castkit {

namespace {
std::shared_ptr<CTermNode> node(CTermKind k) {
  auto n = std::make_shared<CTermNode>();
  n->kind = k;
  return n;
}
}  // namespace

CTerm CTerm::constant(const PrimConst& k) {
  auto n = node(CTermKind::Const);
  n->prim = k;
  return CTerm(n);
}

CTerm CTerm::var(int index) {
  auto n = node(CTermKind::Var);
  n->index = index;
  return CTerm(n);
}

CTerm CTerm::lam(const Type& dom, const CTerm& body) {
  auto n = node(CTermKind::Lam);
  n->annot = dom;
  n->child[0] = body.node_;
  return CTerm(n);
}

CTerm CTerm::app(const CTerm& fn, const CTerm& arg) {
  auto n = node(CTermKind::App);
  n->child[0] = fn.node_;
  n->child[1] = arg.node_;
  return CTerm(n);
}

CTerm CTerm::if_(const CTerm& cond, const CTerm& thn, const CTerm& els) {
  auto n = node(CTermKind::If);
  n->child[0] = cond.node_;
  n->child[1] = thn.node_;
  n->child[2] = els.node_;
  return CTerm(n);
}

CTerm CTerm::cons(const CTerm& fst, const CTerm& snd) {
  auto n = node(CTermKind::Cons);
  n->child[0] = fst.node_;
  n->child[1] = snd.node_;
  return CTerm(n);
}

CTerm CTerm::proj(int i, const CTerm& e) {
  if (i != 1 && i != 2) throw ContractViolation("proj index must be 1 or 2");
  auto n = node(CTermKind::Proj);
  n->proj = i;
  n->child[0] = e.node_;
  return CTerm(n);
}

CTerm CTerm::inl(const Type& right_annot, const CTerm& e) {
  auto n = node(CTermKind::Inl);
  n->annot = right_annot;
  n->child[0] = e.node_;
  return CTerm(n);
}

CTerm CTerm::inr(const Type& left_annot, const CTerm& e) {
  auto n = node(CTermKind::Inr);
  n->annot = left_annot;
  n->child[0] = e.node_;
  return CTerm(n);
}

CTerm CTerm::case_fn(const CTerm& scrut, const CTerm& fn_left, const CTerm& fn_right) {
  auto n = node(CTermKind::CaseFn);
  n->child[0] = scrut.node_;
  n->child[1] = fn_left.node_;
  n->child[2] = fn_right.node_;
  return CTerm(n);
}

CTerm CTerm::case_bind(const CTerm& scrut, const Type& left_annot, const Type& right_annot,
                       const CTerm& body_left, const CTerm& body_right) {
  auto n = node(CTermKind::CaseBind);
  n->child[0] = scrut.node_;
  n->child[1] = body_left.node_;
  n->child[2] = body_right.node_;
  n->annot = left_annot;
  n->annot2 = right_annot;
  return CTerm(n);
}

CTerm CTerm::cast(const CTerm& e, const Cast& c) {
  auto n = node(CTermKind::Cast);
  n->child[0] = e.node_;
  n->cast = c;
  return CTerm(n);
}

CTerm CTerm::wrap(const CTerm& e, const InertWitness& i) {
  auto n = node(CTermKind::Wrap);
  n->child[0] = e.node_;
  n->cast = i.cast;
  return CTerm(n);
}

CTerm CTerm::blame(BlameLabel l, const Type& at) {
  auto n = node(CTermKind::Blame);
  n->label = l;
  n->annot = at;
  return CTerm(n);
}

bool CTerm::operator==(const CTerm& o) const {
  if (node_ == o.node_) return true;
  if (!node_ || !o.node_) return false;
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case CTermKind::Const: return prim() == o.prim();
    case CTermKind::Var: return var_index() == o.var_index();
    case CTermKind::Lam:
      return annot() == o.annot() && child(0) == o.child(0);
    case CTermKind::App:
    case CTermKind::Cons:
      return child(0) == o.child(0) && child(1) == o.child(1);
    case CTermKind::If:
    case CTermKind::CaseFn:
      return child(0) == o.child(0) && child(1) == o.child(1) && child(2) == o.child(2);
    case CTermKind::CaseBind:
      return annot() == o.annot() && annot2() == o.annot2() && child(0) == o.child(0) &&
             child(1) == o.child(1) && child(2) == o.child(2);
    case CTermKind::Proj: return proj_index() == o.proj_index() && child(0) == o.child(0);
    case CTermKind::Inl:
    case CTermKind::Inr:
      return annot() == o.annot() && child(0) == o.child(0);
    case CTermKind::Cast:
    case CTermKind::Wrap:
      return cast_of() == o.cast_of() && child(0) == o.child(0);
    case CTermKind::Blame:
      return blame_label() == o.blame_label() && blame_type() == o.blame_type();
  }
  return false;
}

int CTerm::depth() const {
  int d = 0;
  for (int i = 0; i < 3; ++i)
    if (node_->child[i]) d = std::max(d, CTerm(node_->child[i]).depth());
  return 1 + d;
}

std::string CTerm::str() const {
  switch (kind()) {
    case CTermKind::Const: return "$" + prim().str();
    case CTermKind::Var: return "`" + std::to_string(var_index());
    case CTermKind::Lam: return "(lam[" + annot().str() + "] " + child(0).str() + ")";
    case CTermKind::App: return "(" + child(0).str() + " " + child(1).str() + ")";
    case CTermKind::If:
      return "(if " + child(0).str() + " " + child(1).str() + " " + child(2).str() + ")";
    case CTermKind::Cons: return "(cons " + child(0).str() + " " + child(1).str() + ")";
    case CTermKind::Proj:
      return "(" + std::string(proj_index() == 1 ? "fst " : "snd ") + child(0).str() + ")";
    case CTermKind::Inl: return "(inl[" + annot().str() + "] " + child(0).str() + ")";
    case CTermKind::Inr: return "(inr[" + annot().str() + "] " + child(0).str() + ")";
    case CTermKind::CaseFn:
      return "(case " + child(0).str() + " " + child(1).str() + " " + child(2).str() + ")";
    case CTermKind::CaseBind:
      return "(caseb " + child(0).str() + " [" + annot().str() + "] " + child(1).str() + " [" +
             annot2().str() + "] " + child(2).str() + ")";
    case CTermKind::Cast: return child(0).str() + "<" + cast_of().str() + ">";
    case CTermKind::Wrap: return child(0).str() + "<<" + cast_of().str() + ">>";
    case CTermKind::Blame:
      return "blame@" + to_string(blame_label());
  }
  return "?";
}

// Substitution -----------------------------------------------------------

Renaming ext(const Renaming& rho) {
  return [rho](int x) { return x == 0 ? 0 : rho(x - 1) + 1; };
}

CTerm rename(const Renaming& rho, const CTerm& m) {
  switch (m.kind()) {
    case CTermKind::Const: return m;
    case CTermKind::Var: return CTerm::var(rho(m.var_index()));
    case CTermKind::Lam: return CTerm::lam(m.annot(), rename(ext(rho), m.child(0)));
    case CTermKind::App: return CTerm::app(rename(rho, m.child(0)), rename(rho, m.child(1)));
    case CTermKind::If:
      return CTerm::if_(rename(rho, m.child(0)), rename(rho, m.child(1)),
                        rename(rho, m.child(2)));
    case CTermKind::Cons:
      return CTerm::cons(rename(rho, m.child(0)), rename(rho, m.child(1)));
    case CTermKind::Proj: return CTerm::proj(m.proj_index(), rename(rho, m.child(0)));
    case CTermKind::Inl: return CTerm::inl(m.annot(), rename(rho, m.child(0)));
    case CTermKind::Inr: return CTerm::inr(m.annot(), rename(rho, m.child(0)));
    case CTermKind::CaseFn:
      return CTerm::case_fn(rename(rho, m.child(0)), rename(rho, m.child(1)),
                            rename(rho, m.child(2)));
    case CTermKind::CaseBind:
      // Branch binders transport the renaming under one binder.
      return CTerm::case_bind(rename(rho, m.child(0)), m.annot(), m.annot2(),
                              rename(ext(rho), m.child(1)), rename(ext(rho), m.child(2)));
    case CTermKind::Cast: return CTerm::cast(rename(rho, m.child(0)), m.cast_of());
    case CTermKind::Wrap: {
      auto i = inert_witness(m.cast_of());
      if (!i) throw InvariantViolation("wrap holds a non-inert cast");
      return CTerm::wrap(rename(rho, m.child(0)), *i);
    }
    case CTermKind::Blame: return m;
  }
  throw ContractViolation("rename: unreachable");
}

Substitution exts(const Substitution& sigma) {
  return [sigma](int x) -> CTerm {
    if (x == 0) return CTerm::var(0);
    return rename([](int y) { return y + 1; }, sigma(x - 1));
  };
}

CTerm subst(const Substitution& sigma, const CTerm& m) {
  switch (m.kind()) {
    case CTermKind::Const: return m;
    case CTermKind::Var: return sigma(m.var_index());
    case CTermKind::Lam: return CTerm::lam(m.annot(), subst(exts(sigma), m.child(0)));
    case CTermKind::App: return CTerm::app(subst(sigma, m.child(0)), subst(sigma, m.child(1)));
    case CTermKind::If:
      return CTerm::if_(subst(sigma, m.child(0)), subst(sigma, m.child(1)),
                        subst(sigma, m.child(2)));
    case CTermKind::Cons:
      return CTerm::cons(subst(sigma, m.child(0)), subst(sigma, m.child(1)));
    case CTermKind::Proj: return CTerm::proj(m.proj_index(), subst(sigma, m.child(0)));
    case CTermKind::Inl: return CTerm::inl(m.annot(), subst(sigma, m.child(0)));
    case CTermKind::Inr: return CTerm::inr(m.annot(), subst(sigma, m.child(0)));
    case CTermKind::CaseFn:
      return CTerm::case_fn(subst(sigma, m.child(0)), subst(sigma, m.child(1)),
                            subst(sigma, m.child(2)));
    case CTermKind::CaseBind:
      return CTerm::case_bind(subst(sigma, m.child(0)), m.annot(), m.annot2(),
                              subst(exts(sigma), m.child(1)), subst(exts(sigma), m.child(2)));
    case CTermKind::Cast: return CTerm::cast(subst(sigma, m.child(0)), m.cast_of());
    case CTermKind::Wrap: {
      auto i = inert_witness(m.cast_of());
      if (!i) throw InvariantViolation("wrap holds a non-inert cast");
      return CTerm::wrap(subst(sigma, m.child(0)), *i);
    }
    case CTermKind::Blame: return m;
  }
  throw ContractViolation("subst: unreachable");
}

Substitution subst_zero(const CTerm& n) {
  return [n](int x) -> CTerm {
    if (x == 0) return n;
    return CTerm::var(x - 1);
  };
}

CTerm beta_subst(const CTerm& m, const CTerm& n) { return subst(subst_zero(n), m); }

// Frames -----------------------------------------------------------------

CTerm plug(const CTerm& m, const Frame& f) {
  switch (f.kind) {
    case FrameKind::AppHole: return CTerm::app(m, f.a);
    case FrameKind::HoleApp: return CTerm::app(f.a, m);
    case FrameKind::IfHole: return CTerm::if_(m, f.a, f.b);
    case FrameKind::ConsHole1: return CTerm::cons(m, f.a);
    case FrameKind::ConsHole2: return CTerm::cons(f.a, m);
    case FrameKind::ProjHole: return CTerm::proj(f.proj, m);
    case FrameKind::InlHole: return CTerm::inl(f.annot, m);
    case FrameKind::InrHole: return CTerm::inr(f.annot, m);
    case FrameKind::CaseHole:
      if (f.case_bind) return CTerm::case_bind(m, f.annot, f.annot2, f.a, f.b);
      return CTerm::case_fn(m, f.a, f.b);
    case FrameKind::CastHole: return CTerm::cast(m, f.cast);
  }
  throw ContractViolation("plug: unreachable");
}

std::string frame_label(const Frame& f) {
  switch (f.kind) {
    case FrameKind::AppHole: return "app.fn";
    case FrameKind::HoleApp: return "app.arg";
    case FrameKind::IfHole: return "if.cond";
    case FrameKind::ConsHole1: return "cons.fst";
    case FrameKind::ConsHole2: return "cons.snd";
    case FrameKind::ProjHole: return "proj.arg";
    case FrameKind::InlHole: return "inl.arg";
    case FrameKind::InrHole: return "inr.arg";
    case FrameKind::CaseHole: return "case.scrut";
    case FrameKind::CastHole: return "cast.arg";
  }
  return "?";
}

}  // namespace castkit
