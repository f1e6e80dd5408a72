#ifndef CASTKIT_CTERM_HPP
#define CASTKIT_CTERM_HPP

#include <functional>
#include <memory>
#include <string>

#include "castkit/cast.hpp"
#include "castkit/prim.hpp"
#include "castkit/types.hpp"

namespace castkit {

// CC mode uses CaseFn (function-valued branches) and never Wrap; the CC'
// variant uses CaseBind (binding branches) and Wrap for inert-cast values.
enum class CCMode { CC, CCPrime };

enum class CTermKind {
  Const, Var, Lam, App, If, Cons, Proj, Inl, Inr, CaseFn, CaseBind, Cast, Wrap, Blame
};

class CTerm;

struct CTermNode {
  CTermKind kind;
  PrimConst prim;     // Const
  int index = 0;      // Var
  Type annot, annot2; // Lam domain; Inl/Inr other side; CaseBind left+right; Blame type
  int proj = 1;       // Proj
  Cast cast;          // Cast / Wrap
  BlameLabel label;   // Blame
  std::shared_ptr<const CTermNode> child[3];
};

class CTerm {
 public:
  CTerm() = default;

  static CTerm constant(const PrimConst& k);
  static CTerm var(int index);
  // The domain annotation keeps the raw-term typechecker syntax-directed;
  // intrinsically-typed presentations carry it in the derivation instead.
  static CTerm lam(const Type& dom, const CTerm& body);
  static CTerm app(const CTerm& fn, const CTerm& arg);
  static CTerm if_(const CTerm& cond, const CTerm& thn, const CTerm& els);
  static CTerm cons(const CTerm& fst, const CTerm& snd);
  static CTerm proj(int i, const CTerm& e);
  static CTerm inl(const Type& right_annot, const CTerm& e);
  static CTerm inr(const Type& left_annot, const CTerm& e);
  static CTerm case_fn(const CTerm& scrut, const CTerm& fn_left, const CTerm& fn_right);
  static CTerm case_bind(const CTerm& scrut, const Type& left_annot, const Type& right_annot,
                         const CTerm& body_left, const CTerm& body_right);
  static CTerm cast(const CTerm& e, const Cast& c);
  // The witness certifies inertness of the wrapped cast.
  static CTerm wrap(const CTerm& e, const InertWitness& i);
  static CTerm blame(BlameLabel l, const Type& at);

  bool valid() const { return node_ != nullptr; }
  CTermKind kind() const { return node_->kind; }
  const PrimConst& prim() const { return node_->prim; }
  int var_index() const { return node_->index; }
  Type annot() const { return node_->annot; }
  Type annot2() const { return node_->annot2; }
  int proj_index() const { return node_->proj; }
  const Cast& cast_of() const { return node_->cast; }
  BlameLabel blame_label() const { return node_->label; }
  Type blame_type() const { return node_->annot; }
  CTerm child(int i) const { return CTerm(node_->child[i]); }

  bool is(CTermKind k) const { return node_ && node_->kind == k; }
  bool same_node(const CTerm& o) const { return node_ == o.node_; }
  bool operator==(const CTerm& o) const;  // structural

  int depth() const;
  std::string str() const;

 private:
  explicit CTerm(std::shared_ptr<const CTermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const CTermNode> node_;
};

// Substitution ----------------------------------------------------------

// A renaming maps variables to variables; a substitution maps variables to
// terms. Extension transports a map under one binder.
using Renaming = std::function<int(int)>;
using Substitution = std::function<CTerm(int)>;

Renaming ext(const Renaming& rho);
CTerm rename(const Renaming& rho, const CTerm& m);
Substitution exts(const Substitution& sigma);
CTerm subst(const Substitution& sigma, const CTerm& m);
Substitution subst_zero(const CTerm& n);
// M[N]: beta substitution of N for variable Z in M.
CTerm beta_subst(const CTerm& m, const CTerm& n);

// Frames ------------------------------------------------------------------

enum class FrameKind {
  AppHole,    // (box M): hole in function position
  HoleApp,    // (L box): function already a value
  IfHole,     // if box M N
  ConsHole1,  // cons box N
  ConsHole2,  // cons M box: first component already a value
  ProjHole,   // pi_i box
  InlHole,    // inl[B] box
  InrHole,    // inr[A] box
  CaseHole,   // case box M N (CaseFn or CaseBind payload)
  CastHole    // box<c> (absent from the space-efficient calculus)
};

struct Frame {
  FrameKind kind;
  CTerm a, b;     // other operands
  Type annot, annot2;
  int proj = 1;
  Cast cast;
  bool case_bind = false;
};

// Replaces the hole in the frame; type-preserving.
CTerm plug(const CTerm& m, const Frame& f);

std::string frame_label(const Frame& f);

}  // namespace castkit

#endif  // CASTKIT_CTERM_HPP
