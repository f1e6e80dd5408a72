#ifndef CASTKIT_GTLC_HPP
#define CASTKIT_GTLC_HPP

#include <memory>
#include <string>

#include "castkit/prim.hpp"
#include "castkit/types.hpp"

namespace castkit {

enum class GTermKind { Const, Var, Lam, App, If, Cons, Proj, Inl, Inr, Case };

class GTerm;

struct GTermNode {
  GTermKind kind;
  PrimConst prim;                 // Const
  int index = 0;                  // Var (de Bruijn)
  Type annot, annot2;             // Lam domain; Inl right / Inr left; Case left+right
  int proj = 1;                   // Proj (1 or 2)
  BlameLabel label;               // App, If, Proj, Case
  std::shared_ptr<const GTermNode> child[3];
};

// Surface term with blame-labeled eliminators; variables are de Bruijn.
class GTerm {
 public:
  GTerm() = default;

  static GTerm constant(const PrimConst& k);
  static GTerm var(int index);
  static GTerm lam(const Type& annot, const GTerm& body);
  static GTerm app(const GTerm& fn, const GTerm& arg, BlameLabel l);
  static GTerm if_(const GTerm& cond, const GTerm& thn, const GTerm& els, BlameLabel l);
  static GTerm cons(const GTerm& fst, const GTerm& snd);
  static GTerm proj(int i, const GTerm& e, BlameLabel l);
  static GTerm inl(const Type& right_annot, const GTerm& e);
  static GTerm inr(const Type& left_annot, const GTerm& e);
  // Branch bodies each bind exactly one variable.
  static GTerm case_(const GTerm& scrut, const Type& left_annot, const Type& right_annot,
                     const GTerm& left_body, const GTerm& right_body, BlameLabel l);

  bool valid() const { return node_ != nullptr; }
  GTermKind kind() const { return node_->kind; }
  const PrimConst& prim() const { return node_->prim; }
  int var_index() const { return node_->index; }
  Type annot() const { return node_->annot; }
  Type annot2() const { return node_->annot2; }
  int proj_index() const { return node_->proj; }
  BlameLabel label() const { return node_->label; }
  GTerm child(int i) const { return GTerm(node_->child[i]); }

  int depth() const;
  std::string str() const;

 private:
  explicit GTerm(std::shared_ptr<const GTermNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const GTermNode> node_;
};

// Returns the unique type assigned by the typing rules, or throws TypeError
// carrying the offending rule and node path.
Type typecheck_gtlc(const TypingCtx& ctx, const GTerm& m);

// Decides M |= M' structurally; blame labels are ignored.
bool gterm_precision(const GTerm& m, const GTerm& m2);

}  // namespace castkit

#endif  // CASTKIT_GTLC_HPP
