#include "castkit/types.hpp"

#include <algorithm>

namespace castkit {

std::string to_string(BlameLabel l) { return std::to_string(l.id); }

const char* base_name(BaseType b) {
  switch (b) {
    case BaseType::Nat: return "Nat";
    case BaseType::Int: return "Int";
    case BaseType::Bool: return "Bool";
    case BaseType::Unit: return "Unit";
    case BaseType::Bot: return "Bot";
  }
  return "?";
}

// Type -------------------------------------------------------------------

namespace {

std::shared_ptr<const TypeNode> make_node(TypeKind k) {
  auto n = std::make_shared<TypeNode>();
  n->kind = k;
  return n;
}

const std::shared_ptr<const TypeNode>& unknown_node() {
  static auto n = make_node(TypeKind::Unknown);
  return n;
}

std::shared_ptr<const TypeNode> base_node(BaseType b) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Base;
  n->base = b;
  return n;
}

}  // namespace

Type::Type() : node_(unknown_node()) {}

Type Type::unknown() { return Type(unknown_node()); }

Type Type::base(BaseType b) {
  static std::shared_ptr<const TypeNode> cache[5] = {
      base_node(BaseType::Nat), base_node(BaseType::Int), base_node(BaseType::Bool),
      base_node(BaseType::Unit), base_node(BaseType::Bot)};
  return Type(cache[static_cast<int>(b)]);
}

Type Type::nat() { return base(BaseType::Nat); }
Type Type::int_() { return base(BaseType::Int); }
Type Type::bool_() { return base(BaseType::Bool); }
Type Type::unit() { return base(BaseType::Unit); }
Type Type::bot() { return base(BaseType::Bot); }

Type Type::fun(const Type& dom, const Type& cod) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Fun;
  n->lhs = dom.node_;
  n->rhs = cod.node_;
  return Type(n);
}

Type Type::pair(const Type& fst, const Type& snd) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Pair;
  n->lhs = fst.node_;
  n->rhs = snd.node_;
  return Type(n);
}

Type Type::sum(const Type& left, const Type& right) {
  auto n = std::make_shared<TypeNode>();
  n->kind = TypeKind::Sum;
  n->lhs = left.node_;
  n->rhs = right.node_;
  return Type(n);
}

BaseType Type::base_type() const {
  if (!is_base()) throw ContractViolation("base_type() on non-base type");
  return node_->base;
}

Type Type::lhs() const {
  if (!node_->lhs) throw ContractViolation("lhs() on atomic type");
  return Type(node_->lhs);
}

Type Type::rhs() const {
  if (!node_->rhs) throw ContractViolation("rhs() on atomic type");
  return Type(node_->rhs);
}

namespace {
bool node_eq(const TypeNode* a, const TypeNode* b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case TypeKind::Unknown: return true;
    case TypeKind::Base: return a->base == b->base;
    default:
      return node_eq(a->lhs.get(), b->lhs.get()) && node_eq(a->rhs.get(), b->rhs.get());
  }
}
}  // namespace

bool Type::operator==(const Type& o) const { return node_eq(node_.get(), o.node_.get()); }

int Type::depth() const {
  if (is_atomic()) return 0;
  return 1 + std::max(lhs().depth(), rhs().depth());
}

std::string Type::str() const {
  switch (kind()) {
    case TypeKind::Unknown: return "?";
    case TypeKind::Base: return base_name(node_->base);
    case TypeKind::Fun: return "(" + lhs().str() + " -> " + rhs().str() + ")";
    case TypeKind::Pair: return "(" + lhs().str() + " * " + rhs().str() + ")";
    case TypeKind::Sum: return "(" + lhs().str() + " + " + rhs().str() + ")";
  }
  return "?";
}

bool is_ground(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Unknown: return false;
    case TypeKind::Base: return true;
    default:
      return t.lhs().is_unknown() && t.rhs().is_unknown();
  }
}

Type gnd(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Unknown:
      throw ContractViolation("gnd(?) is undefined");
    case TypeKind::Base: return t;
    case TypeKind::Fun: return Type::fun(Type::unknown(), Type::unknown());
    case TypeKind::Pair: return Type::pair(Type::unknown(), Type::unknown());
    case TypeKind::Sum: return Type::sum(Type::unknown(), Type::unknown());
  }
  throw ContractViolation("gnd: unreachable");
}

// ConsistencyProof --------------------------------------------------------

namespace {
std::shared_ptr<const ConsNode> cons_node(ConsKind k, Type t,
                                          std::shared_ptr<const ConsNode> d1 = nullptr,
                                          std::shared_ptr<const ConsNode> d2 = nullptr) {
  auto n = std::make_shared<ConsNode>();
  n->kind = k;
  n->type = t;
  n->d1 = std::move(d1);
  n->d2 = std::move(d2);
  return n;
}

}  // namespace

ConsistencyProof ConsistencyProof::unk_r(const Type& a) {
  return ConsistencyProof(cons_node(ConsKind::UnkR, a));
}
ConsistencyProof ConsistencyProof::unk_l(const Type& b) {
  return ConsistencyProof(cons_node(ConsKind::UnkL, b));
}
ConsistencyProof ConsistencyProof::base(BaseType b) {
  return ConsistencyProof(cons_node(ConsKind::BaseC, Type::base(b)));
}

ConsistencyProof ConsistencyProof::fun(const ConsistencyProof& d1, const ConsistencyProof& d2) {
  return ConsistencyProof(cons_node(ConsKind::FunC, Type(), d1.node_, d2.node_));
}
ConsistencyProof ConsistencyProof::pair(const ConsistencyProof& d1, const ConsistencyProof& d2) {
  return ConsistencyProof(cons_node(ConsKind::PairC, Type(), d1.node_, d2.node_));
}
ConsistencyProof ConsistencyProof::sum(const ConsistencyProof& d1, const ConsistencyProof& d2) {
  return ConsistencyProof(cons_node(ConsKind::SumC, Type(), d1.node_, d2.node_));
}

ConsistencyProof ConsistencyProof::d1() const {
  if (!node_->d1) throw ContractViolation("d1() on leaf consistency proof");
  return ConsistencyProof(node_->d1);
}

ConsistencyProof ConsistencyProof::d2() const {
  if (!node_->d2) throw ContractViolation("d2() on leaf consistency proof");
  return ConsistencyProof(node_->d2);
}

Type ConsistencyProof::lhs() const {
  switch (kind()) {
    case ConsKind::UnkR: return node_->type;
    case ConsKind::UnkL: return Type::unknown();
    case ConsKind::BaseC: return node_->type;
    // FunC's first premise relates rhs-domain ~ lhs-domain.
    case ConsKind::FunC: return Type::fun(d1().rhs(), d2().lhs());
    case ConsKind::PairC: return Type::pair(d1().lhs(), d2().lhs());
    case ConsKind::SumC: return Type::sum(d1().lhs(), d2().lhs());
  }
  throw ContractViolation("lhs: unreachable");
}

Type ConsistencyProof::rhs() const {
  switch (kind()) {
    case ConsKind::UnkR: return Type::unknown();
    case ConsKind::UnkL: return node_->type;
    case ConsKind::BaseC: return node_->type;
    case ConsKind::FunC: return Type::fun(d1().lhs(), d2().rhs());
    case ConsKind::PairC: return Type::pair(d1().rhs(), d2().rhs());
    case ConsKind::SumC: return Type::sum(d1().rhs(), d2().rhs());
  }
  throw ContractViolation("rhs: unreachable");
}

std::optional<ConsistencyProof> consistent(const Type& a, const Type& b) {
  // UnkR before UnkL so that (?, ?) gets the canonical UnkR proof.
  if (b.is_unknown()) return ConsistencyProof::unk_r(a);
  if (a.is_unknown()) return ConsistencyProof::unk_l(b);
  if (a.is_base() && b.is_base() && a.base_type() == b.base_type())
    return ConsistencyProof::base(a.base_type());
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case TypeKind::Fun: {
      // Domains flip in the premise.
      auto d1 = consistent(b.lhs(), a.lhs());
      auto d2 = consistent(a.rhs(), b.rhs());
      if (d1 && d2) return ConsistencyProof::fun(*d1, *d2);
      return std::nullopt;
    }
    case TypeKind::Pair: {
      auto d1 = consistent(a.lhs(), b.lhs());
      auto d2 = consistent(a.rhs(), b.rhs());
      if (d1 && d2) return ConsistencyProof::pair(*d1, *d2);
      return std::nullopt;
    }
    case TypeKind::Sum: {
      auto d1 = consistent(a.lhs(), b.lhs());
      auto d2 = consistent(a.rhs(), b.rhs());
      if (d1 && d2) return ConsistencyProof::sum(*d1, *d2);
      return std::nullopt;
    }
    default:
      return std::nullopt;
  }
}

Type join_of(const ConsistencyProof& p) {
  switch (p.kind()) {
    case ConsKind::UnkR: return p.stored_type();
    case ConsKind::UnkL: return p.stored_type();
    case ConsKind::BaseC: return p.stored_type();
    case ConsKind::FunC: return Type::fun(join_of(p.d1()), join_of(p.d2()));
    case ConsKind::PairC: return Type::pair(join_of(p.d1()), join_of(p.d2()));
    case ConsKind::SumC: return Type::sum(join_of(p.d1()), join_of(p.d2()));
  }
  throw ContractViolation("join_of: unreachable");
}

// Matching ----------------------------------------------------------------

std::optional<std::pair<Type, Type>> match_head(const Type& a, TypeHead head) {
  if (a.is_unknown()) return std::make_pair(Type::unknown(), Type::unknown());
  switch (head) {
    case TypeHead::Fun:
      if (a.kind() == TypeKind::Fun) return std::make_pair(a.lhs(), a.rhs());
      break;
    case TypeHead::Pair:
      if (a.kind() == TypeKind::Pair) return std::make_pair(a.lhs(), a.rhs());
      break;
    case TypeHead::Sum:
      if (a.kind() == TypeKind::Sum) return std::make_pair(a.lhs(), a.rhs());
      break;
  }
  return std::nullopt;
}

// Precision -----------------------------------------------------------------

bool type_precision(const Type& a, const Type& b) {
  if (a.is_unknown()) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Base: return a.base_type() == b.base_type();
    default:
      return type_precision(a.lhs(), b.lhs()) && type_precision(a.rhs(), b.rhs());
    case TypeKind::Unknown: return true;
  }
}

bool ctx_precision(const std::vector<Type>& g, const std::vector<Type>& g2) {
  if (g.size() != g2.size()) return false;
  for (size_t i = 0; i < g.size(); ++i)
    if (!type_precision(g[i], g2[i])) return false;
  return true;
}

// Subtyping -------------------------------------------------------------------

bool subtype(const Type& a, const Type& b, SubtypeFlavor flavor) {
  if (b.is_unknown()) {
    if (flavor == SubtypeFlavor::D) return true;
    // UD: A <: ? only through A <: G for some ground G. The only ground
    // candidate with a matching head is gnd(A).
    if (a.is_unknown()) return true;
    return subtype(a, gnd(a), flavor);
  }
  if (a.is_unknown()) return false;
  if (a.is_base() && b.is_base()) return a.base_type() == b.base_type();
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TypeKind::Fun:
      return subtype(b.lhs(), a.lhs(), flavor) && subtype(a.rhs(), b.rhs(), flavor);
    case TypeKind::Pair:
    case TypeKind::Sum:
      return subtype(a.lhs(), b.lhs(), flavor) && subtype(a.rhs(), b.rhs(), flavor);
    default:
      return false;
  }
}

// TypingCtx ---------------------------------------------------------------

TypingCtx TypingCtx::extended(const Type& t) const {
  std::vector<Type> ts = types_;
  ts.push_back(t);
  return TypingCtx(std::move(ts));
}

std::optional<Type> TypingCtx::lookup(int index) const {
  if (index < 0 || static_cast<size_t>(index) >= types_.size()) return std::nullopt;
  return types_[types_.size() - 1 - static_cast<size_t>(index)];
}

}  // namespace castkit
