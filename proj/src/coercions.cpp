#include "castkit/coercions.hpp"

namespace castkit {

// SimpleCo -----------------------------------------------------------------

struct SimpleCo::Node {
  SimpleCoKind kind;
  Type src, tgt;
  BlameLabel label;
  std::shared_ptr<const Node> c0, c1;
};

namespace {
std::shared_ptr<SimpleCo::Node> simple_node(SimpleCoKind k, Type src, Type tgt) {
  auto n = std::make_shared<SimpleCo::Node>();
  n->kind = k;
  n->src = src;
  n->tgt = tgt;
  return n;
}
}  // namespace

SimpleCo SimpleCo::id(const Type& atomic) {
  if (!atomic.is_atomic()) throw ContractViolation("id coercion requires an atomic type");
  return SimpleCo(simple_node(SimpleCoKind::Id, atomic, atomic));
}

SimpleCo SimpleCo::inj(const Type& a) {
  if (a.is_unknown()) throw ContractViolation("injection from ? is not a coercion");
  return SimpleCo(simple_node(SimpleCoKind::Inj, a, Type::unknown()));
}

SimpleCo SimpleCo::proj(const Type& b, BlameLabel l) {
  if (b.is_unknown()) throw ContractViolation("projection to ? is not a coercion");
  auto n = simple_node(SimpleCoKind::Proj, Type::unknown(), b);
  n->label = l;
  return SimpleCo(n);
}

SimpleCo SimpleCo::fun(const SimpleCo& c, const SimpleCo& d) {
  // c : C => A, d : B => D gives (A -> B) => (C -> D).
  auto n = simple_node(SimpleCoKind::Fun, Type::fun(c.target(), d.source()),
                       Type::fun(c.source(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SimpleCo(n);
}

SimpleCo SimpleCo::pair(const SimpleCo& c, const SimpleCo& d) {
  auto n = simple_node(SimpleCoKind::Pair, Type::pair(c.source(), d.source()),
                       Type::pair(c.target(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SimpleCo(n);
}

SimpleCo SimpleCo::sum(const SimpleCo& c, const SimpleCo& d) {
  auto n = simple_node(SimpleCoKind::Sum, Type::sum(c.source(), d.source()),
                       Type::sum(c.target(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SimpleCo(n);
}

SimpleCo SimpleCo::fail(BlameLabel l, const Type& a, const Type& b) {
  auto n = simple_node(SimpleCoKind::Fail, a, b);
  n->label = l;
  return SimpleCo(n);
}

SimpleCoKind SimpleCo::kind() const { return node_->kind; }
Type SimpleCo::source() const { return node_->src; }
Type SimpleCo::target() const { return node_->tgt; }

BlameLabel SimpleCo::label() const {
  if (kind() != SimpleCoKind::Proj && kind() != SimpleCoKind::Fail)
    throw ContractViolation("label on unlabeled coercion");
  return node_->label;
}

SimpleCo SimpleCo::child(int i) const {
  auto c = i == 0 ? node_->c0 : node_->c1;
  if (!c) throw ContractViolation("child on leaf coercion");
  return SimpleCo(c);
}

bool SimpleCo::operator==(const SimpleCo& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case SimpleCoKind::Id: return source() == o.source();
    case SimpleCoKind::Inj: return source() == o.source();
    case SimpleCoKind::Proj: return target() == o.target() && label() == o.label();
    case SimpleCoKind::Fail:
      return label() == o.label() && source() == o.source() && target() == o.target();
    default:
      return child(0) == o.child(0) && child(1) == o.child(1);
  }
}

std::string SimpleCo::str() const {
  switch (kind()) {
    case SimpleCoKind::Id: return "id";
    case SimpleCoKind::Inj: return source().str() + "!";
    case SimpleCoKind::Proj: return target().str() + "?^" + to_string(label());
    case SimpleCoKind::Fun: return "(" + child(0).str() + " -> " + child(1).str() + ")";
    case SimpleCoKind::Pair: return "(" + child(0).str() + " * " + child(1).str() + ")";
    case SimpleCoKind::Sum: return "(" + child(0).str() + " + " + child(1).str() + ")";
    case SimpleCoKind::Fail: return "fail^" + to_string(label());
  }
  return "?";
}

SimpleCo coerce_edc(const ConsistencyProof& p, BlameLabel l) {
  switch (p.kind()) {
    case ConsKind::UnkL: {
      Type b = p.stored_type();
      return b.is_unknown() ? SimpleCo::id(Type::unknown()) : SimpleCo::proj(b, l);
    }
    case ConsKind::UnkR: {
      Type a = p.stored_type();
      return a.is_unknown() ? SimpleCo::id(Type::unknown()) : SimpleCo::inj(a);
    }
    case ConsKind::BaseC:
      return SimpleCo::id(p.stored_type());
    case ConsKind::FunC:
      return SimpleCo::fun(coerce_edc(p.d1(), l.complement()), coerce_edc(p.d2(), l));
    case ConsKind::PairC:
      return SimpleCo::pair(coerce_edc(p.d1(), l), coerce_edc(p.d2(), l));
    case ConsKind::SumC:
      return SimpleCo::sum(coerce_edc(p.d1(), l), coerce_edc(p.d2(), l));
  }
  throw ContractViolation("coerce_edc: unreachable");
}

std::optional<ShallowProof> shallow_consistent(const Type& a, const Type& b) {
  if (b.is_unknown()) return ShallowProof{ShallowKind::UnkR, a, b};
  if (a.is_unknown()) return ShallowProof{ShallowKind::UnkL, a, b};
  if (a.is_base() && b.is_base() && a.base_type() == b.base_type())
    return ShallowProof{ShallowKind::Base, a, b};
  if (a.kind() != b.kind()) return std::nullopt;
  switch (a.kind()) {
    case TypeKind::Fun: return ShallowProof{ShallowKind::Fun, a, b};
    case TypeKind::Pair: return ShallowProof{ShallowKind::Pair, a, b};
    case TypeKind::Sum: return ShallowProof{ShallowKind::Sum, a, b};
    default: return std::nullopt;
  }
}

SimpleCo coerce_ldc(const Type& a, const Type& b, BlameLabel l) {
  auto sp = shallow_consistent(a, b);
  if (!sp) return SimpleCo::fail(l, a, b);
  switch (sp->kind) {
    case ShallowKind::UnkR:
      return a.is_unknown() ? SimpleCo::id(Type::unknown()) : SimpleCo::inj(a);
    case ShallowKind::UnkL:
      return b.is_unknown() ? SimpleCo::id(Type::unknown()) : SimpleCo::proj(b, l);
    case ShallowKind::Base:
      return SimpleCo::id(a);
    case ShallowKind::Fun:
      return SimpleCo::fun(coerce_ldc(b.lhs(), a.lhs(), l.complement()),
                           coerce_ldc(a.rhs(), b.rhs(), l));
    case ShallowKind::Pair:
      return SimpleCo::pair(coerce_ldc(a.lhs(), b.lhs(), l), coerce_ldc(a.rhs(), b.rhs(), l));
    case ShallowKind::Sum:
      return SimpleCo::sum(coerce_ldc(a.lhs(), b.lhs(), l), coerce_ldc(a.rhs(), b.rhs(), l));
  }
  throw ContractViolation("coerce_ldc: unreachable");
}

// SeqCo ----------------------------------------------------------------------

struct SeqCo::Node {
  SeqCoKind kind;
  Type src, tgt;
  BlameLabel label;
  std::shared_ptr<const Node> c0, c1;
};

namespace {
std::shared_ptr<SeqCo::Node> seq_node(SeqCoKind k, Type src, Type tgt) {
  auto n = std::make_shared<SeqCo::Node>();
  n->kind = k;
  n->src = src;
  n->tgt = tgt;
  return n;
}
}  // namespace

SeqCo SeqCo::id(const Type& atomic) {
  if (!atomic.is_atomic()) throw ContractViolation("id coercion requires an atomic type");
  return SeqCo(seq_node(SeqCoKind::Id, atomic, atomic));
}

SeqCo SeqCo::inj(const Type& g) {
  if (!is_ground(g)) throw ContractViolation("injection requires a ground type");
  return SeqCo(seq_node(SeqCoKind::InjG, g, Type::unknown()));
}

SeqCo SeqCo::proj(const Type& h, BlameLabel l) {
  if (!is_ground(h)) throw ContractViolation("projection requires a ground type");
  auto n = seq_node(SeqCoKind::ProjG, Type::unknown(), h);
  n->label = l;
  return SeqCo(n);
}

SeqCo SeqCo::seq(const SeqCo& c, const SeqCo& d) {
  if (c.target() != d.source())
    throw ContractViolation("sequence coercion endpoints do not chain: " + c.str() + " ; " +
                            d.str());
  auto n = seq_node(SeqCoKind::Seq, c.source(), d.target());
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SeqCo(n);
}

SeqCo SeqCo::fun(const SeqCo& c, const SeqCo& d) {
  auto n = seq_node(SeqCoKind::Fun, Type::fun(c.target(), d.source()),
                    Type::fun(c.source(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SeqCo(n);
}

SeqCo SeqCo::pair(const SeqCo& c, const SeqCo& d) {
  auto n = seq_node(SeqCoKind::Pair, Type::pair(c.source(), d.source()),
                    Type::pair(c.target(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SeqCo(n);
}

SeqCo SeqCo::sum(const SeqCo& c, const SeqCo& d) {
  auto n = seq_node(SeqCoKind::Sum, Type::sum(c.source(), d.source()),
                    Type::sum(c.target(), d.target()));
  n->c0 = c.node_;
  n->c1 = d.node_;
  return SeqCo(n);
}

SeqCoKind SeqCo::kind() const { return node_->kind; }
Type SeqCo::source() const { return node_->src; }
Type SeqCo::target() const { return node_->tgt; }

BlameLabel SeqCo::label() const {
  if (kind() != SeqCoKind::ProjG) throw ContractViolation("label on unlabeled coercion");
  return node_->label;
}

SeqCo SeqCo::child(int i) const {
  auto c = i == 0 ? node_->c0 : node_->c1;
  if (!c) throw ContractViolation("child on leaf coercion");
  return SeqCo(c);
}

bool SeqCo::operator==(const SeqCo& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case SeqCoKind::Id: return source() == o.source();
    case SeqCoKind::InjG: return source() == o.source();
    case SeqCoKind::ProjG: return target() == o.target() && label() == o.label();
    default:
      return child(0) == o.child(0) && child(1) == o.child(1);
  }
}

std::string SeqCo::str() const {
  switch (kind()) {
    case SeqCoKind::Id: return "id";
    case SeqCoKind::InjG: return source().str() + "!";
    case SeqCoKind::ProjG: return target().str() + "?^" + to_string(label());
    case SeqCoKind::Seq: return "(" + child(0).str() + " ; " + child(1).str() + ")";
    case SeqCoKind::Fun: return "(" + child(0).str() + " -> " + child(1).str() + ")";
    case SeqCoKind::Pair: return "(" + child(0).str() + " * " + child(1).str() + ")";
    case SeqCoKind::Sum: return "(" + child(0).str() + " + " + child(1).str() + ")";
  }
  return "?";
}

SeqCo coerce_lc(const Type& a, const Type& b, BlameLabel l) {
  if (a.is_unknown() && b.is_unknown()) return SeqCo::id(Type::unknown());
  if (b.is_unknown()) {
    if (is_ground(a)) return SeqCo::inj(a);
    return SeqCo::seq(coerce_lc(a, gnd(a), l), SeqCo::inj(gnd(a)));
  }
  if (a.is_unknown()) {
    if (is_ground(b)) return SeqCo::proj(b, l);
    return SeqCo::seq(SeqCo::proj(gnd(b), l), coerce_lc(gnd(b), b, l));
  }
  if (a.is_base() && b.is_base() && a.base_type() == b.base_type()) return SeqCo::id(a);
  if (a.kind() != b.kind())
    throw ContractViolation("coerce_lc on inconsistent types " + a.str() + " / " + b.str());
  switch (a.kind()) {
    case TypeKind::Fun:
      // The displayed equation uses the same label on both sides.
      return SeqCo::fun(coerce_lc(b.lhs(), a.lhs(), l), coerce_lc(a.rhs(), b.rhs(), l));
    case TypeKind::Pair:
      return SeqCo::pair(coerce_lc(a.lhs(), b.lhs(), l), coerce_lc(a.rhs(), b.rhs(), l));
    case TypeKind::Sum:
      return SeqCo::sum(coerce_lc(a.lhs(), b.lhs(), l), coerce_lc(a.rhs(), b.rhs(), l));
    default:
      throw ContractViolation("coerce_lc on inconsistent types " + a.str() + " / " + b.str());
  }
}

}  // namespace castkit
