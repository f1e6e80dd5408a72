#include "castkit/prim.hpp"

namespace castkit {

PrimConst PrimConst::nat(uint64_t n) {
  PrimConst k;
  k.kind_ = Kind::Nat;
  k.nat_value_ = n;
  return k;
}

PrimConst PrimConst::int_(int64_t z) {
  PrimConst k;
  k.kind_ = Kind::Int;
  k.int_value_ = z;
  return k;
}

PrimConst PrimConst::bool_(bool b) {
  PrimConst k;
  k.kind_ = Kind::Bool;
  k.bool_value_ = b;
  return k;
}

PrimConst PrimConst::unit() {
  PrimConst k;
  k.kind_ = Kind::Unit;
  return k;
}

PrimConst PrimConst::fun(PrimOp op) {
  PrimConst k;
  k.kind_ = Kind::Fun;
  k.op_ = op;
  return k;
}

PrimConst PrimConst::add1(uint64_t pending) {
  PrimConst k;
  k.kind_ = Kind::Fun;
  k.op_ = PrimOp::Add1;
  k.pending_ = pending;
  return k;
}

uint64_t PrimConst::nat_value() const {
  if (kind_ != Kind::Nat) throw ContractViolation("nat_value on non-nat constant");
  return nat_value_;
}

int64_t PrimConst::int_value() const {
  if (kind_ != Kind::Int) throw ContractViolation("int_value on non-int constant");
  return int_value_;
}

bool PrimConst::bool_value() const {
  if (kind_ != Kind::Bool) throw ContractViolation("bool_value on non-bool constant");
  return bool_value_;
}

PrimOp PrimConst::op() const {
  if (kind_ != Kind::Fun) throw ContractViolation("op on non-function constant");
  return op_;
}

uint64_t PrimConst::pending() const {
  if (kind_ != Kind::Fun || op_ != PrimOp::Add1)
    throw ContractViolation("pending on non-partial constant");
  return pending_;
}

Type PrimConst::type() const {
  switch (kind_) {
    case Kind::Nat: return Type::nat();
    case Kind::Int: return Type::int_();
    case Kind::Bool: return Type::bool_();
    case Kind::Unit: return Type::unit();
    case Kind::Fun:
      switch (op_) {
        case PrimOp::Not: return Type::fun(Type::bool_(), Type::bool_());
        case PrimOp::Inc: return Type::fun(Type::nat(), Type::nat());
        case PrimOp::Neg: return Type::fun(Type::int_(), Type::int_());
        case PrimOp::Add:
          return Type::fun(Type::nat(), Type::fun(Type::nat(), Type::nat()));
        case PrimOp::Add1: return Type::fun(Type::nat(), Type::nat());
        case PrimOp::IsZero: return Type::fun(Type::nat(), Type::bool_());
      }
  }
  throw ContractViolation("PrimConst::type: unreachable");
}

bool PrimConst::operator==(const PrimConst& o) const {
  if (kind_ != o.kind_) return false;
  switch (kind_) {
    case Kind::Nat: return nat_value_ == o.nat_value_;
    case Kind::Int: return int_value_ == o.int_value_;
    case Kind::Bool: return bool_value_ == o.bool_value_;
    case Kind::Unit: return true;
    case Kind::Fun: return op_ == o.op_ && pending_ == o.pending_;
  }
  return false;
}

std::string PrimConst::str() const {
  switch (kind_) {
    case Kind::Nat: return std::to_string(nat_value_);
    case Kind::Int: return (int_value_ >= 0 ? "+" : "") + std::to_string(int_value_);
    case Kind::Bool: return bool_value_ ? "true" : "false";
    case Kind::Unit: return "unit";
    case Kind::Fun:
      switch (op_) {
        case PrimOp::Not: return "not";
        case PrimOp::Inc: return "inc";
        case PrimOp::Neg: return "neg";
        case PrimOp::Add: return "add";
        case PrimOp::Add1: return "add[" + std::to_string(pending_) + "]";
        case PrimOp::IsZero: return "iszero";
      }
  }
  return "?";
}

bool is_prim_type(const Type& t) {
  if (t.is_base()) return true;
  if (t.kind() == TypeKind::Fun) return t.lhs().is_base() && is_prim_type(t.rhs());
  return false;
}

std::optional<PrimConst> delta(const PrimConst& fn, const PrimConst& arg) {
  if (fn.kind() != PrimConst::Kind::Fun) return std::nullopt;
  switch (fn.op()) {
    case PrimOp::Not:
      if (arg.kind() != PrimConst::Kind::Bool) return std::nullopt;
      return PrimConst::bool_(!arg.bool_value());
    case PrimOp::Inc:
      if (arg.kind() != PrimConst::Kind::Nat) return std::nullopt;
      return PrimConst::nat(arg.nat_value() + 1);
    case PrimOp::Neg:
      if (arg.kind() != PrimConst::Kind::Int) return std::nullopt;
      return PrimConst::int_(-arg.int_value());
    case PrimOp::Add:
      if (arg.kind() != PrimConst::Kind::Nat) return std::nullopt;
      return PrimConst::add1(arg.nat_value());
    case PrimOp::Add1:
      if (arg.kind() != PrimConst::Kind::Nat) return std::nullopt;
      return PrimConst::nat(fn.pending() + arg.nat_value());
    case PrimOp::IsZero:
      if (arg.kind() != PrimConst::Kind::Nat) return std::nullopt;
      return PrimConst::bool_(arg.nat_value() == 0);
  }
  return std::nullopt;
}

std::optional<PrimConst> prim_by_name(const std::string& name) {
  if (name == "not") return PrimConst::fun(PrimOp::Not);
  if (name == "inc") return PrimConst::fun(PrimOp::Inc);
  if (name == "neg") return PrimConst::fun(PrimOp::Neg);
  if (name == "add") return PrimConst::fun(PrimOp::Add);
  if (name == "iszero") return PrimConst::fun(PrimOp::IsZero);
  return std::nullopt;
}

}  // namespace castkit
