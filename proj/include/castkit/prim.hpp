#ifndef CASTKIT_PRIM_HPP
#define CASTKIT_PRIM_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "castkit/types.hpp"

namespace castkit {

// Built-in operators. Each one's type satisfies the primitive-type
// predicate: base types and right-nested functions over base types.
enum class PrimOp { Not, Inc, Neg, Add, Add1, IsZero };

// A constant of the calculus: a literal at base type or a primitive
// function. Add1 is the partial application of Add to its first argument.
class PrimConst {
 public:
  enum class Kind { Nat, Int, Bool, Unit, Fun };

  static PrimConst nat(uint64_t n);
  static PrimConst int_(int64_t z);
  static PrimConst bool_(bool b);
  static PrimConst unit();
  static PrimConst fun(PrimOp op);
  static PrimConst add1(uint64_t pending);

  Kind kind() const { return kind_; }
  uint64_t nat_value() const;
  int64_t int_value() const;
  bool bool_value() const;
  PrimOp op() const;
  uint64_t pending() const;

  // The constant's type; always satisfies the primitive-type predicate.
  Type type() const;

  bool operator==(const PrimConst& o) const;
  bool operator!=(const PrimConst& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Kind kind_ = Kind::Unit;
  uint64_t nat_value_ = 0;
  int64_t int_value_ = 0;
  bool bool_value_ = false;
  PrimOp op_ = PrimOp::Not;
  uint64_t pending_ = 0;
};

// True iff t is a base type or a right-nested function over base types.
bool is_prim_type(const Type& t);

// The delta rule: apply a primitive function constant to a constant
// argument. Empty when fn is not a function or the argument's shape
// does not fit (the typechecker rules that out for well-typed terms).
std::optional<PrimConst> delta(const PrimConst& fn, const PrimConst& arg);

// Lookup by surface name (not, inc, neg, add, iszero).
std::optional<PrimConst> prim_by_name(const std::string& name);

}  // namespace castkit

#endif  // CASTKIT_PRIM_HPP
