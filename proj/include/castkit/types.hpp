#ifndef CASTKIT_TYPES_HPP
#define CASTKIT_TYPES_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace castkit {

// Errors ---------------------------------------------------------------

// Violation of an operation's precondition: the caller is buggy.
struct ContractViolation : std::logic_error {
  explicit ContractViolation(const std::string& msg) : std::logic_error(msg) {}
};

// A runtime self-check failed: the implementation is buggy.
struct InvariantViolation : std::logic_error {
  explicit InvariantViolation(const std::string& msg) : std::logic_error(msg) {}
};

struct TypeError : std::runtime_error {
  TypeError(std::string rule_in, std::string path_in, const std::string& msg)
      : std::runtime_error("[" + path_in + "] " + msg + " (rule " + rule_in + ")"),
        rule(std::move(rule_in)),
        path(std::move(path_in)) {}
  std::string rule;  // typing rule that failed
  std::string path;  // node path from the root, e.g. "app.fn/lam.body"
};

// Blame labels ---------------------------------------------------------

// Nonzero signed id; negation is the complement, so complementing twice
// returns the original label. Surface programs introduce positive labels.
struct BlameLabel {
  int id = 1;

  BlameLabel() = default;
  explicit BlameLabel(int id_in) : id(id_in) {
    if (id == 0) throw ContractViolation("blame label must be nonzero");
  }
  BlameLabel complement() const { return BlameLabel(-id); }
  bool operator==(const BlameLabel& o) const { return id == o.id; }
  bool operator!=(const BlameLabel& o) const { return id != o.id; }
};

std::string to_string(BlameLabel l);

// Gradual types ----------------------------------------------------------

enum class BaseType { Nat, Int, Bool, Unit, Bot };

const char* base_name(BaseType b);

enum class TypeKind { Unknown, Base, Fun, Pair, Sum };

class Type;

struct TypeNode {
  TypeKind kind;
  BaseType base = BaseType::Nat;  // Base only
  std::shared_ptr<const TypeNode> lhs, rhs;  // Fun/Pair/Sum
};

// Immutable structural type; cheap to copy (shared representation).
class Type {
 public:
  Type();  // defaults to ?

  static Type unknown();
  static Type base(BaseType b);
  static Type nat();
  static Type int_();
  static Type bool_();
  static Type unit();
  static Type bot();
  static Type fun(const Type& dom, const Type& cod);
  static Type pair(const Type& fst, const Type& snd);
  static Type sum(const Type& left, const Type& right);

  TypeKind kind() const { return node_->kind; }
  bool is_unknown() const { return kind() == TypeKind::Unknown; }
  bool is_base() const { return kind() == TypeKind::Base; }
  bool is_atomic() const { return is_unknown() || is_base(); }
  BaseType base_type() const;
  Type lhs() const;  // dom / fst / left
  Type rhs() const;  // cod / snd / right

  bool operator==(const Type& o) const;
  bool operator!=(const Type& o) const { return !(*this == o); }

  int depth() const;
  std::string str() const;

 private:
  explicit Type(std::shared_ptr<const TypeNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const TypeNode> node_;
};

// Ground types: base types and ?->?, ?*?, ?+?.
bool is_ground(const Type& t);

// The unique ground type with the same head; undefined on ?.
Type gnd(const Type& t);

// Consistency ------------------------------------------------------------

enum class ConsKind { UnkR, UnkL, BaseC, FunC, PairC, SumC };

class ConsistencyProof;

struct ConsNode {
  ConsKind kind;
  Type type;          // UnkR stores A, UnkL stores B, BaseC stores b
  std::shared_ptr<const ConsNode> d1, d2;
};

// Proof that two types are consistent. The FunC domain proof is stored
// contravariantly: it proves rhs-domain ~ lhs-domain.
class ConsistencyProof {
 public:
  static ConsistencyProof unk_r(const Type& a);
  static ConsistencyProof unk_l(const Type& b);
  static ConsistencyProof base(BaseType b);
  static ConsistencyProof fun(const ConsistencyProof& d1, const ConsistencyProof& d2);
  static ConsistencyProof pair(const ConsistencyProof& d1, const ConsistencyProof& d2);
  static ConsistencyProof sum(const ConsistencyProof& d1, const ConsistencyProof& d2);

  ConsKind kind() const { return node_->kind; }
  Type stored_type() const { return node_->type; }
  ConsistencyProof d1() const;
  ConsistencyProof d2() const;

  // Endpoint reconstruction: the pair (A, B) this proof relates.
  Type lhs() const;
  Type rhs() const;

  ConsistencyProof() = default;
  bool valid() const { return node_ != nullptr; }

 private:
  explicit ConsistencyProof(std::shared_ptr<const ConsNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const ConsNode> node_;
};

// Decides A ~ B. The overlap at (?, ?) resolves to UnkR.
std::optional<ConsistencyProof> consistent(const Type& a, const Type& b);

// Least upper bound of the proof's endpoints under type precision.
Type join_of(const ConsistencyProof& p);

// Matching ---------------------------------------------------------------

enum class TypeHead { Fun, Pair, Sum };

// A |> head: yields the components when A has the head, (?,?) when A is ?.
std::optional<std::pair<Type, Type>> match_head(const Type& a, TypeHead head);

// Precision ----------------------------------------------------------------

// A is less or equally precise than B (? below everything).
bool type_precision(const Type& a, const Type& b);

// Pointwise extension to contexts.
bool ctx_precision(const std::vector<Type>& g, const std::vector<Type>& g2);

// Subtyping -----------------------------------------------------------------

enum class SubtypeFlavor { D, UD };

bool subtype(const Type& a, const Type& b, SubtypeFlavor flavor);

// Typing contexts -------------------------------------------------------

// Innermost binding last; de Bruijn index 0 is the last element.
class TypingCtx {
 public:
  TypingCtx() = default;
  explicit TypingCtx(std::vector<Type> types) : types_(std::move(types)) {}

  TypingCtx extended(const Type& t) const;
  std::optional<Type> lookup(int index) const;
  size_t size() const { return types_.size(); }
  const std::vector<Type>& types() const { return types_; }

 private:
  std::vector<Type> types_;
};

}  // namespace castkit

#endif  // CASTKIT_TYPES_HPP
