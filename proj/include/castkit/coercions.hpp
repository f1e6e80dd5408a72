#ifndef CASTKIT_COERCIONS_HPP
#define CASTKIT_COERCIONS_HPP

#include <memory>
#include <optional>
#include <string>

#include "castkit/types.hpp"

namespace castkit {

// ---------------------------------------------------------------------
// Plain coercions (EDC and LDC). No sequencing; LDC adds a failure
// coercion that records its endpoints so it can be typechecked.
// ---------------------------------------------------------------------

enum class SimpleCoKind { Id, Inj, Proj, Fun, Pair, Sum, Fail };

class SimpleCo {
 public:
  static SimpleCo id(const Type& atomic);
  static SimpleCo inj(const Type& a);                  // a != ?
  static SimpleCo proj(const Type& b, BlameLabel l);   // b != ?
  static SimpleCo fun(const SimpleCo& c, const SimpleCo& d);
  static SimpleCo pair(const SimpleCo& c, const SimpleCo& d);
  static SimpleCo sum(const SimpleCo& c, const SimpleCo& d);
  static SimpleCo fail(BlameLabel l, const Type& a, const Type& b);

  SimpleCoKind kind() const;
  Type source() const;
  Type target() const;
  BlameLabel label() const;       // Proj / Fail
  SimpleCo child(int i) const;    // Fun/Pair/Sum

  SimpleCo() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const SimpleCo& o) const;
  std::string str() const;

  struct Node;

 private:
  explicit SimpleCo(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// coerce for EDC: builds the coercion denoted by a consistency proof.
// The function case complements the label on the domain side.
SimpleCo coerce_edc(const ConsistencyProof& p, BlameLabel l);

// Shallow consistency: compares only the head constructors.
enum class ShallowKind { UnkL, UnkR, Base, Fun, Pair, Sum };
struct ShallowProof {
  ShallowKind kind;
  Type lhs, rhs;
};
std::optional<ShallowProof> shallow_consistent(const Type& a, const Type& b);

// Cast constructor for LDC: shallow recursion that pushes failures onto
// component positions with mismatched heads.
SimpleCo coerce_ldc(const Type& a, const Type& b, BlameLabel l);

// ---------------------------------------------------------------------
// Sequenced coercions (the lambda-C calculus). Injections and projections
// are restricted to ground types; casts through ? factor via gnd.
// ---------------------------------------------------------------------

enum class SeqCoKind { Id, InjG, ProjG, Seq, Fun, Pair, Sum };

class SeqCo {
 public:
  static SeqCo id(const Type& atomic);
  static SeqCo inj(const Type& g);                    // ground
  static SeqCo proj(const Type& h, BlameLabel l);     // ground
  static SeqCo seq(const SeqCo& c, const SeqCo& d);   // target(c) == source(d)
  static SeqCo fun(const SeqCo& c, const SeqCo& d);
  static SeqCo pair(const SeqCo& c, const SeqCo& d);
  static SeqCo sum(const SeqCo& c, const SeqCo& d);

  SeqCoKind kind() const;
  Type source() const;
  Type target() const;
  BlameLabel label() const;
  SeqCo child(int i) const;

  SeqCo() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const SeqCo& o) const;
  std::string str() const;

  struct Node;

 private:
  explicit SeqCo(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Cast constructor for lambda-C; requires a ~ b. Uses the same label on
// both sides of the function case, following the displayed equations.
SeqCo coerce_lc(const Type& a, const Type& b, BlameLabel l);

// ---------------------------------------------------------------------
// lambda-S coercions: canonical three-level grammar (top / intermediate /
// ground), closed under composition.
// ---------------------------------------------------------------------

enum class STopKind { IdDyn, ProjSeq, Mid };
enum class SIntKind { InjSeq, Grd, Fail };
enum class SGndKind { IdBase, Fun, Pair, Sum };

class SCo;
class SInt;
class SGnd;

class SGnd {
 public:
  static SGnd id_base(BaseType b);
  static SGnd fun(const SCo& c, const SCo& d);
  static SGnd pair(const SCo& c, const SCo& d);
  static SGnd sum(const SCo& c, const SCo& d);

  SGndKind kind() const;
  Type source() const;
  Type target() const;
  SCo child(int i) const;

  SGnd() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const SGnd& o) const;
  std::string str() const;

 private:
  friend class SCo;
  friend class SInt;
  struct Node;
  explicit SGnd(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class SInt {
 public:
  static SInt inj(const SGnd& g);  // target of g must be ground; appends G!
  static SInt grd(const SGnd& g);
  static SInt fail(BlameLabel l, const Type& a, const Type& b);

  SIntKind kind() const;
  Type source() const;
  Type target() const;
  SGnd ground() const;
  Type inj_ground() const;  // the G of (g ; G!)
  BlameLabel label() const;

  SInt() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const SInt& o) const;
  std::string str() const;

 private:
  friend class SCo;
  struct Node;
  explicit SInt(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class SCo {
 public:
  static SCo id_dyn();
  static SCo proj(const Type& h, BlameLabel l, const SInt& i);  // source(i) == h, ground
  static SCo mid(const SInt& i);

  STopKind kind() const;
  Type source() const;
  Type target() const;
  Type proj_ground() const;
  BlameLabel label() const;
  SInt intermediate() const;

  SCo() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const SCo& o) const;
  std::string str() const;

  struct Node;

 private:
  explicit SCo(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Cast constructor; requires a ~ b.
SCo coerce_s(const Type& a, const Type& b, BlameLabel l);

// Composition; requires target(c) == source(d). Terminates: the sum of the
// two sizes decreases on every recursive call (checked in debug builds).
SCo compose_s(const SCo& c, const SCo& d);

int height_s(const SCo& c);
int height_s(const SInt& i);
int height_s(const SGnd& g);
int size_s(const SCo& c);
int size_s(const SInt& i);
int size_s(const SGnd& g);

// ---------------------------------------------------------------------
// Hypercoercions: projection part; middle; injection part.
// ---------------------------------------------------------------------

enum class HProjKind { Id, Proj };
enum class HMidKind { IdBase, Fun, Pair, Sum };
enum class HEndKind { Id, Inj, Fail };

class HCo;

class HMid {
 public:
  static HMid id_base(BaseType b);
  static HMid fun(const HCo& c, const HCo& d);
  static HMid pair(const HCo& c, const HCo& d);
  static HMid sum(const HCo& c, const HCo& d);

  HMidKind kind() const;
  Type source() const;
  Type target() const;
  HCo child(int i) const;

  HMid() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const HMid& o) const;
  std::string str() const;

 private:
  friend class HCo;
  struct Node;
  explicit HMid(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

class HCo {
 public:
  static HCo id_dyn();
  // p = id. Injection end: target(m) must be ground.
  static HCo triple_id_p(const HMid& m, HEndKind end, BlameLabel end_label, const Type& fail_target);
  // p = H?^l with H == source(m), ground.
  static HCo triple_proj_p(BlameLabel proj_label, const HMid& m, HEndKind end,
                           BlameLabel end_label, const Type& fail_target);

  // Convenience constructors.
  static HCo make(HProjKind p, BlameLabel proj_label, const HMid& m, HEndKind e,
                  BlameLabel end_label, const Type& fail_target);

  bool is_id_dyn() const;
  HProjKind proj_kind() const;
  BlameLabel proj_label() const;
  HMid middle() const;
  HEndKind end_kind() const;
  BlameLabel end_label() const;

  Type source() const;
  Type target() const;

  HCo() = default;
  bool valid() const { return node_ != nullptr; }
  bool operator==(const HCo& o) const;
  std::string str() const;

  struct Node;

 private:
  explicit HCo(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Cast constructor; requires a ~ b.
HCo coerce_h(const Type& a, const Type& b, BlameLabel l);

// Composition; requires target(c) == source(d).
HCo compose_h(const HCo& c, const HCo& d);

int height_h(const HCo& c);
int height_h(const HMid& m);
int size_h(const HCo& c);
int size_h(const HMid& m);
int size_h_proj(const HCo& c);  // size of the projection part
int size_h_end(const HCo& c);   // size of the injection part

}  // namespace castkit

#endif  // CASTKIT_COERCIONS_HPP
