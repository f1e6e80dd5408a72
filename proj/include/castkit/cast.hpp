#ifndef CASTKIT_CAST_HPP
#define CASTKIT_CAST_HPP

#include <optional>
#include <string>
#include <variant>

#include "castkit/coercions.hpp"
#include "castkit/types.hpp"

namespace castkit {

enum class Discipline { Eda, Edi, LambdaB1, LambdaB2, Edc, Ldc, LambdaC, LambdaS, Hyper };

const char* discipline_name(Discipline d);
std::optional<Discipline> discipline_by_name(const std::string& name);

// Whether the discipline supports cast composition (and height/size), i.e.
// can drive the space-efficient calculus.
bool supports_compose(Discipline d);

// Whether the discipline supplies cast precision relations (lambda-B only).
bool supports_precision(Discipline d);

// Labeled source/target cast used by EDA, EDI and lambda-B.
struct TypePairCast {
  Type source, target;
  BlameLabel label;
  ConsistencyProof proof;
};

// One cast representation per discipline, discipline-tagged so that a single
// term AST can host terms of any calculus.
class Cast {
 public:
  Cast() = default;

  static Cast type_pair(Discipline d, const Type& a, const Type& b, BlameLabel l);
  static Cast simple(Discipline d, const SimpleCo& c);
  static Cast seq(const SeqCo& c);
  static Cast lambda_s(const SCo& c);
  static Cast hyper(const HCo& c);

  bool valid() const { return rep_.index() != 0 || tp_valid_; }
  Discipline discipline() const { return disc_; }

  Type source() const;
  Type target() const;

  const TypePairCast& as_type_pair() const;
  const SimpleCo& as_simple() const;
  const SeqCo& as_seq() const;
  const SCo& as_lambda_s() const;
  const HCo& as_hyper() const;

  bool operator==(const Cast& o) const;
  std::string str() const;

 private:
  Discipline disc_ = Discipline::Eda;
  bool tp_valid_ = false;
  std::variant<TypePairCast, SimpleCo, SeqCo, SCo, HCo> rep_;
};

// The cast constructor ("make_cast"): builds the discipline's representation of
// a cast from A to B with blame label l. Requires A ~ B except under LDC,
// which produces a failure coercion for shallow mismatches.
Cast make_cast(Discipline d, const Type& a, const Type& b, BlameLabel l);

// Classification -----------------------------------------------------------

enum class CastClass { Active, Inert };

// Total: every cast is active or inert.
CastClass classify(const Cast& c);

// Evidence tokens, validated at construction.
struct ActiveWitness {
  Cast cast;
};
struct InertWitness {
  Cast cast;
};
struct CrossWitness {
  Cast cast;
  TypeHead head;
};

std::optional<ActiveWitness> active_witness(const Cast& c);
std::optional<InertWitness> inert_witness(const Cast& c);
std::optional<CrossWitness> cross_witness(const Cast& c);
bool is_cross(const Cast& c);

// Decomposition of cross casts ------------------------------------------------

enum class CrossField { Dom, Cod, Fst, Snd, InL, InR };

// Returns the component cast; dom is contravariant. The witness must match
// the requested field's head.
Cast decompose(const Cast& c, const CrossWitness& x, CrossField field);

// Blame safety ---------------------------------------------------------------

// EDA/EDI use D subtyping, lambda-B uses UD subtyping, the coercion calculi
// use the structural rules. Not instantiated for lambda-S / hypercoercions.
bool cast_blame_safe(const Cast& c, BlameLabel l);

// Composition and measures (lambda-S / hypercoercions) -----------------------

Cast compose_casts(const Cast& c, const Cast& d);
int cast_height(const Cast& c);

// Representation size; the published size measure for lambda-S /
// hypercoercions and a structural count for the others (used only for
// instrumentation output).
int cast_size(const Cast& c);

// lambda-B cast precision relations -----------------------------------------

enum class PrecDirection { InertInert, InertType, TypeInert };

bool lb_precision_ii(const InertWitness& i, const InertWitness& i2);
bool lb_precision_it(const InertWitness& i, const Type& a2);
bool lb_precision_ti(const Type& a, const InertWitness& i2);

}  // namespace castkit

#endif  // CASTKIT_CAST_HPP
