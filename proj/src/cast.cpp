#include "castkit/cast.hpp"

namespace castkit {

const char* discipline_name(Discipline d) {
  switch (d) {
    case Discipline::Eda: return "eda";
    case Discipline::Edi: return "edi";
    case Discipline::LambdaB1: return "lambda-b1";
    case Discipline::LambdaB2: return "lambda-b2";
    case Discipline::Edc: return "edc";
    case Discipline::Ldc: return "ldc";
    case Discipline::LambdaC: return "lambda-c";
    case Discipline::LambdaS: return "lambda-s";
    case Discipline::Hyper: return "hyper";
  }
  return "?";
}

std::optional<Discipline> discipline_by_name(const std::string& name) {
  for (Discipline d : {Discipline::Eda, Discipline::Edi, Discipline::LambdaB1,
                       Discipline::LambdaB2, Discipline::Edc, Discipline::Ldc,
                       Discipline::LambdaC, Discipline::LambdaS, Discipline::Hyper})
    if (name == discipline_name(d)) return d;
  return std::nullopt;
}

bool supports_compose(Discipline d) {
  return d == Discipline::LambdaS || d == Discipline::Hyper;
}

bool supports_precision(Discipline d) {
  return d == Discipline::LambdaB1 || d == Discipline::LambdaB2;
}

// Cast -------------------------------------------------------------------

Cast Cast::type_pair(Discipline d, const Type& a, const Type& b, BlameLabel l) {
  auto p = consistent(a, b);
  if (!p)
    throw ContractViolation("cast between inconsistent types " + a.str() + " / " + b.str());
  Cast c;
  c.disc_ = d;
  c.tp_valid_ = true;
  c.rep_ = TypePairCast{a, b, l, *p};
  return c;
}

Cast Cast::simple(Discipline d, const SimpleCo& co) {
  if (d != Discipline::Edc && d != Discipline::Ldc)
    throw ContractViolation("plain coercions belong to EDC/LDC");
  if (d == Discipline::Edc && co.kind() == SimpleCoKind::Fail)
    throw ContractViolation("EDC has no failure coercion");
  Cast c;
  c.disc_ = d;
  c.rep_ = co;
  return c;
}

Cast Cast::seq(const SeqCo& co) {
  Cast c;
  c.disc_ = Discipline::LambdaC;
  c.rep_ = co;
  return c;
}

Cast Cast::lambda_s(const SCo& co) {
  Cast c;
  c.disc_ = Discipline::LambdaS;
  c.rep_ = co;
  return c;
}

Cast Cast::hyper(const HCo& co) {
  Cast c;
  c.disc_ = Discipline::Hyper;
  c.rep_ = co;
  return c;
}

Type Cast::source() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).source;
    case 1: return std::get<1>(rep_).source();
    case 2: return std::get<2>(rep_).source();
    case 3: return std::get<3>(rep_).source();
    default: return std::get<4>(rep_).source();
  }
}

Type Cast::target() const {
  switch (rep_.index()) {
    case 0: return std::get<0>(rep_).target;
    case 1: return std::get<1>(rep_).target();
    case 2: return std::get<2>(rep_).target();
    case 3: return std::get<3>(rep_).target();
    default: return std::get<4>(rep_).target();
  }
}

const TypePairCast& Cast::as_type_pair() const {
  if (rep_.index() != 0) throw ContractViolation("cast is not a type-pair cast");
  return std::get<0>(rep_);
}

const SimpleCo& Cast::as_simple() const {
  if (rep_.index() != 1) throw ContractViolation("cast is not a plain coercion");
  return std::get<1>(rep_);
}

const SeqCo& Cast::as_seq() const {
  if (rep_.index() != 2) throw ContractViolation("cast is not a sequenced coercion");
  return std::get<2>(rep_);
}

const SCo& Cast::as_lambda_s() const {
  if (rep_.index() != 3) throw ContractViolation("cast is not a lambda-s coercion");
  return std::get<3>(rep_);
}

const HCo& Cast::as_hyper() const {
  if (rep_.index() != 4) throw ContractViolation("cast is not a hypercoercion");
  return std::get<4>(rep_);
}

bool Cast::operator==(const Cast& o) const {
  if (disc_ != o.disc_ || rep_.index() != o.rep_.index()) return false;
  switch (rep_.index()) {
    case 0: {
      const auto& a = std::get<0>(rep_);
      const auto& b = std::get<0>(o.rep_);
      return a.source == b.source && a.target == b.target && a.label == b.label;
    }
    case 1: return std::get<1>(rep_) == std::get<1>(o.rep_);
    case 2: return std::get<2>(rep_) == std::get<2>(o.rep_);
    case 3: return std::get<3>(rep_) == std::get<3>(o.rep_);
    default: return std::get<4>(rep_) == std::get<4>(o.rep_);
  }
}

std::string Cast::str() const {
  switch (rep_.index()) {
    case 0: {
      const auto& tp = std::get<0>(rep_);
      return "(" + tp.source.str() + " =>^" + to_string(tp.label) + " " + tp.target.str() + ")";
    }
    case 1: return std::get<1>(rep_).str();
    case 2: return std::get<2>(rep_).str();
    case 3: return std::get<3>(rep_).str();
    default: return std::get<4>(rep_).str();
  }
}

Cast make_cast(Discipline d, const Type& a, const Type& b, BlameLabel l) {
  switch (d) {
    case Discipline::Eda:
    case Discipline::Edi:
    case Discipline::LambdaB1:
    case Discipline::LambdaB2:
      return Cast::type_pair(d, a, b, l);
    case Discipline::Edc: {
      auto p = consistent(a, b);
      if (!p)
        throw ContractViolation("cast between inconsistent types " + a.str() + " / " + b.str());
      return Cast::simple(d, coerce_edc(*p, l));
    }
    case Discipline::Ldc:
      return Cast::simple(d, coerce_ldc(a, b, l));
    case Discipline::LambdaC:
      if (!consistent(a, b))
        throw ContractViolation("cast between inconsistent types " + a.str() + " / " + b.str());
      return Cast::seq(coerce_lc(a, b, l));
    case Discipline::LambdaS:
      if (!consistent(a, b))
        throw ContractViolation("cast between inconsistent types " + a.str() + " / " + b.str());
      return Cast::lambda_s(coerce_s(a, b, l));
    case Discipline::Hyper:
      if (!consistent(a, b))
        throw ContractViolation("cast between inconsistent types " + a.str() + " / " + b.str());
      return Cast::hyper(coerce_h(a, b, l));
  }
  throw ContractViolation("make_cast: unreachable");
}

// Classification -----------------------------------------------------------

namespace {

CastClass classify_type_pair(Discipline d, const TypePairCast& tp) {
  const Type& a = tp.source;
  const Type& b = tp.target;
  bool same_head = !a.is_atomic() && a.kind() == b.kind();
  switch (d) {
    case Discipline::Eda:
      if (a.is_atomic() && a == b) return CastClass::Active;       // identity
      if (b.is_unknown()) return CastClass::Inert;                 // injection
      if (a.is_unknown()) return CastClass::Active;                // projection
      if (same_head) return CastClass::Active;                     // cross
      break;
    case Discipline::Edi:
      if (a.is_atomic() && a == b) return CastClass::Active;
      if (b.is_unknown()) return CastClass::Inert;
      if (a.is_unknown()) return CastClass::Active;
      if (same_head) return CastClass::Inert;
      break;
    case Discipline::LambdaB1:
      if (a.is_atomic() && a == b) return CastClass::Active;
      if (b.is_unknown()) return is_ground(a) ? CastClass::Inert : CastClass::Active;
      if (a.is_unknown()) return CastClass::Active;
      if (same_head) return CastClass::Inert;
      break;
    case Discipline::LambdaB2:
      if (a.is_atomic() && a == b) return CastClass::Active;
      if (b.is_unknown()) return is_ground(a) ? CastClass::Inert : CastClass::Active;
      if (a.is_unknown()) return CastClass::Active;
      if (same_head)
        return a.kind() == TypeKind::Fun ? CastClass::Inert : CastClass::Active;
      break;
    default:
      break;
  }
  throw ContractViolation("classify: malformed type-pair cast " + a.str() + " => " + b.str());
}

CastClass classify_lambda_s(const SCo& c) {
  switch (c.kind()) {
    case STopKind::IdDyn: return CastClass::Active;
    case STopKind::ProjSeq: return CastClass::Active;
    case STopKind::Mid: {
      SInt i = c.intermediate();
      switch (i.kind()) {
        case SIntKind::InjSeq: return CastClass::Inert;
        case SIntKind::Fail: return CastClass::Active;
        case SIntKind::Grd:
          switch (i.ground().kind()) {
            case SGndKind::IdBase: return CastClass::Active;
            case SGndKind::Fun: return CastClass::Inert;
            case SGndKind::Pair:
            case SGndKind::Sum: return CastClass::Active;
          }
      }
    }
  }
  throw ContractViolation("classify: unreachable");
}

CastClass classify_hyper(const HCo& c) {
  if (c.is_id_dyn()) return CastClass::Active;
  if (c.proj_kind() == HProjKind::Proj) return CastClass::Active;
  switch (c.end_kind()) {
    case HEndKind::Fail: return CastClass::Active;
    case HEndKind::Inj: return CastClass::Inert;
    case HEndKind::Id:
      switch (c.middle().kind()) {
        case HMidKind::Fun: return CastClass::Inert;
        case HMidKind::IdBase: return CastClass::Active;
        case HMidKind::Pair:
        case HMidKind::Sum: return CastClass::Active;
      }
  }
  throw ContractViolation("classify: unreachable");
}

}  // namespace

CastClass classify(const Cast& c) {
  switch (c.discipline()) {
    case Discipline::Eda:
    case Discipline::Edi:
    case Discipline::LambdaB1:
    case Discipline::LambdaB2:
      return classify_type_pair(c.discipline(), c.as_type_pair());
    case Discipline::Edc:
    case Discipline::Ldc:
      switch (c.as_simple().kind()) {
        case SimpleCoKind::Id: return CastClass::Active;
        case SimpleCoKind::Inj: return CastClass::Inert;
        case SimpleCoKind::Proj: return CastClass::Active;
        case SimpleCoKind::Fun:
        case SimpleCoKind::Pair:
        case SimpleCoKind::Sum: return CastClass::Active;
        case SimpleCoKind::Fail: return CastClass::Active;
      }
      break;
    case Discipline::LambdaC:
      switch (c.as_seq().kind()) {
        case SeqCoKind::Id: return CastClass::Active;
        case SeqCoKind::InjG: return CastClass::Inert;
        case SeqCoKind::ProjG: return CastClass::Active;
        case SeqCoKind::Seq: return CastClass::Active;
        case SeqCoKind::Fun: return CastClass::Inert;
        case SeqCoKind::Pair:
        case SeqCoKind::Sum: return CastClass::Active;
      }
      break;
    case Discipline::LambdaS: return classify_lambda_s(c.as_lambda_s());
    case Discipline::Hyper: return classify_hyper(c.as_hyper());
  }
  throw ContractViolation("classify: unreachable");
}

std::optional<ActiveWitness> active_witness(const Cast& c) {
  if (classify(c) == CastClass::Active) return ActiveWitness{c};
  return std::nullopt;
}

std::optional<InertWitness> inert_witness(const Cast& c) {
  if (classify(c) == CastClass::Inert) return InertWitness{c};
  return std::nullopt;
}

namespace {
std::optional<TypeHead> head_of(const Type& t) {
  switch (t.kind()) {
    case TypeKind::Fun: return TypeHead::Fun;
    case TypeKind::Pair: return TypeHead::Pair;
    case TypeKind::Sum: return TypeHead::Sum;
    default: return std::nullopt;
  }
}
}  // namespace

std::optional<CrossWitness> cross_witness(const Cast& c) {
  switch (c.discipline()) {
    case Discipline::Eda:
    case Discipline::Edi:
    case Discipline::LambdaB1:
    case Discipline::LambdaB2: {
      const auto& tp = c.as_type_pair();
      auto h = head_of(tp.source);
      if (h && tp.target.kind() == tp.source.kind()) return CrossWitness{c, *h};
      return std::nullopt;
    }
    case Discipline::Edc:
    case Discipline::Ldc: {
      switch (c.as_simple().kind()) {
        case SimpleCoKind::Fun: return CrossWitness{c, TypeHead::Fun};
        case SimpleCoKind::Pair: return CrossWitness{c, TypeHead::Pair};
        case SimpleCoKind::Sum: return CrossWitness{c, TypeHead::Sum};
        default: return std::nullopt;
      }
    }
    case Discipline::LambdaC: {
      switch (c.as_seq().kind()) {
        case SeqCoKind::Fun: return CrossWitness{c, TypeHead::Fun};
        case SeqCoKind::Pair: return CrossWitness{c, TypeHead::Pair};
        case SeqCoKind::Sum: return CrossWitness{c, TypeHead::Sum};
        default: return std::nullopt;
      }
    }
    case Discipline::LambdaS: {
      const SCo& s = c.as_lambda_s();
      if (s.kind() != STopKind::Mid || s.intermediate().kind() != SIntKind::Grd)
        return std::nullopt;
      switch (s.intermediate().ground().kind()) {
        case SGndKind::Fun: return CrossWitness{c, TypeHead::Fun};
        case SGndKind::Pair: return CrossWitness{c, TypeHead::Pair};
        case SGndKind::Sum: return CrossWitness{c, TypeHead::Sum};
        default: return std::nullopt;
      }
    }
    case Discipline::Hyper: {
      const HCo& h = c.as_hyper();
      if (h.is_id_dyn() || h.proj_kind() != HProjKind::Id || h.end_kind() != HEndKind::Id)
        return std::nullopt;
      switch (h.middle().kind()) {
        case HMidKind::Fun: return CrossWitness{c, TypeHead::Fun};
        case HMidKind::Pair: return CrossWitness{c, TypeHead::Pair};
        case HMidKind::Sum: return CrossWitness{c, TypeHead::Sum};
        default: return std::nullopt;
      }
    }
  }
  return std::nullopt;
}

bool is_cross(const Cast& c) { return cross_witness(c).has_value(); }

namespace {
TypeHead field_head(CrossField f) {
  switch (f) {
    case CrossField::Dom:
    case CrossField::Cod: return TypeHead::Fun;
    case CrossField::Fst:
    case CrossField::Snd: return TypeHead::Pair;
    default: return TypeHead::Sum;
  }
}
}  // namespace

Cast decompose(const Cast& c, const CrossWitness& x, CrossField field) {
  if (!(x.cast == c)) throw ContractViolation("cross witness does not certify this cast");
  if (x.head != field_head(field))
    throw ContractViolation("cross witness head does not match requested field");
  bool first = field == CrossField::Dom || field == CrossField::Fst || field == CrossField::InL;
  switch (c.discipline()) {
    case Discipline::Eda:
    case Discipline::Edi:
    case Discipline::LambdaB1:
    case Discipline::LambdaB2: {
      const auto& tp = c.as_type_pair();
      switch (field) {
        case CrossField::Dom:
          return Cast::type_pair(c.discipline(), tp.target.lhs(), tp.source.lhs(), tp.label);
        case CrossField::Cod:
          return Cast::type_pair(c.discipline(), tp.source.rhs(), tp.target.rhs(), tp.label);
        default:
          return first ? Cast::type_pair(c.discipline(), tp.source.lhs(), tp.target.lhs(), tp.label)
                       : Cast::type_pair(c.discipline(), tp.source.rhs(), tp.target.rhs(), tp.label);
      }
    }
    case Discipline::Edc:
    case Discipline::Ldc:
      return Cast::simple(c.discipline(), c.as_simple().child(first ? 0 : 1));
    case Discipline::LambdaC:
      return Cast::seq(c.as_seq().child(first ? 0 : 1));
    case Discipline::LambdaS:
      return Cast::lambda_s(c.as_lambda_s().intermediate().ground().child(first ? 0 : 1));
    case Discipline::Hyper:
      return Cast::hyper(c.as_hyper().middle().child(first ? 0 : 1));
  }
  throw ContractViolation("decompose: unreachable");
}

// Blame safety ---------------------------------------------------------------

namespace {
bool simple_blame_safe(const SimpleCo& c, BlameLabel l) {
  switch (c.kind()) {
    case SimpleCoKind::Id: return true;
    case SimpleCoKind::Inj: return true;
    case SimpleCoKind::Proj: return c.label() != l;
    case SimpleCoKind::Fail: return c.label() != l;
    default:
      return simple_blame_safe(c.child(0), l) && simple_blame_safe(c.child(1), l);
  }
}

bool seq_blame_safe(const SeqCo& c, BlameLabel l) {
  switch (c.kind()) {
    case SeqCoKind::Id: return true;
    case SeqCoKind::InjG: return true;
    case SeqCoKind::ProjG: return c.label() != l;
    default:
      return seq_blame_safe(c.child(0), l) && seq_blame_safe(c.child(1), l);
  }
}
}  // namespace

bool cast_blame_safe(const Cast& c, BlameLabel l) {
  switch (c.discipline()) {
    case Discipline::Eda:
    case Discipline::Edi: {
      const auto& tp = c.as_type_pair();
      return tp.label != l || subtype(tp.source, tp.target, SubtypeFlavor::D);
    }
    case Discipline::LambdaB1:
    case Discipline::LambdaB2: {
      const auto& tp = c.as_type_pair();
      return tp.label != l || subtype(tp.source, tp.target, SubtypeFlavor::UD);
    }
    case Discipline::Edc:
    case Discipline::Ldc:
      return simple_blame_safe(c.as_simple(), l);
    case Discipline::LambdaC:
      return seq_blame_safe(c.as_seq(), l);
    case Discipline::LambdaS:
    case Discipline::Hyper:
      throw ContractViolation("blame safety is not instantiated for space-efficient calculi");
  }
  throw ContractViolation("cast_blame_safe: unreachable");
}

// Composition and measures -----------------------------------------------------

Cast compose_casts(const Cast& c, const Cast& d) {
  if (c.discipline() != d.discipline())
    throw ContractViolation("compose of casts from different disciplines");
  switch (c.discipline()) {
    case Discipline::LambdaS: return Cast::lambda_s(compose_s(c.as_lambda_s(), d.as_lambda_s()));
    case Discipline::Hyper: return Cast::hyper(compose_h(c.as_hyper(), d.as_hyper()));
    default:
      throw ContractViolation("discipline does not support composition");
  }
}

int cast_height(const Cast& c) {
  switch (c.discipline()) {
    case Discipline::LambdaS: return height_s(c.as_lambda_s());
    case Discipline::Hyper: return height_h(c.as_hyper());
    default:
      throw ContractViolation("discipline does not support cast height");
  }
}

namespace {
int type_size(const Type& t) {
  if (t.is_atomic()) return 1;
  return 1 + type_size(t.lhs()) + type_size(t.rhs());
}

int simple_size(const SimpleCo& c) {
  switch (c.kind()) {
    case SimpleCoKind::Id: return 0;
    case SimpleCoKind::Inj: return 1;
    case SimpleCoKind::Proj: return 1;
    case SimpleCoKind::Fail: return 0;
    default:
      return 1 + simple_size(c.child(0)) + simple_size(c.child(1));
  }
}

int seq_size(const SeqCo& c) {
  switch (c.kind()) {
    case SeqCoKind::Id: return 0;
    case SeqCoKind::InjG: return 1;
    case SeqCoKind::ProjG: return 1;
    default:
      return 1 + seq_size(c.child(0)) + seq_size(c.child(1));
  }
}
}  // namespace

int cast_size(const Cast& c) {
  switch (c.discipline()) {
    case Discipline::LambdaS: return size_s(c.as_lambda_s());
    case Discipline::Hyper: return size_h(c.as_hyper());
    case Discipline::Edc:
    case Discipline::Ldc: return simple_size(c.as_simple());
    case Discipline::LambdaC: return seq_size(c.as_seq());
    default: {
      const auto& tp = c.as_type_pair();
      return 1 + type_size(tp.source) + type_size(tp.target);
    }
  }
}

// lambda-B cast precision ------------------------------------------------------

namespace {
enum class LbInertKind { Inj, Cross };

LbInertKind lb_inert_kind(const Cast& c) {
  if (!supports_precision(c.discipline()))
    throw ContractViolation("cast precision requires a lambda-B discipline");
  const auto& tp = c.as_type_pair();
  if (tp.target.is_unknown()) return LbInertKind::Inj;
  return LbInertKind::Cross;
}
}  // namespace

bool lb_precision_ii(const InertWitness& i, const InertWitness& i2) {
  LbInertKind k = lb_inert_kind(i.cast);
  LbInertKind k2 = lb_inert_kind(i2.cast);
  if (k != k2) return false;
  const auto& tp = i.cast.as_type_pair();
  const auto& tp2 = i2.cast.as_type_pair();
  if (k == LbInertKind::Inj) return tp.source == tp2.source;  // same ground G
  return type_precision(tp.source, tp2.source) && type_precision(tp.target, tp2.target) &&
         tp.source.kind() == tp2.source.kind();
}

bool lb_precision_it(const InertWitness& i, const Type& a2) {
  const auto& tp = i.cast.as_type_pair();
  if (lb_inert_kind(i.cast) == LbInertKind::Inj) return type_precision(tp.source, a2);
  return tp.source.kind() == a2.kind() && type_precision(tp.source, a2) &&
         type_precision(tp.target, a2);
}

bool lb_precision_ti(const Type& a, const InertWitness& i2) {
  const auto& tp2 = i2.cast.as_type_pair();
  if (lb_inert_kind(i2.cast) == LbInertKind::Inj) return false;  // no rule for injections
  return a.kind() == tp2.source.kind() && type_precision(a, tp2.source) &&
         type_precision(a, tp2.target);
}

}  // namespace castkit
