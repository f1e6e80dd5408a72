#include <cassert>

#include "castkit/coercions.hpp"

namespace castkit {

// lambda-S ------------------------------------------------------------------

struct SGnd::Node {
  SGndKind kind;
  Type src, tgt;
  BaseType base = BaseType::Nat;
  SCo c0, c1;
};

struct SInt::Node {
  SIntKind kind;
  Type src, tgt;
  SGnd g;
  Type inj_g;
  BlameLabel label;
};

struct SCo::Node {
  STopKind kind;
  Type src, tgt;
  Type proj_g;
  BlameLabel label;
  SInt i;
};

SGnd SGnd::id_base(BaseType b) {
  auto n = std::make_shared<Node>();
  n->kind = SGndKind::IdBase;
  n->base = b;
  n->src = n->tgt = Type::base(b);
  return SGnd(n);
}

SGnd SGnd::fun(const SCo& c, const SCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = SGndKind::Fun;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::fun(c.target(), d.source());
  n->tgt = Type::fun(c.source(), d.target());
  return SGnd(n);
}

SGnd SGnd::pair(const SCo& c, const SCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = SGndKind::Pair;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::pair(c.source(), d.source());
  n->tgt = Type::pair(c.target(), d.target());
  return SGnd(n);
}

SGnd SGnd::sum(const SCo& c, const SCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = SGndKind::Sum;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::sum(c.source(), d.source());
  n->tgt = Type::sum(c.target(), d.target());
  return SGnd(n);
}

SGndKind SGnd::kind() const { return node_->kind; }
Type SGnd::source() const { return node_->src; }
Type SGnd::target() const { return node_->tgt; }

SCo SGnd::child(int i) const {
  if (kind() == SGndKind::IdBase) throw ContractViolation("child on base identity");
  return i == 0 ? node_->c0 : node_->c1;
}

bool SGnd::operator==(const SGnd& o) const {
  if (kind() != o.kind()) return false;
  if (kind() == SGndKind::IdBase) return node_->base == o.node_->base;
  return child(0) == o.child(0) && child(1) == o.child(1);
}

std::string SGnd::str() const {
  switch (kind()) {
    case SGndKind::IdBase: return "id";
    case SGndKind::Fun: return "(" + child(0).str() + " -> " + child(1).str() + ")";
    case SGndKind::Pair: return "(" + child(0).str() + " * " + child(1).str() + ")";
    case SGndKind::Sum: return "(" + child(0).str() + " + " + child(1).str() + ")";
  }
  return "?";
}

SInt SInt::inj(const SGnd& g) {
  if (!is_ground(g.target()))
    throw ContractViolation("injection requires a ground target: " + g.target().str());
  auto n = std::make_shared<Node>();
  n->kind = SIntKind::InjSeq;
  n->g = g;
  n->inj_g = g.target();
  n->src = g.source();
  n->tgt = Type::unknown();
  return SInt(n);
}

SInt SInt::grd(const SGnd& g) {
  auto n = std::make_shared<Node>();
  n->kind = SIntKind::Grd;
  n->g = g;
  n->src = g.source();
  n->tgt = g.target();
  return SInt(n);
}

SInt SInt::fail(BlameLabel l, const Type& a, const Type& b) {
  auto n = std::make_shared<Node>();
  n->kind = SIntKind::Fail;
  n->label = l;
  n->src = a;
  n->tgt = b;
  return SInt(n);
}

SIntKind SInt::kind() const { return node_->kind; }
Type SInt::source() const { return node_->src; }
Type SInt::target() const { return node_->tgt; }

SGnd SInt::ground() const {
  if (kind() == SIntKind::Fail) throw ContractViolation("ground on failure coercion");
  return node_->g;
}

Type SInt::inj_ground() const {
  if (kind() != SIntKind::InjSeq) throw ContractViolation("inj_ground on non-injection");
  return node_->inj_g;
}

BlameLabel SInt::label() const {
  if (kind() != SIntKind::Fail) throw ContractViolation("label on non-failure coercion");
  return node_->label;
}

bool SInt::operator==(const SInt& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case SIntKind::InjSeq: return ground() == o.ground();
    case SIntKind::Grd: return ground() == o.ground();
    case SIntKind::Fail:
      return label() == o.label() && source() == o.source() && target() == o.target();
  }
  return false;
}

std::string SInt::str() const {
  switch (kind()) {
    case SIntKind::InjSeq: return "(" + ground().str() + " ; " + inj_ground().str() + "!)";
    case SIntKind::Grd: return ground().str();
    case SIntKind::Fail: return "fail^" + to_string(label());
  }
  return "?";
}

SCo SCo::id_dyn() {
  static auto n = [] {
    auto m = std::make_shared<Node>();
    m->kind = STopKind::IdDyn;
    m->src = m->tgt = Type::unknown();
    return m;
  }();
  return SCo(n);
}

SCo SCo::proj(const Type& h, BlameLabel l, const SInt& i) {
  if (!is_ground(h)) throw ContractViolation("projection requires a ground type");
  if (i.source() != h)
    throw ContractViolation("projection body must start at the projected ground type");
  auto n = std::make_shared<Node>();
  n->kind = STopKind::ProjSeq;
  n->proj_g = h;
  n->label = l;
  n->i = i;
  n->src = Type::unknown();
  n->tgt = i.target();
  return SCo(n);
}

SCo SCo::mid(const SInt& i) {
  auto n = std::make_shared<Node>();
  n->kind = STopKind::Mid;
  n->i = i;
  n->src = i.source();
  n->tgt = i.target();
  return SCo(n);
}

STopKind SCo::kind() const { return node_->kind; }
Type SCo::source() const { return node_->src; }
Type SCo::target() const { return node_->tgt; }

Type SCo::proj_ground() const {
  if (kind() != STopKind::ProjSeq) throw ContractViolation("proj_ground on non-projection");
  return node_->proj_g;
}

BlameLabel SCo::label() const {
  if (kind() != STopKind::ProjSeq) throw ContractViolation("label on non-projection");
  return node_->label;
}

SInt SCo::intermediate() const {
  if (kind() == STopKind::IdDyn) throw ContractViolation("intermediate of id");
  return node_->i;
}

bool SCo::operator==(const SCo& o) const {
  if (kind() != o.kind()) return false;
  switch (kind()) {
    case STopKind::IdDyn: return true;
    case STopKind::ProjSeq:
      return proj_ground() == o.proj_ground() && label() == o.label() &&
             intermediate() == o.intermediate();
    case STopKind::Mid: return intermediate() == o.intermediate();
  }
  return false;
}

std::string SCo::str() const {
  switch (kind()) {
    case STopKind::IdDyn: return "id";
    case STopKind::ProjSeq:
      return "(" + proj_ground().str() + "?^" + to_string(label()) + " ; " +
             intermediate().str() + ")";
    case STopKind::Mid: return intermediate().str();
  }
  return "?";
}

namespace {
SGnd coerce_s_ground(const Type& a, const Type& b, BlameLabel l);
}

SCo coerce_s(const Type& a, const Type& b, BlameLabel l) {
  if (a.is_unknown() && b.is_unknown()) return SCo::id_dyn();
  if (b.is_unknown()) {
    Type g = gnd(a);
    return SCo::mid(SInt::inj(coerce_s_ground(a, g, l)));
  }
  if (a.is_unknown()) {
    Type h = gnd(b);
    return SCo::proj(h, l, SInt::grd(coerce_s_ground(h, b, l)));
  }
  return SCo::mid(SInt::grd(coerce_s_ground(a, b, l)));
}

namespace {
SGnd coerce_s_ground(const Type& a, const Type& b, BlameLabel l) {
  if (a.is_base() && b.is_base() && a.base_type() == b.base_type())
    return SGnd::id_base(a.base_type());
  if (a.kind() != b.kind())
    throw ContractViolation("coerce_s on inconsistent types " + a.str() + " / " + b.str());
  switch (a.kind()) {
    case TypeKind::Fun:
      return SGnd::fun(coerce_s(b.lhs(), a.lhs(), l), coerce_s(a.rhs(), b.rhs(), l));
    case TypeKind::Pair:
      return SGnd::pair(coerce_s(a.lhs(), b.lhs(), l), coerce_s(a.rhs(), b.rhs(), l));
    case TypeKind::Sum:
      return SGnd::sum(coerce_s(a.lhs(), b.lhs(), l), coerce_s(a.rhs(), b.rhs(), l));
    default:
      throw ContractViolation("coerce_s on inconsistent types " + a.str() + " / " + b.str());
  }
}

SGnd compose_gnd(const SGnd& g, const SGnd& h, int measure);
SInt compose_gnd_int(const SGnd& g, const SInt& i, int measure);
SInt compose_int_top(const SInt& i, const SCo& d, int measure);
SCo compose_top(const SCo& c, const SCo& d, int measure);

int pair_measure_g(const SGnd& g, const SGnd& h) { return size_s(g) + size_s(h); }

SGnd compose_gnd(const SGnd& g, const SGnd& h, int measure) {
  assert(pair_measure_g(g, h) <= measure);
  (void)measure;
  if (g.kind() == SGndKind::IdBase && h.kind() == SGndKind::IdBase) return g;
  if (g.kind() != h.kind())
    throw ContractViolation("compose_s: ground coercions do not chain");
  int m = pair_measure_g(g, h);
  switch (g.kind()) {
    case SGndKind::Fun:
      return SGnd::fun(compose_top(h.child(0), g.child(0), m - 1),
                       compose_top(g.child(1), h.child(1), m - 1));
    case SGndKind::Pair:
      return SGnd::pair(compose_top(g.child(0), h.child(0), m - 1),
                        compose_top(g.child(1), h.child(1), m - 1));
    case SGndKind::Sum:
      return SGnd::sum(compose_top(g.child(0), h.child(0), m - 1),
                       compose_top(g.child(1), h.child(1), m - 1));
    default:
      throw ContractViolation("compose_s: unreachable");
  }
}

SInt compose_gnd_int(const SGnd& g, const SInt& i, int measure) {
  (void)measure;
  switch (i.kind()) {
    case SIntKind::InjSeq:
      return SInt::inj(compose_gnd(g, i.ground(), measure));
    case SIntKind::Grd:
      return SInt::grd(compose_gnd(g, i.ground(), measure));
    case SIntKind::Fail:
      return SInt::fail(i.label(), g.source(), i.target());
  }
  throw ContractViolation("compose_s: unreachable");
}

SInt compose_int_top(const SInt& i, const SCo& d, int measure) {
  // Failure absorbs whatever follows.
  if (i.kind() == SIntKind::Fail) return SInt::fail(i.label(), i.source(), d.target());
  if (i.kind() == SIntKind::InjSeq) {
    switch (d.kind()) {
      case STopKind::IdDyn:
        return i;
      case STopKind::ProjSeq: {
        if (i.inj_ground() == d.proj_ground())
          return compose_gnd_int(i.ground(), d.intermediate(), measure);
        return SInt::fail(d.label(), i.source(), d.target());
      }
      case STopKind::Mid: {
        // By typing the only intermediate starting at ? is a failure.
        SInt i2 = d.intermediate();
        if (i2.kind() == SIntKind::Fail) return SInt::fail(i2.label(), i.source(), d.target());
        throw ContractViolation("compose_s: injection against non-? coercion");
      }
    }
  }
  // i is a ground coercion; d must be a Mid by typing.
  if (d.kind() != STopKind::Mid)
    throw ContractViolation("compose_s: ground coercion against ?-sourced coercion");
  return compose_gnd_int(i.ground(), d.intermediate(), measure);
}

SCo compose_top(const SCo& c, const SCo& d, int measure) {
  // Termination measure for the mutual recursion, checked in debug builds.
  assert(size_s(c) + size_s(d) <= measure);
  (void)measure;
  if (c.target() != d.source())
    throw ContractViolation("compose_s: endpoints do not chain: " + c.target().str() + " vs " +
                            d.source().str());
  int m = size_s(c) + size_s(d);
  switch (c.kind()) {
    case STopKind::IdDyn:
      return d;
    case STopKind::ProjSeq:
      return SCo::proj(c.proj_ground(), c.label(),
                       compose_int_top(c.intermediate(), d, m));
    case STopKind::Mid:
      return SCo::mid(compose_int_top(c.intermediate(), d, m));
  }
  throw ContractViolation("compose_s: unreachable");
}
}  // namespace

SCo compose_s(const SCo& c, const SCo& d) {
  return compose_top(c, d, size_s(c) + size_s(d));
}

int height_s(const SGnd& g) {
  if (g.kind() == SGndKind::IdBase) return 0;
  return 1 + std::max(height_s(g.child(0)), height_s(g.child(1)));
}

int height_s(const SInt& i) {
  if (i.kind() == SIntKind::Fail) return 0;
  return height_s(i.ground());
}

int height_s(const SCo& c) {
  if (c.kind() == STopKind::IdDyn) return 0;
  return height_s(c.intermediate());
}

int size_s(const SGnd& g) {
  if (g.kind() == SGndKind::IdBase) return 0;
  return 1 + size_s(g.child(0)) + size_s(g.child(1));
}

int size_s(const SInt& i) {
  switch (i.kind()) {
    case SIntKind::Fail: return 0;
    case SIntKind::InjSeq: return 2 + size_s(i.ground());
    case SIntKind::Grd: return size_s(i.ground());
  }
  return 0;
}

int size_s(const SCo& c) {
  switch (c.kind()) {
    case STopKind::IdDyn: return 0;
    case STopKind::ProjSeq: return 2 + size_s(c.intermediate());
    case STopKind::Mid: return size_s(c.intermediate());
  }
  return 0;
}

// Hypercoercions ---------------------------------------------------------

struct HMid::Node {
  HMidKind kind;
  Type src, tgt;
  BaseType base = BaseType::Nat;
  HCo c0, c1;
};

struct HCo::Node {
  bool id_dyn = false;
  HProjKind p = HProjKind::Id;
  BlameLabel plabel;
  HMid m;
  HEndKind e = HEndKind::Id;
  BlameLabel elabel;
  Type src, tgt;
};

HMid HMid::id_base(BaseType b) {
  auto n = std::make_shared<Node>();
  n->kind = HMidKind::IdBase;
  n->base = b;
  n->src = n->tgt = Type::base(b);
  return HMid(n);
}

HMid HMid::fun(const HCo& c, const HCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = HMidKind::Fun;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::fun(c.target(), d.source());
  n->tgt = Type::fun(c.source(), d.target());
  return HMid(n);
}

HMid HMid::pair(const HCo& c, const HCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = HMidKind::Pair;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::pair(c.source(), d.source());
  n->tgt = Type::pair(c.target(), d.target());
  return HMid(n);
}

HMid HMid::sum(const HCo& c, const HCo& d) {
  auto n = std::make_shared<Node>();
  n->kind = HMidKind::Sum;
  n->c0 = c;
  n->c1 = d;
  n->src = Type::sum(c.source(), d.source());
  n->tgt = Type::sum(c.target(), d.target());
  return HMid(n);
}

HMidKind HMid::kind() const { return node_->kind; }
Type HMid::source() const { return node_->src; }
Type HMid::target() const { return node_->tgt; }

HCo HMid::child(int i) const {
  if (kind() == HMidKind::IdBase) throw ContractViolation("child on base identity");
  return i == 0 ? node_->c0 : node_->c1;
}

bool HMid::operator==(const HMid& o) const {
  if (kind() != o.kind()) return false;
  if (kind() == HMidKind::IdBase) return node_->base == o.node_->base;
  return child(0) == o.child(0) && child(1) == o.child(1);
}

std::string HMid::str() const {
  switch (kind()) {
    case HMidKind::IdBase: return "id";
    case HMidKind::Fun: return "(" + child(0).str() + " -> " + child(1).str() + ")";
    case HMidKind::Pair: return "(" + child(0).str() + " * " + child(1).str() + ")";
    case HMidKind::Sum: return "(" + child(0).str() + " + " + child(1).str() + ")";
  }
  return "?";
}

HCo HCo::id_dyn() {
  static auto n = [] {
    auto m = std::make_shared<Node>();
    m->id_dyn = true;
    m->src = m->tgt = Type::unknown();
    return m;
  }();
  return HCo(n);
}

HCo HCo::make(HProjKind p, BlameLabel proj_label, const HMid& m, HEndKind e,
              BlameLabel end_label, const Type& fail_target) {
  auto n = std::make_shared<Node>();
  n->p = p;
  n->plabel = proj_label;
  n->m = m;
  n->e = e;
  n->elabel = end_label;
  if (p == HProjKind::Proj) {
    if (!is_ground(m.source()))
      throw ContractViolation("projection part requires a ground middle source");
    n->src = Type::unknown();
  } else {
    n->src = m.source();
  }
  switch (e) {
    case HEndKind::Id: n->tgt = m.target(); break;
    case HEndKind::Inj:
      if (!is_ground(m.target()))
        throw ContractViolation("injection part requires a ground middle target");
      n->tgt = Type::unknown();
      break;
    case HEndKind::Fail: n->tgt = fail_target; break;
  }
  return HCo(n);
}

HCo HCo::triple_id_p(const HMid& m, HEndKind end, BlameLabel end_label, const Type& fail_target) {
  return make(HProjKind::Id, BlameLabel(1), m, end, end_label, fail_target);
}

HCo HCo::triple_proj_p(BlameLabel proj_label, const HMid& m, HEndKind end, BlameLabel end_label,
                       const Type& fail_target) {
  return make(HProjKind::Proj, proj_label, m, end, end_label, fail_target);
}

bool HCo::is_id_dyn() const { return node_->id_dyn; }

HProjKind HCo::proj_kind() const {
  if (is_id_dyn()) throw ContractViolation("proj_kind on id");
  return node_->p;
}

BlameLabel HCo::proj_label() const {
  if (is_id_dyn() || node_->p != HProjKind::Proj)
    throw ContractViolation("proj_label on non-projection");
  return node_->plabel;
}

HMid HCo::middle() const {
  if (is_id_dyn()) throw ContractViolation("middle on id");
  return node_->m;
}

HEndKind HCo::end_kind() const {
  if (is_id_dyn()) throw ContractViolation("end_kind on id");
  return node_->e;
}

BlameLabel HCo::end_label() const {
  if (is_id_dyn() || node_->e != HEndKind::Fail)
    throw ContractViolation("end_label on non-failure end");
  return node_->elabel;
}

Type HCo::source() const { return node_->src; }
Type HCo::target() const { return node_->tgt; }

bool HCo::operator==(const HCo& o) const {
  if (is_id_dyn() != o.is_id_dyn()) return false;
  if (is_id_dyn()) return true;
  if (proj_kind() != o.proj_kind() || end_kind() != o.end_kind()) return false;
  if (proj_kind() == HProjKind::Proj && !(proj_label() == o.proj_label())) return false;
  if (end_kind() == HEndKind::Fail &&
      (!(end_label() == o.end_label()) || target() != o.target()))
    return false;
  return middle() == o.middle();
}

std::string HCo::str() const {
  if (is_id_dyn()) return "id";
  std::string p = proj_kind() == HProjKind::Proj
                      ? middle().source().str() + "?^" + to_string(node_->plabel)
                      : "id";
  std::string i;
  switch (end_kind()) {
    case HEndKind::Id: i = "id"; break;
    case HEndKind::Inj: i = middle().target().str() + "!"; break;
    case HEndKind::Fail: i = "fail^" + to_string(node_->elabel); break;
  }
  return "(" + p + " ; " + middle().str() + " ; " + i + ")";
}

namespace {
HMid coerce_h_mid(const Type& a, const Type& b, BlameLabel l) {
  if (a.is_base() && b.is_base() && a.base_type() == b.base_type())
    return HMid::id_base(a.base_type());
  if (a.kind() != b.kind())
    throw ContractViolation("coerce_h on inconsistent types " + a.str() + " / " + b.str());
  switch (a.kind()) {
    case TypeKind::Fun:
      return HMid::fun(coerce_h(b.lhs(), a.lhs(), l), coerce_h(a.rhs(), b.rhs(), l));
    case TypeKind::Pair:
      return HMid::pair(coerce_h(a.lhs(), b.lhs(), l), coerce_h(a.rhs(), b.rhs(), l));
    case TypeKind::Sum:
      return HMid::sum(coerce_h(a.lhs(), b.lhs(), l), coerce_h(a.rhs(), b.rhs(), l));
    default:
      throw ContractViolation("coerce_h on inconsistent types " + a.str() + " / " + b.str());
  }
}
}  // namespace

HCo coerce_h(const Type& a, const Type& b, BlameLabel l) {
  if (a.is_unknown() && b.is_unknown()) return HCo::id_dyn();
  if (b.is_unknown())
    return HCo::triple_id_p(coerce_h_mid(a, gnd(a), l), HEndKind::Inj, l, Type());
  if (a.is_unknown())
    return HCo::triple_proj_p(l, coerce_h_mid(gnd(b), b, l), HEndKind::Id, l, Type());
  return HCo::triple_id_p(coerce_h_mid(a, b, l), HEndKind::Id, l, Type());
}

namespace {
HMid compose_mid(const HMid& m1, const HMid& m2) {
  if (m1.kind() == HMidKind::IdBase && m2.kind() == HMidKind::IdBase) return m1;
  if (m1.kind() != m2.kind())
    throw ContractViolation("compose_h: middles do not chain");
  switch (m1.kind()) {
    case HMidKind::Fun:
      return HMid::fun(compose_h(m2.child(0), m1.child(0)), compose_h(m1.child(1), m2.child(1)));
    case HMidKind::Pair:
      return HMid::pair(compose_h(m1.child(0), m2.child(0)), compose_h(m1.child(1), m2.child(1)));
    case HMidKind::Sum:
      return HMid::sum(compose_h(m1.child(0), m2.child(0)), compose_h(m1.child(1), m2.child(1)));
    default:
      throw ContractViolation("compose_h: unreachable");
  }
}
}  // namespace

HCo compose_h(const HCo& c, const HCo& d) {
  if (c.target() != d.source())
    throw ContractViolation("compose_h: endpoints do not chain: " + c.target().str() + " vs " +
                            d.source().str());
  if (d.is_id_dyn()) return c;
  if (c.is_id_dyn()) return d;
  // Failure absorbs on the left.
  if (c.end_kind() == HEndKind::Fail)
    return HCo::make(c.proj_kind(), c.proj_kind() == HProjKind::Proj ? c.proj_label() : BlameLabel(1),
                     c.middle(), HEndKind::Fail, c.end_label(), d.target());
  BlameLabel cp = c.proj_kind() == HProjKind::Proj ? c.proj_label() : BlameLabel(1);
  if (c.end_kind() == HEndKind::Id) {
    if (d.proj_kind() != HProjKind::Id)
      throw ContractViolation("compose_h: target/source mismatch on projection");
    return HCo::make(c.proj_kind(), cp, compose_mid(c.middle(), d.middle()), d.end_kind(),
                     d.end_kind() == HEndKind::Fail ? d.end_label() : BlameLabel(1), d.target());
  }
  // c ends in an injection; d must begin with a projection.
  if (d.proj_kind() != HProjKind::Proj)
    throw ContractViolation("compose_h: injection not followed by projection");
  Type g = c.middle().target();
  Type h = d.middle().source();
  if (g == h)
    return HCo::make(c.proj_kind(), cp, compose_mid(c.middle(), d.middle()), d.end_kind(),
                     d.end_kind() == HEndKind::Fail ? d.end_label() : BlameLabel(1), d.target());
  return HCo::make(c.proj_kind(), cp, c.middle(), HEndKind::Fail, d.proj_label(), d.target());
}

int height_h(const HMid& m) {
  if (m.kind() == HMidKind::IdBase) return 0;
  return 1 + std::max(height_h(m.child(0)), height_h(m.child(1)));
}

int height_h(const HCo& c) {
  if (c.is_id_dyn()) return 0;
  return height_h(c.middle());
}

int size_h(const HMid& m) {
  if (m.kind() == HMidKind::IdBase) return 0;
  return 1 + size_h(m.child(0)) + size_h(m.child(1));
}

int size_h_proj(const HCo& c) {
  if (c.is_id_dyn()) return 0;
  return c.proj_kind() == HProjKind::Proj ? 1 : 0;
}

int size_h_end(const HCo& c) {
  if (c.is_id_dyn()) return 0;
  switch (c.end_kind()) {
    case HEndKind::Id: return 0;
    case HEndKind::Inj: return 1;
    case HEndKind::Fail: return 0;
  }
  return 0;
}

int size_h(const HCo& c) {
  if (c.is_id_dyn()) return 0;
  return 2 + size_h_proj(c) + size_h(c.middle()) + size_h_end(c);
}

}  // namespace castkit
