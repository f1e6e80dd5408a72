#include "castkit/harness.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace castkit {

// Program generation ------------------------------------------------------

namespace {

struct GenState {
  std::mt19937_64 rng;
  int next_label = 1;
  int type_depth = 2;

  uint64_t pick(uint64_t n) { return rng() % n; }
  BlameLabel label() { return BlameLabel(next_label++); }
};

Type rand_static_type(GenState& g, int depth) {
  if (depth <= 0 || g.pick(3) == 0) {
    switch (g.pick(4)) {
      case 0: return Type::nat();
      case 1: return Type::int_();
      case 2: return Type::bool_();
      default: return Type::unit();
    }
  }
  switch (g.pick(3)) {
    case 0: return Type::fun(rand_static_type(g, depth - 1), rand_static_type(g, depth - 1));
    case 1: return Type::pair(rand_static_type(g, depth - 1), rand_static_type(g, depth - 1));
    default: return Type::sum(rand_static_type(g, depth - 1), rand_static_type(g, depth - 1));
  }
}

GTerm gen_term(GenState& g, std::vector<Type>& ctx, const Type& goal, int depth);

GTerm gen_leaf(GenState& g, std::vector<Type>& ctx, const Type& goal) {
  switch (goal.kind()) {
    case TypeKind::Base:
      switch (goal.base_type()) {
        case BaseType::Nat: return GTerm::constant(PrimConst::nat(g.pick(10)));
        case BaseType::Int:
          return GTerm::constant(PrimConst::int_(static_cast<int64_t>(g.pick(21)) - 10));
        case BaseType::Bool: return GTerm::constant(PrimConst::bool_(g.pick(2) == 0));
        case BaseType::Unit: return GTerm::constant(PrimConst::unit());
        case BaseType::Bot: break;
      }
      throw ContractViolation("no constants inhabit Bot");
    case TypeKind::Fun: {
      // Prefer a primitive constant when one has exactly this type.
      for (const char* name : {"not", "inc", "neg", "add", "iszero"}) {
        auto k = prim_by_name(name);
        if (k && k->type() == goal && g.pick(2) == 0) return GTerm::constant(*k);
      }
      ctx.push_back(goal.lhs());
      GTerm body = gen_term(g, ctx, goal.rhs(), 0);
      ctx.pop_back();
      return GTerm::lam(goal.lhs(), body);
    }
    case TypeKind::Pair:
      return GTerm::cons(gen_leaf(g, ctx, goal.lhs()), gen_leaf(g, ctx, goal.rhs()));
    case TypeKind::Sum:
      if (g.pick(2) == 0) return GTerm::inl(goal.rhs(), gen_leaf(g, ctx, goal.lhs()));
      return GTerm::inr(goal.lhs(), gen_leaf(g, ctx, goal.rhs()));
    case TypeKind::Unknown:
      break;
  }
  throw ContractViolation("gen_leaf on ? goal (generation is fully static)");
}

GTerm gen_term(GenState& g, std::vector<Type>& ctx, const Type& goal, int depth) {
  // A matching variable is always worth considering.
  std::vector<int> vars;
  for (size_t i = 0; i < ctx.size(); ++i)
    if (ctx[ctx.size() - 1 - i] == goal) vars.push_back(static_cast<int>(i));
  if (!vars.empty() && g.pick(3) == 0) return GTerm::var(vars[g.pick(vars.size())]);
  if (depth <= 0) return gen_leaf(g, ctx, goal);

  switch (g.pick(8)) {
    case 0:
      return gen_leaf(g, ctx, goal);
    case 1: {  // introduction form for the goal's head
      switch (goal.kind()) {
        case TypeKind::Fun: {
          ctx.push_back(goal.lhs());
          GTerm body = gen_term(g, ctx, goal.rhs(), depth - 1);
          ctx.pop_back();
          return GTerm::lam(goal.lhs(), body);
        }
        case TypeKind::Pair:
          return GTerm::cons(gen_term(g, ctx, goal.lhs(), depth - 1),
                             gen_term(g, ctx, goal.rhs(), depth - 1));
        case TypeKind::Sum:
          if (g.pick(2) == 0)
            return GTerm::inl(goal.rhs(), gen_term(g, ctx, goal.lhs(), depth - 1));
          return GTerm::inr(goal.lhs(), gen_term(g, ctx, goal.rhs(), depth - 1));
        default:
          return gen_leaf(g, ctx, goal);
      }
    }
    case 2: {  // application
      std::vector<Type> known;
      for (const Type& t : ctx)
        if (!t.is_unknown()) known.push_back(t);
      Type arg_t = g.pick(2) == 0 && !known.empty() ? known[g.pick(known.size())]
                                                    : rand_static_type(g, g.type_depth);
      GTerm fn = gen_term(g, ctx, Type::fun(arg_t, goal), depth - 1);
      GTerm arg = gen_term(g, ctx, arg_t, depth - 1);
      return GTerm::app(fn, arg, g.label());
    }
    case 3:  // conditional
      return GTerm::if_(gen_term(g, ctx, Type::bool_(), depth - 1),
                        gen_term(g, ctx, goal, depth - 1),
                        gen_term(g, ctx, goal, depth - 1), g.label());
    case 4: {  // projection
      Type other = rand_static_type(g, g.type_depth);
      bool first = g.pick(2) == 0;
      Type pair_t = first ? Type::pair(goal, other) : Type::pair(other, goal);
      return GTerm::proj(first ? 1 : 2, gen_term(g, ctx, pair_t, depth - 1), g.label());
    }
    case 5: {  // case
      Type t1 = rand_static_type(g, g.type_depth);
      Type t2 = rand_static_type(g, g.type_depth);
      GTerm scrut = gen_term(g, ctx, Type::sum(t1, t2), depth - 1);
      ctx.push_back(t1);
      GTerm left = gen_term(g, ctx, goal, depth - 1);
      ctx.pop_back();
      ctx.push_back(t2);
      GTerm right = gen_term(g, ctx, goal, depth - 1);
      ctx.pop_back();
      return GTerm::case_(scrut, t1, t2, left, right, g.label());
    }
    case 6: {  // primitive application at base goals
      if (goal == Type::nat()) {
        if (g.pick(2) == 0)
          return GTerm::app(GTerm::constant(*prim_by_name("inc")),
                            gen_term(g, ctx, Type::nat(), depth - 1), g.label());
        return GTerm::app(
            GTerm::app(GTerm::constant(*prim_by_name("add")),
                       gen_term(g, ctx, Type::nat(), depth - 1), g.label()),
            gen_term(g, ctx, Type::nat(), depth - 1), g.label());
      }
      if (goal == Type::bool_()) {
        if (g.pick(2) == 0)
          return GTerm::app(GTerm::constant(*prim_by_name("iszero")),
                            gen_term(g, ctx, Type::nat(), depth - 1), g.label());
        return GTerm::app(GTerm::constant(*prim_by_name("not")),
                          gen_term(g, ctx, Type::bool_(), depth - 1), g.label());
      }
      if (goal == Type::int_())
        return GTerm::app(GTerm::constant(*prim_by_name("neg")),
                          gen_term(g, ctx, Type::int_(), depth - 1), g.label());
      return gen_term(g, ctx, goal, depth - 1);
    }
    default:
      if (!vars.empty()) return GTerm::var(vars[g.pick(vars.size())]);
      return gen_leaf(g, ctx, goal);
  }
}

}  // namespace

GTerm loosen(const GTerm& m, std::mt19937_64& rng, double bias) {
  auto drop = [&]() {
    return bias >= 1.0 || (bias > 0.0 && (rng() % 1000000) < bias * 1000000);
  };
  auto weaken = [&](const Type& t) { return drop() ? Type::unknown() : t; };
  switch (m.kind()) {
    case GTermKind::Const:
    case GTermKind::Var:
      return m;
    case GTermKind::Lam:
      return GTerm::lam(weaken(m.annot()), loosen(m.child(0), rng, bias));
    case GTermKind::App:
      return GTerm::app(loosen(m.child(0), rng, bias), loosen(m.child(1), rng, bias), m.label());
    case GTermKind::If:
      return GTerm::if_(loosen(m.child(0), rng, bias), loosen(m.child(1), rng, bias),
                        loosen(m.child(2), rng, bias), m.label());
    case GTermKind::Cons:
      return GTerm::cons(loosen(m.child(0), rng, bias), loosen(m.child(1), rng, bias));
    case GTermKind::Proj:
      return GTerm::proj(m.proj_index(), loosen(m.child(0), rng, bias), m.label());
    case GTermKind::Inl:
      return GTerm::inl(weaken(m.annot()), loosen(m.child(0), rng, bias));
    case GTermKind::Inr:
      return GTerm::inr(weaken(m.annot()), loosen(m.child(0), rng, bias));
    case GTermKind::Case:
      return GTerm::case_(loosen(m.child(0), rng, bias), weaken(m.annot()),
                          weaken(m.annot2()), loosen(m.child(1), rng, bias),
                          loosen(m.child(2), rng, bias), m.label());
  }
  throw ContractViolation("loosen: unreachable");
}

namespace {

// Wraps a term of any type into a ?-typed position through an identity
// redex over a ?-annotated binder.
GTerm dyn_wrapped(GenState& g, const GTerm& t) {
  return GTerm::app(GTerm::lam(Type::unknown(), GTerm::var(0)), t, g.label());
}

// Loosening alone never makes a program blame: the original values still
// fit every context. This pass swaps values that flow into ?-typed holes
// for freshly generated ones of arbitrary type, which stays well-typed by
// consistency but creates genuine runtime mismatches.
GTerm perturb(GenState& g, std::vector<Type>& ctx, const GTerm& m, double p) {
  auto coin = [&] { return p > 0.0 && (g.rng() % 1000000) < p * 1000000; };
  auto fresh_dyn = [&] {
    return dyn_wrapped(g, gen_term(g, ctx, rand_static_type(g, 1), 1));
  };
  // Any concrete-typed subterm may turn into a ?-typed stand-in of some
  // other type; every consumer handles ? by consistency, so typability is
  // never at risk, only runtime casts are.
  if (m.kind() != GTermKind::Var && p > 0.0 && (g.rng() % 1000000) < p * 0.2 * 1000000)
    return fresh_dyn();
  switch (m.kind()) {
    case GTermKind::Const:
    case GTermKind::Var:
      return m;
    case GTermKind::Lam: {
      ctx.push_back(m.annot());
      GTerm body = perturb(g, ctx, m.child(0), p);
      ctx.pop_back();
      return GTerm::lam(m.annot(), body);
    }
    case GTermKind::App: {
      GTerm fn = perturb(g, ctx, m.child(0), p);
      GTerm arg = perturb(g, ctx, m.child(1), p);
      Type a = typecheck_gtlc(TypingCtx(ctx), fn);
      auto match = match_head(a, TypeHead::Fun);
      if (match && match->first.is_unknown() && coin()) arg = fresh_dyn();
      return GTerm::app(fn, arg, m.label());
    }
    case GTermKind::If: {
      GTerm cond = perturb(g, ctx, m.child(0), p);
      if (typecheck_gtlc(TypingCtx(ctx), cond).is_unknown() && coin()) cond = fresh_dyn();
      return GTerm::if_(cond, perturb(g, ctx, m.child(1), p), perturb(g, ctx, m.child(2), p),
                        m.label());
    }
    case GTermKind::Cons:
      return GTerm::cons(perturb(g, ctx, m.child(0), p), perturb(g, ctx, m.child(1), p));
    case GTermKind::Proj: {
      GTerm e = perturb(g, ctx, m.child(0), p);
      if (typecheck_gtlc(TypingCtx(ctx), e).is_unknown() && coin()) e = fresh_dyn();
      return GTerm::proj(m.proj_index(), e, m.label());
    }
    case GTermKind::Inl:
      return GTerm::inl(m.annot(), perturb(g, ctx, m.child(0), p));
    case GTermKind::Inr:
      return GTerm::inr(m.annot(), perturb(g, ctx, m.child(0), p));
    case GTermKind::Case: {
      GTerm scrut = perturb(g, ctx, m.child(0), p);
      if (typecheck_gtlc(TypingCtx(ctx), scrut).is_unknown() && coin()) scrut = fresh_dyn();
      ctx.push_back(m.annot());
      GTerm left = perturb(g, ctx, m.child(1), p);
      ctx.pop_back();
      ctx.push_back(m.annot2());
      GTerm right = perturb(g, ctx, m.child(2), p);
      ctx.pop_back();
      return GTerm::case_(scrut, m.annot(), m.annot2(), left, right, m.label());
    }
  }
  throw ContractViolation("perturb: unreachable");
}

}  // namespace

GTerm gen_typed_program(const GenConfig& cfg) {
  GenState g;
  g.rng.seed(cfg.seed);
  g.type_depth = cfg.type_depth;
  Type goal = cfg.goals[g.pick(cfg.goals.size())];
  std::vector<Type> ctx;
  GTerm full = gen_term(g, ctx, goal, cfg.max_depth);
  GTerm loosened = loosen(full, g.rng, cfg.dyn_bias);
  return perturb(g, ctx, loosened, cfg.dyn_bias);
}

// Enumeration ----------------------------------------------------------------

namespace {
int type_nodes(const Type& t) {
  if (t.is_atomic()) return 1;
  return 1 + type_nodes(t.lhs()) + type_nodes(t.rhs());
}
}  // namespace

std::vector<Type> enumerate_types(int max_depth, const std::vector<Type>& atoms, int max_nodes) {
  std::vector<Type> cur = atoms;
  for (int d = 1; d <= max_depth; ++d) {
    std::vector<Type> next = atoms;
    for (const Type& a : cur)
      for (const Type& b : cur) {
        if (type_nodes(a) + type_nodes(b) + 1 > max_nodes) continue;
        next.push_back(Type::fun(a, b));
        next.push_back(Type::pair(a, b));
        next.push_back(Type::sum(a, b));
      }
    cur = std::move(next);
  }
  // Deduplicate structurally.
  std::vector<Type> out;
  std::set<std::string> seen;
  for (const Type& t : cur)
    if (seen.insert(t.str()).second) out.push_back(t);
  return out;
}

std::vector<GTerm> enumerate_closed_gterms(int max_depth) {
  // Enumerates raw trees with binder tracking, then keeps the well-typed ones.
  std::vector<std::vector<std::vector<GTerm>>> memo;  // [depth][binders]
  int next_label = 1;
  std::function<const std::vector<GTerm>&(int, int)> go = [&](int depth,
                                                              int binders) -> const auto& {
    if (static_cast<size_t>(depth) >= memo.size()) memo.resize(depth + 1);
    if (static_cast<size_t>(binders) >= memo[depth].size()) memo[depth].resize(binders + 1);
    auto& slot = memo[depth][binders];
    if (!slot.empty()) return slot;
    std::vector<GTerm> out;
    out.push_back(GTerm::constant(PrimConst::nat(1)));
    out.push_back(GTerm::constant(PrimConst::bool_(true)));
    for (int v = 0; v < std::min(binders, 2); ++v) out.push_back(GTerm::var(v));
    if (depth > 0) {
      for (const Type& a : {Type::unknown(), Type::nat()})
        for (const GTerm& b : go(depth - 1, binders + 1)) out.push_back(GTerm::lam(a, b));
      for (const GTerm& f : go(depth - 1, binders))
        for (const GTerm& x : go(depth - 1, binders))
          out.push_back(GTerm::app(f, x, BlameLabel(next_label++)));
      for (const GTerm& a : go(depth - 1, binders))
        for (const GTerm& b : go(depth - 1, binders)) out.push_back(GTerm::cons(a, b));
      for (const GTerm& e : go(depth - 1, binders)) {
        out.push_back(GTerm::proj(1, e, BlameLabel(next_label++)));
        out.push_back(GTerm::proj(2, e, BlameLabel(next_label++)));
      }
    }
    slot = std::move(out);
    return slot;
  };
  std::vector<GTerm> typed;
  for (const GTerm& m : go(max_depth, 0)) {
    try {
      typecheck_gtlc(TypingCtx(), m);
      typed.push_back(m);
    } catch (const TypeError&) {
    }
  }
  return typed;
}

namespace {

void collect_annot_count(const GTerm& m, int* count) {
  switch (m.kind()) {
    case GTermKind::Lam:
    case GTermKind::Inl:
    case GTermKind::Inr:
      ++*count;
      break;
    case GTermKind::Case:
      *count += 2;
      break;
    default:
      break;
  }
  for (int i = 0; i < 3; ++i) {
    GTerm c = m.child(i);
    if (c.valid()) collect_annot_count(c, count);
  }
}

// Replaces the annotations whose (pre-order) position is set in mask with ?.
GTerm apply_mask(const GTerm& m, uint32_t mask, int* pos) {
  auto take = [&](const Type& t) {
    bool hit = mask & (1u << *pos);
    ++*pos;
    return hit ? Type::unknown() : t;
  };
  switch (m.kind()) {
    case GTermKind::Const:
    case GTermKind::Var:
      return m;
    case GTermKind::Lam: {
      Type a = take(m.annot());
      return GTerm::lam(a, apply_mask(m.child(0), mask, pos));
    }
    case GTermKind::App:
      return GTerm::app(apply_mask(m.child(0), mask, pos), apply_mask(m.child(1), mask, pos),
                        m.label());
    case GTermKind::If:
      return GTerm::if_(apply_mask(m.child(0), mask, pos), apply_mask(m.child(1), mask, pos),
                        apply_mask(m.child(2), mask, pos), m.label());
    case GTermKind::Cons:
      return GTerm::cons(apply_mask(m.child(0), mask, pos), apply_mask(m.child(1), mask, pos));
    case GTermKind::Proj:
      return GTerm::proj(m.proj_index(), apply_mask(m.child(0), mask, pos), m.label());
    case GTermKind::Inl: {
      Type a = take(m.annot());
      return GTerm::inl(a, apply_mask(m.child(0), mask, pos));
    }
    case GTermKind::Inr: {
      Type a = take(m.annot());
      return GTerm::inr(a, apply_mask(m.child(0), mask, pos));
    }
    case GTermKind::Case: {
      Type a = take(m.annot());
      Type b = take(m.annot2());
      GTerm s = apply_mask(m.child(0), mask, pos);
      GTerm l = apply_mask(m.child(1), mask, pos);
      GTerm r = apply_mask(m.child(2), mask, pos);
      return GTerm::case_(s, a, b, l, r, m.label());
    }
  }
  throw ContractViolation("apply_mask: unreachable");
}

}  // namespace

std::vector<std::pair<GTerm, GTerm>> loosening_pairs(const GTerm& m, size_t max_pairs) {
  int sites = 0;
  collect_annot_count(m, &sites);
  std::vector<std::pair<GTerm, GTerm>> out;
  if (sites > 10) sites = 10;  // combinatorial cap; positions beyond stay fixed
  uint32_t limit = 1u << sites;
  for (uint32_t more = 0; more < limit && out.size() < max_pairs; ++more) {
    for (uint32_t extra = 0; extra < limit && out.size() < max_pairs; ++extra) {
      uint32_t less = more | extra;  // loosen a superset of sites
      int p1 = 0, p2 = 0;
      out.emplace_back(apply_mask(m, less, &p1), apply_mask(m, more, &p2));
    }
  }
  return out;
}

// Coercion enumeration -------------------------------------------------------

namespace {

void dedup_casts(std::vector<Cast>* cs) {
  std::set<std::string> seen;
  std::vector<Cast> out;
  for (const Cast& c : *cs) {
    std::string key = c.source().str() + "|" + c.str() + "|" + c.target().str();
    if (seen.insert(key).second) out.push_back(c);
  }
  *cs = std::move(out);
}

std::vector<Cast> enumerate_simple(Discipline d, int max_height) {
  std::vector<SimpleCo> level;
  for (BaseType b : {BaseType::Nat, BaseType::Bool}) level.push_back(SimpleCo::id(Type::base(b)));
  level.push_back(SimpleCo::id(Type::unknown()));
  for (const Type& t : {Type::nat(), Type::bool_(), Type::fun(Type::unknown(), Type::unknown()),
                        Type::fun(Type::nat(), Type::bool_())}) {
    level.push_back(SimpleCo::inj(t));
    level.push_back(SimpleCo::proj(t, BlameLabel(1)));
    level.push_back(SimpleCo::proj(t, BlameLabel(2)));
  }
  if (d == Discipline::Ldc) {
    level.push_back(SimpleCo::fail(BlameLabel(1), Type::nat(), Type::bool_()));
    level.push_back(SimpleCo::fail(BlameLabel(2), Type::unknown(), Type::nat()));
  }
  std::vector<SimpleCo> all = level;
  for (int h = 1; h <= max_height; ++h) {
    std::vector<SimpleCo> next;
    for (const SimpleCo& c : level)
      for (const SimpleCo& e : level) {
        next.push_back(SimpleCo::fun(c, e));
        next.push_back(SimpleCo::pair(c, e));
        next.push_back(SimpleCo::sum(c, e));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.size() > 400) level.resize(400);
  }
  std::vector<Cast> out;
  for (const SimpleCo& c : all) out.push_back(Cast::simple(d, c));
  dedup_casts(&out);
  return out;
}

std::vector<Cast> enumerate_seq(int max_height) {
  std::vector<SeqCo> level;
  for (BaseType b : {BaseType::Nat, BaseType::Bool}) level.push_back(SeqCo::id(Type::base(b)));
  level.push_back(SeqCo::id(Type::unknown()));
  for (const Type& g : {Type::nat(), Type::bool_(), Type::fun(Type::unknown(), Type::unknown()),
                        Type::pair(Type::unknown(), Type::unknown())}) {
    level.push_back(SeqCo::inj(g));
    level.push_back(SeqCo::proj(g, BlameLabel(1)));
    level.push_back(SeqCo::proj(g, BlameLabel(2)));
  }
  std::vector<SeqCo> all = level;
  for (int h = 1; h <= max_height; ++h) {
    std::vector<SeqCo> next;
    for (const SeqCo& c : level)
      for (const SeqCo& e : level) {
        next.push_back(SeqCo::fun(c, e));
        next.push_back(SeqCo::pair(c, e));
        next.push_back(SeqCo::sum(c, e));
        if (c.target() == e.source()) next.push_back(SeqCo::seq(c, e));
      }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
    if (level.size() > 400) level.resize(400);
  }
  std::vector<Cast> out;
  for (const SeqCo& c : all) out.push_back(Cast::seq(c));
  dedup_casts(&out);
  return out;
}

std::vector<Cast> enumerate_lambda_s(int max_height) {
  // Grounds by exact height, then intermediates and tops over them.
  std::vector<std::vector<SGnd>> gnds(max_height + 1);
  for (BaseType b : {BaseType::Nat, BaseType::Bool}) gnds[0].push_back(SGnd::id_base(b));

  auto tops_over = [&](const std::vector<SGnd>& gs) {
    std::vector<SCo> tops;
    std::vector<SInt> ints;
    for (const SGnd& g : gs) {
      ints.push_back(SInt::grd(g));
      if (is_ground(g.target())) ints.push_back(SInt::inj(g));
    }
    ints.push_back(SInt::fail(BlameLabel(1), Type::nat(), Type::bool_()));
    ints.push_back(SInt::fail(BlameLabel(2), Type::unknown(), Type::nat()));
    for (const SInt& i : ints) {
      tops.push_back(SCo::mid(i));
      if (is_ground(i.source()))
        for (int l : {1, 2}) tops.push_back(SCo::proj(i.source(), BlameLabel(l), i));
    }
    tops.push_back(SCo::id_dyn());
    return tops;
  };

  std::vector<SGnd> gnd_all = gnds[0];
  for (int h = 1; h <= max_height; ++h) {
    std::vector<SCo> smaller = tops_over(gnd_all);
    if (smaller.size() > 60) smaller.resize(60);
    for (const SCo& c : smaller)
      for (const SCo& e : smaller) {
        gnds[h].push_back(SGnd::fun(c, e));
        gnds[h].push_back(SGnd::pair(c, e));
        gnds[h].push_back(SGnd::sum(c, e));
      }
    if (gnds[h].size() > 500) gnds[h].resize(500);
    gnd_all.insert(gnd_all.end(), gnds[h].begin(), gnds[h].end());
  }
  std::vector<Cast> out;
  for (const SCo& c : tops_over(gnd_all)) out.push_back(Cast::lambda_s(c));
  dedup_casts(&out);
  return out;
}

std::vector<Cast> enumerate_hyper(int max_height) {
  std::vector<HMid> mids;
  for (BaseType b : {BaseType::Nat, BaseType::Bool}) mids.push_back(HMid::id_base(b));
  std::vector<HCo> level;
  auto tops_over = [&](const std::vector<HMid>& ms) {
    std::vector<HCo> tops;
    tops.push_back(HCo::id_dyn());
    for (const HMid& m : ms) {
      std::vector<std::pair<HProjKind, BlameLabel>> ps = {{HProjKind::Id, BlameLabel(1)}};
      if (is_ground(m.source())) {
        ps.push_back({HProjKind::Proj, BlameLabel(1)});
        ps.push_back({HProjKind::Proj, BlameLabel(2)});
      }
      for (auto& [pk, pl] : ps) {
        tops.push_back(HCo::make(pk, pl, m, HEndKind::Id, BlameLabel(1), Type()));
        if (is_ground(m.target()))
          tops.push_back(HCo::make(pk, pl, m, HEndKind::Inj, BlameLabel(1), Type()));
        tops.push_back(HCo::make(pk, pl, m, HEndKind::Fail, BlameLabel(1), Type::nat()));
        tops.push_back(HCo::make(pk, pl, m, HEndKind::Fail, BlameLabel(2), Type::bool_()));
      }
    }
    return tops;
  };
  std::vector<HMid> mid_all = mids;
  for (int h = 1; h <= max_height; ++h) {
    std::vector<HCo> smaller = tops_over(mid_all);
    if (smaller.size() > 60) smaller.resize(60);
    std::vector<HMid> next;
    for (const HCo& c : smaller)
      for (const HCo& e : smaller) {
        next.push_back(HMid::fun(c, e));
        next.push_back(HMid::pair(c, e));
        next.push_back(HMid::sum(c, e));
      }
    if (next.size() > 500) next.resize(500);
    mid_all.insert(mid_all.end(), next.begin(), next.end());
  }
  std::vector<Cast> out;
  for (const HCo& c : tops_over(mid_all)) out.push_back(Cast::hyper(c));
  dedup_casts(&out);
  return out;
}

}  // namespace

std::vector<Cast> enumerate_coercions(Discipline d, int max_height) {
  if (max_height > 4) throw ContractViolation("coercion enumeration capped at height 4");
  switch (d) {
    case Discipline::Edc:
    case Discipline::Ldc:
      return enumerate_simple(d, max_height);
    case Discipline::LambdaC:
      return enumerate_seq(max_height);
    case Discipline::LambdaS:
      return enumerate_lambda_s(max_height);
    case Discipline::Hyper:
      return enumerate_hyper(max_height);
    default:
      throw ContractViolation("enumeration is grammar-based; type-pair casts come from types");
  }
}

// Differential execution -----------------------------------------------------

namespace {
CTerm observable_core(CTerm v) {
  while (v.is(CTermKind::Cast) || v.is(CTermKind::Wrap)) v = v.child(0);
  return v;
}
}  // namespace

bool outcomes_agree(const Outcome& a, const Outcome& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Outcome::Kind::Timeout:
      return true;
    case Outcome::Kind::Blamed:
      return a.label == b.label;
    case Outcome::Kind::Value: {
      CTerm ca = observable_core(a.value);
      CTerm cb = observable_core(b.value);
      if (ca.is(CTermKind::Const) && cb.is(CTermKind::Const)) return ca.prim() == cb.prim();
      // Non-base observables are compared by outcome kind only.
      return true;
    }
  }
  return false;
}

DiffReport run_differential(const GTerm& m, const std::vector<Discipline>& disciplines,
                            int fuel) {
  DiffReport rep;
  for (Discipline d : disciplines) {
    CompileOutput out = compile(TypingCtx(), m, d, CCMode::CC);
    Outcome o = supports_compose(d) ? eval_sc(out.term, d, fuel)
                                    : eval(out.term, d, CCMode::CC, fuel);
    rep.entries.push_back({d, o});
  }
  for (size_t i = 0; i < rep.entries.size(); ++i)
    for (size_t j = i + 1; j < rep.entries.size(); ++j)
      if (!outcomes_agree(rep.entries[i].outcome, rep.entries[j].outcome)) {
        rep.all_agree = false;
        rep.disagreements.emplace_back(i, j);
      }
  return rep;
}

std::string DiffReport::summary() const {
  std::ostringstream os;
  for (const DiffEntry& e : entries) {
    os << discipline_name(e.discipline) << ": ";
    switch (e.outcome.kind) {
      case Outcome::Kind::Value: {
        CTerm core = observable_core(e.outcome.value);
        os << "value " << (core.is(CTermKind::Const) ? core.prim().str() : e.outcome.value.str());
        break;
      }
      case Outcome::Kind::Blamed:
        os << "blame " << to_string(e.outcome.label);
        break;
      case Outcome::Kind::Timeout:
        os << "timeout";
        break;
    }
    os << "\n";
  }
  os << (all_agree ? "agree" : "disagree") << "\n";
  return os.str();
}

// Dynamic gradual guarantee ----------------------------------------------------

SimResult check_simulation(const GTerm& m, const GTerm& m2, Discipline lb, int fuel) {
  if (!gterm_precision(m, m2)) return {false, "inputs are not precision-related"};
  CompileOutput lo = compile(TypingCtx(), m, lb, CCMode::CCPrime);
  CompileOutput hi = compile(TypingCtx(), m2, lb, CCMode::CCPrime);
  Outcome o1 = eval(lo.term, lb, CCMode::CCPrime, fuel);
  Outcome o2 = eval(hi.term, lb, CCMode::CCPrime, fuel);

  auto prec_values = [&]() {
    return cterm_precision(TypingCtx(), o1.value, TypingCtx(), o2.value, lb);
  };
  // Clause 1: a more-precise value forces a less-precise value.
  if (o2.is_value()) {
    if (!o1.is_value()) return {false, "clause 1: less precise program produced no value"};
    if (!prec_values()) return {false, "clause 1: result values are not precision-related"};
  }
  // Clause 2: more-precise divergence forces less-precise divergence.
  if (o2.is_timeout() && !o1.is_timeout())
    return {false, "clause 2: less precise program halted"};
  // Clause 3: a less-precise value needs a related value or blame above.
  if (o1.is_value()) {
    if (o2.is_value()) {
      if (!prec_values()) return {false, "clause 3: result values are not precision-related"};
    } else if (!o2.is_blame()) {
      return {false, "clause 3: more precise program neither halted nor blamed"};
    }
  }
  // Clause 4: less-precise divergence needs divergence or blame above.
  if (o1.is_timeout() && !(o2.is_timeout() || o2.is_blame()))
    return {false, "clause 4: more precise program produced a value"};
  return {true, ""};
}

SimResult check_sim_trace(const CTerm& m1, const CTerm& m1p, Discipline lb, int fuel,
                          int max_catchup) {
  TypingCtx empty;
  if (!cterm_precision(empty, m1, empty, m1p, lb))
    return {false, "initial terms are not precision-related"};
  CTerm lo = m1, hi = m1p;
  for (int i = 0; i < fuel; ++i) {
    StepResult r = step_cc(hi, lb, CCMode::CCPrime);
    if (r.kind() != StepResult::Kind::Stepped) return {true, ""};
    hi = r.info().next;
    CTerm cand = lo;
    bool found = false;
    for (int k = 0; k <= max_catchup; ++k) {
      if (cterm_precision(empty, cand, empty, hi, lb)) {
        lo = cand;
        found = true;
        break;
      }
      StepResult rs = step_cc(cand, lb, CCMode::CCPrime);
      if (rs.kind() != StepResult::Kind::Stepped) break;
      cand = rs.info().next;
    }
    if (!found)
      return {false, "no matching reduction after step " + std::to_string(i) + " (" +
                         r.info().rule + ")"};
  }
  return {true, ""};
}

// Space measurement ---------------------------------------------------------------

SpaceResult measure_space(const GTerm& m, Discipline d, int fuel, const ReportHook& tap) {
  if (!supports_compose(d))
    throw ContractViolation("space measurement needs a composable discipline");
  SpaceResult res;
  CompileOutput out = compile(TypingCtx(), m, d, CCMode::CC);
  const long long k2 = 9;
  res.bound = 13 * k2 * (1LL << c_height(out.term));
  bool ok = true;
  std::string detail;
  auto hook = [&](const SizeReport& r) {
    res.max_real = std::max(res.max_real, r.real);
    res.max_adjacency = std::max(res.max_adjacency, r.adjacency);
    res.steps = r.step;
    if (static_cast<long long>(r.real) > res.bound * r.ideal && ok) {
      ok = false;
      detail = "space bound violated at step " + std::to_string(r.step);
    }
    if (r.adjacency > 3 && ok) {
      ok = false;
      detail = "more than 3 adjacent casts at step " + std::to_string(r.step);
    }
    if (r.ok_index && r.size > 10 * r.ideal + 3 && ok) {
      ok = false;
      detail = "size exceeded 10*ideal+3 at step " + std::to_string(r.step);
    }
    if (tap) tap(r);
  };
  try {
    res.outcome = eval_sc(out.term, d, fuel, hook, true);
  } catch (const InvariantViolation& e) {
    ok = false;
    detail = e.what();
  }
  res.ok = ok;
  res.detail = detail;
  return res;
}

GTerm stress_loop(int rounds, bool apply_at_end) {
  // Start from a function value and bounce it between ?-typed and
  // (Nat -> Nat)-typed binders; every bounce inserts an injection or a
  // projection around the value.
  int label = 1;
  GTerm e = GTerm::lam(Type::nat(), GTerm::var(0));
  bool at_dyn = false;
  for (int i = 0; i < rounds; ++i) {
    Type annot = at_dyn ? Type::fun(Type::nat(), Type::nat()) : Type::unknown();
    e = GTerm::app(GTerm::lam(annot, GTerm::var(0)), e, BlameLabel(label++));
    at_dyn = !at_dyn;
  }
  if (at_dyn) {
    e = GTerm::app(GTerm::lam(Type::fun(Type::nat(), Type::nat()), GTerm::var(0)), e,
                   BlameLabel(label++));
  }
  if (!apply_at_end) return e;
  return GTerm::app(e, GTerm::constant(PrimConst::nat(7)), BlameLabel(label++));
}

}  // namespace castkit
