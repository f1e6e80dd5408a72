#ifndef CASTKIT_SC_HPP
#define CASTKIT_SC_HPP

#include <optional>

#include "castkit/cc.hpp"

namespace castkit {

// Reduction context: casts may only be composed or applied when the
// enclosing term is not itself a cast.
enum class RedCtx { Any, NonCast };

// Stratified values: a simple value is cast-free at the top; a value is a
// simple value under at most one inert cast.
struct SimpleValueWitness {
  CTerm term;
};

std::optional<SimpleValueWitness> simple_value_of(const CTerm& m);
std::optional<ValueWitness> sc_value_of(const CTerm& m);

// Term measures -------------------------------------------------------------

// Node counts: every non-cast constructor counts one plus its children;
// casts count one (size), nothing (ideal) or their representation size (real).
int term_size(const CTerm& m);
int ideal_size(const CTerm& m);
int real_size(const CTerm& m);
int c_height(const CTerm& m);

// Longest chain of directly nested cast applications anywhere in the term.
int adjacency(const CTerm& m);

// Decision procedure for the Size Predicate; returns the unique count of
// adjacent casts at the top, or nothing when the predicate fails.
std::optional<int> size_ok(const CTerm& m, bool delayed);

// Instrumentation record emitted once per reduction step.
struct SizeReport {
  int step = 0;
  std::string rule;
  int size = 0;
  int ideal = 0;
  int real = 0;
  int height = 0;
  int adjacency = 0;
  std::optional<int> ok_index;
};

// Reduction -----------------------------------------------------------------

// One step of the space-efficient calculus at the given reduction context.
// Cast-specific rules require NonCast; querying a reducible cast node at Any
// is a caller error (the driver descends via NonCast).
StepResult step_sc(RedCtx ctx, const CTerm& m, Discipline d);

using ReportHook = std::function<void(const SizeReport&)>;

// Driver realizing the Progress strategy: NonCast at cast spines, Any
// elsewhere. Emits a SizeReport per step; raises InvariantViolation when a
// trace breaks OK-preservation or height monotonicity.
Outcome eval_sc(const CTerm& m, Discipline d, int fuel = kDefaultFuel,
                const ReportHook& report = nullptr, bool check_invariants = true,
                const TraceHook& trace = nullptr);

}  // namespace castkit

#endif  // CASTKIT_SC_HPP
