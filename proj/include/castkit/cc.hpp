#ifndef CASTKIT_CC_HPP
#define CASTKIT_CC_HPP

#include <functional>
#include <optional>
#include <string>

#include "castkit/cterm.hpp"

namespace castkit {

// Typechecking ----------------------------------------------------------

// Returns the term's type; Cast/Wrap nodes check the embedded cast's
// endpoints and Wrap revalidates inertness. CaseFn is CC-only, CaseBind and
// Wrap are CC'-only.
Type typecheck_cc(const TypingCtx& ctx, const CTerm& m, CCMode mode, Discipline d);

// Values ------------------------------------------------------------------

struct ValueWitness {
  CTerm term;
};

// The Value judgment: constants, lambdas, value pairs/injections, and
// Cast-of-value with an inert cast (CC) or Wrap-of-value (CC').
std::optional<ValueWitness> value_of(const CTerm& m, CCMode mode);

// Eta expansion ---------------------------------------------------------

CTerm eta_fun(const CTerm& m, const Cast& c, const CrossWitness& x);
CTerm eta_pair(const CTerm& m, const Cast& c, const CrossWitness& x);
CTerm eta_sum(const CTerm& m, const Cast& c, const CrossWitness& x, CCMode mode);

// applyCast ----------------------------------------------------------------

// Applies an active cast to a value, per the discipline's reduction table.
// For the space-efficient disciplines the value is a simple value or a
// single-cast value; mode selects the case form built by eta expansion.
CTerm apply_cast(const CTerm& v, const Cast& c, const ActiveWitness& a, CCMode mode);

// Stepping ------------------------------------------------------------------

struct StepInfo {
  CTerm next;
  std::string rule;  // innermost rule name
  std::string path;  // frame path from the root to the redex
};

class StepResult {
 public:
  enum class Kind { Stepped, IsValue, IsBlame };
  static StepResult stepped(StepInfo info) {
    StepResult r;
    r.kind_ = Kind::Stepped;
    r.info_ = std::move(info);
    return r;
  }
  static StepResult is_value() {
    StepResult r;
    r.kind_ = Kind::IsValue;
    return r;
  }
  static StepResult is_blame(BlameLabel l) {
    StepResult r;
    r.kind_ = Kind::IsBlame;
    r.label_ = l;
    return r;
  }

  Kind kind() const { return kind_; }
  const StepInfo& info() const { return info_; }
  BlameLabel label() const { return label_; }

 private:
  Kind kind_ = Kind::IsValue;
  StepInfo info_;
  BlameLabel label_;
};

// One deterministic reduction step of CC / CC'; the term must be closed and
// well-typed for the mode.
StepResult step_cc(const CTerm& m, Discipline d, CCMode mode);

// Evaluation ------------------------------------------------------------------

struct Outcome {
  enum class Kind { Value, Blamed, Timeout };
  Kind kind = Kind::Timeout;
  CTerm value;       // when Value
  BlameLabel label;  // when Blamed
  int steps = 0;

  bool is_value() const { return kind == Kind::Value; }
  bool is_blame() const { return kind == Kind::Blamed; }
  bool is_timeout() const { return kind == Kind::Timeout; }
};

using TraceHook = std::function<void(int index, const StepInfo& step, const CTerm& after)>;

inline constexpr int kDefaultFuel = 10000;

// Iterates step_cc up to fuel steps. After every step the term is re-checked
// against the initial type (preservation); canonical-form violations inside
// applyCast also raise InvariantViolation.
Outcome eval(const CTerm& m, Discipline d, CCMode mode, int fuel = kDefaultFuel,
             const TraceHook& trace = nullptr, bool check_invariants = true);

// Blame safety ---------------------------------------------------------------

// True iff every cast in m is blame-safe for l and every blame node carries
// a different label.
bool safe_for(const CTerm& m, BlameLabel l, Discipline d);

// Term precision (lambda-B' only) ---------------------------------------------

// Decides precision between CC' terms; both must be well-typed in their
// contexts. Requires a discipline with cast precision relations.
bool cterm_precision(const TypingCtx& ctx, const CTerm& m, const TypingCtx& ctx2,
                     const CTerm& m2, Discipline d);

}  // namespace castkit

#endif  // CASTKIT_CC_HPP
