#include "castkit/cli.hpp"

#include <cstdlib>

#include <nlohmann/json.hpp>

#include "castkit/harness.hpp"
#include "castkit/parser.hpp"

namespace castkit {

int default_fuel() {
  if (const char* env = std::getenv("CASTKIT_FUEL")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultFuel;
}

namespace {

// The observable of a value is the outermost constant after stripping
// value-position casts and wraps; non-constant values render as terms.
CTerm strip_value_casts(CTerm v) {
  while (v.is(CTermKind::Cast) || v.is(CTermKind::Wrap)) v = v.child(0);
  return v;
}

void print_outcome(const Outcome& o, std::ostream& out) {
  switch (o.kind) {
    case Outcome::Kind::Value: {
      CTerm core = strip_value_casts(o.value);
      out << "value " << (core.is(CTermKind::Const) ? core.prim().str() : o.value.str())
          << "\n";
      break;
    }
    case Outcome::Kind::Blamed:
      out << "blame " << to_string(o.label) << "\n";
      break;
    case Outcome::Kind::Timeout:
      out << "timeout\n";
      break;
  }
}

int outcome_exit(const Outcome& o) {
  switch (o.kind) {
    case Outcome::Kind::Value: return kExitValue;
    case Outcome::Kind::Blamed: return kExitBlame;
    default: return kExitTimeout;
  }
}

}  // namespace

int cmd_run(const std::string& source, const std::string& calculus, const std::string& variant,
            int fuel, bool trace, std::ostream& out, std::ostream& err) {
  if (fuel <= 0) fuel = default_fuel();
  auto d = discipline_by_name(calculus);
  if (!d) {
    err << "unknown calculus: " << calculus << "\n";
    return kExitParseError;
  }
  CCMode mode;
  if (variant == "cc" || variant.empty())
    mode = CCMode::CC;
  else if (variant == "cc-prime")
    mode = CCMode::CCPrime;
  else {
    err << "unknown variant: " << variant << "\n";
    return kExitParseError;
  }
  GTerm m;
  try {
    m = parse_program(source);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  try {
    typecheck_gtlc(TypingCtx(), m);
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitTypeError;
  }
  TraceHook hook = nullptr;
  if (trace)
    hook = [&out](int, const StepInfo& s, const CTerm& after) {
      out << s.rule << " " << after.str() << "\n";
    };
  Outcome o;
  if (supports_compose(*d)) {
    CompileOutput co = compile(TypingCtx(), m, *d, CCMode::CC);
    o = eval_sc(co.term, *d, fuel, nullptr, true, hook);
  } else {
    CompileOutput co = compile(TypingCtx(), m, *d, mode);
    o = eval(co.term, *d, mode, fuel, hook);
  }
  print_outcome(o, out);
  return outcome_exit(o);
}

int cmd_measure(const std::string& source, const std::string& calculus, int fuel,
                std::ostream& out, std::ostream& err) {
  if (fuel <= 0) fuel = default_fuel();
  auto d = discipline_by_name(calculus);
  if (!d || !supports_compose(*d)) {
    err << "measure needs a composable calculus (lambda-s or hyper)\n";
    return kExitParseError;
  }
  GTerm m;
  try {
    m = parse_program(source);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  try {
    typecheck_gtlc(TypingCtx(), m);
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitTypeError;
  }
  ReportHook tap = [&out](const SizeReport& r) {
    nlohmann::ordered_json j;
    j["step"] = r.step;
    j["rule"] = r.rule;
    j["size"] = r.size;
    j["ideal"] = r.ideal;
    j["real"] = r.real;
    j["height"] = r.height;
    j["adjacency"] = r.adjacency;
    if (r.ok_index)
      j["ok"] = *r.ok_index;
    else
      j["ok"] = nullptr;
    out << j.dump() << "\n";
  };
  SpaceResult res = measure_space(m, *d, fuel, tap);
  print_outcome(res.outcome, out);
  if (!res.ok) {
    out << "FAIL " << res.detail << "\n";
    return kExitBoundViolation;
  }
  out << "PASS bound=" << res.bound << " max_real=" << res.max_real
      << " max_adjacency=" << res.max_adjacency << "\n";
  return outcome_exit(res.outcome);
}

int cmd_diff(const std::string& source, const std::vector<std::string>& calculi, int fuel,
             std::ostream& out, std::ostream& err) {
  if (fuel <= 0) fuel = default_fuel();
  std::vector<Discipline> ds;
  for (const std::string& name : calculi) {
    auto d = discipline_by_name(name);
    if (!d) {
      err << "unknown calculus: " << name << "\n";
      return kExitParseError;
    }
    ds.push_back(*d);
  }
  GTerm m;
  try {
    m = parse_program(source);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  try {
    typecheck_gtlc(TypingCtx(), m);
  } catch (const TypeError& e) {
    err << "type error: " << e.what() << "\n";
    return kExitTypeError;
  }
  DiffReport rep = run_differential(m, ds, fuel);
  out << rep.summary();
  return kExitValue;
}

}  // namespace castkit
