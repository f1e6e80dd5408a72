#ifndef CASTKIT_HARNESS_HPP
#define CASTKIT_HARNESS_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "castkit/compile.hpp"
#include "castkit/sc.hpp"

namespace castkit {

// Program generation ------------------------------------------------------

struct GenConfig {
  uint64_t seed = 1;
  int max_depth = 5;
  int type_depth = 2;
  double dyn_bias = 0.5;  // fraction of annotations loosened to ?
  std::vector<Type> goals = {Type::nat(), Type::int_(), Type::bool_()};
};

// Type-directed generation: builds a fully-annotated well-typed term, then
// loosens annotations to ? with probability dyn_bias. Always typechecks.
GTerm gen_typed_program(const GenConfig& cfg);

// Loosens each annotation of m to ? with the given probability.
GTerm loosen(const GTerm& m, std::mt19937_64& rng, double bias);

// Enumeration ----------------------------------------------------------------

// All types up to the given structural depth over the given atoms, skipping
// anything with more than max_nodes constructors.
std::vector<Type> enumerate_types(int max_depth, const std::vector<Type>& atoms,
                                  int max_nodes = 1 << 20);

// Small closed well-typed surface terms for exhaustive suites. The family:
// constants 1 and true, variables, lambdas annotated over {?, Nat},
// applications, conditionals, pairs and projections, to the given depth.
std::vector<GTerm> enumerate_closed_gterms(int max_depth);

// All precision-related pairs (less, more) obtainable by loosening subsets
// of m's annotations to ?, including the reflexive pair.
std::vector<std::pair<GTerm, GTerm>> loosening_pairs(const GTerm& m, size_t max_pairs = 4096);

// Exhaustive, duplicate-free enumeration of well-formed coercions up to the
// given height, over a small component-type pool. Supports the grammar-based
// disciplines (EDC, LDC, lambda-C, lambda-S, hypercoercions).
std::vector<Cast> enumerate_coercions(Discipline d, int max_height);

// Differential execution ---------------------------------------------------

struct DiffEntry {
  Discipline discipline;
  Outcome outcome;
};

struct DiffReport {
  std::vector<DiffEntry> entries;
  bool all_agree = true;
  std::vector<std::pair<size_t, size_t>> disagreements;
  std::string summary() const;
};

// True when two outcomes agree at base-type observables: equal constants,
// equal blame labels, or both timeouts.
bool outcomes_agree(const Outcome& a, const Outcome& b);

DiffReport run_differential(const GTerm& m, const std::vector<Discipline>& disciplines,
                            int fuel = kDefaultFuel);

// Dynamic-gradual-guarantee checking ------------------------------------------

struct SimResult {
  bool ok = true;
  std::string detail;
};

// Checks the four dynamic-gradual-guarantee clauses for m (less precise)
// against m2 (more precise) under a lambda-B variant, compiling via CC'.
SimResult check_simulation(const GTerm& m, const GTerm& m2, Discipline lb,
                           int fuel = kDefaultFuel);

// Per-step simulation: every step of the more-precise term is matched by a
// bounded reduction of the less-precise one that restores precision.
SimResult check_sim_trace(const CTerm& m1, const CTerm& m1p, Discipline lb, int fuel,
                          int max_catchup = 64);

// Space measurement -------------------------------------------------------------

struct SpaceResult {
  bool ok = true;
  std::string detail;
  Outcome outcome;
  long long bound = 0;  // 13 * k2 * 2^c_height(compile(m))
  int max_real = 0;
  int max_adjacency = 0;
  int steps = 0;
};

// Runs the instrumented space-efficient evaluator and asserts the space
// consumption bound, adjacency <= 3, the size/ideal-size relation under the
// Size Predicate, and height monotonicity, at every step.
SpaceResult measure_space(const GTerm& m, Discipline d, int fuel = kDefaultFuel,
                          const ReportHook& tap = nullptr);

// A cast-accumulating stress program: a function value crosses ?-annotated
// and fully-annotated binders alternately `rounds` times, then gets applied
// (or returned as-is, to observe the residual value).
GTerm stress_loop(int rounds, bool apply_at_end = true);

}  // namespace castkit

#endif  // CASTKIT_HARNESS_HPP
