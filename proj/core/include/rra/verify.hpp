#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rra/configuration.hpp"
#include "rra/delta_automaton.hpp"
#include "rra/sim.hpp"

namespace rra {

struct EquivalenceReport {
  std::size_t n = 0;
  std::set<Word> only_a, only_b;
  bool equal() const { return only_a.empty() && only_b.empty(); }
};

EquivalenceReport compare_languages(const std::set<Word>& a, const std::set<Word>& b, std::size_t n);
EquivalenceReport bounded_equiv(const StepRelation& a, const StepRelation& b, std::size_t n);
EquivalenceReport bounded_equiv(const DeltaAutomaton& a, const DeltaAutomaton& b, std::size_t n);

// An accepting computation on `input` restarts on the input word `tape`
// (after `cycles` cycles), which is itself rejected.
struct CorrectnessViolation {
  Word input;
  Word tape;
  std::size_t cycles = 0;
};

// Intermediate restarting tapes of accepting computations on inputs of length
// <= n that are input words must be accepted.
std::vector<CorrectnessViolation> check_correctness_preserving(const StepRelation& r, std::size_t n);
std::vector<CorrectnessViolation> check_correctness_preserving(const DeltaAutomaton& a, std::size_t n);

// What happened to one tape square: the symbols written into it by rewrites
// (step index of the rewrite, symbol) and the step that destroyed it.
struct SquareWrite {
  std::size_t time = 0;
  SymbolId symbol{};
};
struct SquareRecord {
  std::size_t created = 0;  // squares only exist from the start
  SymbolId initial{};
  std::vector<SquareWrite> writes;
  std::optional<std::size_t> destroyed;
};
struct SquareHistory {
  std::map<SquareId, SquareRecord> squares;
  // Step of the last write into `square` at or before time t, if any.
  std::optional<std::size_t> last_write(SquareId square, std::size_t t) const;
};
SquareHistory build_square_history(const Trace& t);

// A violated property at one step of a trace.
struct TraceViolation {
  std::string rule;  // I1..I5, lemma9, matching-2a, matching-2b
  std::size_t step = 0;
  std::string detail;
};

// Checks of a trace of a lookahead-reduced machine.
std::vector<TraceViolation> check_i_invariants(const DeltaAutomaton& m2, const Trace& t);
std::vector<TraceViolation> check_lemma9(const DeltaAutomaton& m2, const Trace& t);
std::vector<TraceViolation> check_matching(const DeltaAutomaton& m2, const Trace& t, const SquareHistory& h);

// All three over every trace of every accepted input of length <= n.
struct ReducedCheckReport {
  std::size_t traces = 0;
  std::size_t accepted_inputs = 0;
  std::vector<TraceViolation> violations;
  bool budget_hit = false;
};
ReducedCheckReport check_reduced_machine(const DeltaAutomaton& m2, std::size_t n);

}  // namespace rra
