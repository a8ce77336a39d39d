#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <unordered_map>
#include <vector>

#include "rra/configuration.hpp"
#include "rra/delta_automaton.hpp"

namespace rra {

// Source of instructions for the simulator. Implemented by the table of a
// DeltaAutomaton; tests wrap it to build deliberately faulty machines.
class StepRelation {
 public:
  virtual ~StepRelation() = default;
  virtual int lookahead() const = 0;
  virtual StateId start() const = 0;
  virtual const Word& sigma() const = 0;
  virtual const Word& gamma() const = 0;
  // Appends the instructions for (q, window) in phase `phase_index`;
  // legality filtering happens in legal_steps.
  virtual void instructions(StateId q, std::size_t phase_index, std::span<const SymbolId> window,
                            std::vector<const Instruction*>& out) const = 0;
  // Behaviour may depend on the phase index only through this class; it must
  // satisfy class(i) == class(j) implies class(i+1) == class(j+1).
  virtual std::size_t phase_class(std::size_t /*phase_index*/) const { return 0; }
};

class DeltaRelation : public StepRelation {
 public:
  explicit DeltaRelation(const DeltaAutomaton& a);
  ~DeltaRelation() override;

  int lookahead() const override { return a_.k; }
  StateId start() const override { return a_.start; }
  const Word& sigma() const override { return a_.sigma; }
  const Word& gamma() const override { return a_.gamma; }
  void instructions(StateId q, std::size_t phase_index, std::span<const SymbolId> window,
                    std::vector<const Instruction*>& out) const override;
  const DeltaAutomaton& automaton() const { return a_; }

 private:
  struct Index;
  const DeltaAutomaton& a_;
  std::unique_ptr<Index> index_;
};

// Restarting-tape level view of one phase started on tape w.
struct PhaseEvent {
  bool accept = false;  // otherwise a restart
  Word tape;            // tape content after the restart
  std::size_t right = 0, left = 0;  // distances at the rewrite
};
// Calls `visit` for each phase ending; stops early when visit returns true.
void explore_phase(const StepRelation& r, const Word& w, std::size_t phase_index,
                   const std::function<bool(PhaseEvent&&)>& visit);

std::vector<Instruction> legal_steps(const StepRelation& r, const Configuration& c);

// Successor configuration; nullopt for Accept and Reject.
std::optional<Configuration> apply_step(const Configuration& c, const Instruction& ins, StateId start,
                                         int k);

// Upper bound on the length of any computation on an input of length n.
std::size_t step_bound(std::size_t n);

struct RunResult {
  std::vector<Trace> traces;
  bool budget_hit = false;
};

// Every maximal computation on w; a branch longer than `budget` steps ends
// with Outcome::budget_exhausted.
RunResult run_all(const StepRelation& r, const Word& w, std::size_t budget);
// Same traversal without materialising the traces.
void for_each_trace(const StepRelation& r, const Word& w, std::size_t budget,
                    const std::function<void(const Trace&)>& visit);

struct MemberResult {
  bool accepted = false;
  std::optional<Trace> witness;
};

// Acceptance by memoised search over restarting tapes.
class MembershipOracle {
 public:
  explicit MembershipOracle(const StepRelation& r, std::size_t max_len = 0);
  ~MembershipOracle();

  // Whether the computation from the restarting configuration on tape w in
  // phase `phase_index` can accept.
  bool accepts(const Word& w, std::size_t phase_index = 0);
  // Accepting computation on w (which must be accepted).
  Trace witness(const Word& w);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

MemberResult member(const StepRelation& r, const Word& w);
MemberResult member(const DeltaAutomaton& a, const Word& w);

// All accepted words over sigma of length <= n.
std::set<Word> enumerate_language(const StepRelation& r, std::size_t n);
std::set<Word> enumerate_language(const DeltaAutomaton& a, std::size_t n);

struct CycleDistance {
  std::size_t right = 0;  // |v| at the rewrite configuration
  std::size_t left = 0;   // |u|
};
// One entry per cycle (phase with a rewrite that ends in a restart).
std::vector<CycleDistance> cycle_distances(const Trace& t);

struct MonotonicityReport {
  bool monotone = true;
  bool left_monotone = true;
  bool right_left_monotone = true;
};
// Over every computation of every input word of length <= n.
MonotonicityReport classify_monotonicity(const StepRelation& r, std::size_t n);
MonotonicityReport classify_monotonicity(const DeltaAutomaton& a, std::size_t n);

bool is_deterministic(const DeltaAutomaton& a);

}  // namespace rra
