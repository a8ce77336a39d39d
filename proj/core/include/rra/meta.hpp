#pragma once

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "rra/delta_automaton.hpp"
#include "rra/regex.hpp"

namespace rra {

// (E1, redex -> reduct, E2): applicable to w = w1 redex w2 when <w1 is in E1
// and w2> is in E2.
struct CycleInstruction {
  ConstraintExpr e1;
  Word redex;
  Word reduct;
  ConstraintExpr e2;
};

// (E, ACCEPT): accepts the tape w when <w> is in E.
struct TailInstruction {
  ConstraintExpr e;
};

using MetaInstruction = std::variant<CycleInstruction, TailInstruction>;

enum class MetaStyle : std::uint8_t { rr, rww };

class MetaAutomaton {
 public:
  SymbolTable symbols;
  Word sigma;
  Word gamma;
  MetaStyle style = MetaStyle::rr;
  std::vector<MetaInstruction> instructions;

  // Compiles the constraint DFAs; must be called after the instructions are
  // final and before any of the operations below.
  void prepare();

  // Lookahead needed to execute the instructions: the longest redex.
  int lookahead() const;

  const Word& tape_alphabet() const { return tape_alphabet_; }
  const std::vector<std::size_t>& cycles() const { return cycles_; }
  const std::vector<std::size_t>& tails() const { return tails_; }
  const CycleInstruction& cycle(std::size_t i) const {
    return std::get<CycleInstruction>(instructions[cycles_[i]]);
  }
  const Dfa& left_dfa(std::size_t i) const { return left_[i]; }
  const Dfa& right_dfa(std::size_t i) const { return right_[i]; }
  const Dfa& tail_dfa(std::size_t j) const { return tail_[j]; }

 private:
  Word tape_alphabet_;  // gamma plus both sentinels
  std::vector<std::size_t> cycles_, tails_;
  std::vector<Dfa> left_, right_, tail_;
};

struct CycleStep {
  std::size_t cycle = 0;  // index into MetaAutomaton::cycles()
  std::size_t position = 0;  // |w1|
  Word result;
};

// All results of one cycle on tape w, ordered by (position, instruction).
std::vector<CycleStep> apply_cycle_steps(const MetaAutomaton& m, const Word& w);
std::set<Word> apply_cycle(const MetaAutomaton& m, const Word& w);
bool meta_accepts_tail(const MetaAutomaton& m, const Word& w);

// Accepting reduction chain w = t0 -> t1 -> ... -> tn with tn accepted by a
// tail instruction, or nullopt when w is rejected.
std::optional<std::vector<Word>> meta_member(const MetaAutomaton& m, const Word& w);

// Words of length <= n over sigma accepted by direct interpretation.
std::set<Word> meta_enumerate(const MetaAutomaton& m, std::size_t n);

// Redex extensions used by the compiled machine: every e of length
// k - |redex| over gamma, or shorter and ending with the right sentinel, such
// that the right constraint of cycle i can still accept after reading e.
std::vector<Word> pad_short_redexes(const MetaAutomaton& m, std::size_t cycle, int k);

// How move-right steps are emitted by compile_meta_to_delta.
//  pruned  exact entries, left out where no rewrite or accept can follow;
//          deterministic instruction sets give deterministic tables
//  head    head entries (state, first symbol) wherever the constraint
//          product stays alive; this is the full normal form
enum class CompileMode : std::uint8_t { pruned, head };

// Constraints are tracked by a product of DFAs; halting and restarting
// happen only with the right sentinel in the window and move-right targets
// are a function of (state, first symbol).
DeltaAutomaton compile_meta_to_delta(const MetaAutomaton& m, CompileMode mode = CompileMode::pruned);

}  // namespace rra
