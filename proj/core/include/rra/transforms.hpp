#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rra/delta_automaton.hpp"

namespace rra {

// Structural audit of the four normal-form properties:
//  rr_semidet        Accept and Restart entries have the right sentinel in
//                    the window (explicit Reject entries are not halting
//                    steps for this purpose)
//  move_right_first  every move-right step is a head entry, so whether and
//                    where M moves depends on (state, first symbol) only
//  fixed_size        every rewrite entry has a window of length exactly k
//  unit              every rewrite shortens the window by exactly one
NormalizationCertificate audit_normal_form(const DeltaAutomaton& a);

// Union over all windows starting with `first` of the move-right targets of q.
std::vector<StateId> move_targets(const DeltaAutomaton& a, StateId q, SymbolId first);

// Removes rewrites on windows shorter than k. Requires rr_semidet.
DeltaAutomaton to_fixed_rewrite_size(const DeltaAutomaton& a);

// Replaces every rewrite by one that removes exactly one square, using a
// fresh blank symbol that later cycles delete. Requires rr_semidet,
// move_right_first and fixed_size. Machines that already have unit rewrites
// are returned unchanged.
DeltaAutomaton to_unit_reduction(const DeltaAutomaton& a);

// The rewrite records of a: one per (state, window, rewrite instruction).
std::vector<RewriteRecord> build_pi(const DeltaAutomaton& a);

// Interpretation of square contents of the reduced machine. `universe` must
// contain the compound symbols and records; `k` is the reduced lookahead.
// mapping_h(z', z): meaning of z given its left neighbour z'.
SymbolId mapping_h(const Universe& u, int k, SymbolId left, SymbolId z);
// Extension to words; an empty `left` stands for no left neighbour.
Word mapping_h(const Universe& u, int k, std::optional<SymbolId> left, const Word& w);
// mapping_g(q, x): meaning of the window x read in state q.
Word mapping_g(const Universe& u, int k, StateId q, const Word& x);

// Decreases the lookahead by one (target lookahead k = a.k - 1 >= 2).
// Requires all four normal-form flags. Throws std::length_error when the
// table grows past a fixed limit.
DeltaAutomaton reduce_lookahead(const DeltaAutomaton& a);

// Names accepted by apply_pipeline: compile is handled by the caller.
DeltaAutomaton apply_transform(const DeltaAutomaton& a, const std::string& name);

}  // namespace rra
