#pragma once

#include <optional>

#include "rra/delta_automaton.hpp"

namespace rra {

// Projections on the symbols and states of a lookahead-reduced machine.
// Symbols of class compound form Delta; everything else is treated as a
// symbol of the simulated machine (or a sentinel).

inline bool is_delta(const Universe& u, SymbolId z) { return u.symbols.is_compound(z); }
inline bool is_delta_blank(const Universe& u, SymbolId z) {
  return is_delta(u, z) && u.symbols.payload(z)->verinf.blank();
}
inline bool is_delta_record(const Universe& u, SymbolId z) { return is_delta(u, z) && !is_delta_blank(u, z); }
// Delta_01: last component not neutral.
inline bool is_delta01(const Universe& u, SymbolId z) {
  return is_delta(u, z) && u.symbols.payload(z)->c2 != Bit::neutral;
}
inline SymbolId comp1(const Universe& u, SymbolId z) { return is_delta(u, z) ? u.symbols.payload(z)->base : z; }
inline Bit comp3(const Universe& u, SymbolId z) { return is_delta(u, z) ? u.symbols.payload(z)->c1 : Bit::neutral; }
inline Bit comp4(const Universe& u, SymbolId z) { return is_delta(u, z) ? u.symbols.payload(z)->c2 : Bit::neutral; }
inline std::optional<RecordId> comp2(const Universe& u, SymbolId z) {
  return is_delta(u, z) ? u.symbols.payload(z)->verinf.record : std::nullopt;
}

// Q21: compound states; Q22: accept/restart contexts.
inline bool is_q21(const Universe& u, StateId q) { return u.states.kind(q) == StateKind::compound; }
inline bool is_q22(const Universe& u, StateId q) { return u.states.kind(q) == StateKind::accept_context; }
inline bool is_pending(const Universe& u, StateId q) { return u.states.kind(q) == StateKind::pending; }
inline bool is_q1(const Universe& u, StateId q) { return !is_q21(u, q) && !is_q22(u, q) && !is_pending(u, q); }
// Verify or ignore mode: the step right after a rewrite.
inline bool is_checking(const Universe& u, StateId q) {
  return is_q21(u, q) && u.states.info(q).d != Mode::neutral;
}

// Symbol written by record r into the square after the reduced window:
// reduct(r)[k] for target lookahead k.
inline SymbolId reduct_last(const Universe& u, RecordId r, int k) {
  return u.records[r].reduct[static_cast<std::size_t>(k - 1)];
}
// The guessed symbol after the window: redex(r)[k+1].
inline SymbolId redex_guess(const Universe& u, RecordId r, int k) {
  return u.records[r].redex[static_cast<std::size_t>(k)];
}

}  // namespace rra
