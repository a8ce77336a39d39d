#pragma once

#include <cstdint>
#include <vector>

#include "rra/instruction.hpp"
#include "rra/states.hpp"
#include "rra/symbols.hpp"

namespace rra {

using SquareId = std::uint32_t;

struct Cell {
  SymbolId symbol{};
  SquareId square = 0;
  bool operator==(const Cell&) const = default;
};

// tape.front() is the left sentinel and tape.back() the right sentinel.
struct Configuration {
  std::vector<Cell> tape;
  std::size_t head = 0;
  StateId state{};
  bool has_rewritten = false;
  std::size_t phase_index = 0;
};

// Restarting configuration for tape content `w`; squares are numbered 0..|w|+1.
Configuration initial_configuration(const Word& w, StateId start);

// The k symbols starting at the head, cut after the right sentinel.
Word window_at(const Configuration& c, int k);

Word tape_content(const Configuration& c);  // without sentinels

enum class Outcome : std::uint8_t { accept, reject, budget_exhausted };

// configs[i] followed by steps[i] gives configs[i + 1]. A trace ending with
// Accept or Reject has as many steps as configurations; a trace that got
// stuck (implicit rejection) or ran out of budget has one step fewer.
struct Trace {
  std::vector<Configuration> configs;
  std::vector<Instruction> steps;
  Outcome outcome = Outcome::reject;
};

}  // namespace rra
