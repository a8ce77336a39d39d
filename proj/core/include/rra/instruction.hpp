#pragma once

#include <compare>
#include <string>
#include <variant>

#include "rra/states.hpp"
#include "rra/symbols.hpp"

namespace rra {

struct MoveRight {
  StateId to{};
  auto operator<=>(const MoveRight&) const = default;
};
// Replace the window by `reduct`, continue in `to` on the square after it.
struct Rewrite {
  Word reduct;
  StateId to{};
  auto operator<=>(const Rewrite&) const = default;
};
// Rewrite followed immediately by a restart.
struct RewriteRestart {
  Word reduct;
  auto operator<=>(const RewriteRestart&) const = default;
};
struct Restart {
  auto operator<=>(const Restart&) const = default;
};
struct Accept {
  auto operator<=>(const Accept&) const = default;
};
struct Reject {
  auto operator<=>(const Reject&) const = default;
};

using Instruction = std::variant<MoveRight, Rewrite, RewriteRestart, Restart, Accept, Reject>;

inline bool is_rewrite(const Instruction& i) {
  return std::holds_alternative<Rewrite>(i) || std::holds_alternative<RewriteRestart>(i);
}
inline const Word* reduct_of(const Instruction& i) {
  if (auto* r = std::get_if<Rewrite>(&i)) return &r->reduct;
  if (auto* r = std::get_if<RewriteRestart>(&i)) return &r->reduct;
  return nullptr;
}

std::string render(const Instruction& i, const SymbolTable& symbols, const StateTable& states);

}  // namespace rra
