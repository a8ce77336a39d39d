#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "rra/symbols.hpp"

namespace rra {

// Regular expression over tape symbols (including the sentinels).
struct ConstraintExpr {
  enum class Kind : std::uint8_t { epsilon, symbol, concat, alt, star };
  Kind kind = Kind::epsilon;
  SymbolId symbol{};
  std::vector<ConstraintExpr> parts;  // concat / alt operands, star operand
};

// Grammar: alt := cat ('|' cat)* ; cat := rep* ; rep := atom ('*' | '+')* ;
// atom := symbol | '~' | '(' alt ')'. Whitespace is ignored. `<`/`>` denote
// the sentinels, `[..]` a bracketed multi-character symbol.
ConstraintExpr parse_constraint(std::string_view text, const SymbolTable& symbols);
std::string print_constraint(const ConstraintExpr& e, const SymbolTable& symbols);

// Reads one symbol token of a word at text[pos]; advances pos.
// Returns nullopt-like failure by throwing ParseError.
SymbolId read_symbol_token(std::string_view text, std::size_t& pos, const SymbolTable& symbols);
std::string read_symbol_name(std::string_view text, std::size_t& pos);

// Total deterministic automaton over a fixed alphabet; state `dead()` has no
// accepting continuation.
class Dfa {
 public:
  Dfa() = default;

  int start() const { return start_; }
  int size() const { return static_cast<int>(accepting_.size()); }
  bool accepting(int s) const { return accepting_[s]; }
  // Some accepting state is reachable from s.
  bool live(int s) const { return live_[s]; }
  int step(int s, SymbolId a) const {
    std::uint32_t r = raw(a);
    if (r >= column_.size() || column_[r] < 0) return dead_;
    return delta_[static_cast<std::size_t>(s) * width_ + column_[r]];
  }
  int run(int s, const Word& w) const {
    for (SymbolId a : w) s = step(s, a);
    return s;
  }
  int dead() const { return dead_; }
  const Word& alphabet() const { return alphabet_; }

  friend Dfa compile_dfa(const ConstraintExpr& e, const Word& alphabet);

 private:
  Word alphabet_;
  std::vector<int> column_;
  std::size_t width_ = 0;
  int start_ = 0;
  int dead_ = 0;
  std::vector<int> delta_;
  std::vector<bool> accepting_;
  std::vector<bool> live_;
};

// Thompson construction, subset construction and minimisation.
Dfa compile_dfa(const ConstraintExpr& e, const Word& alphabet);
bool dfa_accepts(const Dfa& d, const Word& w);

}  // namespace rra
