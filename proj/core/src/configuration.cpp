#include "rra/configuration.hpp"

namespace rra {

Configuration initial_configuration(const Word& w, StateId start) {
  Configuration c;
  c.tape.reserve(w.size() + 2);
  SquareId id = 0;
  c.tape.push_back({kLeft, id++});
  for (SymbolId s : w) c.tape.push_back({s, id++});
  c.tape.push_back({kRight, id++});
  c.state = start;
  return c;
}

Word window_at(const Configuration& c, int k) {
  Word w;
  for (std::size_t i = c.head; i < c.tape.size() && static_cast<int>(w.size()) < k; ++i)
    w.push_back(c.tape[i].symbol);
  return w;
}

Word tape_content(const Configuration& c) {
  Word w;
  if (c.tape.size() >= 2)
    for (std::size_t i = 1; i + 1 < c.tape.size(); ++i) w.push_back(c.tape[i].symbol);
  return w;
}

}  // namespace rra
