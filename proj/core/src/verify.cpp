#include <algorithm>
#include <deque>
#include <functional>
#include <set>

#include "rra/verify.hpp"

namespace rra {

namespace {

void for_each_word(const Word& sigma, std::size_t n, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    f(w);
    if (w.size() == n) return;
    for (SymbolId s : sigma) {
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

EquivalenceReport compare_languages(const std::set<Word>& a, const std::set<Word>& b, std::size_t n) {
  EquivalenceReport r;
  r.n = n;
  for (const Word& w : a)
    if (!b.count(w)) r.only_a.insert(w);
  for (const Word& w : b)
    if (!a.count(w)) r.only_b.insert(w);
  return r;
}

EquivalenceReport bounded_equiv(const StepRelation& a, const StepRelation& b, std::size_t n) {
  return compare_languages(enumerate_language(a, n), enumerate_language(b, n), n);
}

EquivalenceReport bounded_equiv(const DeltaAutomaton& a, const DeltaAutomaton& b, std::size_t n) {
  return compare_languages(enumerate_language(a, n), enumerate_language(b, n), n);
}

std::vector<CorrectnessViolation> check_correctness_preserving(const StepRelation& r, std::size_t n) {
  std::vector<CorrectnessViolation> out;
  MembershipOracle oracle(r, n);
  std::set<SymbolId> sigma(r.sigma().begin(), r.sigma().end());
  const auto is_input = [&](const Word& w) {
    return std::all_of(w.begin(), w.end(), [&](SymbolId s) { return sigma.count(s) > 0; });
  };
  for_each_word(r.sigma(), n, [&](const Word& w) {
    if (!oracle.accepts(w, 0)) return;
    // restarting tapes on some accepting computation, by breadth-first search
    std::set<std::pair<Word, std::size_t>> seen{{w, 0}};
    std::set<Word> reported;
    std::deque<std::pair<Word, std::size_t>> queue{{w, 0}};
    while (!queue.empty()) {
      auto [tape, phase] = queue.front();
      queue.pop_front();
      explore_phase(r, tape, phase, [&](PhaseEvent&& e) {
        if (e.accept) return false;
        if (!seen.insert({e.tape, phase + 1}).second) return false;
        if (!oracle.accepts(e.tape, phase + 1)) return false;
        if (is_input(e.tape) && !oracle.accepts(e.tape, 0) && reported.insert(e.tape).second)
          out.push_back({w, e.tape, phase + 1});
        queue.push_back({std::move(e.tape), phase + 1});
        return false;
      });
    }
  });
  return out;
}

std::vector<CorrectnessViolation> check_correctness_preserving(const DeltaAutomaton& a, std::size_t n) {
  DeltaRelation r(a);
  return check_correctness_preserving(r, n);
}

std::optional<std::size_t> SquareHistory::last_write(SquareId square, std::size_t t) const {
  auto it = squares.find(square);
  if (it == squares.end()) return std::nullopt;
  std::optional<std::size_t> best;
  for (const auto& w : it->second.writes)
    if (w.time <= t) best = w.time;
  return best;
}

SquareHistory build_square_history(const Trace& t) {
  SquareHistory h;
  if (t.configs.empty()) return h;
  for (const Cell& c : t.configs.front().tape) h.squares[c.square] = SquareRecord{0, c.symbol, {}, std::nullopt};
  for (std::size_t i = 0; i + 1 < t.configs.size(); ++i) {
    if (!is_rewrite(t.steps[i])) continue;
    const auto& before = t.configs[i].tape;
    const auto& after = t.configs[i + 1].tape;
    std::map<SquareId, SymbolId> now;
    for (const Cell& c : after) now[c.square] = c.symbol;
    for (const Cell& c : before) {
      auto it = now.find(c.square);
      if (it == now.end()) h.squares[c.square].destroyed = i;
      else if (it->second != c.symbol) h.squares[c.square].writes.push_back({i, it->second});
    }
  }
  return h;
}

}  // namespace rra
