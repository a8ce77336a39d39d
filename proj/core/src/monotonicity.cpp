#include <functional>
#include <map>
#include <unordered_map>

#include "rra/sim.hpp"

namespace rra {

namespace {

struct Summary {
  bool any_cycle = false;
  std::size_t max_right = 0, max_left = 0;  // over first cycles from this tape
  bool bad_right = false, bad_left = false;  // some computation from here violates
};

struct Classifier {
  const StepRelation& r;
  std::map<std::size_t, std::unordered_map<Word, Summary, WordHash>> memo;

  const Summary& get(const Word& w, std::size_t idx) {
    auto& table = memo[r.phase_class(idx)];
    if (auto it = table.find(w); it != table.end()) return it->second;
    Summary s;
    std::vector<PhaseEvent> events;
    explore_phase(r, w, idx, [&](PhaseEvent&& e) {
      if (!e.accept) events.push_back(std::move(e));
      return false;
    });
    for (const auto& e : events) {
      const Summary& sub = get(e.tape, idx + 1);
      s.any_cycle = true;
      s.max_right = std::max(s.max_right, e.right);
      s.max_left = std::max(s.max_left, e.left);
      s.bad_right = s.bad_right || sub.bad_right || (sub.any_cycle && sub.max_right > e.right);
      s.bad_left = s.bad_left || sub.bad_left || (sub.any_cycle && sub.max_left > e.left);
    }
    return memo[r.phase_class(idx)].emplace(w, s).first->second;
  }
};

}  // namespace

MonotonicityReport classify_monotonicity(const StepRelation& r, std::size_t n) {
  Classifier c{r, {}};
  MonotonicityReport rep;
  Word w;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (w.size() == len) {
      const Summary& s = c.get(w, 0);
      rep.monotone = rep.monotone && !s.bad_right;
      rep.left_monotone = rep.left_monotone && !s.bad_left;
      return;
    }
    for (SymbolId a : r.sigma()) {
      w.push_back(a);
      rec(len);
      w.pop_back();
    }
  };
  for (std::size_t len = 0; len <= n; ++len) rec(len);
  rep.right_left_monotone = rep.monotone && rep.left_monotone;
  return rep;
}

MonotonicityReport classify_monotonicity(const DeltaAutomaton& a, std::size_t n) {
  return classify_monotonicity(DeltaRelation(a), n);
}

}  // namespace rra
