#include "rra/meta.hpp"

#include <algorithm>
#include <functional>

#include "rra/tape_memo.hpp"

namespace rra {

void MetaAutomaton::prepare() {
  tape_alphabet_ = gamma;
  tape_alphabet_.push_back(kLeft);
  tape_alphabet_.push_back(kRight);
  cycles_.clear();
  tails_.clear();
  left_.clear();
  right_.clear();
  tail_.clear();
  for (std::size_t i = 0; i < instructions.size(); ++i) {
    if (auto* c = std::get_if<CycleInstruction>(&instructions[i])) {
      cycles_.push_back(i);
      left_.push_back(compile_dfa(c->e1, tape_alphabet_));
      right_.push_back(compile_dfa(c->e2, tape_alphabet_));
    } else {
      tails_.push_back(i);
      tail_.push_back(compile_dfa(std::get<TailInstruction>(instructions[i]).e, tape_alphabet_));
    }
  }
}

int MetaAutomaton::lookahead() const {
  int k = 1;
  for (const auto& ins : instructions)
    if (auto* c = std::get_if<CycleInstruction>(&ins)) k = std::max<int>(k, static_cast<int>(c->redex.size()));
  return k;
}

std::vector<CycleStep> apply_cycle_steps(const MetaAutomaton& m, const Word& w) {
  std::vector<CycleStep> out;
  for (std::size_t i = 0; i < m.cycles().size(); ++i) {
    const CycleInstruction& c = m.cycle(i);
    const Dfa& l = m.left_dfa(i);
    const Dfa& r = m.right_dfa(i);
    int s = l.step(l.start(), kLeft);
    for (std::size_t p = 0; p + c.redex.size() <= w.size(); ++p) {
      if (!l.live(s)) break;
      if (l.accepting(s) && std::equal(c.redex.begin(), c.redex.end(), w.begin() + static_cast<long>(p))) {
        int t = r.start();
        for (std::size_t j = p + c.redex.size(); j < w.size() && r.live(t); ++j) t = r.step(t, w[j]);
        t = r.step(t, kRight);
        if (r.accepting(t)) {
          Word res(w.begin(), w.begin() + static_cast<long>(p));
          res.insert(res.end(), c.reduct.begin(), c.reduct.end());
          res.insert(res.end(), w.begin() + static_cast<long>(p + c.redex.size()), w.end());
          out.push_back({i, p, std::move(res)});
        }
      }
      s = l.step(s, w[p]);
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const CycleStep& a, const CycleStep& b) {
    return a.position != b.position ? a.position < b.position : a.cycle < b.cycle;
  });
  return out;
}

std::set<Word> apply_cycle(const MetaAutomaton& m, const Word& w) {
  std::set<Word> out;
  for (auto& s : apply_cycle_steps(m, w)) out.insert(std::move(s.result));
  return out;
}

bool meta_accepts_tail(const MetaAutomaton& m, const Word& w) {
  for (std::size_t j = 0; j < m.tails().size(); ++j) {
    const Dfa& d = m.tail_dfa(j);
    int s = d.step(d.start(), kLeft);
    for (SymbolId a : w) s = d.step(s, a);
    if (d.accepting(d.step(s, kRight))) return true;
  }
  return false;
}

namespace {

struct Solver {
  const MetaAutomaton& m;
  TapeMemo memo;

  bool accepts(const Word& w) {
    auto v = memo.get(w);
    if (v != TapeMemo::Value::unknown) return v == TapeMemo::Value::yes;
    bool r = meta_accepts_tail(m, w);
    if (!r)
      for (const auto& step : apply_cycle_steps(m, w))
        if (accepts(step.result)) {
          r = true;
          break;
        }
    memo.set(w, r);
    return r;
  }
};

}  // namespace

std::optional<std::vector<Word>> meta_member(const MetaAutomaton& m, const Word& w) {
  Solver s{m, TapeMemo(m.gamma, w.size())};
  if (!s.accepts(w)) return std::nullopt;
  std::vector<Word> chain{w};
  Word cur = w;
  while (!meta_accepts_tail(m, cur)) {
    for (auto& step : apply_cycle_steps(m, cur))
      if (s.accepts(step.result)) {
        cur = std::move(step.result);
        break;
      }
    chain.push_back(cur);
  }
  return chain;
}

std::set<Word> meta_enumerate(const MetaAutomaton& m, std::size_t n) {
  Solver s{m, TapeMemo(m.gamma, n)};
  std::set<Word> out;
  Word w;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (w.size() == len) {
      if (s.accepts(w)) out.insert(w);
      return;
    }
    for (SymbolId a : m.sigma) {
      w.push_back(a);
      rec(len);
      w.pop_back();
    }
  };
  for (std::size_t len = 0; len <= n; ++len) rec(len);
  return out;
}

std::vector<Word> pad_short_redexes(const MetaAutomaton& m, std::size_t cycle, int k) {
  const CycleInstruction& c = m.cycle(cycle);
  const Dfa& r = m.right_dfa(cycle);
  std::vector<Word> out;
  const std::size_t need = static_cast<std::size_t>(k) - c.redex.size();
  Word e;
  std::function<void(int)> rec = [&](int s) {
    // e followed by the right sentinel, if it fits inside the window
    if (e.size() < need && r.accepting(r.step(s, kRight))) {
      Word f = e;
      f.push_back(kRight);
      out.push_back(std::move(f));
    }
    if (e.size() == need) {
      if (r.live(s)) out.push_back(e);
      return;
    }
    for (SymbolId a : m.gamma) {
      int t = r.step(s, a);
      if (!r.live(t)) continue;
      e.push_back(a);
      rec(t);
      e.pop_back();
    }
  };
  rec(r.start());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace rra
