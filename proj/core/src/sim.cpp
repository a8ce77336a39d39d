#include "rra/sim.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "rra/tape_memo.hpp"

namespace rra {

struct DeltaRelation::Index {
  std::unordered_map<Word, std::vector<const Instruction*>, WordHash> exact;
  std::unordered_map<std::uint64_t, std::vector<const Instruction*>> head;
};

DeltaRelation::DeltaRelation(const DeltaAutomaton& a) : a_(a), index_(std::make_unique<Index>()) {
  for (const auto& [key, instrs] : a.exact()) {
    Word w;
    w.reserve(key.window.size() + 1);
    w.push_back(SymbolId{raw(key.state)});
    w.insert(w.end(), key.window.begin(), key.window.end());
    auto& v = index_->exact[w];
    for (const auto& i : instrs) v.push_back(&i);
  }
  for (const auto& [key, instrs] : a.head()) {
    auto& v = index_->head[(std::uint64_t{raw(key.first)} << 32) | raw(key.second)];
    for (const auto& i : instrs) v.push_back(&i);
  }
}

DeltaRelation::~DeltaRelation() = default;

void DeltaRelation::instructions(StateId q, std::size_t, std::span<const SymbolId> window,
                                 std::vector<const Instruction*>& out) const {
  thread_local Word key;
  key.clear();
  key.push_back(SymbolId{raw(q)});
  key.insert(key.end(), window.begin(), window.end());
  std::size_t before = out.size();
  if (auto it = index_->exact.find(key); it != index_->exact.end())
    out.insert(out.end(), it->second.begin(), it->second.end());
  if (!window.empty())
    if (auto it = index_->head.find((std::uint64_t{raw(q)} << 32) | raw(window.front()));
        it != index_->head.end())
      for (const Instruction* i : it->second) {
        bool dup = false;
        for (std::size_t j = before; j < out.size() && !dup; ++j) dup = *out[j] == *i;
        if (!dup) out.push_back(i);
      }
}

namespace {

bool legal(const Instruction& i, bool has_rewritten, SymbolId first) {
  if (std::holds_alternative<MoveRight>(i)) return first != kRight;
  if (is_rewrite(i)) return !has_rewritten;
  if (std::holds_alternative<Restart>(i)) return has_rewritten;
  return true;
}

Word with_sentinels(const Word& w) {
  Word t;
  t.reserve(w.size() + 2);
  t.push_back(kLeft);
  t.insert(t.end(), w.begin(), w.end());
  t.push_back(kRight);
  return t;
}

Word strip(const Word& t) { return Word(t.begin() + 1, t.end() - 1); }

std::span<const SymbolId> window_of(const Word& t, std::size_t h, int k) {
  return {t.data() + h, std::min<std::size_t>(static_cast<std::size_t>(k), t.size() - h)};
}

}  // namespace

std::vector<Instruction> legal_steps(const StepRelation& r, const Configuration& c) {
  Word w = window_at(c, r.lookahead());
  std::vector<const Instruction*> found;
  r.instructions(c.state, c.phase_index, w, found);
  std::vector<Instruction> out;
  for (const Instruction* i : found)
    if (legal(*i, c.has_rewritten, w.front())) out.push_back(*i);
  return out;
}

std::optional<Configuration> apply_step(const Configuration& c, const Instruction& ins, StateId start, int k) {
  if (std::holds_alternative<Accept>(ins) || std::holds_alternative<Reject>(ins)) return std::nullopt;
  Configuration n = c;
  auto restart = [&] {
    n.head = 0;
    n.state = start;
    n.has_rewritten = false;
    ++n.phase_index;
  };
  if (auto* m = std::get_if<MoveRight>(&ins)) {
    ++n.head;
    n.state = m->to;
    return n;
  }
  if (std::holds_alternative<Restart>(ins)) {
    restart();
    return n;
  }
  const Word& v = *reduct_of(ins);
  const std::size_t m = std::min<std::size_t>(static_cast<std::size_t>(k), c.tape.size() - c.head);
  std::vector<Cell> cells;
  if (!v.empty()) {
    cells.push_back({v[0], c.tape[c.head].square});
    // squares 2 .. m-|v|+1 of the window are destroyed
    for (std::size_t j = 1; j < v.size(); ++j) cells.push_back({v[j], c.tape[c.head + m - v.size() + j].square});
  }
  n.tape.erase(n.tape.begin() + static_cast<long>(c.head), n.tape.begin() + static_cast<long>(c.head + m));
  n.tape.insert(n.tape.begin() + static_cast<long>(c.head), cells.begin(), cells.end());
  n.has_rewritten = true;
  if (auto* r = std::get_if<Rewrite>(&ins)) {
    n.head = c.head + v.size() - (!v.empty() && v.back() == kRight ? 1 : 0);
    n.state = r->to;
  } else {
    restart();
  }
  return n;
}

std::size_t step_bound(std::size_t n) { return (n + 1) * (n + 4); }

void explore_phase(const StepRelation& r, const Word& w, std::size_t phase_index,
                   const std::function<bool(PhaseEvent&&)>& visit) {
  const int k = r.lookahead();
  const Word tape = with_sentinels(w);
  std::vector<const Instruction*> found;
  std::vector<std::pair<std::size_t, StateId>> stack{{0, r.start()}};
  std::unordered_set<std::uint64_t> seen;
  auto key = [](std::size_t h, StateId q) { return (std::uint64_t{h} << 32) | raw(q); };
  seen.insert(key(0, r.start()));

  auto after_rewrite = [&](const Word& t, std::size_t h0, StateId q0, std::size_t dr, std::size_t dl) {
    std::vector<std::pair<std::size_t, StateId>> st{{h0, q0}};
    std::unordered_set<std::uint64_t> local{key(h0, q0)};
    std::vector<const Instruction*> f;
    while (!st.empty()) {
      auto [h, q] = st.back();
      st.pop_back();
      auto win = window_of(t, h, k);
      f.clear();
      r.instructions(q, phase_index, win, f);
      for (const Instruction* i : f) {
        if (!legal(*i, true, win.front())) continue;
        if (auto* m = std::get_if<MoveRight>(i)) {
          if (local.insert(key(h + 1, m->to)).second) st.push_back({h + 1, m->to});
        } else if (std::holds_alternative<Restart>(*i)) {
          if (visit(PhaseEvent{false, strip(t), dr, dl})) return true;
        } else if (std::holds_alternative<Accept>(*i)) {
          if (visit(PhaseEvent{true, {}, dr, dl})) return true;
        }
      }
    }
    return false;
  };

  while (!stack.empty()) {
    auto [h, q] = stack.back();
    stack.pop_back();
    auto win = window_of(tape, h, k);
    found.clear();
    r.instructions(q, phase_index, win, found);
    for (const Instruction* i : found) {
      if (!legal(*i, false, win.front())) continue;
      if (auto* m = std::get_if<MoveRight>(i)) {
        if (seen.insert(key(h + 1, m->to)).second) stack.push_back({h + 1, m->to});
      } else if (std::holds_alternative<Accept>(*i)) {
        if (visit(PhaseEvent{true, {}, 0, 0})) return;
      } else if (const Word* v = reduct_of(*i)) {
        Word t(tape.begin(), tape.begin() + static_cast<long>(h));
        t.insert(t.end(), v->begin(), v->end());
        t.insert(t.end(), tape.begin() + static_cast<long>(h + win.size()), tape.end());
        const std::size_t dr = tape.size() - h, dl = h;
        if (auto* rw = std::get_if<Rewrite>(i)) {
          std::size_t nh = h + v->size() - (!v->empty() && v->back() == kRight ? 1 : 0);
          if (after_rewrite(t, nh, rw->to, dr, dl)) return;
        } else if (visit(PhaseEvent{false, strip(t), dr, dl})) {
          return;
        }
      }
    }
  }
}

// ---------------------------------------------------------------- traces

namespace {

struct TraceWalker {
  const StepRelation& r;
  std::size_t budget;
  const std::function<void(const Trace&)>& visit;
  Trace t;

  void go(const Configuration& c) {
    t.configs.push_back(c);
    auto steps = legal_steps(r, c);
    if (steps.empty()) {
      t.outcome = Outcome::reject;
      visit(t);
    } else if (t.steps.size() >= budget) {
      t.outcome = Outcome::budget_exhausted;
      visit(t);
    } else {
      for (const auto& s : steps) {
        t.steps.push_back(s);
        if (auto n = apply_step(c, s, r.start(), r.lookahead())) {
          go(*n);
        } else {
          t.outcome = std::holds_alternative<Accept>(s) ? Outcome::accept : Outcome::reject;
          visit(t);
        }
        t.steps.pop_back();
      }
    }
    t.configs.pop_back();
  }
};

}  // namespace

void for_each_trace(const StepRelation& r, const Word& w, std::size_t budget,
                    const std::function<void(const Trace&)>& visit) {
  TraceWalker walker{r, budget, visit, {}};
  walker.go(initial_configuration(w, r.start()));
}

RunResult run_all(const StepRelation& r, const Word& w, std::size_t budget) {
  RunResult res;
  for_each_trace(r, w, budget, [&](const Trace& t) {
    if (t.outcome == Outcome::budget_exhausted) res.budget_hit = true;
    res.traces.push_back(t);
  });
  return res;
}

// ---------------------------------------------------------------- membership

struct MembershipOracle::Impl {
  const StepRelation& r;
  std::size_t max_len;
  std::map<std::size_t, TapeMemo> memo;

  TapeMemo& table(std::size_t cls, std::size_t len) {
    auto it = memo.find(cls);
    if (it == memo.end()) it = memo.emplace(cls, TapeMemo(r.gamma(), std::max(max_len, len))).first;
    return it->second;
  }

  bool accepts(const Word& w, std::size_t idx) {
    TapeMemo& m = table(r.phase_class(idx), w.size());
    auto v = m.get(w);
    if (v != TapeMemo::Value::unknown) return v == TapeMemo::Value::yes;
    bool result = false;
    explore_phase(r, w, idx, [&](PhaseEvent&& e) {
      result = e.accept || accepts(e.tape, idx + 1);
      return result;
    });
    table(r.phase_class(idx), w.size()).set(w, result);
    return result;
  }

  // Extends `t` with the steps of one phase from its last configuration;
  // returns true once an accepting continuation is found.
  bool phase(Trace& t) {
    const Configuration c = t.configs.back();
    for (const auto& s : legal_steps(r, c)) {
      auto n = apply_step(c, s, r.start(), r.lookahead());
      if (!n) {
        if (std::holds_alternative<Accept>(s)) {
          t.steps.push_back(s);
          t.outcome = Outcome::accept;
          return true;
        }
        continue;
      }
      if (n->phase_index != c.phase_index) {
        if (!accepts(tape_content(*n), n->phase_index)) continue;
        t.steps.push_back(s);
        t.configs.push_back(*n);
        return phase(t);
      }
      t.steps.push_back(s);
      t.configs.push_back(*n);
      if (phase(t)) return true;
      t.steps.pop_back();
      t.configs.pop_back();
    }
    return false;
  }
};

MembershipOracle::MembershipOracle(const StepRelation& r, std::size_t max_len)
    : impl_(std::make_unique<Impl>(Impl{r, max_len, {}})) {}
MembershipOracle::~MembershipOracle() = default;

bool MembershipOracle::accepts(const Word& w, std::size_t phase_index) { return impl_->accepts(w, phase_index); }

Trace MembershipOracle::witness(const Word& w) {
  Trace t;
  t.configs.push_back(initial_configuration(w, impl_->r.start()));
  if (!impl_->accepts(w, 0) || !impl_->phase(t)) {
    t.outcome = Outcome::reject;
  }
  return t;
}

MemberResult member(const StepRelation& r, const Word& w) {
  MembershipOracle o(r, w.size());
  MemberResult res;
  res.accepted = o.accepts(w);
  if (res.accepted) res.witness = o.witness(w);
  return res;
}

MemberResult member(const DeltaAutomaton& a, const Word& w) { return member(DeltaRelation(a), w); }

std::set<Word> enumerate_language(const StepRelation& r, std::size_t n) {
  MembershipOracle o(r, n);
  std::set<Word> out;
  Word w;
  std::function<void(std::size_t)> rec = [&](std::size_t len) {
    if (w.size() == len) {
      if (o.accepts(w)) out.insert(w);
      return;
    }
    for (SymbolId a : r.sigma()) {
      w.push_back(a);
      rec(len);
      w.pop_back();
    }
  };
  for (std::size_t len = 0; len <= n; ++len) rec(len);
  return out;
}

std::set<Word> enumerate_language(const DeltaAutomaton& a, std::size_t n) {
  return enumerate_language(DeltaRelation(a), n);
}

std::vector<CycleDistance> cycle_distances(const Trace& t) {
  std::vector<CycleDistance> out;
  std::optional<CycleDistance> pending;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const auto& s = t.steps[i];
    const auto& c = t.configs[i];
    if (is_rewrite(s)) pending = CycleDistance{c.tape.size() - c.head, c.head};
    if (std::holds_alternative<Restart>(s) || std::holds_alternative<RewriteRestart>(s)) {
      if (pending) out.push_back(*pending);
      pending.reset();
    }
  }
  return out;
}

bool is_deterministic(const DeltaAutomaton& a) {
  auto conflicts = [](const std::vector<const Instruction*>& v) {
    int before = 0, after = 0;
    for (const Instruction* i : v) {
      if (std::holds_alternative<Reject>(*i)) continue;
      if (!std::holds_alternative<Restart>(*i)) ++before;
      if (!is_rewrite(*i)) ++after;
    }
    return before > 1 || after > 1;
  };
  std::vector<const Instruction*> v;
  for (const auto& [key, instrs] : a.exact()) {
    v.clear();
    for (const auto& i : instrs) v.push_back(&i);
    if (auto it = a.head().find({key.state, key.window.front()}); it != a.head().end())
      for (const auto& i : it->second)
        if (std::find(instrs.begin(), instrs.end(), i) == instrs.end()) v.push_back(&i);
    if (conflicts(v)) return false;
  }
  for (const auto& [key, instrs] : a.head()) {
    v.clear();
    for (const auto& i : instrs) v.push_back(&i);
    if (conflicts(v)) return false;
  }
  return true;
}

}  // namespace rra
