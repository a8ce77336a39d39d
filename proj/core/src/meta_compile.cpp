#include <algorithm>
#include <deque>
#include <functional>
#include <map>

#include "rra/meta.hpp"
#include "rra/transforms.hpp"

namespace rra {

namespace {

// Windows of length k (or shorter and ending with the right sentinel) whose
// first symbol is `first` when given, else any gamma symbol.
std::vector<Word> enumerate_windows(const Word& gamma, int k, std::optional<SymbolId> first) {
  std::vector<Word> out;
  Word w;
  if (first) w.push_back(*first);
  std::function<void()> rec = [&] {
    if (static_cast<int>(w.size()) == k) {
      out.push_back(w);
      return;
    }
    w.push_back(kRight);
    out.push_back(w);
    w.pop_back();
    for (SymbolId a : gamma) {
      w.push_back(a);
      rec();
      w.pop_back();
    }
  };
  rec();
  return out;
}

bool contains_right(const Word& w) { return !w.empty() && w.back() == kRight; }

class Compiler {
 public:
  Compiler(const MetaAutomaton& m, CompileMode mode) : m_(m), k_(m.lookahead()), mode_(mode) {}

  DeltaAutomaton run() {
    a_.universe.symbols = m_.symbols;
    a_.sigma = m_.sigma;
    a_.gamma = m_.gamma;
    a_.k = k_;
    a_.variant = variant();
    a_.start = a_.universe.states.intern_plain("q0");

    std::vector<int> init;
    for (std::size_t i = 0; i < m_.cycles().size(); ++i) init.push_back(m_.left_dfa(i).start());
    for (std::size_t j = 0; j < m_.tails().size(); ++j) init.push_back(m_.tail_dfa(j).start());
    start_tuple_ = init;

    // start state: head on the left sentinel
    const std::vector<int> after_left = advance(init, kLeft);
    for (const Word& w : enumerate_windows(m_.gamma, k_, kLeft)) {
      if (contains_right(w) && tail_accepts(init, w)) a_.add(a_.start, w, Accept{});
      if (mode_ == CompileMode::pruned && potential(after_left, Word(w.begin() + 1, w.end())))
        a_.add(a_.start, w, MoveRight{open(after_left)});
    }
    if (mode_ == CompileMode::head && alive(after_left)) a_.add_head(a_.start, kLeft, MoveRight{open(after_left)});
    while (!open_queue_.empty()) {
      auto tuple = open_queue_.front();
      open_queue_.pop_front();
      expand_open(tuple);
    }
    return std::move(a_);
  }

 private:
  Variant variant() const {
    bool aux = m_.gamma.size() != m_.sigma.size();
    bool deletion = true;
    for (std::size_t i = 0; i < m_.cycles().size(); ++i) {
      const auto& c = m_.cycle(i);
      std::size_t j = 0;
      for (std::size_t p = 0; p < c.redex.size() && j < c.reduct.size(); ++p)
        if (c.redex[p] == c.reduct[j]) ++j;
      if (j != c.reduct.size()) deletion = false;
    }
    if (m_.style == MetaStyle::rww) return aux ? Variant::RWW : (deletion ? Variant::R : Variant::RW);
    return aux ? Variant::RRWW : (deletion ? Variant::RR : Variant::RRW);
  }

  std::size_t ncycles() const { return m_.cycles().size(); }

  std::vector<int> advance(std::vector<int> t, SymbolId a) const {
    for (std::size_t i = 0; i < ncycles(); ++i) t[i] = m_.left_dfa(i).step(t[i], a);
    for (std::size_t j = 0; j < m_.tails().size(); ++j) t[ncycles() + j] = m_.tail_dfa(j).step(t[ncycles() + j], a);
    return t;
  }

  bool tail_accepts(const std::vector<int>& t, const Word& rest) const {
    for (std::size_t j = 0; j < m_.tails().size(); ++j) {
      const Dfa& d = m_.tail_dfa(j);
      if (d.accepting(d.run(t[ncycles() + j], rest))) return true;
    }
    return false;
  }

  // Could a rewrite or accept still happen after moving right, given that the
  // next squares hold `rest`?
  bool potential(std::vector<int> cur, const Word& rest) const {
    const bool closed = contains_right(rest);
    for (std::size_t m = 0; m <= rest.size(); ++m) {
      for (std::size_t i = 0; i < ncycles(); ++i) {
        if (!m_.left_dfa(i).accepting(cur[i])) continue;
        const Word& r = m_.cycle(i).redex;
        std::size_t avail = rest.size() - m;
        if (avail >= r.size()) {
          if (std::equal(r.begin(), r.end(), rest.begin() + static_cast<long>(m))) return true;
        } else if (!closed && std::equal(rest.begin() + static_cast<long>(m), rest.end(), r.begin())) {
          return true;
        }
      }
      if (m == rest.size()) {
        if (closed) return false;
        for (std::size_t i = 0; i < ncycles(); ++i)
          if (m_.left_dfa(i).live(cur[i])) return true;
        for (std::size_t j = 0; j < m_.tails().size(); ++j)
          if (m_.tail_dfa(j).live(cur[ncycles() + j])) return true;
        return false;
      }
      if (rest[m] == kRight) return false;
      cur = advance(cur, rest[m]);
    }
    return false;
  }

  StateId open(const std::vector<int>& t) {
    auto it = open_ids_.find(t);
    if (it != open_ids_.end()) return it->second;
    StateId id = a_.universe.states.intern_plain("u" + std::to_string(open_ids_.size()));
    open_ids_.emplace(t, id);
    open_queue_.push_back(t);
    return id;
  }

  StateId committed(std::size_t cycle, int s) {
    auto key = std::make_pair(cycle, s);
    auto it = committed_ids_.find(key);
    if (it != committed_ids_.end()) return it->second;
    StateId id = a_.universe.states.intern_plain("c" + std::to_string(committed_ids_.size()));
    committed_ids_.emplace(key, id);
    expand_committed(cycle, s, id);
    return id;
  }

  void expand_open(const std::vector<int>& t) {
    StateId q = open_ids_.at(t);
    for (const Word& w : enumerate_windows(m_.gamma, k_, std::nullopt)) {
      if (contains_right(w) && tail_accepts(t, w)) a_.add(q, w, Accept{});
      for (std::size_t i = 0; i < ncycles(); ++i) {
        if (!m_.left_dfa(i).accepting(t[i])) continue;
        const auto& c = m_.cycle(i);
        if (w.size() < c.redex.size() || !std::equal(c.redex.begin(), c.redex.end(), w.begin())) continue;
        Word e(w.begin() + static_cast<long>(c.redex.size()), w.end());
        Word reduct = c.reduct;
        reduct.insert(reduct.end(), e.begin(), e.end());
        if (m_.style == MetaStyle::rww) {
          a_.add(q, w, RewriteRestart{std::move(reduct)});
          continue;
        }
        const Dfa& r = m_.right_dfa(i);
        Word consumed = e;
        if (contains_right(consumed)) consumed.pop_back();
        int s = r.run(r.start(), consumed);
        if (contains_right(e) ? !r.accepting(r.step(s, kRight)) : !r.live(s)) continue;
        a_.add(q, w, Rewrite{std::move(reduct), committed(i, s)});
      }
      if (mode_ == CompileMode::pruned && w.front() != kRight) {
        std::vector<int> next = advance(t, w.front());
        if (potential(next, Word(w.begin() + 1, w.end()))) a_.add(q, w, MoveRight{open(next)});
      }
    }
    if (mode_ == CompileMode::head)
      for (SymbolId x : m_.gamma) {
        std::vector<int> next = advance(t, x);
        if (alive(next)) a_.add_head(q, x, MoveRight{open(next)});
      }
  }

  bool alive(const std::vector<int>& t) const {
    for (std::size_t i = 0; i < ncycles(); ++i)
      if (m_.left_dfa(i).live(t[i])) return true;
    for (std::size_t j = 0; j < m_.tails().size(); ++j)
      if (m_.tail_dfa(j).live(t[ncycles() + j])) return true;
    return false;
  }

  void expand_committed(std::size_t cycle, int s, StateId q) {
    const Dfa& r = m_.right_dfa(cycle);
    for (const Word& w : enumerate_windows(m_.gamma, k_, std::nullopt)) {
      if (contains_right(w)) {
        if (r.accepting(r.run(s, w))) a_.add(q, w, Restart{});
        continue;
      }
      if (mode_ == CompileMode::pruned) {
        int t = r.step(s, w.front());
        if (r.live(t)) a_.add(q, w, MoveRight{committed(cycle, t)});
      }
    }
    if (mode_ == CompileMode::head)
      for (SymbolId x : m_.gamma) {
        int t = r.step(s, x);
        if (r.live(t)) a_.add_head(q, x, MoveRight{committed(cycle, t)});
      }
  }

  const MetaAutomaton& m_;
  int k_;
  CompileMode mode_;
  DeltaAutomaton a_;
  std::vector<int> start_tuple_;
  std::map<std::vector<int>, StateId> open_ids_;
  std::deque<std::vector<int>> open_queue_;
  std::map<std::pair<std::size_t, int>, StateId> committed_ids_;
};

}  // namespace

DeltaAutomaton compile_meta_to_delta(const MetaAutomaton& m, CompileMode mode) {
  DeltaAutomaton a = Compiler(m, mode).run();
  a.certificate = audit_normal_form(a);
  a.certificate.provenance = {"compile"};
  return a;
}

}  // namespace rra
