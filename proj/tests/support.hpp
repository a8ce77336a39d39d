#pragma once

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "rra/io.hpp"
#include "rra/meta.hpp"
#include "rra/sim.hpp"

namespace rra::test {

inline std::string corpus_path(const std::string& name) { return std::string(RRA_CORPUS_DIR) + "/" + name; }

inline std::string load_text(const std::string& name) { return read_text_file(corpus_path(name)); }
inline MetaAutomaton load_meta(const std::string& name) { return parse_meta(read_text_file(corpus_path(name))); }
inline DeltaAutomaton load_delta(const std::string& name) { return parse_delta(read_text_file(corpus_path(name))); }

inline const std::vector<std::string>& corpus_meta() {
  static const std::vector<std::string> v{"prop5.meta", "prop6-literal.meta", "prop6-corrected.meta",
                                          "prop6-rr3.meta", "anb2n.meta"};
  return v;
}
inline const std::vector<std::string>& corpus_delta() {
  static const std::vector<std::string> v{"anbn-rr3.delta", "mirror-rr3.delta"};
  return v;
}

// Every corpus machine as a table; meta files are compiled.
inline std::vector<std::pair<std::string, DeltaAutomaton>> corpus_machines(CompileMode mode = CompileMode::pruned) {
  std::vector<std::pair<std::string, DeltaAutomaton>> out;
  for (const auto& n : corpus_meta()) out.emplace_back(n, compile_meta_to_delta(load_meta(n), mode));
  for (const auto& n : corpus_delta()) out.emplace_back(n, load_delta(n));
  return out;
}

inline Word word(const SymbolTable& sy, const std::string& text) { return parse_word(text, sy); }
inline std::string str(const SymbolTable& sy, const Word& w) { return format_word(w, sy); }

inline std::set<std::string> render_all(const SymbolTable& sy, const std::set<Word>& ws) {
  std::set<std::string> out;
  for (const Word& w : ws) out.insert(format_word(w, sy));
  return out;
}

inline void for_each_word(const Word& sigma, std::size_t n, const std::function<void(const Word&)>& f) {
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

// Backtracking matcher over the expression tree, no automata involved.
class NaiveMatcher {
 public:
  explicit NaiveMatcher(const ConstraintExpr& e) : e_(e) {}
  bool matches(const Word& w) {
    w_ = &w;
    memo_.clear();
    return ends(&e_, 0).count(w.size()) > 0;
  }

 private:
  // Positions j such that e matches w[i, j).
  std::set<std::size_t> ends(const ConstraintExpr* e, std::size_t i) {
    auto key = std::make_pair(e, i);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::set<std::size_t> out;
    using K = ConstraintExpr::Kind;
    switch (e->kind) {
      case K::epsilon: out.insert(i); break;
      case K::symbol:
        if (i < w_->size() && (*w_)[i] == e->symbol) out.insert(i + 1);
        break;
      case K::alt:
        for (const auto& p : e->parts) {
          auto s = ends(&p, i);
          out.insert(s.begin(), s.end());
        }
        break;
      case K::concat: {
        std::set<std::size_t> cur{i};
        for (const auto& p : e->parts) {
          std::set<std::size_t> next;
          for (std::size_t j : cur) {
            auto s = ends(&p, j);
            next.insert(s.begin(), s.end());
          }
          cur = std::move(next);
        }
        out = std::move(cur);
        break;
      }
      case K::star: {
        std::set<std::size_t> frontier{i};
        out.insert(i);
        while (!frontier.empty()) {
          std::set<std::size_t> next;
          for (std::size_t j : frontier)
            for (std::size_t t : ends(&e->parts.front(), j))
              if (out.insert(t).second) next.insert(t);
          frontier = std::move(next);
        }
        break;
      }
    }
    memo_[key] = out;
    return out;
  }

  const ConstraintExpr& e_;
  const Word* w_ = nullptr;
  std::map<std::pair<const ConstraintExpr*, std::size_t>, std::set<std::size_t>> memo_;
};

// Meta acceptance straight from the definition: a tape is accepted when a
// tail matches it or one rewrite leads to an accepted tape. Uses only
// NaiveMatcher.
class MetaOracle {
 public:
  explicit MetaOracle(const MetaAutomaton& m) : m_(m) {}

  bool accepts(const Word& w) {
    if (auto it = memo_.find(w); it != memo_.end()) return it->second;
    bool ok = false;
    for (const auto& ins : m_.instructions) {
      if (auto* t = std::get_if<TailInstruction>(&ins)) {
        Word full{kLeft};
        full.insert(full.end(), w.begin(), w.end());
        full.push_back(kRight);
        NaiveMatcher nm(t->e);
        if (nm.matches(full)) ok = true;
      }
    }
    for (std::size_t i = 0; !ok && i < m_.instructions.size(); ++i) {
      const auto* c = std::get_if<CycleInstruction>(&m_.instructions[i]);
      if (!c) continue;
      for (std::size_t p = 0; !ok && p + c->redex.size() <= w.size(); ++p) {
        if (!std::equal(c->redex.begin(), c->redex.end(), w.begin() + static_cast<long>(p))) continue;
        Word left{kLeft};
        left.insert(left.end(), w.begin(), w.begin() + static_cast<long>(p));
        Word right(w.begin() + static_cast<long>(p + c->redex.size()), w.end());
        right.push_back(kRight);
        NaiveMatcher l(c->e1), r(c->e2);
        if (!l.matches(left) || !r.matches(right)) continue;
        Word next(w.begin(), w.begin() + static_cast<long>(p));
        next.insert(next.end(), c->reduct.begin(), c->reduct.end());
        next.insert(next.end(), right.begin(), right.end() - 1);
        ok = accepts(next);
      }
    }
    memo_[w] = ok;
    return ok;
  }

 private:
  const MetaAutomaton& m_;
  std::map<Word, bool> memo_;
};

// Uses one table in the first phase and another in every later phase, so
// the tape reached by the first cycle is judged differently from the same
// word given as input.
class PhaseSplitRelation : public StepRelation {
 public:
  PhaseSplitRelation(const DeltaAutomaton& first, const DeltaAutomaton& later) : first_(first), later_(later) {}
  int lookahead() const override { return first_.automaton().k; }
  StateId start() const override { return first_.start(); }
  const Word& sigma() const override { return first_.sigma(); }
  const Word& gamma() const override { return first_.gamma(); }
  void instructions(StateId q, std::size_t phase, std::span<const SymbolId> window,
                    std::vector<const Instruction*>& out) const override {
    (phase == 0 ? first_ : later_).instructions(q, phase, window, out);
  }
  std::size_t phase_class(std::size_t phase) const override { return phase == 0 ? 0 : 1; }

 private:
  DeltaRelation first_, later_;
};

}  // namespace rra::test
