#include <set>
#include <tuple>

#include "rra/compound.hpp"
#include "rra/verify.hpp"

namespace rra {

namespace {

bool is_sentinel(SymbolId s) { return s == kLeft || s == kRight; }

class InvariantChecker {
 public:
  InvariantChecker(const DeltaAutomaton& m2, const Trace& t) : a_(m2), u_(m2.universe), t_(t) {}

  std::vector<TraceViolation> run() {
    for (std::size_t i = 0; i < t_.steps.size(); ++i) {
      const Configuration& c = t_.configs[i];
      const Instruction& ins = t_.steps[i];
      const Configuration* next = i + 1 < t_.configs.size() ? &t_.configs[i + 1] : nullptr;
      const Word x = window_at(c, a_.k);
      if (std::holds_alternative<Reject>(ins)) continue;
      if (is_checking(u_, c.state)) check_i5(i, c.state, x.front());
      if (next && is_checking(u_, next->state) && !std::holds_alternative<Rewrite>(ins))
        add("I5", i, "verification state " + name(next->state) + " entered without a rewrite");
      if (const Word* y = reduct_of(ins)) {
        const bool exempt = is_pending(u_, c.state) && y->back() == kRight;
        if (!exempt) check_i1(i, *y);
        check_i2(i, c.state, *y);
        if (!exempt && next && std::holds_alternative<Rewrite>(ins)) check_i3(i, x, *y, next->state);
      } else if (std::holds_alternative<MoveRight>(ins) && next) {
        check_i4(i, x.front(), next->state);
      }
    }
    return std::move(out_);
  }

 private:
  void add(const char* rule, std::size_t step, std::string detail) { out_.push_back({rule, step, std::move(detail)}); }
  std::string name(StateId q) const { return u_.states.name(q); }
  std::string sym(SymbolId s) const { return u_.symbols.name(s); }
  bool record_ok(std::optional<RecordId> r) const { return r && *r < u_.records.size(); }

  void check_i1(std::size_t i, const Word& y) {
    const SymbolId last = y.back();
    if (!is_delta_record(u_, last) || !record_ok(comp2(u_, last)))
      add("I1", i, "last reduct symbol " + sym(last) + " carries no rewrite record");
    if (y.size() >= 2) {
      const SymbolId first = y.front();
      if (is_delta(u_, first) && !is_delta01(u_, first))
        add("I1", i, "first reduct symbol " + sym(first) + " is neither plain nor in Delta_01");
      for (std::size_t j = 1; j + 1 < y.size(); ++j)
        if (is_delta(u_, y[j])) add("I1", i, "inner reduct symbol " + sym(y[j]) + " is compound");
    }
  }

  void check_i2(std::size_t i, StateId p, const Word& y) {
    for (SymbolId s : y) {
      if (!is_delta01(u_, s)) continue;
      if (!is_q21(u_, p)) add("I2", i, "Delta_01 symbol " + sym(s) + " written in state " + name(p));
      else if (comp4(u_, s) != u_.states.info(p).c)
        add("I2", i, "Delta_01 symbol " + sym(s) + " does not copy the matching bit of " + name(p));
    }
  }

  void check_i3(std::size_t i, const Word& x, const Word& y, StateId q) {
    const SymbolId last = y.back();
    if (!is_q21(u_, q)) {
      add("I3", i, "state after rewrite " + name(q) + " is not compound");
      return;
    }
    const StateInfo& s = u_.states.info(q);
    if (s.verinf.record != comp2(u_, last) || s.c != comp3(u_, last))
      add("I3", i, "state " + name(q) + " does not copy " + sym(last));
    if (s.d == Mode::neutral) add("I3", i, "state " + name(q) + " neither verifies nor ignores");
    const Bit e = is_delta_record(u_, x.back()) ? comp3(u_, x.back()) : Bit::neutral;
    if (s.e != e) add("I3", i, "state " + name(q) + " has the wrong fifth component");
  }

  void check_i4(std::size_t i, SymbolId z, StateId q) {
    if (is_q22(u_, q) || is_pending(u_, q)) return;
    if (is_delta_record(u_, z)) {
      if (!is_q21(u_, q)) {
        add("I4", i, "reading " + sym(z) + " did not enter a compound state");
        return;
      }
      const StateInfo& s = u_.states.info(q);
      if (s.verinf.record != comp2(u_, z) || s.c != comp3(u_, z) || s.d != Mode::neutral || s.e != Bit::neutral)
        add("I4", i, "state " + name(q) + " does not pick up " + sym(z));
    } else if (!is_q1(u_, q)) {
      add("I4", i, "reading " + sym(z) + " entered " + name(q));
    }
  }

  void check_i5(std::size_t i, StateId p, SymbolId z) {
    const StateInfo& s = u_.states.info(p);
    if (is_delta(u_, z) && comp4(u_, z) == s.c) {
      add("I5", i, name(p) + " did not reject " + sym(z));
      return;
    }
    if (!record_ok(s.verinf.record)) {
      add("I5", i, name(p) + " carries no rewrite record");
      return;
    }
    const bool matched = s.e != Bit::neutral && is_delta01(u_, z);
    if (s.d == Mode::verify) {
      if (comp1(u_, z) != redex_guess(u_, *s.verinf.record, a_.k))
        add("I5", i, name(p) + " accepted the wrong guess " + sym(z));
      if (matched && comp4(u_, z) != s.e) add("I5", i, name(p) + " verified an out-of-date " + sym(z));
    } else if (matched && comp4(u_, z) == s.e) {
      add("I5", i, name(p) + " ignored an up-to-date " + sym(z));
    }
  }

  const DeltaAutomaton& a_;
  const Universe& u_;
  const Trace& t_;
  std::vector<TraceViolation> out_;
};

}  // namespace

std::vector<TraceViolation> check_i_invariants(const DeltaAutomaton& m2, const Trace& t) {
  return InvariantChecker(m2, t).run();
}

std::vector<TraceViolation> check_lemma9(const DeltaAutomaton& m2, const Trace& t) {
  const Universe& u = m2.universe;
  std::vector<TraceViolation> out;
  std::set<std::tuple<SquareId, SymbolId, SquareId, SymbolId>> seen;
  for (std::size_t i = 0; i < t.configs.size(); ++i) {
    const auto& tape = t.configs[i].tape;
    for (std::size_t j = 0; j + 1 < tape.size(); ++j) {
      const SymbolId l = tape[j].symbol, r = tape[j + 1].symbol;
      if (l == kRight || is_delta_record(u, l) || !is_delta01(u, r)) continue;
      if (!seen.insert({tape[j].square, l, tape[j + 1].square, r}).second) continue;
      out.push_back({"lemma9", i, u.symbols.name(l) + " directly precedes " + u.symbols.name(r)});
    }
  }
  return out;
}

std::vector<TraceViolation> check_matching(const DeltaAutomaton& m2, const Trace& t, const SquareHistory& h) {
  const Universe& u = m2.universe;
  std::vector<TraceViolation> out;
  std::set<std::tuple<SquareId, SquareId, std::size_t, std::size_t>> seen;
  for (std::size_t i = 0; i < t.configs.size(); ++i) {
    const auto& tape = t.configs[i].tape;
    for (std::size_t j = 0; j + 1 < tape.size(); ++j) {
      const Cell& l = tape[j];
      const Cell& r = tape[j + 1];
      if (is_sentinel(l.symbol) || !is_delta_record(u, l.symbol) || !is_delta01(u, r.symbol)) continue;
      if (i == 0) continue;
      const auto t1 = h.last_write(l.square, i - 1);
      const auto t2 = h.last_write(r.square, i - 1);
      if (!t1 || !t2) {
        out.push_back({"matching", i, "compound symbol without an introducing rewrite"});
        continue;
      }
      if (!seen.insert({l.square, r.square, *t1, *t2}).second) continue;
      const bool same = comp3(u, l.symbol) == comp4(u, r.symbol);
      if (same && !(*t1 < *t2))
        out.push_back({"matching-2a", i,
                       "equal bits but " + u.symbols.name(l.symbol) + " is not older than " + u.symbols.name(r.symbol)});
      if (!same && !(*t1 > *t2))
        out.push_back({"matching-2b", i,
                       "different bits but " + u.symbols.name(l.symbol) + " is not newer than " +
                           u.symbols.name(r.symbol)});
    }
  }
  return out;
}

ReducedCheckReport check_reduced_machine(const DeltaAutomaton& m2, std::size_t n) {
  ReducedCheckReport rep;
  DeltaRelation rel(m2);
  for (const Word& w : enumerate_language(rel, n)) {
    ++rep.accepted_inputs;
    for_each_trace(rel, w, step_bound(w.size()), [&](const Trace& t) {
      ++rep.traces;
      if (t.outcome == Outcome::budget_exhausted) rep.budget_hit = true;
      for (auto& v : check_i_invariants(m2, t)) rep.violations.push_back(std::move(v));
      for (auto& v : check_lemma9(m2, t)) rep.violations.push_back(std::move(v));
      for (auto& v : check_matching(m2, t, build_square_history(t))) rep.violations.push_back(std::move(v));
    });
  }
  return rep;
}

}  // namespace rra
