#include <algorithm>

#include "doctest.h"
#include "rra/transforms.hpp"
#include "rra/verify.hpp"
#include "support.hpp"

using namespace rra;

namespace {

// ab -> a in the first cycle; later cycles accept a
const char* kFirst = "k: 2\nvariant: RR\nsigma: a b\nstart: q\nq <* : -> q\nq a* : -> q\nq ab : rewrite! a\n";
const char* kLater = "k: 2\nvariant: RR\nsigma: a b\nstart: q\nq <* : -> q\nq a> : accept\n";

bool has_rule(const std::vector<TraceViolation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(), [&](const TraceViolation& x) { return x.rule == rule; });
}

// A hand-made machine universe for doctored traces.
struct Doctored {
  DeltaAutomaton m;
  SymbolId a, x, y;
  StateId q, p;
  SymbolId rec, fresh;  // [x,r0,1,n] and [y,B,n,1]
  Doctored() {
    auto& sy = m.universe.symbols;
    a = sy.intern("a", SymbolClass::input);
    x = sy.intern("x", SymbolClass::auxiliary);
    y = sy.intern("y", SymbolClass::auxiliary);
    m.sigma = {a};
    m.k = 2;
    q = m.universe.states.intern_plain("q");
    m.start = q;
    const RecordId r = m.universe.intern_record(RewriteRecord{q, {a, a, a}, {a, y}, q});
    rec = sy.intern_compound({x, VerInf{r}, Bit::one, Bit::neutral});
    fresh = sy.intern_compound({y, VerInf{}, Bit::neutral, Bit::one});
    p = m.universe.states.intern_compound(q, VerInf{r}, Bit::one, Mode::verify, Bit::neutral);
    gamma();
  }
  void gamma() { m.gamma = {a, x, y, rec, fresh}; }
  Configuration config(std::vector<std::pair<SymbolId, SquareId>> cells, std::size_t head, StateId s) const {
    Configuration c;
    for (auto [sym, sq] : cells) c.tape.push_back({sym, sq});
    c.head = head;
    c.state = s;
    return c;
  }
};

DeltaAutomaton reduced(const DeltaAutomaton& a) { return reduce_lookahead(to_unit_reduction(to_fixed_rewrite_size(a))); }

}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("equivalence is reflexive and reports witnesses") {
    const DeltaAutomaton lit = compile_meta_to_delta(test::load_meta("prop6-literal.meta"));
    const DeltaAutomaton cor = compile_meta_to_delta(test::load_meta("prop6-corrected.meta"));
    CHECK(bounded_equiv(cor, cor, 8).equal());
    const auto r = bounded_equiv(lit, cor, 6);
    CHECK(!r.equal());
    CHECK(r.n == 6);
    CHECK(r.only_b.count(test::word(cor.symbols(), "ab")));
    CHECK(r.only_a.count(test::word(lit.symbols(), "abb")));
  }

  TEST_CASE("language comparison") {
    const std::set<Word> a{{}, {kRight}}, b{{}};
    const auto r = compare_languages(a, b, 1);
    CHECK(r.only_a.size() == 1);
    CHECK(r.only_b.empty());
  }

  TEST_CASE("corpus machines are correctness preserving") {
    for (const auto& [name, a] : test::corpus_machines()) {
      CAPTURE(name);
      CHECK(check_correctness_preserving(a, 8).empty());
    }
  }

  TEST_CASE("a machine that changes its mind after the first cycle is caught") {
    const DeltaAutomaton first = parse_delta(kFirst);
    const DeltaAutomaton later = parse_delta(kLater);
    test::PhaseSplitRelation r(first, later);
    CHECK(enumerate_language(r, 3) == std::set<Word>{test::word(first.symbols(), "ab")});
    const auto v = check_correctness_preserving(r, 4);
    REQUIRE(v.size() == 1);
    CHECK(test::str(first.symbols(), v[0].input) == "ab");
    CHECK(test::str(first.symbols(), v[0].tape) == "a");
    CHECK(v[0].cycles == 1);
  }

  TEST_CASE("an automaton that only accepts the empty word has nothing to report") {
    const DeltaAutomaton a = compile_meta_to_delta(parse_meta("sigma: a b\nstyle: rr\n(<>) ACCEPT\n"));
    CHECK(check_correctness_preserving(a, 6).empty());
  }

  TEST_CASE("reduced corpus machines pass the trace checks") {
    for (const char* name : {"anbn-rr3.delta", "mirror-rr3.delta"}) {
      CAPTURE(name);
      const auto rep = check_reduced_machine(reduced(test::load_delta(name)), 5);
      CHECK(rep.traces > 0);
      CHECK(rep.violations.empty());
    }
  }

  TEST_CASE("a compound blank written outside a compound state") {
    Doctored d;
    Trace t;
    t.configs.push_back(d.config({{kLeft, 0}, {d.a, 1}, {d.a, 2}, {kRight, 3}}, 1, d.q));
    t.steps.push_back(Rewrite{{d.fresh, d.rec}, d.p});
    t.configs.push_back(d.config({{kLeft, 0}, {d.fresh, 1}, {d.rec, 2}, {kRight, 3}}, 2, d.p));
    t.steps.push_back(Reject{});
    const auto v = check_i_invariants(d.m, t);
    CHECK(has_rule(v, "I2"));
    CHECK(!has_rule(v, "I1"));
  }

  TEST_CASE("a verification state that lasts two steps") {
    Doctored d;
    Trace t;
    t.configs.push_back(d.config({{kLeft, 0}, {d.y, 1}, {d.a, 2}, {kRight, 3}}, 1, d.p));
    t.steps.push_back(MoveRight{d.p});
    t.configs.push_back(d.config({{kLeft, 0}, {d.y, 1}, {d.a, 2}, {kRight, 3}}, 2, d.p));
    t.steps.push_back(Reject{});
    const auto v = check_i_invariants(d.m, t);
    CHECK(has_rule(v, "I5"));
    CHECK(has_rule(v, "I4"));
  }

  TEST_CASE("a plain symbol before a fresh compound") {
    Doctored d;
    Trace t;
    t.configs.push_back(d.config({{kLeft, 0}, {d.a, 1}, {d.fresh, 2}, {kRight, 3}}, 0, d.q));
    const auto v = check_lemma9(d.m, t);
    REQUIRE(v.size() == 1);
    CHECK(v[0].rule == "lemma9");
    Trace ok;
    ok.configs.push_back(d.config({{kLeft, 0}, {d.rec, 1}, {d.fresh, 2}, {kRight, 3}}, 0, d.q));
    CHECK(check_lemma9(d.m, ok).empty());
  }

  TEST_CASE("equal bits when the left symbol is the newer one") {
    Doctored d;
    Trace t;
    t.configs.push_back(d.config({{kLeft, 0}, {d.a, 1}, {d.a, 2}, {d.a, 3}, {kRight, 4}}, 2, d.q));
    t.steps.push_back(Rewrite{{d.fresh}, d.q});
    t.configs.push_back(d.config({{kLeft, 0}, {d.a, 1}, {d.fresh, 2}, {kRight, 4}}, 1, d.q));
    t.steps.push_back(Rewrite{{d.rec}, d.q});
    t.configs.push_back(d.config({{kLeft, 0}, {d.rec, 1}, {d.fresh, 2}, {kRight, 4}}, 2, d.q));

    const SquareHistory h = build_square_history(t);
    CHECK(h.squares.at(3).destroyed == 0);
    CHECK(h.last_write(2, 5) == 0);
    CHECK(h.last_write(1, 0) == std::nullopt);
    CHECK(h.last_write(1, 1) == 1);

    const auto v = check_matching(d.m, t, h);
    CHECK(has_rule(v, "matching-2a"));
    CHECK(!has_rule(v, "matching-2b"));
  }
}
