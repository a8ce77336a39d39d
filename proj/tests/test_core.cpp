#include <algorithm>

#include "doctest.h"
#include "rra/configuration.hpp"
#include "rra/delta_automaton.hpp"
#include "support.hpp"

using namespace rra;

namespace {

bool has_rule(const std::vector<Violation>& v, const std::string& rule) {
  return std::any_of(v.begin(), v.end(), [&](const Violation& x) { return x.rule == rule; });
}

DeltaAutomaton small_rrww2() {
  DeltaAutomaton a;
  auto& sy = a.universe.symbols;
  const SymbolId x = sy.intern("a", SymbolClass::input), y = sy.intern("b", SymbolClass::input);
  const SymbolId c = sy.intern("c", SymbolClass::auxiliary);
  a.sigma = {x, y};
  a.gamma = {x, y, c};
  a.k = 2;
  const StateId q = a.universe.states.intern_plain("q");
  a.start = q;
  a.add_head(q, kLeft, MoveRight{q});
  a.add_head(q, x, MoveRight{q});
  a.add(q, {x, y}, RewriteRestart{{c}});
  a.add(q, {kLeft, kRight}, Accept{});
  return a;
}

}  // namespace

TEST_SUITE("core") {
  TEST_CASE("sentinels are fixed and distinct") {
    SymbolTable t;
    CHECK(t.cls(kLeft) == SymbolClass::left_sentinel);
    CHECK(t.cls(kRight) == SymbolClass::right_sentinel);
    CHECK(t.find("<") == kLeft);
    CHECK(t.find(">") == kRight);
    const SymbolId a = t.intern("a", SymbolClass::input);
    CHECK(t.intern("a", SymbolClass::input) == a);
    CHECK(raw(a) == 2);
  }

  TEST_CASE("compound symbols are interned by payload") {
    SymbolTable t;
    const SymbolId a = t.intern("a", SymbolClass::input);
    CompoundPayload p{a, VerInf{0}, Bit::one, Bit::neutral};
    const SymbolId z = t.intern_compound(p);
    CHECK(t.intern_compound(p) == z);
    CHECK(t.is_compound(z));
    CHECK(t.payload(z)->c1 == Bit::one);
    CHECK(t.name(z) == "[a,r0,1,n]");
    CompoundPayload blank{a, VerInf{}, Bit::neutral, Bit::zero};
    CHECK(t.intern_compound(blank) != z);
  }

  TEST_CASE("structured states have stable names") {
    StateTable st;
    const StateId q = st.intern_plain("q");
    CHECK(st.intern_hat(q) != q);
    CHECK(st.intern_hat(q) == st.intern_hat(q));
    CHECK(st.kind(st.intern_marked(q)) == StateKind::marked);
    const StateId c = st.intern_compound(q, VerInf{3}, Bit::zero, Mode::verify, Bit::neutral);
    CHECK(st.info(c).verinf.record == 3u);
    CHECK(st.find(st.name(c)) == c);
  }

  TEST_CASE("window_at reads at most k symbols and stops at the right sentinel") {
    SymbolTable t;
    const SymbolId a = t.intern("a", SymbolClass::input), b = t.intern("b", SymbolClass::input);
    Configuration c = initial_configuration({a, b}, StateId{0});
    c.head = 1;
    CHECK(window_at(c, 2) == Word{a, b});
    c.head = 2;
    CHECK(window_at(c, 2) == Word{b, kRight});
    Configuration e = initial_configuration({}, StateId{0});
    e.head = 1;
    CHECK(window_at(e, 3) == Word{kRight});
    CHECK(tape_content(c) == Word{a, b});
    CHECK(c.tape.front().square == 0);
    CHECK(c.tape.back().square == 3);
  }

  TEST_CASE("a well-formed table validates") { CHECK(validate_automaton(small_rrww2()).empty()); }

  TEST_CASE("a rewrite must shorten the window") {
    DeltaAutomaton a = small_rrww2();
    const SymbolId x = a.sigma[0], y = a.sigma[1];
    a.add(a.start, {y, x}, RewriteRestart{{x, y}});
    CHECK(has_rule(validate_automaton(a), "length-reducing"));
  }

  TEST_CASE("deletion-only variants may only delete") {
    DeltaAutomaton a = small_rrww2();
    a.variant = Variant::RR;
    a.gamma = a.sigma;
    const SymbolId x = a.sigma[0], y = a.sigma[1];
    a.exact_mut().clear();
    a.add(a.start, {x, y}, RewriteRestart{{y}});   // a scattered subword: fine
    a.add(a.start, {y, y}, RewriteRestart{{x}});   // not a subword
    const auto v = validate_automaton(a);
    CHECK(has_rule(v, "deletion-only variant"));
    CHECK(std::count_if(v.begin(), v.end(), [](const Violation& x) { return x.rule == "deletion-only variant"; }) == 1);
  }

  TEST_CASE("short windows must end at the right sentinel") {
    DeltaAutomaton a = small_rrww2();
    a.add(a.start, {a.sigma[0]}, Restart{});
    CHECK(has_rule(validate_automaton(a), "window length"));
  }

  TEST_CASE("variant names round-trip") {
    for (Variant v : {Variant::R, Variant::RR, Variant::RW, Variant::RWW, Variant::RRW, Variant::RRWW})
      CHECK(parse_variant(to_string(v)) == v);
    CHECK(!parse_variant("RWWW"));
    CHECK(restarts_with_rewrite(Variant::RWW));
    CHECK(!restarts_with_rewrite(Variant::RRWW));
  }

  TEST_CASE("lookup unions exact and head entries") {
    DeltaAutomaton a = small_rrww2();
    std::vector<Instruction> out;
    const Word w{a.sigma[0], a.sigma[1]};
    a.lookup(a.start, w, out);
    CHECK(out.size() == 2);
  }

  TEST_CASE("every corpus machine validates") {
    for (const auto& [name, a] : test::corpus_machines()) {
      CAPTURE(name);
      CHECK(validate_automaton(a).empty());
    }
  }
}
