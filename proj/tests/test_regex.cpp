#include "doctest.h"
#include "rra/error.hpp"
#include "rra/regex.hpp"
#include "support.hpp"

using namespace rra;
using K = ConstraintExpr::Kind;

namespace {

SymbolTable abcd() {
  SymbolTable t;
  for (const char* s : {"a", "b", "c", "d"}) t.intern(s, SymbolClass::input);
  return t;
}

std::vector<ConstraintExpr> constraints(const MetaAutomaton& m) {
  std::vector<ConstraintExpr> out;
  for (const auto& ins : m.instructions) {
    if (auto* c = std::get_if<CycleInstruction>(&ins)) {
      out.push_back(c->e1);
      out.push_back(c->e2);
    } else {
      out.push_back(std::get<TailInstruction>(ins).e);
    }
  }
  return out;
}

}  // namespace

TEST_SUITE("regex") {
  TEST_CASE("parse builds the expected tree") {
    SymbolTable t = abcd();
    const ConstraintExpr e = parse_constraint("<(ab)*a", t);
    REQUIRE(e.kind == K::concat);
    REQUIRE(e.parts.size() == 3);
    CHECK(e.parts[0].kind == K::symbol);
    CHECK(e.parts[0].symbol == kLeft);
    CHECK(e.parts[1].kind == K::star);
    CHECK(e.parts[1].parts[0].kind == K::concat);
    CHECK(e.parts[2].symbol == *t.find("a"));

    const ConstraintExpr f = parse_constraint("(cd)*>", t);
    REQUIRE(f.kind == K::concat);
    CHECK(f.parts[0].kind == K::star);
    CHECK(f.parts[1].symbol == kRight);
  }

  TEST_CASE("the cent and dollar signs are accepted as sentinels") {
    SymbolTable t = abcd();
    CHECK(print_constraint(parse_constraint("¢a*$", t), t) == print_constraint(parse_constraint("<a*>", t), t));
  }

  TEST_CASE("unbalanced group reports its offset") {
    SymbolTable t = abcd();
    try {
      parse_constraint("(ab", t);
      FAIL("no error");
    } catch (const ParseError& e) {
      CHECK(e.offset() == 3);
    }
  }

  TEST_CASE("unknown symbols are errors") {
    SymbolTable t = abcd();
    CHECK_THROWS_AS(parse_constraint("<x>", t), ParseError);
  }

  TEST_CASE("printing round-trips") {
    SymbolTable t = abcd();
    for (const char* s : {"<(ab)*a", "(cd)*>", "<~>", "<(a|bc)*d+>", "~"}) {
      const ConstraintExpr e = parse_constraint(s, t);
      CHECK(print_constraint(parse_constraint(print_constraint(e, t), t), t) == print_constraint(e, t));
    }
  }

  TEST_CASE("compiled examples") {
    SymbolTable t = abcd();
    Word alpha{kLeft, kRight};
    for (const char* s : {"a", "b", "c", "d"}) alpha.push_back(*t.find(s));
    const Dfa d1 = compile_dfa(parse_constraint("<(ab)*a", t), alpha);
    CHECK(dfa_accepts(d1, test::word(t, "<a")));
    CHECK(!dfa_accepts(d1, test::word(t, "<ab")));
    const Dfa d2 = compile_dfa(parse_constraint("d(cd)*>", t), alpha);
    CHECK(dfa_accepts(d2, test::word(t, "d>")));
    CHECK(dfa_accepts(d2, test::word(t, "dcd>")));
    CHECK(!d2.live(d2.run(d2.start(), test::word(t, "dd"))));
  }

  TEST_CASE("the dfa agrees with the backtracking matcher on every corpus constraint") {
    for (const auto& name : test::corpus_meta()) {
      const MetaAutomaton m = test::load_meta(name);
      const Word& alpha = m.tape_alphabet();
      Word inner;
      for (SymbolId s : alpha)
        if (s != kLeft && s != kRight) inner.push_back(s);
      for (const ConstraintExpr& e : constraints(m)) {
        CAPTURE(name);
        CAPTURE(print_constraint(e, m.symbols));
        const Dfa d = compile_dfa(e, alpha);
        test::NaiveMatcher naive(e);
        std::size_t mismatches = 0;
        // every word up to length 6, sentinels anywhere
        test::for_each_word(alpha, 6, [&](const Word& w) { mismatches += dfa_accepts(d, w) != naive.matches(w); });
        // words shaped like tape segments up to length 8
        test::for_each_word(inner, 8, [&](const Word& w) {
          for (int shape = 0; shape < 4; ++shape) {
            Word x;
            if (shape & 1) x.push_back(kLeft);
            x.insert(x.end(), w.begin(), w.end());
            if (shape & 2) x.push_back(kRight);
            if (x.size() > 8) continue;
            mismatches += dfa_accepts(d, x) != naive.matches(x);
          }
        });
        CHECK(mismatches == 0);
      }
    }
  }
}
