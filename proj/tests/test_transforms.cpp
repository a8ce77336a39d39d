#include <algorithm>
#include <sstream>

#include "doctest.h"
#include "rra/configuration.hpp"
#include "rra/error.hpp"
#include "rra/transforms.hpp"
#include "rra/verify.hpp"
#include "support.hpp"

using namespace rra;

namespace {

const char* kShort =
    "k: 3\nvariant: RRWW\nsigma: a b\nstart: q\n"
    "q <* : -> q\nq a* : -> q\nq b* : -> q\n"
    "q b> : rewrite! >\nq <> : accept\n";

std::string missing(const std::function<void()>& f) {
  try {
    f();
  } catch (const PreconditionError& e) {
    return e.requirement();
  }
  return "";
}

bool has_short_rewrite(const DeltaAutomaton& a) {
  for (const auto& [key, ins] : a.exact())
    if (static_cast<int>(key.window.size()) < a.k)
      for (const auto& i : ins)
        if (is_rewrite(i)) return true;
  return false;
}

// Every cycle of every computation removes exactly one square.
bool shrinks_by_one(const DeltaAutomaton& a, std::size_t n) {
  DeltaRelation rel(a);
  bool ok = true;
  test::for_each_word(a.sigma, n, [&](const Word& w) {
    for_each_trace(rel, w, step_bound(w.size()), [&](const Trace& t) {
      for (std::size_t i = 0; i < t.steps.size() && i + 1 < t.configs.size(); ++i)
        if (is_rewrite(t.steps[i])) ok &= t.configs[i + 1].tape.size() + 1 == t.configs[i].tape.size();
    });
  });
  return ok;
}

}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("audit of a compiled table") {
    const auto c = audit_normal_form(compile_meta_to_delta(test::load_meta("prop6-corrected.meta")));
    CHECK(c.rr_semidet);
  }

  TEST_CASE("audit spots a short rewrite") {
    const DeltaAutomaton a = parse_delta(kShort);
    const auto c = audit_normal_form(a);
    CHECK(c.rr_semidet);
    CHECK(c.move_right_first);
    CHECK(!c.fixed_size);
    CHECK(c.unit);
  }

  TEST_CASE("audit ignores explicit rejects away from the right sentinel") {
    DeltaAutomaton a = parse_delta(kShort);
    a.add(a.start, test::word(a.symbols(), "aab"), Reject{});
    CHECK(audit_normal_form(a).rr_semidet);
    a.add(a.start, test::word(a.symbols(), "aab"), Accept{});
    CHECK(!audit_normal_form(a).rr_semidet);
  }

  TEST_CASE("move targets union exact and head moves") {
    DeltaAutomaton a = parse_delta(kShort);
    const StateId p = a.universe.states.intern_plain("p");
    a.add(a.start, test::word(a.symbols(), "ab>"), MoveRight{p});
    const SymbolId x = *a.symbols().find("a");
    auto t = move_targets(a, a.start, x);
    std::sort(t.begin(), t.end());
    CHECK(t == std::vector<StateId>{a.start, p});
    CHECK(!audit_normal_form(a).move_right_first);
  }

  TEST_CASE("a short rewrite is replaced by one key per preceding symbol") {
    const DeltaAutomaton a = parse_delta(kShort);
    const DeltaAutomaton b = to_fixed_rewrite_size(a);
    CHECK(!has_short_rewrite(b));
    CHECK(audit_normal_form(b).fixed_size);
    std::size_t keys = 0;
    for (const auto& [key, ins] : b.exact())
      for (const auto& i : ins)
        if (is_rewrite(i)) ++keys;
    CHECK(keys == a.gamma.size());
    CHECK(bounded_equiv(a, b, 8).equal());
  }

  TEST_CASE("fixed-size tables come back unchanged") {
    const DeltaAutomaton a = test::load_delta("anbn-rr3.delta");
    const DeltaAutomaton b = to_fixed_rewrite_size(a);
    CHECK(b.exact() == a.exact());
    CHECK(b.head() == a.head());
    CHECK(b.certificate.fixed_size);
  }

  TEST_CASE("fixing the rewrite size preserves every corpus language") {
    for (const auto& [name, a] : test::corpus_machines(CompileMode::head)) {
      CAPTURE(name);
      const DeltaAutomaton b = to_fixed_rewrite_size(a);
      CHECK(!has_short_rewrite(b));
      CHECK(bounded_equiv(a, b, 7).equal());
    }
  }

  TEST_CASE("preconditions name the missing flag") {
    DeltaAutomaton a = parse_delta(kShort);
    CHECK(missing([&] { to_unit_reduction(a); }) == "fixed-rewrite-size");
    a.add(a.start, test::word(a.symbols(), "aab"), Restart{});
    CHECK(missing([&] { to_fixed_rewrite_size(a); }) == "rr-semidet");
    CHECK(missing([&] { to_unit_reduction(a); }) == "rr-semidet");
    const DeltaAutomaton p5 = compile_meta_to_delta(test::load_meta("prop5.meta"), CompileMode::head);
    CHECK(missing([&] { reduce_lookahead(p5); }) == "lookahead");
    const DeltaAutomaton p6 = compile_meta_to_delta(test::load_meta("prop6-corrected.meta"), CompileMode::head);
    CHECK(missing([&] { reduce_lookahead(p6); }) == "lookahead");
  }

  TEST_CASE("unit reduction of a machine that deletes more than one square") {
    const DeltaAutomaton a =
        to_fixed_rewrite_size(compile_meta_to_delta(test::load_meta("anb2n.meta"), CompileMode::head));
    REQUIRE(!audit_normal_form(a).unit);
    const DeltaAutomaton b = to_unit_reduction(a);
    const auto c = audit_normal_form(b);
    CHECK(c.unit);
    CHECK(c.rr_semidet);
    CHECK(c.move_right_first);
    CHECK(c.fixed_size);
    CHECK(b.gamma.size() == a.gamma.size() + 1);
    CHECK(bounded_equiv(a, b, 8).equal());
    CHECK(shrinks_by_one(b, 8));
    CHECK(classify_monotonicity(b, 8).monotone == classify_monotonicity(a, 8).monotone);
  }

  TEST_CASE("unit reduction preserves every corpus language") {
    for (const auto& [name, a0] : test::corpus_machines(CompileMode::head)) {
      CAPTURE(name);
      const DeltaAutomaton a = to_fixed_rewrite_size(a0);
      const DeltaAutomaton b = to_unit_reduction(a);
      CHECK(audit_normal_form(b).unit);
      CHECK(bounded_equiv(a, b, 7).equal());
      CHECK(shrinks_by_one(b, 6));
    }
  }

  TEST_CASE("rewrite records") {
    const DeltaAutomaton a = test::load_delta("anbn-rr3.delta");
    const auto pi = build_pi(a);
    CHECK(pi.size() == 3);  // with the blank: four
    const std::set<RewriteRecord> unique(pi.begin(), pi.end());
    CHECK(unique.size() == pi.size());
    DeltaAutomaton d = a;
    const auto [key, ins] = *std::find_if(d.exact().begin(), d.exact().end(), [](const auto& e) {
      return std::any_of(e.second.begin(), e.second.end(), [](const Instruction& i) { return is_rewrite(i); });
    });
    d.add(key.state, key.window, ins.front());
    CHECK(build_pi(d).size() == 3);
  }

  TEST_CASE("rewrite records of the normalized lookahead-three a^n b^n machine") {
    const MetaAutomaton m = test::load_meta("prop6-rr3.meta");
    const DeltaAutomaton a =
        to_unit_reduction(to_fixed_rewrite_size(compile_meta_to_delta(m, CompileMode::head)));
    std::vector<std::string> lines;
    for (const auto& r : build_pi(a))
      lines.push_back(a.states().name(r.from) + " " + test::str(a.symbols(), r.redex) + " -> " +
                      test::str(a.symbols(), r.reduct) + " " + (r.to ? a.states().name(*r.to) : "!"));
    lines.push_back("B");
    std::vector<std::string> pinned;
    std::istringstream in(read_text_file(test::corpus_path("snapshots/prop6-rr3-pi.txt")));
    for (std::string l; std::getline(in, l);)
      if (!l.empty()) pinned.push_back(l);
    CHECK(lines == pinned);
    CHECK(lines.size() == 13);
  }
}
