#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "rra/error.hpp"
#include "rra/io.hpp"
#include "rra/meta.hpp"
#include "rra/sim.hpp"
#include "rra/transforms.hpp"
#include "rra/verify.hpp"

namespace rra::cli {

namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A parsed input file. Meta files are compiled on first use.
struct Loaded {
  std::string path;
  std::optional<MetaAutomaton> meta;
  std::optional<DeltaAutomaton> delta;

  const DeltaAutomaton& machine() {
    if (!delta) delta = compile_meta_to_delta(*meta);
    return *delta;
  }
  const SymbolTable& symbols() const { return meta ? meta->symbols : delta->universe.symbols; }
  const Word& sigma() const { return meta ? meta->sigma : delta->sigma; }
};

Loaded load(const std::string& path) {
  Loaded l;
  l.path = path;
  const std::string text = read_text_file(path);
  try {
    if (detect_kind(text) == FileKind::meta) l.meta = parse_meta(text);
    else l.delta = parse_delta(text);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.detail(), e.offset(), e.line());
  }
  return l;
}

Word input_word(const Loaded& l, const std::string& text) {
  Word w = parse_word(text, l.symbols());
  for (SymbolId s : w)
    if (std::find(l.sigma().begin(), l.sigma().end(), s) == l.sigma().end())
      throw UsageError("'" + l.symbols().name(s) + "' is not an input symbol");
  return w;
}

// Length first, then the rendered text.
std::vector<std::string> sorted_words(const std::set<Word>& ws, const SymbolTable& sy) {
  std::vector<Word> v(ws.begin(), ws.end());
  std::stable_sort(v.begin(), v.end(), [&](const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return sy.render(a) < sy.render(b);
  });
  std::vector<std::string> out;
  for (const Word& w : v) out.push_back(format_word(w, sy));
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) {
    if (!s.empty()) s += sep;
    s += p;
  }
  return s;
}

std::vector<std::string> flags(const NormalizationCertificate& c) {
  std::vector<std::string> f;
  if (c.rr_semidet) f.push_back("rr-semidet");
  if (c.move_right_first) f.push_back("move-right-first-symbol");
  if (c.fixed_size) f.push_back("fixed-rewrite-size");
  if (c.unit) f.push_back("unit-reduction");
  return f;
}

// Tape contents at the restarting configurations of a trace.
std::vector<std::string> restart_chain(const Trace& t, const SymbolTable& sy) {
  std::vector<std::string> chain;
  for (std::size_t i = 0; i < t.configs.size(); ++i) {
    if (i > 0) {
      const Instruction& prev = t.steps[i - 1];
      if (!std::holds_alternative<Restart>(prev) && !std::holds_alternative<RewriteRestart>(prev)) continue;
    }
    chain.push_back(format_word(tape_content(t.configs[i]), sy));
  }
  return chain;
}

struct Options {
  std::string format = "text";
  bool json() const { return format == "json"; }
};

int cmd_member(const Options& o, const std::string& file, const std::string& word, std::ostream& out) {
  Loaded l = load(file);
  const Word w = input_word(l, word);
  std::vector<std::string> chain;
  bool accepted;
  if (l.meta) {
    auto r = meta_member(*l.meta, w);
    accepted = r.has_value();
    if (r)
      for (const Word& t : *r) chain.push_back(format_word(t, l.symbols()));
  } else {
    auto r = member(l.machine(), w);
    accepted = r.accepted;
    if (r.witness) chain = restart_chain(*r.witness, l.symbols());
  }
  if (o.json()) {
    out << json{{"word", format_word(w, l.symbols())}, {"accepted", accepted}, {"chain", chain}}.dump() << "\n";
  } else {
    out << (accepted ? "accepted" : "rejected") << "\n";
    if (accepted) out << join(chain, " -> ") << "\n";
  }
  return accepted ? kOk : kNegative;
}

int cmd_enumerate(const Options& o, const std::string& file, std::size_t n, bool interpret, std::ostream& out) {
  Loaded l = load(file);
  if (interpret && !l.meta) throw UsageError("--interpret needs a meta file");
  const auto words =
      sorted_words(interpret ? meta_enumerate(*l.meta, n) : enumerate_language(l.machine(), n), l.symbols());
  if (o.json()) {
    out << json{{"n", n}, {"words", words}}.dump() << "\n";
  } else {
    for (const auto& w : words) out << w << "\n";
  }
  return kOk;
}

DeltaAutomaton apply_pipeline(Loaded& l, const std::string& pipeline) {
  std::vector<std::string> steps;
  std::stringstream ss(pipeline);
  for (std::string s; std::getline(ss, s, ',');)
    if (!s.empty()) steps.push_back(s);
  std::optional<DeltaAutomaton> a = l.delta;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (s == "compile" || s == "compile-pruned") {
      if (i != 0 || !l.meta) throw UsageError("'" + s + "' applies to a meta file only, as the first step");
      a = compile_meta_to_delta(*l.meta, s == "compile" ? CompileMode::head : CompileMode::pruned);
    } else if (s == "fixsize" || s == "unit" || s == "reduce") {
      if (!a) throw UsageError("meta files must be compiled first");
      a = apply_transform(*a, s);
    } else {
      throw UsageError("unknown transform '" + s + "'");
    }
  }
  if (!a) a = l.machine();
  return std::move(*a);
}

int cmd_transform(const Options& o, const std::string& file, const std::string& pipeline, const std::string& out_file,
                  std::ostream& out) {
  Loaded l = load(file);
  if (pipeline.empty()) throw UsageError("empty pipeline");
  const std::optional<DeltaAutomaton> a = apply_pipeline(l, pipeline);
  const std::string text = write_delta(*a);
  if (out_file.empty() || out_file == "-") {
    out << text;
  } else {
    std::ofstream f(out_file, std::ios::binary);
    if (!f) throw UsageError("cannot write " + out_file);
    f << text;
  }
  const auto counts = json{{"k", a->k},
                           {"variant", to_string(a->variant)},
                           {"states", a->universe.states.size()},
                           {"gamma", a->gamma.size()},
                           {"entries", a->entry_count()},
                           {"certificate", flags(a->certificate)}};
  if (out_file.empty() || out_file == "-") return kOk;
  if (o.json()) {
    out << counts.dump() << "\n";
  } else {
    out << to_string(a->variant) << "(" << a->k << "): " << a->universe.states.size() << " states, "
        << a->gamma.size() << " tape symbols, " << a->entry_count() << " entries\n";
    out << "certificate: " << join(flags(a->certificate), " ") << "\n";
  }
  return kOk;
}

int cmd_records(const Options& o, const std::string& file, const std::string& pipeline, std::ostream& out) {
  Loaded l = load(file);
  const DeltaAutomaton a = apply_pipeline(l, pipeline);
  const auto& sy = a.symbols();
  const auto& st = a.states();
  std::vector<std::string> lines;
  for (const auto& r : build_pi(a))
    lines.push_back(st.name(r.from) + " " + format_word(r.redex, sy) + " -> " + format_word(r.reduct, sy) + " " +
                    (r.to ? st.name(*r.to) : std::string("!")));
  lines.push_back("B");
  if (o.json()) {
    out << json{{"pi", lines}}.dump() << "\n";
  } else {
    for (const auto& x : lines) out << x << "\n";
  }
  return kOk;
}

int report(const Options& o, std::ostream& out, const std::string& suite, bool pass, json detail,
           const std::vector<std::string>& lines) {
  if (o.json()) {
    detail["suite"] = suite;
    detail["pass"] = pass;
    out << detail.dump() << "\n";
  } else {
    out << suite << ": " << (pass ? "pass" : "FAIL") << "\n";
    for (const auto& s : lines) out << "  " << s << "\n";
  }
  return pass ? kOk : kNegative;
}

int cmd_check(const Options& o, const std::vector<std::string>& files, const std::string& suite, std::size_t n,
              std::ostream& out) {
  const bool two = suite == "equiv";
  if (files.size() != (two ? 2u : 1u))
    throw UsageError("suite " + suite + " takes " + (two ? "two files" : "one file"));
  Loaded a = load(files[0]);
  const SymbolTable& sy = a.symbols();
  if (suite == "equiv") {
    Loaded b = load(files[1]);
    const auto la = enumerate_language(a.machine(), n);
    const auto lb = enumerate_language(b.machine(), n);
    // compare by rendering: the two files have separate symbol tables
    std::set<std::string> ra, rb;
    for (const Word& w : la) ra.insert(format_word(w, sy));
    for (const Word& w : lb) rb.insert(format_word(w, b.symbols()));
    std::vector<std::string> only_a, only_b;
    std::set_difference(ra.begin(), ra.end(), rb.begin(), rb.end(), std::back_inserter(only_a));
    std::set_difference(rb.begin(), rb.end(), ra.begin(), ra.end(), std::back_inserter(only_b));
    std::vector<std::string> lines;
    for (const auto& w : only_a) lines.push_back("only in " + files[0] + ": " + w);
    for (const auto& w : only_b) lines.push_back("only in " + files[1] + ": " + w);
    return report(o, out, suite, only_a.empty() && only_b.empty(), {{"only_a", only_a}, {"only_b", only_b}},
                  lines);
  }
  if (suite == "monotone") {
    const auto r = classify_monotonicity(a.machine(), n);
    return report(o, out, suite, r.monotone,
                  {{"monotone", r.monotone}, {"left_monotone", r.left_monotone},
                   {"right_left_monotone", r.right_left_monotone}},
                  {std::string("monotone ") + (r.monotone ? "yes" : "no"),
                   std::string("left-monotone ") + (r.left_monotone ? "yes" : "no"),
                   std::string("right-left-monotone ") + (r.right_left_monotone ? "yes" : "no")});
  }
  if (suite == "prop1") {
    const auto v = check_correctness_preserving(a.machine(), n);
    json list = json::array();
    std::vector<std::string> lines;
    for (const auto& x : v) {
      const std::string in = format_word(x.input, sy), tape = format_word(x.tape, sy);
      list.push_back({{"input", in}, {"tape", tape}, {"cycles", x.cycles}});
      lines.push_back(in + " restarts on rejected " + tape + " after " + std::to_string(x.cycles) + " cycles");
    }
    return report(o, out, suite, v.empty(), {{"violations", list}}, lines);
  }
  if (suite == "thm7-invariants") {
    const auto r = check_reduced_machine(a.machine(), n);
    json list = json::array();
    std::vector<std::string> lines{std::to_string(r.accepted_inputs) + " accepted inputs, " +
                                   std::to_string(r.traces) + " traces"};
    for (const auto& v : r.violations) {
      list.push_back({{"rule", v.rule}, {"step", v.step}, {"detail", v.detail}});
      lines.push_back(v.rule + " at step " + std::to_string(v.step) + ": " + v.detail);
    }
    if (r.budget_hit) lines.push_back("step budget exhausted");
    return report(o, out, suite, r.violations.empty() && !r.budget_hit,
                  {{"traces", r.traces}, {"accepted_inputs", r.accepted_inputs}, {"violations", list},
                   {"budget_hit", r.budget_hit}},
                  lines);
  }
  if (suite == "determinism") {
    const bool d = is_deterministic(a.machine());
    return report(o, out, suite, d, {{"deterministic", d}}, {});
  }
  if (suite == "audit") {
    const DeltaAutomaton& m = a.machine();
    const auto found = flags(audit_normal_form(m));
    const auto claimed = flags(m.certificate);
    // every claimed flag must hold
    bool ok = std::all_of(claimed.begin(), claimed.end(),
                          [&](const std::string& f) { return std::count(found.begin(), found.end(), f) > 0; });
    return report(o, out, suite, ok, {{"audit", found}, {"certificate", claimed}},
                  {"audit: " + join(found, " "), "certificate: " + join(claimed, " ")});
  }
  throw UsageError("unknown suite '" + suite + "'");
}

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"restarting automata workbench"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string file, word, pipeline, out_file, suite;
  std::vector<std::string> files;
  std::size_t n = 0;

  auto* mem = app.add_subcommand("member", "decide membership of one word");
  mem->add_option("file", file)->required();
  mem->add_option("word", word, "input word, ~ for the empty word")->required();

  auto* en = app.add_subcommand("enumerate", "accepted words up to a length");
  en->add_option("file", file)->required();
  en->add_option("n", n)->required();
  bool interpret = false;
  en->add_flag("--interpret", interpret, "run the meta-instructions directly instead of the compiled table");

  auto* tr = app.add_subcommand("transform", "apply a comma-separated pipeline");
  tr->add_option("file", file)->required();
  tr->add_option("pipeline", pipeline, "compile, compile-pruned, fixsize, unit, reduce")->required();
  tr->add_option("-o,--out", out_file, "output file (default: standard output)");

  auto* rec = app.add_subcommand("records", "rewrite records of a machine, the blank last");
  rec->add_option("file", file)->required();
  rec->add_option("pipeline", pipeline, "transforms to apply first");

  auto* ch = app.add_subcommand("check", "run a property suite");
  ch->add_option("files", files)->required()->expected(1, 2);
  ch->add_option("-s,--suite", suite)
      ->required()
      ->check(CLI::IsMember({"equiv", "monotone", "prop1", "thm7-invariants", "determinism", "audit"}));
  ch->add_option("-n", n)->default_val(6);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream o_, e_;
    const int code = app.exit(e, o_, e_);
    out << o_.str();
    err << e_.str();
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*mem) return cmd_member(o, file, word, out);
    if (*en) return cmd_enumerate(o, file, n, interpret, out);
    if (*tr) return cmd_transform(o, file, pipeline, out_file, out);
    if (*rec) return cmd_records(o, file, pipeline, out);
    return cmd_check(o, files, suite, n, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace rra::cli
