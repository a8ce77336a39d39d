#include "rra/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "rra/error.hpp"
#include "rra/transforms.hpp"

namespace rra {

namespace {

struct Line {
  std::size_t number;
  std::string text;  // comment removed, trimmed right
  std::size_t indent;
};

std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0, pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string s(text.substr(pos, end - pos));
    ++number;
    pos = end + 1;
    if (auto h = s.find('#'); h != std::string::npos) s.erase(h);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.pop_back();
    std::size_t indent = s.find_first_not_of(" \t");
    if (indent == std::string::npos) continue;
    out.push_back({number, s, indent});
    if (end == text.size()) break;
  }
  return out;
}

// "key: value" directive; key must be one identifier word.
bool directive(const Line& l, std::string& key, std::string& value, std::size_t& value_at) {
  std::size_t colon = l.text.find(':');
  if (colon == std::string::npos) return false;
  std::string k = l.text.substr(l.indent, colon - l.indent);
  if (k.empty() || k.find_first_of(" \t()[]<>") != std::string::npos) return false;
  key = k;
  value_at = l.text.find_first_not_of(" \t", colon + 1);
  value = value_at == std::string::npos ? std::string() : l.text.substr(value_at);
  if (value_at == std::string::npos) value_at = l.text.size();
  return true;
}

std::vector<std::pair<std::string, std::size_t>> tokens(const std::string& s, std::size_t base = 0) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < s.size()) {
    if (s[i] == ' ' || s[i] == '\t') {
      ++i;
      continue;
    }
    std::size_t j = i;
    int depth = 0;
    while (j < s.size() && (depth > 0 || (s[j] != ' ' && s[j] != '\t'))) {
      if (s[j] == '(' || s[j] == '[') ++depth;
      if (s[j] == ')' || s[j] == ']') --depth;
      ++j;
    }
    out.push_back({s.substr(i, j - i), base + i});
    i = j;
  }
  return out;
}

// Splits a symbol list "a b c" or "abc" into symbol names.
std::vector<std::string> symbol_names(const std::string& s, std::size_t line, std::size_t base) {
  std::vector<std::string> out;
  for (const auto& [tok, at] : tokens(s, base)) {
    std::size_t p = 0;
    try {
      while (p < tok.size()) out.push_back(read_symbol_name(tok, p));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), at + e.offset(), line);
    }
  }
  return out;
}

Word parse_word_at(std::string_view text, const SymbolTable& symbols, std::size_t line, std::size_t base) {
  try {
    return parse_word(text, symbols);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), base + e.offset(), line);
  }
}

// Returns the index just past the ')' matching the '(' at `open`.
std::size_t matching_paren(const std::string& s, std::size_t open, std::size_t line) {
  int depth = 0;
  int bracket = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '[') ++bracket;
    if (s[i] == ']') --bracket;
    if (bracket > 0) continue;
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i + 1;
  }
  throw ParseError("missing ')' for '('", open, line);
}

ConstraintExpr constraint_at(const std::string& s, std::size_t open, std::size_t close,
                             const SymbolTable& symbols, std::size_t line) {
  std::string inner = s.substr(open + 1, close - open - 2);
  try {
    return parse_constraint(inner, symbols);
  } catch (const ParseError& e) {
    throw ParseError(e.detail(), open + 1 + e.offset(), line);
  }
}

ConstraintExpr any_then_right(const Word& gamma) {
  ConstraintExpr alt;
  alt.kind = ConstraintExpr::Kind::alt;
  for (SymbolId s : gamma) {
    ConstraintExpr e;
    e.kind = ConstraintExpr::Kind::symbol;
    e.symbol = s;
    alt.parts.push_back(e);
  }
  ConstraintExpr star;
  star.kind = ConstraintExpr::Kind::star;
  star.parts.push_back(alt.parts.empty() ? ConstraintExpr{} : alt);
  ConstraintExpr right;
  right.kind = ConstraintExpr::Kind::symbol;
  right.symbol = kRight;
  ConstraintExpr cat;
  cat.kind = ConstraintExpr::Kind::concat;
  cat.parts = {star, right};
  return cat;
}

std::string certificate_line(const NormalizationCertificate& c) {
  std::string s;
  auto add = [&](bool b, const char* n) {
    if (!b) return;
    if (!s.empty()) s += ' ';
    s += n;
  };
  add(c.rr_semidet, "rr-semidet");
  add(c.move_right_first, "move-right-first-symbol");
  add(c.fixed_size, "fixed-rewrite-size");
  add(c.unit, "unit-reduction");
  return s;
}

}  // namespace

Word parse_word(std::string_view text, const SymbolTable& symbols) {
  if (text == "~" || text.empty()) return {};
  Word w;
  std::size_t p = 0;
  while (p < text.size()) {
    if (text[p] == ' ') {
      ++p;
      continue;
    }
    w.push_back(read_symbol_token(text, p, symbols));
  }
  return w;
}

std::string format_word(const Word& w, const SymbolTable& symbols) {
  return w.empty() ? std::string("~") : symbols.render(w);
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FileKind detect_kind(std::string_view text) {
  for (const auto& l : split_lines(text)) {
    if (l.text[l.indent] == '(') return FileKind::meta;
    std::string key, value;
    std::size_t at;
    if (directive(l, key, value, at)) {
      if (key == "style") return FileKind::meta;
      if (key == "k" || key == "start" || key == "variant") return FileKind::delta;
    }
  }
  return FileKind::delta;
}

// ---------------------------------------------------------------- meta

MetaAutomaton parse_meta(std::string_view text) {
  MetaAutomaton m;
  auto lines = split_lines(text);
  std::vector<std::string> sigma, gamma;
  bool have_sigma = false, have_style = false;
  for (const auto& l : lines) {
    if (l.text[l.indent] == '(') continue;
    std::string key, value;
    std::size_t at;
    if (!directive(l, key, value, at)) throw ParseError("expected a directive or an instruction", l.indent, l.number);
    if (key == "sigma") {
      sigma = symbol_names(value, l.number, at);
      have_sigma = true;
    } else if (key == "gamma") {
      gamma = symbol_names(value, l.number, at);
    } else if (key == "style") {
      if (value == "rr") m.style = MetaStyle::rr;
      else if (value == "rww") m.style = MetaStyle::rww;
      else throw ParseError("style must be rr or rww", at, l.number);
      have_style = true;
    } else {
      throw ParseError("unknown directive '" + key + "'", l.indent, l.number);
    }
  }
  if (!have_sigma) throw ParseError("missing 'sigma:' directive", 0, lines.empty() ? 1 : lines.front().number);
  if (!have_style) throw ParseError("missing 'style:' directive", 0, lines.empty() ? 1 : lines.front().number);
  for (const auto& s : sigma) {
    if (s == "<" || s == ">" || s == "~") throw ParseError("reserved symbol in sigma", 0, lines.front().number);
    m.sigma.push_back(m.symbols.intern(s, SymbolClass::input));
  }
  m.gamma = m.sigma;
  for (const auto& s : gamma) {
    if (std::find(sigma.begin(), sigma.end(), s) != sigma.end()) continue;
    if (s == "<" || s == ">" || s == "~") throw ParseError("reserved symbol in gamma", 0, lines.front().number);
    m.gamma.push_back(m.symbols.intern(s, SymbolClass::auxiliary));
  }

  for (const auto& l : lines) {
    const std::string& s = l.text;
    if (s[l.indent] != '(') continue;
    std::size_t close = matching_paren(s, l.indent, l.number);
    ConstraintExpr left = constraint_at(s, l.indent, close, m.symbols, l.number);
    auto rest = tokens(s.substr(close), close);
    if (rest.size() == 1 && rest[0].first == "ACCEPT") {
      m.instructions.push_back(TailInstruction{std::move(left)});
      continue;
    }
    if (rest.size() < 3 || rest[1].first != "->")
      throw ParseError("expected 'REDEX -> REDUCT' or 'ACCEPT'", rest.empty() ? s.size() : rest[0].second, l.number);
    CycleInstruction c;
    c.e1 = std::move(left);
    c.redex = parse_word_at(rest[0].first, m.symbols, l.number, rest[0].second);
    c.reduct = parse_word_at(rest[2].first, m.symbols, l.number, rest[2].second);
    for (SymbolId x : c.redex)
      if (x == kLeft || x == kRight) throw ParseError("sentinel inside a redex", rest[0].second, l.number);
    for (SymbolId x : c.reduct)
      if (x == kLeft || x == kRight) throw ParseError("sentinel inside a reduct", rest[2].second, l.number);
    if (c.redex.empty()) throw ParseError("empty redex", rest[0].second, l.number);
    if (c.reduct.size() >= c.redex.size())
      throw ParseError("reduct must be shorter than the redex", rest[2].second, l.number);
    if (m.style == MetaStyle::rr) {
      if (rest.size() != 4 || rest[3].first.front() != '(')
        throw ParseError("rr instruction needs a right constraint '(E2)'",
                         rest.size() > 3 ? rest[3].second : s.size(), l.number);
      std::size_t open = rest[3].second;
      std::size_t end = matching_paren(s, open, l.number);
      if (end != s.size()) throw ParseError("trailing text after right constraint", end, l.number);
      c.e2 = constraint_at(s, open, end, m.symbols, l.number);
    } else {
      if (rest.size() != 3) throw ParseError("rww instruction takes no right constraint", rest[3].second, l.number);
      c.e2 = any_then_right(m.gamma);
    }
    m.instructions.push_back(std::move(c));
  }
  m.prepare();
  return m;
}

// ---------------------------------------------------------------- delta

namespace {

Bit parse_bit(const std::string& s, std::size_t line, std::size_t at) {
  if (s == "0") return Bit::zero;
  if (s == "1") return Bit::one;
  if (s == "n") return Bit::neutral;
  throw ParseError("expected 0, 1 or n", at, line);
}

Mode parse_mode(const std::string& s, std::size_t line, std::size_t at) {
  if (s == "v") return Mode::verify;
  if (s == "i") return Mode::ignore;
  if (s == "n") return Mode::neutral;
  throw ParseError("expected v, i or n", at, line);
}

struct Decl {
  std::size_t line;
  std::vector<std::pair<std::string, std::size_t>> fields;
};

class DeltaReader {
 public:
  explicit DeltaReader(std::string_view text) : lines_(split_lines(text)) {}

  DeltaAutomaton read() {
    std::vector<std::string> sigma, gamma;
    bool have_k = false, have_start = false;
    std::string start_name;
    std::size_t start_line = 0;
    std::vector<const Line*> entries;
    for (const auto& l : lines_) {
      std::string key, value;
      std::size_t at;
      // entries contain " : " after the window
      bool is_entry = l.text.find(" : ") != std::string::npos;
      if (!is_entry && directive(l, key, value, at)) {
        if (key == "k") {
          try {
            a_.k = std::stoi(value);
          } catch (...) {
            throw ParseError("k must be an integer", at, l.number);
          }
          have_k = true;
        } else if (key == "variant") {
          auto v = parse_variant(value);
          if (!v) throw ParseError("unknown variant '" + value + "'", at, l.number);
          a_.variant = *v;
        } else if (key == "sigma") {
          sigma = symbol_names(value, l.number, at);
        } else if (key == "gamma") {
          gamma = symbol_names(value, l.number, at);
        } else if (key == "start") {
          start_name = value;
          start_line = l.number;
          have_start = true;
        } else if (key == "certificate") {
          for (const auto& [t, pos] : tokens(value, at)) {
            if (t == "rr-semidet") a_.certificate.rr_semidet = true;
            else if (t == "move-right-first-symbol") a_.certificate.move_right_first = true;
            else if (t == "fixed-rewrite-size") a_.certificate.fixed_size = true;
            else if (t == "unit-reduction") a_.certificate.unit = true;
            else throw ParseError("unknown certificate flag '" + t + "'", pos, l.number);
          }
        } else if (key == "provenance") {
          for (const auto& [t, pos] : tokens(value, at)) a_.certificate.provenance.push_back(t);
        } else {
          throw ParseError("unknown directive '" + key + "'", l.indent, l.number);
        }
        continue;
      }
      auto f = tokens(l.text);
      if (!f.empty() && (f[0].first == "record" || f[0].first == "compound" || f[0].first == "state") &&
          f.size() >= 2 && f[1].first.back() == ':') {
        std::string name = f[1].first.substr(0, f[1].first.size() - 1);
        Decl d{l.number, std::vector<std::pair<std::string, std::size_t>>(f.begin() + 2, f.end())};
        auto& table = f[0].first == "record" ? records_ : f[0].first == "compound" ? compounds_ : states_;
        if (!table.emplace(name, d).second) throw ParseError("duplicate declaration of " + name, f[1].second, l.number);
        continue;
      }
      if (!is_entry) throw ParseError("expected a directive, declaration or entry", l.indent, l.number);
      entries.push_back(&l);
    }
    if (!have_k) throw ParseError("missing 'k:' directive", 0, 1);
    if (!have_start) throw ParseError("missing 'start:' directive", 0, 1);

    for (const auto& s : sigma) a_.sigma.push_back(plain_symbol(s, SymbolClass::input));
    for (const auto& s : gamma) {
      SymbolId id = symbol(s, 0, 0);
      if (std::find(a_.gamma.begin(), a_.gamma.end(), id) == a_.gamma.end()) a_.gamma.push_back(id);
    }
    for (SymbolId s : a_.sigma)
      if (std::find(a_.gamma.begin(), a_.gamma.end(), s) == a_.gamma.end()) a_.gamma.push_back(s);
    a_.start = state(start_name, start_line, 0);
    for (const auto& [name, d] : records_) record(name, d.line, 0);
    for (const Line* l : entries) entry(*l);
    a_.universe.records.clear();
    for (auto& r : records_out_) {
      if (!r) throw ParseError("record numbering has gaps", 0, 1);
      a_.universe.records.push_back(*r);
    }
    return std::move(a_);
  }

 private:
  SymbolId plain_symbol(const std::string& name, SymbolClass cls) {
    if (auto id = a_.universe.symbols.find(name)) return *id;
    if (name == "~") throw ParseError("'~' is not a symbol", 0, 0);
    return a_.universe.symbols.intern(name, cls);
  }

  SymbolId symbol(const std::string& name, std::size_t line, std::size_t at) {
    if (auto id = a_.universe.symbols.find(name)) return *id;
    auto it = compounds_.find(name);
    if (it == compounds_.end()) {
      if (name.front() == '[' && name.size() > 1)
        throw ParseError("undeclared compound symbol " + name, at, line);
      return a_.universe.symbols.intern(name, SymbolClass::auxiliary);
    }
    const Decl& d = it->second;
    if (d.fields.size() != 4) throw ParseError("compound needs: BASE VERINF C1 C2", 0, d.line);
    CompoundPayload p;
    p.base = symbol(d.fields[0].first, d.line, d.fields[0].second);
    p.verinf = verinf(d.fields[1].first, d.line, d.fields[1].second);
    p.c1 = parse_bit(d.fields[2].first, d.line, d.fields[2].second);
    p.c2 = parse_bit(d.fields[3].first, d.line, d.fields[3].second);
    SymbolId id = a_.universe.symbols.intern_compound(p);
    if (a_.universe.symbols.name(id) != name)
      throw ParseError("compound name does not match its fields: " + name, 0, d.line);
    return id;
  }

  VerInf verinf(const std::string& s, std::size_t line, std::size_t at) {
    if (s == "B") return VerInf{};
    if (s.size() < 2 || s[0] != 'r') throw ParseError("expected a record label rN or B", at, line);
    RecordId id;
    try {
      id = static_cast<RecordId>(std::stoul(s.substr(1)));
    } catch (...) {
      throw ParseError("bad record label " + s, at, line);
    }
    if (!records_.count(s)) throw ParseError("undeclared record " + s, at, line);
    return VerInf{id};
  }

  void record(const std::string& name, std::size_t line, std::size_t at) {
    VerInf v = verinf(name, line, at);
    RecordId id = *v.record;
    if (records_out_.size() <= id) records_out_.resize(id + 1);
    if (records_out_[id]) return;
    const Decl& d = records_.at(name);
    if (d.fields.size() != 4) throw ParseError("record needs: FROM REDEX REDUCT TO", 0, d.line);
    RewriteRecord r;
    r.from = state(d.fields[0].first, d.line, d.fields[0].second);
    r.redex = parse_word_at(d.fields[1].first, a_.universe.symbols, d.line, d.fields[1].second);
    r.reduct = parse_word_at(d.fields[2].first, a_.universe.symbols, d.line, d.fields[2].second);
    if (d.fields[3].first != "!") r.to = state(d.fields[3].first, d.line, d.fields[3].second);
    if (records_out_.size() <= id) records_out_.resize(id + 1);
    records_out_[id] = std::move(r);
  }

  StateId state(const std::string& name, std::size_t line, std::size_t at) {
    if (auto id = a_.universe.states.find(name)) return *id;
    auto it = states_.find(name);
    auto& st = a_.universe.states;
    if (it == states_.end()) {
      if (name.find_first_of("(),") != std::string::npos)
        throw ParseError("undeclared structured state " + name, at, line);
      return st.intern_plain(name);
    }
    const Decl& d = it->second;
    const auto& f = d.fields;
    auto need = [&](std::size_t n) {
      if (f.size() != n) throw ParseError("wrong number of fields for state " + name, 0, d.line);
    };
    if (f.empty()) throw ParseError("empty state declaration", 0, d.line);
    StateId id;
    const std::string& kind = f[0].first;
    if (kind == "hat" || kind == "bar") {
      need(2);
      StateId b = state(f[1].first, d.line, f[1].second);
      id = kind == "hat" ? st.intern_hat(b) : st.intern_marked(b);
    } else if (kind == "cmp") {
      need(6);
      std::optional<StateId> b;
      if (f[1].first != "!") b = state(f[1].first, d.line, f[1].second);
      VerInf v = verinf(f[2].first, d.line, f[2].second);
      id = st.intern_compound(b, v, parse_bit(f[3].first, d.line, f[3].second),
                              parse_mode(f[4].first, d.line, f[4].second),
                              parse_bit(f[5].first, d.line, f[5].second));
    } else if (kind == "ctx") {
      need(5);
      StateId b = state(f[1].first, d.line, f[1].second);
      Word u = parse_word_at(f[2].first, a_.universe.symbols, d.line, f[2].second);
      HaltKind h = f[3].first == "a" ? HaltKind::accept : HaltKind::restart;
      Word x = parse_word_at(f[4].first, a_.universe.symbols, d.line, f[4].second);
      id = st.intern_context(b, u, h, x, a_.universe.symbols);
    } else if (kind == "pend") {
      need(2);
      id = st.intern_pending(*verinf(f[1].first, d.line, f[1].second).record);
    } else {
      throw ParseError("unknown state kind '" + kind + "'", f[0].second, d.line);
    }
    if (st.name(id) != name) throw ParseError("state name does not match its fields: " + name, 0, d.line);
    return id;
  }

  void entry(const Line& l) {
    const std::string& s = l.text;
    std::size_t sep = s.find(" : ");
    auto head = tokens(s.substr(0, sep));
    if (head.size() != 2) throw ParseError("entry needs STATE WINDOW", l.indent, l.number);
    StateId q = state(head[0].first, l.number, head[0].second);
    std::string win = head[1].first;
    bool is_head = win.size() > 1 && win.back() == '*';
    if (is_head) win.pop_back();
    Word w = parse_word_at(win, a_.universe.symbols, l.number, head[1].second);
    if (w.empty()) throw ParseError("empty window", head[1].second, l.number);
    auto ins = tokens(s.substr(sep + 3), sep + 3);
    if (ins.empty()) throw ParseError("missing instruction", sep + 3, l.number);
    Instruction i;
    const std::string& op = ins[0].first;
    auto arity = [&](std::size_t n) {
      if (ins.size() != n) throw ParseError("wrong operand count for " + op, ins[0].second, l.number);
    };
    if (op == "->") {
      arity(2);
      i = MoveRight{state(ins[1].first, l.number, ins[1].second)};
    } else if (op == "rewrite") {
      arity(4);
      if (ins[2].first != "->") throw ParseError("expected '->'", ins[2].second, l.number);
      i = Rewrite{parse_word_at(ins[1].first, a_.universe.symbols, l.number, ins[1].second),
                  state(ins[3].first, l.number, ins[3].second)};
    } else if (op == "rewrite!") {
      arity(2);
      i = RewriteRestart{parse_word_at(ins[1].first, a_.universe.symbols, l.number, ins[1].second)};
    } else if (op == "restart") {
      arity(1);
      i = Restart{};
    } else if (op == "accept") {
      arity(1);
      i = Accept{};
    } else if (op == "reject") {
      arity(1);
      i = Reject{};
    } else {
      throw ParseError("unknown instruction '" + op + "'", ins[0].second, l.number);
    }
    if (is_head) {
      if (w.size() != 1) throw ParseError("head entries take one symbol before '*'", head[1].second, l.number);
      a_.add_head(q, w.front(), std::move(i));
    } else {
      a_.add(q, std::move(w), std::move(i));
    }
  }

  std::vector<Line> lines_;
  DeltaAutomaton a_;
  std::map<std::string, Decl> records_, compounds_, states_;
  std::vector<std::optional<RewriteRecord>> records_out_;
};

}  // namespace

DeltaAutomaton parse_delta(std::string_view text) { return DeltaReader(text).read(); }

std::string write_delta(const DeltaAutomaton& a) {
  const auto& sy = a.symbols();
  const auto& st = a.states();
  std::ostringstream out;
  auto names = [&](const Word& w) {
    std::string s;
    for (SymbolId x : w) {
      if (!s.empty()) s += ' ';
      s += sy.name(x);
    }
    return s;
  };
  out << "k: " << a.k << "\n";
  out << "variant: " << to_string(a.variant) << "\n";
  out << "sigma: " << names(a.sigma) << "\n";
  out << "gamma: " << names(a.gamma) << "\n";
  out << "start: " << st.name(a.start) << "\n";
  out << "certificate: " << certificate_line(a.certificate) << "\n";
  out << "provenance:";
  for (const auto& p : a.certificate.provenance) out << ' ' << p;
  out << "\n";

  auto word = [&](const Word& w) { return format_word(w, sy); };
  for (RecordId i = 0; i < a.universe.records.size(); ++i) {
    const auto& r = a.universe.records[i];
    out << "record r" << i << ": " << st.name(r.from) << ' ' << word(r.redex) << ' ' << word(r.reduct) << ' '
        << (r.to ? st.name(*r.to) : std::string("!")) << "\n";
  }
  std::vector<std::string> decl;
  for (std::uint32_t i = 0; i < sy.size(); ++i) {
    const auto* p = sy.payload(SymbolId{i});
    if (!p) continue;
    decl.push_back("compound " + sy.name(SymbolId{i}) + ": " + sy.name(p->base) + ' ' +
                   (p->verinf.blank() ? std::string("B") : "r" + std::to_string(*p->verinf.record)) + ' ' +
                   bit_char(p->c1) + ' ' + bit_char(p->c2));
  }
  for (const auto& d : decl) out << d << "\n";
  decl.clear();
  for (std::uint32_t i = 0; i < st.size(); ++i) {
    const auto& s = st.info(StateId{i});
    std::string d;
    switch (s.kind) {
      case StateKind::plain: continue;
      case StateKind::marked: d = "bar " + st.name(*s.base); break;
      case StateKind::hat: d = "hat " + st.name(*s.base); break;
      case StateKind::compound:
        d = std::string("cmp ") + (s.base ? st.name(*s.base) : std::string("!")) + ' ' +
            (s.verinf.blank() ? std::string("B") : "r" + std::to_string(*s.verinf.record)) + ' ' + bit_char(s.c) +
            ' ' + mode_char(s.d) + ' ' + bit_char(s.e);
        break;
      case StateKind::accept_context:
        d = "ctx " + st.name(*s.base) + ' ' + word(s.context) + ' ' + (s.action == HaltKind::accept ? "a" : "r") +
            ' ' + word(s.expect);
        break;
      case StateKind::pending: d = "pend r" + std::to_string(s.record); break;
    }
    decl.push_back("state " + s.name + ": " + d);
  }
  std::sort(decl.begin(), decl.end());
  for (const auto& d : decl) out << d << "\n";

  std::vector<std::string> lines;
  for (const auto& [key, instrs] : a.exact())
    for (const auto& i : instrs)
      lines.push_back(st.name(key.state) + ' ' + sy.render(key.window) + " : " + render(i, sy, st));
  for (const auto& [key, instrs] : a.head())
    for (const auto& i : instrs)
      lines.push_back(st.name(key.first) + ' ' + sy.name(key.second) + "* : " + render(i, sy, st));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) out << l << "\n";
  return out.str();
}

}  // namespace rra
