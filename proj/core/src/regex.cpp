#include "rra/regex.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "rra/error.hpp"

namespace rra {

std::string read_symbol_name(std::string_view text, std::size_t& pos) {
  if (pos >= text.size()) throw ParseError("expected a symbol", pos);
  unsigned char c = static_cast<unsigned char>(text[pos]);
  if (c == '$') {
    ++pos;
    return ">";
  }
  if (text.substr(pos, 2) == "\xC2\xA2") {  // cent sign
    pos += 2;
    return "<";
  }
  if (c == '[') {
    std::size_t start = pos;
    int depth = 0;
    for (; pos < text.size(); ++pos) {
      if (text[pos] == '[') ++depth;
      if (text[pos] == ']' && --depth == 0) {
        ++pos;
        return std::string(text.substr(start, pos - start));
      }
    }
    throw ParseError("unterminated '['", start);
  }
  std::size_t len = 1;
  if (c >= 0xF0) len = 4;
  else if (c >= 0xE0) len = 3;
  else if (c >= 0xC0) len = 2;
  std::string s(text.substr(pos, len));
  pos += len;
  return s;
}

SymbolId read_symbol_token(std::string_view text, std::size_t& pos, const SymbolTable& symbols) {
  std::size_t at = pos;
  std::string name = read_symbol_name(text, pos);
  auto id = symbols.find(name);
  if (!id) throw ParseError("unknown symbol '" + name + "'", at);
  return *id;
}

namespace {

class Parser {
 public:
  Parser(std::string_view t, const SymbolTable& s) : text_(t), symbols_(s) {}

  ConstraintExpr parse() {
    ConstraintExpr e = alt();
    skip();
    if (pos_ != text_.size()) throw ParseError("unexpected '" + std::string(1, text_[pos_]) + "'", pos_);
    return e;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  ConstraintExpr alt() {
    ConstraintExpr first = cat();
    if (!peek('|')) return first;
    ConstraintExpr e;
    e.kind = ConstraintExpr::Kind::alt;
    e.parts.push_back(std::move(first));
    while (peek('|')) {
      ++pos_;
      e.parts.push_back(cat());
    }
    return e;
  }

  ConstraintExpr cat() {
    ConstraintExpr e;
    e.kind = ConstraintExpr::Kind::concat;
    while (true) {
      skip();
      if (pos_ >= text_.size() || text_[pos_] == '|' || text_[pos_] == ')') break;
      e.parts.push_back(rep());
    }
    if (e.parts.empty()) return ConstraintExpr{};
    if (e.parts.size() == 1) return std::move(e.parts.front());
    return e;
  }

  ConstraintExpr rep() {
    ConstraintExpr e = atom();
    while (true) {
      if (peek('*')) {
        ++pos_;
        ConstraintExpr s;
        s.kind = ConstraintExpr::Kind::star;
        s.parts.push_back(std::move(e));
        e = std::move(s);
      } else if (peek('+')) {
        ++pos_;
        ConstraintExpr s;
        s.kind = ConstraintExpr::Kind::star;
        s.parts.push_back(e);
        ConstraintExpr c;
        c.kind = ConstraintExpr::Kind::concat;
        c.parts.push_back(std::move(e));
        c.parts.push_back(std::move(s));
        e = std::move(c);
      } else {
        return e;
      }
    }
  }

  ConstraintExpr atom() {
    skip();
    if (pos_ >= text_.size()) throw ParseError("unexpected end of expression", pos_);
    char c = text_[pos_];
    if (c == '(') {
      std::size_t open = pos_++;
      ConstraintExpr e = alt();
      if (!peek(')')) throw ParseError("missing ')' for '(' at " + std::to_string(open), pos_);
      ++pos_;
      return e;
    }
    if (c == '~') {
      ++pos_;
      return ConstraintExpr{};
    }
    if (c == '*' || c == '+' || c == '|' || c == ')')
      throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
    ConstraintExpr e;
    e.kind = ConstraintExpr::Kind::symbol;
    e.symbol = read_symbol_token(text_, pos_, symbols_);
    return e;
  }

  std::string_view text_;
  const SymbolTable& symbols_;
  std::size_t pos_ = 0;
};

int precedence(const ConstraintExpr& e) {
  switch (e.kind) {
    case ConstraintExpr::Kind::alt: return 0;
    case ConstraintExpr::Kind::concat: return 1;
    default: return 2;
  }
}

void print_to(const ConstraintExpr& e, const SymbolTable& s, std::string& out) {
  using K = ConstraintExpr::Kind;
  auto child = [&](const ConstraintExpr& c, int need) {
    bool paren = precedence(c) < need;
    if (paren) out += '(';
    print_to(c, s, out);
    if (paren) out += ')';
  };
  switch (e.kind) {
    case K::epsilon: out += '~'; break;
    case K::symbol: out += s.name(e.symbol); break;
    case K::concat:
      for (const auto& p : e.parts) child(p, 2);
      break;
    case K::alt:
      for (std::size_t i = 0; i < e.parts.size(); ++i) {
        if (i) out += '|';
        child(e.parts[i], 1);
      }
      break;
    case K::star:
      child(e.parts.front(), 3);
      out += '*';
      break;
  }
}

// Thompson automaton with epsilon moves.
struct Nfa {
  struct Edge {
    int to;
    int column;  // -1 for epsilon
  };
  std::vector<std::vector<Edge>> edges;
  int add() {
    edges.emplace_back();
    return static_cast<int>(edges.size() - 1);
  }
};

std::pair<int, int> thompson(const ConstraintExpr& e, Nfa& n, const std::vector<int>& column) {
  using K = ConstraintExpr::Kind;
  int s = n.add(), f = n.add();
  switch (e.kind) {
    case K::epsilon: n.edges[s].push_back({f, -1}); break;
    case K::symbol: {
      std::uint32_t r = raw(e.symbol);
      int col = r < column.size() ? column[r] : -1;
      if (col >= 0) n.edges[s].push_back({f, col});
      break;
    }
    case K::concat: {
      int cur = s;
      for (const auto& p : e.parts) {
        auto [ps, pf] = thompson(p, n, column);
        n.edges[cur].push_back({ps, -1});
        cur = pf;
      }
      n.edges[cur].push_back({f, -1});
      break;
    }
    case K::alt:
      for (const auto& p : e.parts) {
        auto [ps, pf] = thompson(p, n, column);
        n.edges[s].push_back({ps, -1});
        n.edges[pf].push_back({f, -1});
      }
      break;
    case K::star: {
      auto [ps, pf] = thompson(e.parts.front(), n, column);
      n.edges[s].push_back({ps, -1});
      n.edges[s].push_back({f, -1});
      n.edges[pf].push_back({ps, -1});
      n.edges[pf].push_back({f, -1});
      break;
    }
  }
  return {s, f};
}

std::vector<int> closure(const Nfa& n, std::vector<int> set) {
  std::vector<bool> seen(n.edges.size());
  std::vector<int> stack = set;
  for (int x : set) seen[x] = true;
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (const auto& e : n.edges[x])
      if (e.column < 0 && !seen[e.to]) {
        seen[e.to] = true;
        set.push_back(e.to);
        stack.push_back(e.to);
      }
  }
  std::sort(set.begin(), set.end());
  return set;
}

}  // namespace

ConstraintExpr parse_constraint(std::string_view text, const SymbolTable& symbols) {
  return Parser(text, symbols).parse();
}

std::string print_constraint(const ConstraintExpr& e, const SymbolTable& symbols) {
  std::string out;
  print_to(e, symbols, out);
  return out;
}

Dfa compile_dfa(const ConstraintExpr& e, const Word& alphabet) {
  Dfa d;
  d.alphabet_ = alphabet;
  std::uint32_t maxraw = 0;
  for (SymbolId a : alphabet) maxraw = std::max(maxraw, raw(a));
  d.column_.assign(maxraw + 1, -1);
  for (std::size_t i = 0; i < alphabet.size(); ++i) d.column_[raw(alphabet[i])] = static_cast<int>(i);
  const std::size_t width = alphabet.size();
  d.width_ = width;

  Nfa n;
  auto [ns, nf] = thompson(e, n, d.column_);

  // Subset construction; subset 0 is the empty (dead) set.
  std::map<std::vector<int>, int> index;
  std::vector<std::vector<int>> subsets;
  auto intern = [&](std::vector<int> s) {
    auto [it, fresh] = index.emplace(s, static_cast<int>(subsets.size()));
    if (fresh) subsets.push_back(std::move(s));
    return it->second;
  };
  intern({});
  int start = intern(closure(n, {ns}));
  std::vector<int> delta;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    for (std::size_t col = 0; col < width; ++col) {
      std::vector<int> next;
      for (int x : subsets[i])
        for (const auto& ed : n.edges[x])
          if (ed.column == static_cast<int>(col)) next.push_back(ed.to);
      std::sort(next.begin(), next.end());
      next.erase(std::unique(next.begin(), next.end()), next.end());
      int t = intern(next.empty() ? std::vector<int>{} : closure(n, next));
      delta.resize((i + 1) * width);
      delta[i * width + col] = t;
    }
  }
  const int count = static_cast<int>(subsets.size());
  delta.resize(static_cast<std::size_t>(count) * width);
  std::vector<bool> acc(count);
  for (int i = 0; i < count; ++i)
    acc[i] = std::binary_search(subsets[i].begin(), subsets[i].end(), nf);

  // Moore partition refinement.
  std::vector<int> cls(count);
  for (int i = 0; i < count; ++i) cls[i] = acc[i] ? 1 : 0;
  int classes = 0;
  while (true) {
    std::map<std::vector<int>, int> sig;
    std::vector<int> next(count);
    for (int i = 0; i < count; ++i) {
      std::vector<int> key{cls[i]};
      for (std::size_t col = 0; col < width; ++col) key.push_back(cls[delta[i * width + col]]);
      auto [it, fresh] = sig.emplace(std::move(key), static_cast<int>(sig.size()));
      next[i] = it->second;
    }
    int now = static_cast<int>(sig.size());
    cls = std::move(next);
    if (now == classes) break;
    classes = now;
  }

  d.delta_.assign(static_cast<std::size_t>(classes) * width, 0);
  d.accepting_.assign(classes, false);
  for (int i = 0; i < count; ++i) {
    d.accepting_[cls[i]] = acc[i];
    for (std::size_t col = 0; col < width; ++col)
      d.delta_[static_cast<std::size_t>(cls[i]) * width + col] = cls[delta[i * width + col]];
  }
  d.start_ = cls[start];
  d.dead_ = cls[0];

  // Liveness by backward reachability from accepting states.
  d.live_.assign(classes, false);
  bool changed = true;
  for (int i = 0; i < classes; ++i) d.live_[i] = d.accepting_[i];
  while (changed) {
    changed = false;
    for (int i = 0; i < classes; ++i) {
      if (d.live_[i]) continue;
      for (std::size_t col = 0; col < width; ++col)
        if (d.live_[d.delta_[i * width + col]]) {
          d.live_[i] = changed = true;
          break;
        }
    }
  }
  return d;
}

bool dfa_accepts(const Dfa& d, const Word& w) { return d.accepting(d.run(d.start(), w)); }

}  // namespace rra
