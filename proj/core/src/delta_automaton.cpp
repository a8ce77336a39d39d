#include "rra/delta_automaton.hpp"

#include <algorithm>
#include <set>

namespace rra {

std::string to_string(Variant v) {
  switch (v) {
    case Variant::R: return "R";
    case Variant::RR: return "RR";
    case Variant::RW: return "RW";
    case Variant::RWW: return "RWW";
    case Variant::RRW: return "RRW";
    case Variant::RRWW: return "RRWW";
  }
  return "?";
}

std::optional<Variant> parse_variant(std::string_view s) {
  for (Variant v : {Variant::R, Variant::RR, Variant::RW, Variant::RWW, Variant::RRW, Variant::RRWW})
    if (to_string(v) == s) return v;
  return std::nullopt;
}

bool restarts_with_rewrite(Variant v) {
  return v == Variant::R || v == Variant::RW || v == Variant::RWW;
}
bool allows_auxiliary(Variant v) { return v == Variant::RWW || v == Variant::RRWW; }
bool deletion_only(Variant v) { return v == Variant::R || v == Variant::RR; }

RecordId Universe::intern_record(const RewriteRecord& r) {
  for (RecordId i = 0; i < records.size(); ++i)
    if (records[i] == r) return i;
  records.push_back(r);
  return static_cast<RecordId>(records.size() - 1);
}

std::string render(const Instruction& i, const SymbolTable& symbols, const StateTable& states) {
  auto word = [&](const Word& w) { return w.empty() ? std::string("~") : symbols.render(w); };
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, MoveRight>) return "-> " + states.name(x.to);
        else if constexpr (std::is_same_v<T, Rewrite>)
          return "rewrite " + word(x.reduct) + " -> " + states.name(x.to);
        else if constexpr (std::is_same_v<T, RewriteRestart>) return "rewrite! " + word(x.reduct);
        else if constexpr (std::is_same_v<T, Restart>) return "restart";
        else if constexpr (std::is_same_v<T, Accept>) return "accept";
        else return "reject";
      },
      i);
}

namespace {
void insert_unique(std::vector<Instruction>& v, Instruction ins) {
  if (std::find(v.begin(), v.end(), ins) == v.end()) v.push_back(std::move(ins));
}
}  // namespace

void DeltaAutomaton::add(StateId q, Word window, Instruction ins) {
  insert_unique(exact_[DeltaKey{q, std::move(window)}], std::move(ins));
}

void DeltaAutomaton::add_head(StateId q, SymbolId first, Instruction ins) {
  insert_unique(head_[{q, first}], std::move(ins));
}

void DeltaAutomaton::lookup(StateId q, std::span<const SymbolId> window,
                            std::vector<Instruction>& out) const {
  DeltaKey key{q, Word(window.begin(), window.end())};
  if (auto it = exact_.find(key); it != exact_.end())
    for (const auto& i : it->second) insert_unique(out, i);
  if (!window.empty())
    if (auto it = head_.find({q, window.front()}); it != head_.end())
      for (const auto& i : it->second) insert_unique(out, i);
}

std::size_t DeltaAutomaton::entry_count() const {
  std::size_t n = 0;
  for (const auto& [key, v] : exact_) n += v.size();
  for (const auto& [key, v] : head_) n += v.size();
  return n;
}

bool DeltaAutomaton::in_gamma(SymbolId s) const {
  return std::find(gamma.begin(), gamma.end(), s) != gamma.end();
}
bool DeltaAutomaton::in_sigma(SymbolId s) const {
  return std::find(sigma.begin(), sigma.end(), s) != sigma.end();
}

namespace {

bool scattered_subword(const Word& v, const Word& u) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < u.size() && j < v.size(); ++i)
    if (u[i] == v[j]) ++j;
  return j == v.size();
}

}  // namespace

std::vector<Violation> validate_automaton(const DeltaAutomaton& a) {
  std::vector<Violation> out;
  const auto& sy = a.symbols();
  const auto& st = a.states();
  auto fail = [&](std::string rule, std::string detail) {
    out.push_back({std::move(rule), std::move(detail)});
  };
  std::set<SymbolId> gamma(a.gamma.begin(), a.gamma.end());
  auto tape_symbol = [&](SymbolId s) { return s == kLeft || s == kRight || gamma.count(s) > 0; };

  if (a.k < 1) fail("lookahead", "k must be at least 1");
  if (raw(a.start) >= st.size()) fail("start state", "start state is not declared");
  for (SymbolId s : a.sigma)
    if (!gamma.count(s)) fail("alphabet", "input symbol " + sy.name(s) + " missing from gamma");
  if (gamma.count(kLeft) || gamma.count(kRight)) fail("alphabet", "sentinels may not be in gamma");
  if (!allows_auxiliary(a.variant) && gamma.size() != a.sigma.size())
    fail("auxiliary symbols", to_string(a.variant) + " variant requires gamma = sigma");

  auto check_instruction = [&](const std::string& where, const Word* window, const Instruction& ins) {
    if (restarts_with_rewrite(a.variant) &&
        (std::holds_alternative<Rewrite>(ins) || std::holds_alternative<Restart>(ins)))
      fail("restart style", where + ": " + to_string(a.variant) + " variant restarts with each rewrite");
    if (auto* m = std::get_if<MoveRight>(&ins); m && raw(m->to) >= st.size())
      fail("state", where + ": unknown target state");
    if (auto* r = std::get_if<Rewrite>(&ins); r && raw(r->to) >= st.size())
      fail("state", where + ": unknown target state");
    const Word* v = reduct_of(ins);
    if (!v) return;
    if (!window) {
      fail("head entry", where + ": rewrites need a full window key");
      return;
    }
    const Word& u = *window;
    if (v->size() >= u.size()) fail("length-reducing", where + ": reduct is not shorter than the window");
    for (std::size_t i = 0; i < v->size(); ++i) {
      SymbolId s = (*v)[i];
      if (!tape_symbol(s)) fail("alphabet", where + ": reduct symbol outside gamma");
      if (s == kLeft && i != 0) fail("sentinel", where + ": left sentinel inside reduct");
      if (s == kRight && i + 1 != v->size()) fail("sentinel", where + ": right sentinel inside reduct");
    }
    bool u_left = !u.empty() && u.front() == kLeft, u_right = !u.empty() && u.back() == kRight;
    bool v_left = !v->empty() && v->front() == kLeft, v_right = !v->empty() && v->back() == kRight;
    if (u_left != v_left) fail("sentinel", where + ": left sentinel not preserved");
    if (u_right != v_right) fail("sentinel", where + ": right sentinel not preserved");
    if (deletion_only(a.variant) && !scattered_subword(*v, u))
      fail("deletion-only variant", where + ": reduct is not a scattered subword of the window");
  };

  for (const auto& [key, instrs] : a.exact()) {
    const Word& w = key.window;
    std::string where = st.name(key.state) + " " + (w.empty() ? std::string("~") : sy.render(w));
    if (w.empty() || static_cast<int>(w.size()) > a.k)
      fail("window length", where + ": window length must be in 1..k");
    else if (static_cast<int>(w.size()) < a.k && w.back() != kRight)
      fail("window length", where + ": short window must end with the right sentinel");
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (!tape_symbol(w[i])) fail("alphabet", where + ": window symbol outside gamma");
      if (w[i] == kLeft && i != 0) fail("sentinel", where + ": left sentinel not first");
      if (w[i] == kRight && i + 1 != w.size()) fail("sentinel", where + ": right sentinel not last");
    }
    for (const auto& ins : instrs) {
      if (std::holds_alternative<MoveRight>(ins) && !w.empty() && w.front() == kRight)
        fail("move-right", where + ": cannot move right from the right sentinel");
      check_instruction(where, &w, ins);
    }
  }
  for (const auto& [key, instrs] : a.head()) {
    std::string where = st.name(key.first) + " " + sy.name(key.second) + "*";
    if (!tape_symbol(key.second)) fail("alphabet", where + ": head symbol outside gamma");
    for (const auto& ins : instrs) {
      if (std::holds_alternative<MoveRight>(ins) && key.second == kRight)
        fail("move-right", where + ": cannot move right from the right sentinel");
      check_instruction(where, nullptr, ins);
    }
  }
  return out;
}

}  // namespace rra
