#include <algorithm>
#include <set>

#include "rra/error.hpp"
#include "rra/transforms.hpp"

namespace rra {

std::vector<StateId> move_targets(const DeltaAutomaton& a, StateId q, SymbolId first) {
  std::set<StateId> out;
  const auto& ex = a.exact();
  for (auto it = ex.lower_bound(DeltaKey{q, Word{first}});
       it != ex.end() && it->first.state == q && !it->first.window.empty() && it->first.window.front() == first;
       ++it)
    for (const auto& ins : it->second)
      if (auto* m = std::get_if<MoveRight>(&ins)) out.insert(m->to);
  if (auto it = a.head().find({q, first}); it != a.head().end())
    for (const auto& ins : it->second)
      if (auto* m = std::get_if<MoveRight>(&ins)) out.insert(m->to);
  return {out.begin(), out.end()};
}

NormalizationCertificate audit_normal_form(const DeltaAutomaton& a) {
  NormalizationCertificate c;
  c.rr_semidet = c.move_right_first = c.fixed_size = c.unit = true;
  for (const auto& [key, instrs] : a.exact()) {
    const Word& w = key.window;
    const std::vector<Instruction>* head = nullptr;
    if (auto it = a.head().find({key.state, w.front()}); it != a.head().end()) head = &it->second;
    for (const auto& ins : instrs) {
      if ((std::holds_alternative<Accept>(ins) || std::holds_alternative<Restart>(ins)) && w.back() != kRight)
        c.rr_semidet = false;
      if (std::holds_alternative<MoveRight>(ins) &&
          (!head || std::find(head->begin(), head->end(), ins) == head->end()))
        c.move_right_first = false;
      if (const Word* v = reduct_of(ins)) {
        if (static_cast<int>(w.size()) != a.k) c.fixed_size = false;
        if (v->size() + 1 != w.size()) c.unit = false;
      }
    }
  }
  for (const auto& [key, instrs] : a.head())
    for (const auto& ins : instrs)
      if ((std::holds_alternative<Accept>(ins) || std::holds_alternative<Restart>(ins)) && key.second != kRight)
        c.rr_semidet = false;
  return c;
}

std::vector<RewriteRecord> build_pi(const DeltaAutomaton& a) {
  std::vector<RewriteRecord> out;
  for (const auto& [key, instrs] : a.exact())
    for (const auto& ins : instrs) {
      if (auto* r = std::get_if<Rewrite>(&ins)) out.push_back({key.state, key.window, r->reduct, r->to});
      if (auto* r = std::get_if<RewriteRestart>(&ins))
        out.push_back({key.state, key.window, r->reduct, std::nullopt});
    }
  return out;
}

DeltaAutomaton apply_transform(const DeltaAutomaton& a, const std::string& name) {
  if (name == "fixsize") return to_fixed_rewrite_size(a);
  if (name == "unit") return to_unit_reduction(a);
  if (name == "reduce") return reduce_lookahead(a);
  throw PreconditionError("pipeline", "unknown transform '" + name + "'");
}

}  // namespace rra
