#include "rra/states.hpp"

namespace rra {

namespace {
std::string record_label(const VerInf& v) {
  return v.blank() ? std::string("B") : "r" + std::to_string(*v.record);
}
}  // namespace

StateId StateTable::put(StateInfo info) {
  if (auto it = by_name_.find(info.name); it != by_name_.end()) return it->second;
  StateId id{static_cast<std::uint32_t>(items_.size())};
  by_name_.emplace(info.name, id);
  items_.push_back(std::move(info));
  return id;
}

StateId StateTable::intern_plain(const std::string& name) {
  StateInfo i;
  i.name = name;
  return put(std::move(i));
}

StateId StateTable::intern_marked(StateId base) {
  StateInfo i;
  i.name = "bar(" + name(base) + ")";
  i.kind = StateKind::marked;
  i.base = base;
  return put(std::move(i));
}

StateId StateTable::intern_hat(StateId base) {
  StateInfo i;
  i.name = "hat(" + name(base) + ")";
  i.kind = StateKind::hat;
  i.base = base;
  return put(std::move(i));
}

StateId StateTable::intern_compound(std::optional<StateId> base, VerInf v, Bit c, Mode d, Bit e) {
  StateInfo i;
  i.name = "cmp(" + (base ? name(*base) : std::string("!")) + "," + record_label(v) + "," +
           bit_char(c) + "," + mode_char(d) + "," + bit_char(e) + ")";
  i.kind = StateKind::compound;
  i.base = base;
  i.verinf = v;
  i.c = c;
  i.d = d;
  i.e = e;
  return put(std::move(i));
}

StateId StateTable::intern_context(StateId base, const Word& context, HaltKind action,
                                   const Word& expect, const SymbolTable& symbols) {
  StateInfo i;
  i.name = "ctx(" + name(base) + "," + symbols.render(context) + "," +
           (action == HaltKind::accept ? "a" : "r") + "," + symbols.render(expect) + ")";
  i.kind = StateKind::accept_context;
  i.base = base;
  i.context = context;
  i.action = action;
  i.expect = expect;
  return put(std::move(i));
}

StateId StateTable::intern_pending(RecordId r) {
  StateInfo i;
  i.name = "pend(r" + std::to_string(r) + ")";
  i.kind = StateKind::pending;
  i.record = r;
  return put(std::move(i));
}

std::optional<StateId> StateTable::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

}  // namespace rra
