#include "rra/symbols.hpp"

#include "rra/error.hpp"

namespace rra {

char bit_char(Bit b) {
  switch (b) {
    case Bit::zero: return '0';
    case Bit::one: return '1';
    default: return 'n';
  }
}

char mode_char(Mode m) {
  switch (m) {
    case Mode::verify: return 'v';
    case Mode::ignore: return 'i';
    default: return 'n';
  }
}

SymbolTable::SymbolTable() {
  intern("<", SymbolClass::left_sentinel);
  intern(">", SymbolClass::right_sentinel);
}

SymbolId SymbolTable::intern(const std::string& name, SymbolClass cls) {
  if (auto it = by_name_.find(name); it != by_name_.end()) {
    if (items_[raw(it->second)].cls != cls)
      throw ValidationError("symbol '" + name + "' redeclared with a different class");
    return it->second;
  }
  SymbolId id{static_cast<std::uint32_t>(items_.size())};
  items_.push_back(SymbolInfo{name, cls, std::nullopt});
  by_name_.emplace(name, id);
  return id;
}

SymbolId SymbolTable::intern_compound(const CompoundPayload& p) {
  std::string n = "[" + name(p.base) + ",";
  n += p.verinf.blank() ? std::string("B") : "r" + std::to_string(*p.verinf.record);
  n += ',';
  n += bit_char(p.c1);
  n += ',';
  n += bit_char(p.c2);
  n += ']';
  if (auto it = by_name_.find(n); it != by_name_.end()) return it->second;
  SymbolId id{static_cast<std::uint32_t>(items_.size())};
  items_.push_back(SymbolInfo{n, SymbolClass::compound, p});
  by_name_.emplace(std::move(n), id);
  return id;
}

std::optional<SymbolId> SymbolTable::find(std::string_view name) const {
  auto it = by_name_.find(std::string(name));
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string SymbolTable::render(const Word& w) const {
  std::string out;
  for (SymbolId s : w) out += name(s);
  return out;
}

}  // namespace rra
