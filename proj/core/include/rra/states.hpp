#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rra/symbols.hpp"

namespace rra {

enum class StateId : std::uint32_t {};
inline constexpr std::uint32_t raw(StateId s) noexcept { return static_cast<std::uint32_t>(s); }

enum class StateKind : std::uint8_t { plain, compound, accept_context, marked, hat, pending };

enum class HaltKind : std::uint8_t { accept, restart };

// Flat description of a state. Which fields are meaningful depends on kind:
//  compound        base (empty = restart after the check), verinf, c, d, e
//  accept_context  base, context, action, expect
//  marked, hat     base
//  pending         record
struct StateInfo {
  std::string name;
  StateKind kind = StateKind::plain;
  std::optional<StateId> base;
  VerInf verinf;
  Bit c = Bit::neutral;
  Mode d = Mode::neutral;
  Bit e = Bit::neutral;
  Word context;
  Word expect;
  HaltKind action = HaltKind::accept;
  RecordId record = 0;
};

class StateTable {
 public:
  StateId intern_plain(const std::string& name);
  StateId intern_marked(StateId base);
  StateId intern_hat(StateId base);
  StateId intern_compound(std::optional<StateId> base, VerInf v, Bit c, Mode d, Bit e);
  StateId intern_context(StateId base, const Word& context, HaltKind action, const Word& expect,
                         const SymbolTable& symbols);
  StateId intern_pending(RecordId r);

  std::optional<StateId> find(std::string_view name) const;
  const StateInfo& info(StateId s) const { return items_[raw(s)]; }
  const std::string& name(StateId s) const { return items_[raw(s)].name; }
  StateKind kind(StateId s) const { return items_[raw(s)].kind; }
  std::size_t size() const noexcept { return items_.size(); }

 private:
  StateId put(StateInfo info);
  std::vector<StateInfo> items_;
  std::unordered_map<std::string, StateId> by_name_;
};

}  // namespace rra
