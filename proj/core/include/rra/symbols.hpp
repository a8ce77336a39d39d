#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace rra {

enum class SymbolId : std::uint32_t {};
inline constexpr SymbolId kLeft{0};   // the left sentinel
inline constexpr SymbolId kRight{1};  // the right sentinel

inline constexpr std::uint32_t raw(SymbolId s) noexcept { return static_cast<std::uint32_t>(s); }

using Word = std::vector<SymbolId>;

enum class SymbolClass : std::uint8_t { input, auxiliary, left_sentinel, right_sentinel, compound };

// Three-valued flag used in compound symbols and states.
enum class Bit : std::uint8_t { zero, one, neutral };
enum class Mode : std::uint8_t { verify, ignore, neutral };

using RecordId = std::uint32_t;

// Verification information carried by a compound symbol: either a rewrite
// record of the simulated machine or the blank marker.
struct VerInf {
  std::optional<RecordId> record;
  bool blank() const noexcept { return !record.has_value(); }
  auto operator<=>(const VerInf&) const = default;
};

struct CompoundPayload {
  SymbolId base{};
  VerInf verinf;
  Bit c1 = Bit::neutral;
  Bit c2 = Bit::neutral;
  auto operator<=>(const CompoundPayload&) const = default;
};

struct SymbolInfo {
  std::string name;
  SymbolClass cls = SymbolClass::input;
  std::optional<CompoundPayload> payload;
};

char bit_char(Bit b);
char mode_char(Mode m);

// Interned symbols of one automaton universe. Ids 0 and 1 are always the
// sentinels; all other ids are assigned in insertion order.
class SymbolTable {
 public:
  SymbolTable();

  // Returns the existing id when `name` is already present.
  SymbolId intern(const std::string& name, SymbolClass cls);
  SymbolId intern_compound(const CompoundPayload& p);

  std::optional<SymbolId> find(std::string_view name) const;
  const SymbolInfo& info(SymbolId s) const { return items_[raw(s)]; }
  const std::string& name(SymbolId s) const { return items_[raw(s)].name; }
  SymbolClass cls(SymbolId s) const { return items_[raw(s)].cls; }
  bool is_compound(SymbolId s) const { return items_[raw(s)].cls == SymbolClass::compound; }
  const CompoundPayload* payload(SymbolId s) const {
    return items_[raw(s)].payload ? &*items_[raw(s)].payload : nullptr;
  }
  std::size_t size() const noexcept { return items_.size(); }

  std::string render(const Word& w) const;  // concatenation of names

 private:
  std::vector<SymbolInfo> items_;
  std::unordered_map<std::string, SymbolId> by_name_;
};

struct WordHash {
  std::size_t operator()(const Word& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (SymbolId s : w) {
      h ^= raw(s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

}  // namespace rra
