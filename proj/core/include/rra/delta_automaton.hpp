#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rra/instruction.hpp"
#include "rra/states.hpp"
#include "rra/symbols.hpp"

namespace rra {

enum class Variant : std::uint8_t { R, RR, RW, RWW, RRW, RRWW };

std::string to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view s);
// Variants whose rewrite steps restart at once.
bool restarts_with_rewrite(Variant v);
bool allows_auxiliary(Variant v);
bool deletion_only(Variant v);

// One rewrite step of a (simulated) machine: from `from` on window `redex`
// write `reduct` and continue in `to`; `to` is empty for a rewrite that
// restarts immediately.
struct RewriteRecord {
  StateId from{};
  Word redex;
  Word reduct;
  std::optional<StateId> to;
  auto operator<=>(const RewriteRecord&) const = default;
};

struct NormalizationCertificate {
  bool rr_semidet = false;
  bool move_right_first = false;
  bool fixed_size = false;
  bool unit = false;
  std::vector<std::string> provenance;
  bool operator==(const NormalizationCertificate&) const = default;
};

struct Universe {
  SymbolTable symbols;
  StateTable states;
  std::vector<RewriteRecord> records;

  RecordId intern_record(const RewriteRecord& r);
};

struct DeltaKey {
  StateId state{};
  Word window;
  auto operator<=>(const DeltaKey&) const = default;
};

// A restarting automaton given by its transition relation. Entries come in
// two kinds: exact entries keyed by a full window, and head entries keyed by
// the first window symbol only. The instructions available in a
// configuration are the union of both.
class DeltaAutomaton {
 public:
  Universe universe;
  Word sigma;  // input alphabet
  Word gamma;  // working alphabet, contains sigma
  StateId start{};
  int k = 1;
  Variant variant = Variant::RRWW;
  NormalizationCertificate certificate;

  void add(StateId q, Word window, Instruction ins);
  void add_head(StateId q, SymbolId first, Instruction ins);

  const std::map<DeltaKey, std::vector<Instruction>>& exact() const { return exact_; }
  const std::map<std::pair<StateId, SymbolId>, std::vector<Instruction>>& head() const {
    return head_;
  }
  std::map<DeltaKey, std::vector<Instruction>>& exact_mut() { return exact_; }
  std::map<std::pair<StateId, SymbolId>, std::vector<Instruction>>& head_mut() { return head_; }

  // Appends every instruction available at (q, window) to `out`.
  void lookup(StateId q, std::span<const SymbolId> window, std::vector<Instruction>& out) const;

  std::size_t entry_count() const;
  bool in_gamma(SymbolId s) const;
  bool in_sigma(SymbolId s) const;

  const SymbolTable& symbols() const { return universe.symbols; }
  const StateTable& states() const { return universe.states; }
  std::string render(const Word& w) const { return universe.symbols.render(w); }

 private:
  std::map<DeltaKey, std::vector<Instruction>> exact_;
  std::map<std::pair<StateId, SymbolId>, std::vector<Instruction>> head_;
};

struct Violation {
  std::string rule;
  std::string detail;
};

// Checks the structural rules of the model. An empty result means valid.
std::vector<Violation> validate_automaton(const DeltaAutomaton& a);

}  // namespace rra
