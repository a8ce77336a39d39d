#pragma once

#include <string>
#include <string_view>

#include "rra/delta_automaton.hpp"
#include "rra/meta.hpp"

namespace rra {

enum class FileKind { meta, delta };

// Meta profile:
//   sigma: a b c        gamma: a b c C        style: rr | rww
//   (<a*) ab -> c (b*>)          cycle instruction (rww: no right part)
//   (<~>) ACCEPT                 tail instruction
// Delta profile:
//   k: 3   variant: RRWW   sigma: ..   gamma: ..   start: q0
//   certificate: <flags>   provenance: <steps>
//   record r0: FROM REDEX REDUCT TO        (TO is ! for rewrite-restart)
//   compound [a,r0,1,n]: a r0 1 n
//   state NAME: hat Q | bar Q | cmp Q|! r0|B c d e | ctx Q U a|r X | pend r0
//   STATE WINDOW : INSTRUCTION   (WINDOW ending in * is a head entry)
// `<` and `>` are the sentinels, `~` the empty word, `#` starts a comment.
FileKind detect_kind(std::string_view text);
MetaAutomaton parse_meta(std::string_view text);
DeltaAutomaton parse_delta(std::string_view text);
std::string write_delta(const DeltaAutomaton& a);

Word parse_word(std::string_view text, const SymbolTable& symbols);
std::string format_word(const Word& w, const SymbolTable& symbols);  // "~" for empty

std::string read_text_file(const std::string& path);

}  // namespace rra
