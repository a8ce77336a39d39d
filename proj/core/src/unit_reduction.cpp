#include <algorithm>
#include <functional>

#include "rra/error.hpp"
#include "rra/transforms.hpp"

namespace rra {

namespace {

SymbolId fresh_blank(SymbolTable& t) {
  for (const char* name : {"_", "%", "&", "@"})
    if (!t.find(name)) return t.intern(name, SymbolClass::auxiliary);
  throw PreconditionError("blank", "no single-character name left for the blank symbol");
}

// Every word of length n over `alpha`.
void words(const Word& alpha, std::size_t n, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    if (w.size() == n) {
      f(w);
      return;
    }
    for (SymbolId s : alpha) {
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
}

Word pad(const Word& window, const Word& v, int k, SymbolId blank) {
  const std::size_t m = static_cast<std::size_t>(k - 1) - v.size();
  Word out;
  std::size_t from = 0;
  if (window.front() == kLeft) {
    out.push_back(kLeft);
    from = 1;
  }
  out.insert(out.end(), m, blank);
  out.insert(out.end(), v.begin() + static_cast<long>(from), v.end());
  return out;
}

Instruction padded(const Instruction& ins, const Word& window, int k, SymbolId blank, StateTable& st) {
  if (auto* r = std::get_if<Rewrite>(&ins)) return Rewrite{pad(window, r->reduct, k, blank), st.intern_hat(r->to)};
  return RewriteRestart{pad(window, std::get<RewriteRestart>(ins).reduct, k, blank)};
}

Word without_first(const Word& w, SymbolId s) {
  Word out = w;
  out.erase(std::find(out.begin(), out.end(), s));
  return out;
}

}  // namespace

DeltaAutomaton to_unit_reduction(const DeltaAutomaton& a) {
  NormalizationCertificate c = audit_normal_form(a);
  if (!c.rr_semidet) throw PreconditionError("rr-semidet", "unit reduction needs the semi-deterministic normal form");
  if (!c.move_right_first)
    throw PreconditionError("move-right-first-symbol", "unit reduction needs moves keyed by the first symbol");
  if (!c.fixed_size) throw PreconditionError("fixed-rewrite-size", "unit reduction needs fixed rewrite size");
  if (c.unit) {
    // no blanks would ever be written
    DeltaAutomaton b = a;
    b.certificate = c;
    b.certificate.provenance = a.certificate.provenance;
    b.certificate.provenance.push_back("unit");
    return b;
  }

  DeltaAutomaton b;
  b.universe = a.universe;
  b.sigma = a.sigma;
  b.gamma = a.gamma;
  b.start = a.start;
  b.k = a.k;
  b.variant = restarts_with_rewrite(a.variant) ? Variant::RWW : Variant::RRWW;
  const SymbolId blank = fresh_blank(b.universe.symbols);
  b.gamma.push_back(blank);
  StateTable& st = b.universe.states;
  const std::size_t nstates = a.states().size();

  for (const auto& [key, instrs] : a.exact()) {
    const StateId q = key.state;
    for (const auto& ins : instrs) {
      if (is_rewrite(ins)) {
        b.add(q, key.window, padded(ins, key.window, a.k, blank, st));
      } else if (std::holds_alternative<Restart>(ins)) {
        b.add(st.intern_hat(q), key.window, ins);
      } else if (!std::holds_alternative<MoveRight>(ins)) {
        b.add(q, key.window, ins);
        b.add(st.intern_hat(q), key.window, ins);
      }
    }
  }
  for (const auto& [key, instrs] : a.head()) {
    const auto [q, x] = key;
    for (const auto& ins : instrs) {
      if (auto* m = std::get_if<MoveRight>(&ins)) {
        b.add_head(q, x, ins);
        b.add_head(st.intern_hat(q), x, MoveRight{st.intern_hat(m->to)});
      } else if (std::holds_alternative<Restart>(ins)) {
        b.add_head(st.intern_hat(q), x, ins);
      } else {
        b.add_head(q, x, ins);
        b.add_head(st.intern_hat(q), x, ins);
      }
    }
  }

  // Left computations guessing that blanks are on the tape.
  for (StateId p : move_targets(a, a.start, kLeft)) b.add_head(a.start, kLeft, MoveRight{st.intern_marked(p)});
  for (std::uint32_t i = 0; i < nstates; ++i) {
    const StateId q{i};
    for (SymbolId x : a.gamma)
      for (StateId p : move_targets(a, q, x)) b.add_head(st.intern_marked(q), x, MoveRight{st.intern_marked(p)});
  }

  Word ext = a.gamma;
  ext.push_back(blank);
  const std::size_t body = static_cast<std::size_t>(a.k - 1);
  std::vector<StateId> marked;
  for (std::uint32_t i = 0; i < nstates; ++i) marked.push_back(st.intern_marked(StateId{i}));
  // B x: delete the blank and restart.
  words(ext, body, [&](const Word& x) {
    Word w{blank};
    w.insert(w.end(), x.begin(), x.end());
    for (StateId q : marked) b.add(q, w, RewriteRestart{x});
  });
  if (a.k >= 2)
    words(ext, body - 1, [&](const Word& x) {
      Word w{blank};
      w.insert(w.end(), x.begin(), x.end());
      w.push_back(kRight);
      for (StateId q : marked) b.add(q, w, RewriteRestart{Word(w.begin() + 1, w.end())});
    });
  // Blanks close to the right sentinel, where no window of length k starts
  // with them: the window ends at the sentinel.
  if (a.k >= 2)
    words(ext, body - 1, [&](const Word& x) {
      Word w{x};
      w.push_back(kRight);
      for (SymbolId first : a.gamma) {
        Word full{first};
        full.insert(full.end(), w.begin(), w.end());
        if (std::find(full.begin(), full.end(), blank) == full.end()) continue;
        for (StateId q : marked) b.add(q, full, RewriteRestart{without_first(full, blank)});
      }
    });
  // Tapes shorter than a window. Longer tapes reach their blanks through the
  // marked states; deleting them from the left sentinel would break
  // monotonicity.
  for (std::size_t len = 0; len + 2 <= static_cast<std::size_t>(a.k); ++len)
    words(ext, len, [&](const Word& x) {
      Word w{kLeft};
      w.insert(w.end(), x.begin(), x.end());
      w.push_back(kRight);
      if (std::find(w.begin(), w.end(), blank) != w.end()) b.add(a.start, w, RewriteRestart{without_first(w, blank)});
    });

  // A right computation must not meet a blank.
  for (std::uint32_t i = 0; i < nstates; ++i) b.add_head(st.intern_hat(StateId{i}), blank, Reject{});

  b.certificate = audit_normal_form(b);
  b.certificate.provenance = a.certificate.provenance;
  b.certificate.provenance.push_back("unit");
  return b;
}

}  // namespace rra
