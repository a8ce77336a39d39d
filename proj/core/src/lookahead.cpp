#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "rra/compound.hpp"
#include "rra/error.hpp"
#include "rra/transforms.hpp"

namespace rra {

SymbolId mapping_h(const Universe& u, int k, SymbolId left, SymbolId z) {
  if (z == kLeft || z == kRight) return z;
  if (!is_delta_record(u, left)) return comp1(u, z);
  if (is_delta01(u, z) && comp4(u, z) == comp3(u, left)) return comp1(u, z);
  return reduct_last(u, *comp2(u, left), k);
}

Word mapping_h(const Universe& u, int k, std::optional<SymbolId> left, const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::optional<SymbolId> l = i ? std::optional<SymbolId>(w[i - 1]) : left;
    out.push_back(l ? mapping_h(u, k, *l, w[i]) : comp1(u, w[i]));
  }
  return out;
}

Word mapping_g(const Universe& u, int k, StateId q, const Word& x) {
  Word out;
  if (x.empty()) return out;
  const SymbolId z = x.front();
  if (!is_q21(u, q) || z == kLeft || z == kRight) {
    out.push_back(comp1(u, z));
  } else {
    const StateInfo& s = u.states.info(q);
    if (is_delta01(u, z) && comp4(u, z) == s.c) out.push_back(comp1(u, z));
    else out.push_back(reduct_last(u, *s.verinf.record, k));
  }
  for (std::size_t i = 1; i < x.size(); ++i) out.push_back(mapping_h(u, k, x[i - 1], x[i]));
  return out;
}

namespace {

struct Halts {
  std::map<Word, std::vector<Instruction>> short_windows;  // length <= k, ending with the right sentinel
  std::map<Word, std::set<HaltKind>> full;                  // first k symbols of a full window ending with it
  std::vector<RecordId> rewrites;
  std::set<Word> prefixes;
};

// Guard against outputs that cannot be simulated anyway.
constexpr std::size_t kMaxEntries = 2000000;  // exact windows

class Reducer {
 public:
  explicit Reducer(const DeltaAutomaton& m1) : m1_(m1), k_(m1.k - 1) {}

  DeltaAutomaton run() {
    m2_.universe = m1_.universe;
    m2_.sigma = m1_.sigma;
    m2_.gamma = m1_.gamma;
    m2_.k = k_;
    m2_.variant = Variant::RRWW;
    m2_.start = m1_.start;
    collect();

    discover(m2_.start);
    for (;;) {
      const std::size_t before = m2_.entry_count() + alphabet_.size() + todo_.size();
      for (std::size_t i = 0; i < todo_.size(); ++i) {
        process(todo_[i]);
        if (m2_.exact().size() > kMaxEntries)
          throw std::length_error("lookahead reduction exceeds " + std::to_string(kMaxEntries) + " entries");
      }
      if (m2_.entry_count() + alphabet_.size() + todo_.size() == before) break;
    }
    return std::move(m2_);
  }

 private:
  Universe& u() { return m2_.universe; }

  // Simulated symbols that can ever be on the tape, the rewrites over them
  // and the halting windows of every state.
  void collect() {
    std::set<SymbolId> usable(m1_.sigma.begin(), m1_.sigma.end());
    const std::vector<RewriteRecord> pi = build_pi(m1_);
    const auto over = [&](const Word& w) {
      return std::all_of(w.begin(), w.end(),
                         [&](SymbolId s) { return s == kLeft || s == kRight || usable.count(s); });
    };
    for (bool grew = true; grew;) {
      grew = false;
      for (const auto& r : pi)
        if (over(r.redex))
          for (SymbolId s : r.reduct)
            if (s != kLeft && s != kRight) grew |= usable.insert(s).second;
    }
    for (SymbolId s : m1_.gamma)
      if (usable.count(s)) alphabet_.push_back(s);
    plain_ = alphabet_;

    for (const auto& r : pi) {
      if (!over(r.redex)) continue;
      const RecordId id = u().intern_record(r);
      Halts& h = halts_[r.from];
      if (k_ == 2 && r.redex.front() == kLeft) {
        left_rewrites_[r.from].push_back(id);
        h.prefixes.insert(Word{kLeft});
      } else {
        h.rewrites.push_back(id);
        add_prefixes(h, Word(r.redex.begin(), r.redex.begin() + k_));
      }
    }
    for (const auto& [key, instrs] : m1_.exact()) {
      if (key.window.back() != kRight || !over(key.window)) continue;
      Halts& h = halts_[key.state];
      for (const auto& ins : instrs) {
        const bool acc = std::holds_alternative<Accept>(ins);
        if (!acc && !std::holds_alternative<Restart>(ins)) continue;
        if (static_cast<int>(key.window.size()) <= k_) {
          h.short_windows[key.window].push_back(ins);
          add_prefixes(h, key.window);
        } else {
          Word first(key.window.begin(), key.window.begin() + k_);
          h.full[first].insert(acc ? HaltKind::accept : HaltKind::restart);
          add_prefixes(h, first);
        }
      }
    }
    for (const auto& [key, instrs] : m1_.head()) {
      if (key.second != kRight) continue;
      for (const auto& ins : instrs)
        if (std::holds_alternative<Accept>(ins) || std::holds_alternative<Restart>(ins)) {
          halts_[key.first].short_windows[Word{kRight}].push_back(ins);
          halts_[key.first].prefixes.insert(Word{kRight});
        }
    }
  }

  static void add_prefixes(Halts& h, const Word& w) {
    for (std::size_t n = 1; n <= w.size(); ++n) h.prefixes.insert(Word(w.begin(), w.begin() + static_cast<long>(n)));
  }

  void discover(StateId s) {
    if (seen_.insert(s).second) todo_.push_back(s);
  }

  SymbolId compound(SymbolId base, std::optional<RecordId> r, Bit c1, Bit c2) {
    const std::size_t before = u().symbols.size();
    SymbolId z = u().symbols.intern_compound(CompoundPayload{base, VerInf{r}, c1, c2});
    if (u().symbols.size() != before) {
      alphabet_.push_back(z);
      m2_.gamma.push_back(z);
    }
    return z;
  }

  const std::vector<StateId>& targets(StateId q, SymbolId a) {
    auto [it, fresh] = moves_.try_emplace({q, a});
    if (fresh) it->second = move_targets(m1_, q, a);
    return it->second;
  }

  // State entered after moving right over z in simulated state t.
  StateId pickup(StateId t, SymbolId z) {
    if (!is_delta_record(u(), z)) return t;
    return u().states.intern_compound(t, VerInf{comp2(u(), z)}, comp3(u(), z), Mode::neutral, Bit::neutral);
  }

  // Verification of the guessed square right after a rewrite.
  bool check(StateId p, SymbolId z) {
    if (!is_checking(u(), p)) return true;
    const StateInfo& s = u().states.info(p);
    const SymbolId guess = redex_guess(u(), *s.verinf.record, k_);
    const bool current = is_delta01(u(), z) && comp4(u(), z) == s.e;
    if (is_delta01(u(), z) && comp4(u(), z) == s.c) return false;
    if (z == kRight) return guess == kRight;
    if (s.d == Mode::ignore) return !current;
    if (s.e == Bit::neutral) return comp1(u(), z) == guess;
    return current && comp1(u(), z) == guess;
  }

  void process(StateId p) {
    const StateInfo info = u().states.info(p);
    if (info.kind == StateKind::accept_context) {
      Word w = info.expect;
      w.push_back(kRight);
      add(p, w, info.action == HaltKind::accept ? Instruction{Accept{}} : Instruction{Restart{}});
      return;
    }
    if (info.kind == StateKind::pending) {
      process_pending(p, info.record);
      return;
    }
    const std::optional<StateId> q = is_q21(u(), p) ? info.base : std::optional<StateId>(p);
    const bool can_rewrite = !is_checking(u(), p);
    std::vector<SymbolId> firsts = alphabet_snapshot();
    firsts.push_back(kRight);
    if (p == m2_.start) firsts.push_back(kLeft);
    for (SymbolId z : firsts) {
      if (!check(p, z)) continue;
      if (!q) {
        m2_.add_head(p, z, Restart{});
        continue;
      }
      // the simulated head is already one square further right
      if (!can_rewrite && z != kRight) {
        move(p, z, pickup(*q, z));
        continue;
      }
      const SymbolId a = mapping_g(u(), k_, p, Word{z}).front();
      if (z != kRight) {
        for (StateId t : targets(*q, a)) move(p, z, pickup(t, z));
        if (z == kLeft)
          for (RecordId r : left_rewrites_[*q]) move(p, z, u().states.intern_pending(r));
      }
      auto hit = halts_.find(*q);
      if (hit == halts_.end()) continue;
      Word x{z}, w{a};
      walk(p, *q, hit->second, can_rewrite, x, w);
    }
  }

  std::vector<SymbolId> alphabet_snapshot() const { return alphabet_; }

  void move(StateId p, SymbolId z, StateId to) {
    m2_.add_head(p, z, MoveRight{to});
    discover(to);
  }

  void add(StateId p, const Word& x, Instruction ins) { m2_.add(p, x, std::move(ins)); }

  // Extends the window x (decoded as w) while w stays a prefix of something
  // the simulated state q can do.
  void walk(StateId p, StateId q, const Halts& h, bool can_rewrite, Word& x, Word& w) {
    if (!h.prefixes.count(w)) return;
    if (x.back() == kRight) {
      if (auto it = h.short_windows.find(w); it != h.short_windows.end())
        for (const auto& ins : it->second) add(p, x, ins);
      return;
    }
    if (static_cast<int>(x.size()) == k_) {
      if (auto it = h.full.find(w); it != h.full.end())
        for (HaltKind act : it->second) {
          StateId c = u().states.intern_context(q, w, act, Word(x.begin() + 1, x.end()), u().symbols);
          add(p, x, MoveRight{c});
          discover(c);
        }
      if (can_rewrite)
        for (RecordId r : h.rewrites)
          if (std::equal(w.begin(), w.end(), u().records[r].redex.begin())) emit_rewrite(p, x, r);
      return;
    }
    std::vector<SymbolId> next = alphabet_snapshot();
    next.push_back(kRight);
    for (SymbolId z : next) {
      x.push_back(z);
      w.push_back(mapping_h(u(), k_, x[x.size() - 2], z));
      walk(p, q, h, can_rewrite, x, w);
      x.pop_back();
      w.pop_back();
    }
  }

  void emit_rewrite(StateId p, const Word& x, RecordId r) {
    const RewriteRecord rec = u().records[r];
    const Bit c0 = is_q21(u(), p) ? u().states.info(p).c : Bit::neutral;
    const SymbolId last = x.back();
    std::vector<std::pair<Mode, Bit>> modes;
    if (is_delta_record(u(), last)) {
      const Bit e = comp3(u(), last);
      modes.push_back({Mode::verify, e});
      if (reduct_last(u(), *comp2(u(), last), k_) == redex_guess(u(), r, k_)) modes.push_back({Mode::ignore, e});
    } else {
      modes.push_back({Mode::verify, Bit::neutral});
    }
    const Word& v = rec.reduct;
    for (Bit c1 : {Bit::zero, Bit::one}) {
      Word y;
      if (k_ == 2) {
        y.push_back(compound(v[0], r, c1, c0));
      } else {
        y.push_back(c0 == Bit::neutral ? v[0] : compound(v[0], std::nullopt, Bit::neutral, c0));
        y.insert(y.end(), v.begin() + 1, v.begin() + (k_ - 2));
        y.push_back(compound(v[static_cast<std::size_t>(k_ - 2)], r, c1, Bit::neutral));
      }
      for (auto [mode, e] : modes) {
        StateId to = u().states.intern_compound(rec.to, VerInf{r}, c1, mode, e);
        add(p, x, Rewrite{y, to});
        discover(to);
      }
    }
  }

  // Lookahead 2 cannot rewrite a window starting with the left sentinel, so
  // the rewrite c u2 u3 -> c v2 is done one square further right.
  void process_pending(StateId p, RecordId rid) {
    const RewriteRecord rec = u().records[rid];
    for (SymbolId x2 : alphabet_snapshot()) {
      if (comp1(u(), x2) != rec.redex[1]) continue;
      std::vector<SymbolId> seconds = alphabet_snapshot();
      seconds.push_back(kRight);
      for (SymbolId x3 : seconds) {
        if (mapping_h(u(), k_, x2, x3) != rec.redex[2]) continue;
        const Word x{x2, x3};
        if (x3 == kRight) {
          if (rec.to) {
            add(p, x, Rewrite{Word{kRight}, *rec.to});
            discover(*rec.to);
          } else {
            add(p, x, RewriteRestart{Word{kRight}});
          }
          continue;
        }
        std::vector<SymbolId> guesses = plain_;
        guesses.push_back(kRight);
        for (SymbolId g : guesses) {
          RecordId shifted =
              u().intern_record(RewriteRecord{rec.from, Word{rec.redex[1], rec.redex[2], g}, Word{rec.reduct[1], g}, rec.to});
          emit_rewrite(p, x, shifted);
        }
      }
    }
  }

  const DeltaAutomaton& m1_;
  int k_;
  DeltaAutomaton m2_;
  std::vector<SymbolId> alphabet_, plain_;
  std::map<StateId, Halts> halts_;
  std::map<StateId, std::vector<RecordId>> left_rewrites_;
  std::map<std::pair<StateId, SymbolId>, std::vector<StateId>> moves_;
  std::set<StateId> seen_;
  std::vector<StateId> todo_;
};

}  // namespace

DeltaAutomaton reduce_lookahead(const DeltaAutomaton& a) {
  if (a.k - 1 < 2)
    throw PreconditionError("lookahead", "the lookahead can only be reduced to k >= 2, input has k = " +
                                             std::to_string(a.k));
  NormalizationCertificate c = audit_normal_form(a);
  if (!c.rr_semidet) throw PreconditionError("rr-semidet", "lookahead reduction needs the semi-deterministic normal form");
  if (!c.move_right_first)
    throw PreconditionError("move-right-first-symbol", "lookahead reduction needs moves keyed by the first symbol");
  if (!c.fixed_size) throw PreconditionError("fixed-rewrite-size", "lookahead reduction needs fixed rewrite size");
  if (!c.unit) throw PreconditionError("unit-reduction", "lookahead reduction needs unit reduction");
  for (SymbolId s : a.gamma)
    if (a.symbols().is_compound(s))
      throw PreconditionError("reduce", "input already carries compound symbols");
  DeltaAutomaton b = Reducer(a).run();
  b.certificate = audit_normal_form(b);
  b.certificate.provenance = a.certificate.provenance;
  b.certificate.provenance.push_back("reduce");
  return b;
}

}  // namespace rra
