#include <functional>
#include <set>

#include "rra/error.hpp"
#include "rra/sim.hpp"
#include "rra/transforms.hpp"

namespace rra {

namespace {

bool has_short_rewrite(const DeltaAutomaton& a) {
  for (const auto& [key, instrs] : a.exact())
    if (static_cast<int>(key.window.size()) < a.k)
      for (const auto& i : instrs)
        if (is_rewrite(i)) return true;
  return false;
}

void all_words(const Word& gamma, std::size_t len, const std::function<void(const Word&)>& f) {
  Word w;
  std::function<void()> rec = [&] {
    if (w.size() == len) {
      f(w);
      return;
    }
    for (SymbolId s : gamma) {
      w.push_back(s);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

DeltaAutomaton to_fixed_rewrite_size(const DeltaAutomaton& a) {
  NormalizationCertificate audit = audit_normal_form(a);
  if (!audit.rr_semidet)
    throw PreconditionError("rr-semidet", "fixing the rewrite size needs the semi-deterministic normal form");
  DeltaAutomaton b = a;
  if (!has_short_rewrite(a)) {
    b.certificate = audit;
    b.certificate.provenance = a.certificate.provenance;
    b.certificate.provenance.push_back("fixsize");
    return b;
  }

  // Tapes that fit into one window are decided at the left sentinel.
  DeltaRelation rel(a);
  MembershipOracle oracle(rel, static_cast<std::size_t>(std::max(a.k - 2, 0)));
  for (int len = 0; len + 2 <= a.k; ++len) {
    all_words(a.gamma, static_cast<std::size_t>(len), [&](const Word& w) {
      Word window{kLeft};
      window.insert(window.end(), w.begin(), w.end());
      window.push_back(kRight);
      b.exact_mut().erase(DeltaKey{a.start, window});
      if (oracle.accepts(w)) b.add(a.start, window, Accept{});
    });
  }

  std::vector<std::pair<DeltaKey, Instruction>> shorts;
  for (auto it = b.exact_mut().begin(); it != b.exact_mut().end();) {
    auto& instrs = it->second;
    if (static_cast<int>(it->first.window.size()) < a.k) {
      for (auto j = instrs.begin(); j != instrs.end();) {
        if (is_rewrite(*j)) {
          if (it->first.window.front() != kLeft) shorts.push_back({it->first, *j});
          j = instrs.erase(j);
        } else {
          ++j;
        }
      }
    }
    it = instrs.empty() ? b.exact_mut().erase(it) : std::next(it);
  }

  const std::size_t nstates = a.states().size();
  std::vector<Instruction> found_tmp;
  for (const auto& [key, ins] : shorts) {
    const std::size_t pad = static_cast<std::size_t>(a.k) - key.window.size();
    all_words(a.gamma, pad, [&](const Word& alpha) {
      Word full = alpha;
      full.insert(full.end(), key.window.begin(), key.window.end());
      // states from which reading alpha leads to key.state on key.window
      std::set<StateId> reach{key.state};
      for (std::size_t j = pad; j-- > 0;) {
        Word window(full.begin() + static_cast<long>(j), full.end());
        std::set<StateId> prev;
        for (std::uint32_t s = 0; s < nstates; ++s) {
          found_tmp.clear();
          a.lookup(StateId{s}, window, found_tmp);
          for (const auto& f : found_tmp)
            if (auto* m = std::get_if<MoveRight>(&f); m && reach.count(m->to)) prev.insert(StateId{s});
        }
        reach = std::move(prev);
        if (reach.empty()) return;
      }
      Word reduct = alpha;
      const Word& v = *reduct_of(ins);
      reduct.insert(reduct.end(), v.begin(), v.end());
      for (StateId q : reach) {
        if (auto* r = std::get_if<Rewrite>(&ins)) b.add(q, full, Rewrite{reduct, r->to});
        else b.add(q, full, RewriteRestart{reduct});
      }
    });
  }

  b.certificate = audit_normal_form(b);
  b.certificate.provenance = a.certificate.provenance;
  b.certificate.provenance.push_back("fixsize");
  return b;
}

}  // namespace rra
