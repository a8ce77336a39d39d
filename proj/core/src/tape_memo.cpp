#include "rra/tape_memo.hpp"

#include <algorithm>

namespace rra {

TapeMemo::TapeMemo(const Word& gamma, std::size_t max_len, std::size_t dense_limit) {
  std::uint32_t maxraw = 0;
  for (SymbolId s : gamma) maxraw = std::max(maxraw, raw(s));
  index_.assign(maxraw + 1, -1);
  for (std::size_t i = 0; i < gamma.size(); ++i) index_[raw(gamma[i])] = static_cast<int>(i);
  base_ = std::max<std::size_t>(gamma.size(), 1);
  std::size_t total = 0, power = 1;
  bool fits = true;
  for (std::size_t len = 0; len <= max_len; ++len) {
    offset_.push_back(total);
    total += power;
    if (total > dense_limit) {
      fits = false;
      break;
    }
    power *= base_;
  }
  if (fits) {
    dense_ = true;
    table_.assign(total, 0);
  }
}

std::size_t TapeMemo::code(const Word& w) const {
  if (!dense_ || w.size() >= offset_.size()) return static_cast<std::size_t>(-1);
  std::size_t c = 0;
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    std::uint32_t r = raw(*it);
    if (r >= index_.size() || index_[r] < 0) return static_cast<std::size_t>(-1);
    c = c * base_ + static_cast<std::size_t>(index_[r]);
  }
  return offset_[w.size()] + c;
}

TapeMemo::Value TapeMemo::get(const Word& w) const {
  std::size_t c = code(w);
  if (c != static_cast<std::size_t>(-1)) return static_cast<Value>(table_[c]);
  auto it = map_.find(w);
  if (it == map_.end()) return Value::unknown;
  return it->second ? Value::yes : Value::no;
}

void TapeMemo::set(const Word& w, bool v) {
  std::size_t c = code(w);
  if (c != static_cast<std::size_t>(-1)) {
    table_[c] = static_cast<std::uint8_t>(v ? Value::yes : Value::no);
    return;
  }
  map_[w] = v;
}

}  // namespace rra
