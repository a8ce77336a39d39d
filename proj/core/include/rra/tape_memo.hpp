#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "rra/symbols.hpp"

namespace rra {

// Three-state cache (unknown / false / true) for properties of tape contents
// over a fixed working alphabet. Uses a dense byte table when all words up
// to the given length fit, a hash map otherwise.
class TapeMemo {
 public:
  enum class Value : std::uint8_t { unknown = 0, no = 1, yes = 2 };

  TapeMemo(const Word& gamma, std::size_t max_len, std::size_t dense_limit = std::size_t{1} << 26);

  Value get(const Word& w) const;
  void set(const Word& w, bool v);
  bool dense() const { return dense_; }

 private:
  std::size_t code(const Word& w) const;
  std::vector<int> index_;  // raw symbol id -> digit, -1 outside gamma
  std::size_t base_ = 1;
  std::vector<std::size_t> offset_;
  bool dense_ = false;
  std::vector<std::uint8_t> table_;
  std::unordered_map<Word, bool, WordHash> map_;
};

}  // namespace rra
