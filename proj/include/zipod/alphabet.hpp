#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zipod/errors.hpp"

namespace zipod {

// Negative-side letters. a carries the value 0 and b the value 1, so mod-2
// carry arithmetic on the left half of a point is arithmetic on the value.
enum class ZSym : std::uint8_t { a = 0, b = 1 };

inline int zval(ZSym z) { return static_cast<int>(z); }
ZSym zsym_from_value(int v);   // 0 or 1, anything else -> digit_out_of_range
char zsym_char(ZSym z);        // 'a' / 'b'
ZSym zsym_from_char(char c);   // parse_failure on anything but 'a'/'b'

// tau : S = {0..j-1} -> Z = {a,b}, total and surjective. Surjectivity is
// what makes the shift preimage structure (and the left carry seeding)
// well defined, so it is enforced at construction.
class TransitionMap {
public:
  TransitionMap(int base_j, std::vector<ZSym> table);

  int base() const { return base_j_; }
  ZSym apply(int digit) const;
  // tau(digit) read as a carry bit: a -> 0, b -> 1.
  int carry_bit(int digit) const { return zval(apply(digit)); }
  const std::vector<ZSym>& table() const { return table_; }
  std::vector<int> preimage(ZSym z) const;  // ascending, never empty
  std::string to_string() const;            // "0:a,1:b" style

  bool operator==(const TransitionMap& o) const {
    return base_j_ == o.base_j_ && table_ == o.table_;
  }

private:
  int base_j_;
  std::vector<ZSym> table_;
};

// Parses "0:b,1:a,...": every digit 0..j-1 exactly once, letters a/b.
TransitionMap parse_tau(int base_j, const std::string& text);

// All surjective maps for a base, table enumerated as a binary counter
// (deterministic order for reports and sweeps).
std::vector<TransitionMap> all_surjective_maps(int base_j);

// n-letter/k-digit variant used by general zip shifts; the adding machine
// itself always runs over |Z| = 2. Kept minimal: construction-time checks
// plus application and preimages.
class GeneralTransitionMap {
public:
  GeneralTransitionMap(int z_size, int s_size, std::vector<int> table);

  int z_size() const { return z_size_; }
  int s_size() const { return s_size_; }
  int apply(int s) const;
  std::vector<int> preimage(int z) const;

private:
  int z_size_;
  int s_size_;
  std::vector<int> table_;
};

}  // namespace zipod
