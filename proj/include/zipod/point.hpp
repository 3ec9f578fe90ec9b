#pragma once

#include <optional>
#include <string>
#include <vector>

#include "zipod/alphabet.hpp"
#include "zipod/cylinder.hpp"

namespace zipod {

// A not-yet-canonical description of an eventually periodic point.
// Conventions:
//   left_tail   repeats towards -infinity; its LAST letter sits immediately
//               left of left_finite (at position -|left_finite|-1)
//   left_finite occupies positions -|left_finite| .. -1, left to right
//   right_finite occupies positions 0 .. |right_finite|-1
//   right_tail  repeats towards +infinity; its FIRST letter sits at
//               position |right_finite|
struct RawPoint {
  std::vector<ZSym> left_tail;
  std::vector<ZSym> left_finite;
  std::vector<int> right_finite;
  std::vector<int> right_tail;
};

// A point of the zip space: Z letters at negative indices, base-j digits at
// nonnegative ones, eventually periodic on both sides. Always held in
// canonical form (minimal tail periods, finite parts that cannot be
// shortened by absorbing a symbol into the adjacent tail), so structural
// equality of the four parts is pointwise equality of the sequences.
class ZipPoint {
public:
  ZipPoint(int base_j, RawPoint raw);

  int base() const { return base_j_; }
  const std::vector<ZSym>& left_tail() const { return left_tail_; }
  const std::vector<ZSym>& left_finite() const { return left_finite_; }
  const std::vector<int>& right_finite() const { return right_finite_; }
  const std::vector<int>& right_tail() const { return right_tail_; }

  ZSym z_at(long long i) const;      // i < 0
  int s_at(long long i) const;       // i >= 0
  int value_at(long long i) const;   // numeric symbol value at any index

  bool operator==(const ZipPoint& o) const {
    return base_j_ == o.base_j_ && left_tail_ == o.left_tail_ &&
           left_finite_ == o.left_finite_ &&
           right_finite_ == o.right_finite_ && right_tail_ == o.right_tail_;
  }
  bool operator!=(const ZipPoint& o) const { return !(*this == o); }

private:
  int base_j_;
  std::vector<ZSym> left_tail_;
  std::vector<ZSym> left_finite_;
  std::vector<int> right_finite_;
  std::vector<int> right_tail_;
};

// Literal syntax: "(a) b ; 2 1 (0)" = left tail (a), left finite b,
// right finite 2 1, right tail (0). Finite parts may be empty: "(a) ; (0)".
ZipPoint parse_point(int base_j, const std::string& literal);
std::string to_literal(const ZipPoint& p);

// The all-zero point (..., a, a ; 0, 0, ...).
ZipPoint zero_point(int base_j);

// min{|i| : p_i != q_i}; nullopt when p == q. Ties between +m and -m report
// m either way (the magnitude is what the metric uses); callers who need
// the side can test the symbols themselves.
std::optional<long long> first_difference(const ZipPoint& p, const ZipPoint& q);

// Distances are exactly 0 or 2^-M; stored as the exponent.
class DyadicDistance {
public:
  static DyadicDistance zero() { return DyadicDistance(true, 0); }
  static DyadicDistance pow2(long long neg_exponent) {
    return DyadicDistance(false, neg_exponent);
  }

  bool is_zero() const { return zero_; }
  // Valid only when !is_zero(): the distance is 2^-exponent().
  long long exponent() const;

  std::string to_string() const;  // "0", "1", "1/8", "1/2^70"

  bool operator==(const DyadicDistance& o) const {
    return zero_ == o.zero_ && (zero_ || exp_ == o.exp_);
  }
  bool operator!=(const DyadicDistance& o) const { return !(*this == o); }
  // Magnitude order: 0 < ... < 1/4 < 1/2 < 1.
  bool operator<(const DyadicDistance& o) const;

private:
  DyadicDistance(bool z, long long e) : zero_(z), exp_(e) {}
  bool zero_;
  long long exp_;
};

DyadicDistance distance(const ZipPoint& p, const ZipPoint& q);

bool in_cylinder(const ZipPoint& p, const Cylinder& c);

}  // namespace zipod
