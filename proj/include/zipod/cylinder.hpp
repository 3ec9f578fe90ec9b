#pragma once

#include <string>
#include <vector>

#include "zipod/alphabet.hpp"

namespace zipod {

// A cylinder set: total constraints on a contiguous window [-n, k] around
// the origin. n = 0 means no negative positions are constrained; an empty
// nonnegative part means none of 0..k are (k = -1). Both empty = the whole
// space.
class Cylinder {
public:
  Cylinder(int base_j, std::vector<ZSym> neg, std::vector<int> nonneg);

  int base() const { return base_j_; }
  int left_len() const { return static_cast<int>(neg_.size()); }
  int right_len() const { return static_cast<int>(nonneg_.size()); }
  long long lo() const { return -left_len(); }
  long long hi() const { return right_len() - 1; }
  bool whole_space() const { return neg_.empty() && nonneg_.empty(); }

  // neg_ is stored left-to-right: neg_[0] constrains position -n.
  ZSym z_constraint(long long i) const;  // -n <= i <= -1
  int s_constraint(long long i) const;   // 0 <= i <= k
  int value_constraint(long long i) const;

  const std::vector<ZSym>& neg() const { return neg_; }
  const std::vector<int>& nonneg() const { return nonneg_; }

  std::string to_string() const;  // "[-2..0] b a ; 1" style

  bool operator==(const Cylinder& o) const {
    return base_j_ == o.base_j_ && neg_ == o.neg_ && nonneg_ == o.nonneg_;
  }
  bool operator<(const Cylinder& o) const;  // deterministic ordering

private:
  int base_j_;
  std::vector<ZSym> neg_;
  std::vector<int> nonneg_;
};

}  // namespace zipod
