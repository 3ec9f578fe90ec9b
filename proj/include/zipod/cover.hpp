#pragma once

#include <cstdint>
#include <vector>

#include "zipod/alphabet.hpp"
#include "zipod/cylinder.hpp"
#include "zipod/point.hpp"

namespace zipod {

// Enumerations refuse to materialize more than this many window words.
inline constexpr long long kWordCap = 1LL << 20;

// Depth index of the finite cover family: windows [-i .. k] with
// m = 2^i * j^(k+1) cylinders. k = -1 means no nonnegative constraints
// (so (0,-1) is the trivial one-element cover).
struct CoverIndex {
  int i = 0;   // left depth, >= 0
  int k = 0;   // right depth, >= -1

  int window_len() const { return i + k + 1; }
  bool operator==(const CoverIndex& o) const { return i == o.i && k == o.k; }
};

long long cover_cardinality(CoverIndex idx, int base_j,
                            long long cap = kWordCap);

// Window words are coded in mixed radix, leftmost position most
// significant: radix 2 at negative positions, radix j at nonnegative ones.
// Word values are listed left (position -i) to right (position k).
std::uint32_t encode_window_word(CoverIndex idx, int base_j,
                                 const std::vector<int>& values);
std::vector<int> decode_window_word(CoverIndex idx, int base_j,
                                    std::uint32_t code);
std::uint32_t window_word_of_point(const ZipPoint& p, CoverIndex idx);
Cylinder cylinder_of_word(CoverIndex idx, int base_j, std::uint32_t code);

// Restriction of a word on [-from.i .. from.k] to the subwindow
// [-to.i .. to.k]; requires to.i <= from.i and to.k <= from.k.
std::uint32_t restrict_window_word(CoverIndex from, CoverIndex to, int base_j,
                                   std::uint32_t code);

// All m cylinders of the cover, in word-code order.
std::vector<Cylinder> enumerate_cover(CoverIndex idx, int base_j,
                                      long long cap = kWordCap);

// The adding machine's action on the cover: each window word maps to the
// window word of the successor, well defined because positions 0..k of the
// sum depend only on x_0..x_k and positions -1..-i only on x_-i..x_0.
// Verified to be a permutation at construction.
class WindowMap {
public:
  WindowMap(CoverIndex idx, int base_j, std::vector<std::uint32_t> image);

  CoverIndex index() const { return idx_; }
  int base() const { return base_j_; }
  long long size() const { return static_cast<long long>(image_.size()); }
  std::uint32_t apply(std::uint32_t code) const;
  const std::vector<std::uint32_t>& image() const { return image_; }

private:
  CoverIndex idx_;
  int base_j_;
  std::vector<std::uint32_t> image_;
};

// Requires k >= 0 (the left seed needs position 0 in the window) or the
// trivial window (0,-1).
WindowMap induced_window_map(const TransitionMap& tm, CoverIndex idx,
                             long long cap = kWordCap);

// Cycle lengths of the permutation, ascending. Sums to size().
std::vector<long long> cycle_structure(const WindowMap& wm);

// Preimage under the adding machine of the basic cylinder C^index_value,
// returned as a minimal list of maximal pairwise-disjoint cylinders whose
// union is the preimage. index >= 0 constrains a digit, index < 0 a letter
// (value 0 = a, 1 = b).
std::vector<Cylinder> preimage_of_basic_cylinder(const TransitionMap& tm,
                                                 long long index, int value,
                                                 long long cap = kWordCap);

struct VisitReport {
  CoverIndex idx;
  long long m = 0;          // cover cardinality
  long long horizon = 0;    // iterations examined: n = 0..horizon
  long long distinct = 0;   // cylinders visited
  bool all_visited = false;
  // first_visit[code] = least n with iterate(start, n) in that cylinder,
  // or -1 if not reached by the horizon.
  std::vector<long long> first_visit;
};

// Walks the successor orbit of start and records which cover cylinder each
// iterate lands in. Stops early once every cylinder has been seen.
VisitReport orbit_visits(const ZipPoint& start, const TransitionMap& tm,
                         CoverIndex idx, long long horizon,
                         long long cap = kWordCap);

// Two points that no chain of one-sided (fixed left depth i) refinements
// can separate: they agree everywhere except strictly left of -i. chain[k]
// is the all-zero cylinder on [-i..k]; both points lie in every element.
struct RefinementCounterexample {
  ZipPoint with_a;
  ZipPoint with_b;
  std::vector<Cylinder> chain;
};

RefinementCounterexample one_sided_refinement_counterexample(int base_j,
                                                             int i, int K);

}  // namespace zipod
