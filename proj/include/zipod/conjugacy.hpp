#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "zipod/cover.hpp"

namespace zipod {

// A finite dynamical system on states {0..n-1}: map[x] = f(x).
struct FiniteSystem {
  std::vector<int> map;
  int size() const { return static_cast<int>(map.size()); }
};

bool is_bijection(const FiniteSystem& sys);
// Single cycle through every state; the finite stand-in for minimality.
bool is_single_cycle(const FiniteSystem& sys);

// The blocks M, f(M), ..., f^(t-1)(M) where M is the f^n-orbit of state 0
// and t is the least period of M under f. Requires a single-cycle system.
struct Decomposition {
  int t = 0;
  std::vector<std::vector<int>> blocks;  // each sorted ascending
};

Decomposition minimal_decomposition(const FiniteSystem& sys, int n);

// pi : X -> Z_n with pi(f(x)) = pi(x) + 1 mod n; defined when the
// decomposition period t equals n, otherwise throws period_mismatch.
std::vector<int> projection_to_Zn(const FiniteSystem& sys, int n);

// All n in [1, bound] admitting an f^n-minimal set that is not an
// f^m-orbit for any m < n. For a single N-cycle this is the divisor set
// of N intersected with [1, bound].
std::vector<int> compute_S_of_f(const FiniteSystem& sys, int bound);

enum class SetRelation { equal, disjoint };

// For two f^n-minimal subsets (validated): equal or disjoint. Anything
// else would contradict minimality and reports an internal inconsistency.
SetRelation disjoint_or_equal_check(const std::vector<int>& A,
                                    const std::vector<int>& B,
                                    const FiniteSystem& sys, int n);

// A finite cover family: one partition of the state set per depth.
struct DepthPartition {
  CoverIndex idx;
  std::vector<std::vector<int>> blocks;  // each sorted ascending
};

struct PartitionFamily {
  std::vector<DepthPartition> depths;
};

// The three finite-depth conjugacy conditions:
//  (1) per depth: block count = 2^i * j^(k+1) and f permutes the blocks in
//      a single cycle;
//  (2) each partition refines the previous one;
//  (3) the depth-address map separates states (no two states share every
//      block).
struct Te1Report {
  struct Condition {
    bool pass = true;
    std::string witness;  // empty when pass
  };
  Condition cardinality_cycle;  // (1)
  Condition refinement;         // (2)
  Condition separation;         // (3)
  bool all_pass() const {
    return cardinality_cycle.pass && refinement.pass && separation.pass;
  }
};

Te1Report verify_te1(const PartitionFamily& family, const FiniteSystem& sys,
                     int base_j);

// Assigns each state a window word per depth so that blocks become
// cylinders and f becomes the induced successor action on words. Verified
// end to end; throws verification_failed when no consistent assignment
// exists (including when the family fails the three conditions).
struct CodingMap {
  std::vector<CoverIndex> depths;
  // address[d][x] = window-word code of state x at depth d.
  std::vector<std::vector<std::uint32_t>> address;
};

CodingMap build_coding_map(const PartitionFamily& family,
                           const FiniteSystem& sys, const TransitionMap& tm);

// The finite truncation of the adding machine at a cover depth: states are
// the window words, the map is the induced successor permutation. The
// family groups states of the deepest window by their restriction to each
// shallower window.
FiniteSystem truncation_system(const TransitionMap& tm, CoverIndex deepest,
                               long long cap = kWordCap);
PartitionFamily truncation_family(const TransitionMap& tm,
                                  const std::vector<CoverIndex>& depths,
                                  long long cap = kWordCap);
// Partitions the words of an explicitly chosen (possibly deeper) window
// instead of the last listed depth; every depth must fit inside it.
PartitionFamily truncation_family(const TransitionMap& tm,
                                  CoverIndex system_depth,
                                  const std::vector<CoverIndex>& depths,
                                  long long cap = kWordCap);

// Line-oriented system files:
//   states: N
//   map: f(0) f(1) ... f(N-1)
//   cover I K: [s s ...][s s ...]...
// Blank lines and '#' comment lines are ignored.
struct SystemFile {
  FiniteSystem sys;
  PartitionFamily family;
};

SystemFile parse_system_file(std::istream& in);
SystemFile load_system_file(const std::string& path);
std::string to_system_text(const SystemFile& sf);

}  // namespace zipod
