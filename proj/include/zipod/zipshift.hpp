#pragma once

#include <optional>
#include <vector>

#include "zipod/point.hpp"

namespace zipod {

// The zip shift: every symbol moves one place left, and the letter that
// crosses the origin is tau(x_0). Continuous, surjective, |tau^-1(z)|-to-1
// on each fiber.
ZipPoint zip_shift(const ZipPoint& p, const TransitionMap& tm);

// All q with zip_shift(q) = p: q_0 ranges over tau^-1(p_-1), the rest of p
// slides back one place. Ascending in the chosen digit.
std::vector<ZipPoint> zip_shift_preimages(const ZipPoint& p, const TransitionMap& tm);

struct ExpansivityWitness {
  // time >= 0: forward shifts; time < 0: |time| preimage steps.
  long long time;
  // Separation at |time| steps; for preimage steps this is the minimum over
  // every choice of lifts, which the disjointness of tau-preimages pins to
  // exactly 1 (the points differ at position 0 no matter the lifts).
  DyadicDistance separation;
};

// Finds the witness for the expansivity constant 1/2: some |n| <= horizon
// with d(shifted points) > 1/2. nullopt only when the first difference of
// p and q lies beyond the horizon. Throws equal_points when p == q.
std::optional<ExpansivityWitness> s_expansivity_witness(
    const ZipPoint& p, const ZipPoint& q, const TransitionMap& tm,
    long long horizon);

}  // namespace zipod
