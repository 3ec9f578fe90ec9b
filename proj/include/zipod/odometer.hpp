#pragma once

#include "zipod/point.hpp"

namespace zipod {

// The machine's increment: (..., a, a ; 1, 0, 0, ...).
ZipPoint one_point(int base_j);

// Digitwise addition with carries: rightward carries are base-j, the left
// side receives tau((x_0 + y_0) mod j) as its seed carry and then carries
// mod 2 leftward. Exact on eventually periodic points (the carry stream
// over the periodic tails is itself eventually periodic).
ZipPoint add(const ZipPoint& x, const ZipPoint& y, const TransitionMap& tm);

// successor(x) = add(x, one); predecessor inverts it exactly.
ZipPoint successor(const ZipPoint& x, const TransitionMap& tm);
ZipPoint predecessor(const ZipPoint& z, const TransitionMap& tm);

// n-fold successor (n >= 0) or predecessor (n < 0).
ZipPoint iterate(const ZipPoint& x, const TransitionMap& tm, long long n);

}  // namespace zipod
