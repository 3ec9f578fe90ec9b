#include "zipod/odometer.hpp"

#include <algorithm>
#include <numeric>

namespace zipod {

namespace {

void check_bases(const ZipPoint& x, const ZipPoint& y,
                 const TransitionMap& tm) {
  if (x.base() != y.base() || x.base() != tm.base())
    fail(errc::base_mismatch,
         "operands over bases " + std::to_string(x.base()) + ", " +
             std::to_string(y.base()) + ", tau over base " +
             std::to_string(tm.base()));
}

void check_base(const ZipPoint& x, const TransitionMap& tm) {
  if (x.base() != tm.base())
    fail(errc::base_mismatch, "point over base " + std::to_string(x.base()) +
                                  ", tau over base " +
                                  std::to_string(tm.base()));
}

}  // namespace

ZipPoint one_point(int base_j) {
  return ZipPoint(base_j, RawPoint{{ZSym::a}, {}, {1}, {0}});
}

ZipPoint add(const ZipPoint& x, const ZipPoint& y, const TransitionMap& tm) {
  check_bases(x, y, tm);
  const int j = tm.base();
  RawPoint raw;

  // Rightward: plain base-j addition with carry. Past the finite parts both
  // operands are periodic, so the (phase, carry) state must repeat; the
  // digits before the first repeat form the finite part, the rest the tail.
  const long long r0 = static_cast<long long>(
      std::max(x.right_finite().size(), y.right_finite().size()));
  int carry = 0;
  for (long long i = 0; i < r0; ++i) {
    const int d = x.s_at(i) + y.s_at(i) + carry;
    raw.right_finite.push_back(d % j);
    carry = d >= j ? 1 : 0;
  }
  {
    const long long period =
        std::lcm(static_cast<long long>(x.right_tail().size()),
                 static_cast<long long>(y.right_tail().size()));
    std::vector<long long> seen_at(static_cast<size_t>(2 * period), -1);
    std::vector<int> digits;
    long long u = 0, cycle_start = -1;
    for (;;) {
      const long long key = (u % period) * 2 + carry;
      if (seen_at[static_cast<size_t>(key)] >= 0) {
        cycle_start = seen_at[static_cast<size_t>(key)];
        break;
      }
      seen_at[static_cast<size_t>(key)] = u;
      const int d = x.s_at(r0 + u) + y.s_at(r0 + u) + carry;
      digits.push_back(d % j);
      carry = d >= j ? 1 : 0;
      ++u;
    }
    raw.right_finite.insert(raw.right_finite.end(), digits.begin(),
                            digits.begin() + cycle_start);
    raw.right_tail.assign(digits.begin() + cycle_start, digits.end());
  }

  // Leftward: the seed carry is tau of the reduced digit at the origin,
  // then binary addition with carry, position -1 outward. Same repetition
  // argument over the joint left-tail period.
  int s = tm.carry_bit((x.s_at(0) + y.s_at(0)) % j);
  const long long l0 = static_cast<long long>(
      std::max(x.left_finite().size(), y.left_finite().size()));
  std::vector<int> neg;  // neg[t-1] = value at position -t
  for (long long t = 1; t <= l0; ++t) {
    const int d = x.value_at(-t) + y.value_at(-t) + s;
    neg.push_back(d % 2);
    s = d >= 2 ? 1 : 0;
  }
  std::vector<int> neg_tail;  // values at -(l0+1), -(l0+2), ... up to repeat
  {
    const long long period =
        std::lcm(static_cast<long long>(x.left_tail().size()),
                 static_cast<long long>(y.left_tail().size()));
    std::vector<long long> seen_at(static_cast<size_t>(2 * period), -1);
    std::vector<int> letters;
    long long v = 0, cycle_start = -1;
    for (;;) {
      const long long key = (v % period) * 2 + s;
      if (seen_at[static_cast<size_t>(key)] >= 0) {
        cycle_start = seen_at[static_cast<size_t>(key)];
        break;
      }
      seen_at[static_cast<size_t>(key)] = v;
      const int d = x.value_at(-(l0 + 1 + v)) + y.value_at(-(l0 + 1 + v)) + s;
      letters.push_back(d % 2);
      s = d >= 2 ? 1 : 0;
      ++v;
    }
    neg.insert(neg.end(), letters.begin(), letters.begin() + cycle_start);
    neg_tail.assign(letters.begin() + cycle_start, letters.end());
  }
  // neg runs -1, -2, ...; stored order is left to right.
  raw.left_finite.reserve(neg.size());
  for (auto it = neg.rbegin(); it != neg.rend(); ++it)
    raw.left_finite.push_back(zsym_from_value(*it));
  raw.left_tail.reserve(neg_tail.size());
  for (auto it = neg_tail.rbegin(); it != neg_tail.rend(); ++it)
    raw.left_tail.push_back(zsym_from_value(*it));

  return ZipPoint(j, std::move(raw));
}

ZipPoint successor(const ZipPoint& x, const TransitionMap& tm) {
  check_base(x, tm);
  return add(x, one_point(x.base()), tm);
}

ZipPoint predecessor(const ZipPoint& z, const TransitionMap& tm) {
  check_base(z, tm);
  const int j = tm.base();
  RawPoint raw;

  // Rightward: subtract 1 with a borrow that runs while digits are 0. If
  // every digit is 0 the borrow never resolves and the result is all j-1.
  const long long R = static_cast<long long>(z.right_finite().size());
  const long long P = static_cast<long long>(z.right_tail().size());
  long long first_nonzero = -1;
  for (long long i = 0; i < R + P; ++i)
    if (z.s_at(i) != 0) {
      first_nonzero = i;
      break;
    }
  if (first_nonzero < 0) {
    raw.right_tail = {j - 1};
  } else {
    const long long Q = std::max(R, first_nonzero + 1);
    for (long long q = 0; q < Q; ++q)
      raw.right_finite.push_back(q < first_nonzero ? j - 1
                                 : q == first_nonzero ? z.s_at(q) - 1
                                                      : z.s_at(q));
    for (long long t = 0; t < P; ++t)
      raw.right_tail.push_back(z.s_at(Q + t));
  }

  // Leftward: the successor's seed carry was tau(z_0) (z_0 is the already
  // incremented digit), so the inverse borrows exactly when tau(z_0) = b.
  // The borrow turns a-letters back to b until it consumes the first b.
  const int seed = tm.carry_bit(z.s_at(0));
  if (seed == 0) {
    raw.left_tail = z.left_tail();
    raw.left_finite = z.left_finite();
  } else {
    const long long L = static_cast<long long>(z.left_finite().size());
    const long long T = static_cast<long long>(z.left_tail().size());
    long long first_b = -1;
    for (long long t = 1; t <= L + T; ++t)
      if (z.value_at(-t) == 1) {
        first_b = t;
        break;
      }
    if (first_b < 0) {
      raw.left_tail = {ZSym::b};
    } else {
      const long long Q = std::max(L, first_b);
      std::vector<int> neg;  // values at -1..-Q
      for (long long t = 1; t <= Q; ++t)
        neg.push_back(t < first_b ? 1 : t == first_b ? 0 : z.value_at(-t));
      std::vector<int> tail;  // values at -(Q+1)..-(Q+T)
      for (long long u = 1; u <= T; ++u) tail.push_back(z.value_at(-(Q + u)));
      for (auto it = neg.rbegin(); it != neg.rend(); ++it)
        raw.left_finite.push_back(zsym_from_value(*it));
      for (auto it = tail.rbegin(); it != tail.rend(); ++it)
        raw.left_tail.push_back(zsym_from_value(*it));
    }
  }

  return ZipPoint(j, std::move(raw));
}

ZipPoint iterate(const ZipPoint& x, const TransitionMap& tm, long long n) {
  check_base(x, tm);
  ZipPoint p = x;
  for (long long t = 0; t < n; ++t) p = successor(p, tm);
  for (long long t = 0; t > n; --t) p = predecessor(p, tm);
  return p;
}

}  // namespace zipod
