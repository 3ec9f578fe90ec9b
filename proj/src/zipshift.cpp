#include "zipod/zipshift.hpp"

#include <algorithm>

namespace zipod {

namespace {

void check_base(const ZipPoint& x, const TransitionMap& tm) {
  if (x.base() != tm.base())
    fail(errc::base_mismatch, "point over base " + std::to_string(x.base()) +
                                  ", tau over base " +
                                  std::to_string(tm.base()));
}

}  // namespace

ZipPoint zip_shift(const ZipPoint& p, const TransitionMap& tm) {
  check_base(p, tm);
  RawPoint raw;
  raw.left_tail = p.left_tail();
  raw.left_finite = p.left_finite();
  raw.left_finite.push_back(tm.apply(p.s_at(0)));
  if (!p.right_finite().empty()) {
    raw.right_finite.assign(p.right_finite().begin() + 1,
                            p.right_finite().end());
    raw.right_tail = p.right_tail();
  } else {
    // Dropping the first symbol of a pure tail advances its phase.
    raw.right_tail = p.right_tail();
    std::rotate(raw.right_tail.begin(), raw.right_tail.begin() + 1,
                raw.right_tail.end());
  }
  return ZipPoint(p.base(), std::move(raw));
}

std::vector<ZipPoint> zip_shift_preimages(const ZipPoint& p,
                                          const TransitionMap& tm) {
  check_base(p, tm);
  std::vector<ZipPoint> out;
  for (int s : tm.preimage(p.z_at(-1))) {
    RawPoint raw;
    raw.right_finite.push_back(s);
    raw.right_finite.insert(raw.right_finite.end(), p.right_finite().begin(),
                            p.right_finite().end());
    raw.right_tail = p.right_tail();
    raw.left_tail = p.left_tail();
    if (!p.left_finite().empty()) {
      raw.left_finite.assign(p.left_finite().begin(),
                             p.left_finite().end() - 1);
    } else {
      // Removing the last letter of a pure tail retards its phase.
      std::rotate(raw.left_tail.begin(), raw.left_tail.end() - 1,
                  raw.left_tail.end());
    }
    out.emplace_back(p.base(), std::move(raw));
  }
  return out;
}

std::optional<ExpansivityWitness> s_expansivity_witness(
    const ZipPoint& p, const ZipPoint& q, const TransitionMap& tm,
    long long horizon) {
  check_base(p, tm);
  check_base(q, tm);
  const std::optional<long long> fd = first_difference(p, q);
  if (!fd) fail(errc::equal_points, "expansivity needs two distinct points");
  const long long M = *fd;
  if (M > horizon) return std::nullopt;

  if (M == 0 || p.s_at(M) != q.s_at(M)) {
    // Forward witness: M shifts land the first differing digit at the
    // origin, so the distance there is exactly 1.
    ZipPoint a = p, b = q;
    for (long long t = 0; t < M; ++t) {
      a = zip_shift(a, tm);
      b = zip_shift(b, tm);
    }
    return ExpansivityWitness{M, distance(a, b)};
  }

  // Backward witness: M preimage steps. The lift digits chosen at the final
  // step come from tau-preimages of distinct letters, which are disjoint,
  // so position 0 differs for every combination of choices; the minimum
  // separation over all lifts equals the separation of any one pair.
  ZipPoint a = p, b = q;
  for (long long t = 0; t < M; ++t) {
    a = zip_shift_preimages(a, tm).front();
    b = zip_shift_preimages(b, tm).front();
  }
  return ExpansivityWitness{-M, distance(a, b)};
}

}  // namespace zipod
