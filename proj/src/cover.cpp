#include "zipod/cover.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "zipod/odometer.hpp"

namespace zipod {

namespace {

void check_index(CoverIndex idx) {
  if (idx.i < 0 || idx.k < -1)
    fail(errc::bad_window, "cover index needs i >= 0 and k >= -1, got (" +
                               std::to_string(idx.i) + "," +
                               std::to_string(idx.k) + ")");
}

int radix_at(CoverIndex idx, int base_j, int offset) {
  // offset counts window positions left to right: 0 .. i+k.
  return offset < idx.i ? 2 : base_j;
}

}  // namespace

long long cover_cardinality(CoverIndex idx, int base_j, long long cap) {
  check_index(idx);
  if (base_j < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j));
  long long m = 1;
  for (int t = 0; t < idx.i; ++t) {
    m *= 2;
    if (m > cap)
      fail(errc::overflow, "cover at (" + std::to_string(idx.i) + "," +
                               std::to_string(idx.k) + ") exceeds cap " +
                               std::to_string(cap));
  }
  for (int t = 0; t <= idx.k; ++t) {
    m *= base_j;
    if (m > cap)
      fail(errc::overflow, "cover at (" + std::to_string(idx.i) + "," +
                               std::to_string(idx.k) + ") exceeds cap " +
                               std::to_string(cap));
  }
  return m;
}

std::uint32_t encode_window_word(CoverIndex idx, int base_j,
                                 const std::vector<int>& values) {
  check_index(idx);
  if (static_cast<int>(values.size()) != idx.window_len())
    fail(errc::bad_argument,
         "word has " + std::to_string(values.size()) + " symbols, window (" +
             std::to_string(idx.i) + "," + std::to_string(idx.k) + ") needs " +
             std::to_string(idx.window_len()));
  std::uint32_t code = 0;
  for (int t = 0; t < idx.window_len(); ++t) {
    const int r = radix_at(idx, base_j, t);
    const int v = values[static_cast<size_t>(t)];
    if (v < 0 || v >= r)
      fail(errc::digit_out_of_range,
           "symbol " + std::to_string(v) + " outside radix " +
               std::to_string(r));
    code = code * static_cast<std::uint32_t>(r) + static_cast<std::uint32_t>(v);
  }
  return code;
}

std::vector<int> decode_window_word(CoverIndex idx, int base_j,
                                    std::uint32_t code) {
  check_index(idx);
  std::vector<int> values(static_cast<size_t>(idx.window_len()), 0);
  for (int t = idx.window_len() - 1; t >= 0; --t) {
    const auto r = static_cast<std::uint32_t>(radix_at(idx, base_j, t));
    values[static_cast<size_t>(t)] = static_cast<int>(code % r);
    code /= r;
  }
  if (code != 0)
    fail(errc::bad_argument, "word code outside the cover's range");
  return values;
}

std::uint32_t window_word_of_point(const ZipPoint& p, CoverIndex idx) {
  check_index(idx);
  std::vector<int> values;
  values.reserve(static_cast<size_t>(idx.window_len()));
  for (long long pos = -idx.i; pos <= idx.k; ++pos)
    values.push_back(p.value_at(pos));
  return encode_window_word(idx, p.base(), values);
}

Cylinder cylinder_of_word(CoverIndex idx, int base_j, std::uint32_t code) {
  const std::vector<int> values = decode_window_word(idx, base_j, code);
  std::vector<ZSym> neg;
  std::vector<int> nonneg;
  for (int t = 0; t < idx.window_len(); ++t) {
    if (t < idx.i)
      neg.push_back(zsym_from_value(values[static_cast<size_t>(t)]));
    else
      nonneg.push_back(values[static_cast<size_t>(t)]);
  }
  return Cylinder(base_j, std::move(neg), std::move(nonneg));
}

std::uint32_t restrict_window_word(CoverIndex from, CoverIndex to, int base_j,
                                   std::uint32_t code) {
  check_index(from);
  check_index(to);
  if (to.i > from.i || to.k > from.k)
    fail(errc::bad_argument, "restriction target window is not contained");
  const std::vector<int> values = decode_window_word(from, base_j, code);
  std::vector<int> sub;
  sub.reserve(static_cast<size_t>(to.window_len()));
  for (int t = from.i - to.i; t <= from.i + to.k; ++t)
    sub.push_back(values[static_cast<size_t>(t)]);
  return encode_window_word(to, base_j, sub);
}

std::vector<Cylinder> enumerate_cover(CoverIndex idx, int base_j,
                                      long long cap) {
  const long long m = cover_cardinality(idx, base_j, cap);
  std::vector<Cylinder> out;
  out.reserve(static_cast<size_t>(m));
  for (long long c = 0; c < m; ++c)
    out.push_back(cylinder_of_word(idx, base_j, static_cast<std::uint32_t>(c)));
  return out;
}

WindowMap::WindowMap(CoverIndex idx, int base_j,
                     std::vector<std::uint32_t> image)
    : idx_(idx), base_j_(base_j), image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (std::uint32_t v : image_) {
    if (v >= image_.size() || hit[v])
      fail(errc::not_bijective, "window map is not a permutation");
    hit[v] = true;
  }
}

std::uint32_t WindowMap::apply(std::uint32_t code) const {
  if (code >= image_.size())
    fail(errc::bad_argument, "word code outside the cover's range");
  return image_[code];
}

WindowMap induced_window_map(const TransitionMap& tm, CoverIndex idx,
                             long long cap) {
  check_index(idx);
  const int j = tm.base();
  if (idx.k < 0 && idx.i > 0)
    fail(errc::bad_window,
         "window needs position 0 to seed the left carry (k >= 0)");
  const long long m = cover_cardinality(idx, j, cap);
  std::vector<std::uint32_t> image(static_cast<size_t>(m), 0);
  std::vector<int> out(static_cast<size_t>(idx.window_len()), 0);
  for (long long c = 0; c < m; ++c) {
    const std::vector<int> v =
        decode_window_word(idx, j, static_cast<std::uint32_t>(c));
    // Rightward: add 1 at position 0 and carry base-j.
    int carry = 0;
    for (int t = 0; t <= idx.k; ++t) {
      const int d = v[static_cast<size_t>(idx.i + t)] + (t == 0 ? 1 : 0) + carry;
      out[static_cast<size_t>(idx.i + t)] = d % j;
      carry = d >= j ? 1 : 0;
    }
    // Leftward: seed with tau of the incremented origin digit, carry mod 2.
    if (idx.i > 0) {
      int s = tm.carry_bit((v[static_cast<size_t>(idx.i)] + 1) % j);
      for (int t = 1; t <= idx.i; ++t) {
        const int d = v[static_cast<size_t>(idx.i - t)] + s;
        out[static_cast<size_t>(idx.i - t)] = d % 2;
        s = d >= 2 ? 1 : 0;
      }
    }
    image[static_cast<size_t>(c)] = encode_window_word(idx, j, out);
  }
  return WindowMap(idx, j, std::move(image));
}

std::vector<long long> cycle_structure(const WindowMap& wm) {
  const long long m = wm.size();
  std::vector<bool> visited(static_cast<size_t>(m), false);
  std::vector<long long> lengths;
  for (long long c = 0; c < m; ++c) {
    if (visited[static_cast<size_t>(c)]) continue;
    long long len = 0;
    std::uint32_t w = static_cast<std::uint32_t>(c);
    while (!visited[w]) {
      visited[w] = true;
      w = wm.apply(w);
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::vector<Cylinder> preimage_of_basic_cylinder(const TransitionMap& tm,
                                                 long long index, int value,
                                                 long long cap) {
  const int j = tm.base();
  if (index >= 0) {
    if (value < 0 || value >= j)
      fail(errc::digit_out_of_range,
           "digit " + std::to_string(value) + " outside base " +
               std::to_string(j));
  } else {
    if (value != 0 && value != 1)
      fail(errc::digit_out_of_range,
           "letter value must be 0 (a) or 1 (b), got " + std::to_string(value));
  }
  // The smallest window whose successor image determines position `index`.
  const CoverIndex idx = index >= 0
                             ? CoverIndex{0, static_cast<int>(index)}
                             : CoverIndex{static_cast<int>(-index), 0};
  const int offset = index >= 0 ? static_cast<int>(index) : 0;
  const WindowMap wm = induced_window_map(tm, idx, cap);

  std::set<Cylinder> result;
  for (long long c = 0; c < wm.size(); ++c) {
    const std::vector<int> img =
        decode_window_word(idx, j, wm.apply(static_cast<std::uint32_t>(c)));
    if (img[static_cast<size_t>(offset)] != value) continue;
    result.insert(cylinder_of_word(idx, j, static_cast<std::uint32_t>(c)));
  }

  // Merge to maximal cylinders: whenever every symbol is present at the
  // outermost position of otherwise identical cylinders, drop it.
  bool changed = true;
  while (changed) {
    changed = false;
    // Rightmost nonnegative position.
    {
      std::map<std::pair<std::vector<ZSym>, std::vector<int>>,
               std::set<int>> groups;
      for (const Cylinder& c : result) {
        if (c.right_len() == 0) continue;
        std::vector<int> head(c.nonneg().begin(), c.nonneg().end() - 1);
        groups[{c.neg(), head}].insert(c.nonneg().back());
      }
      for (const auto& [key, vals] : groups) {
        if (static_cast<int>(vals.size()) != j) continue;
        for (int v : vals) {
          std::vector<int> full = key.second;
          full.push_back(v);
          result.erase(Cylinder(j, key.first, full));
        }
        result.insert(Cylinder(j, key.first, key.second));
        changed = true;
      }
    }
    // Leftmost negative position.
    {
      std::map<std::pair<std::vector<ZSym>, std::vector<int>>,
               std::set<ZSym>> groups;
      for (const Cylinder& c : result) {
        if (c.left_len() == 0) continue;
        std::vector<ZSym> rest(c.neg().begin() + 1, c.neg().end());
        groups[{rest, c.nonneg()}].insert(c.neg().front());
      }
      for (const auto& [key, vals] : groups) {
        if (vals.size() != 2) continue;
        for (ZSym z : vals) {
          std::vector<ZSym> full;
          full.push_back(z);
          full.insert(full.end(), key.first.begin(), key.first.end());
          result.erase(Cylinder(j, full, key.second));
        }
        result.insert(Cylinder(j, key.first, key.second));
        changed = true;
      }
    }
  }

  return std::vector<Cylinder>(result.begin(), result.end());
}

VisitReport orbit_visits(const ZipPoint& start, const TransitionMap& tm,
                         CoverIndex idx, long long horizon, long long cap) {
  if (start.base() != tm.base())
    fail(errc::base_mismatch,
         "point over base " + std::to_string(start.base()) + ", tau over base " +
             std::to_string(tm.base()));
  if (horizon < 0)
    fail(errc::bad_argument,
         "horizon must be nonnegative, got " + std::to_string(horizon));
  VisitReport report;
  report.idx = idx;
  report.m = cover_cardinality(idx, tm.base(), cap);
  report.horizon = horizon;
  report.first_visit.assign(static_cast<size_t>(report.m), -1);
  ZipPoint p = start;
  for (long long n = 0; n <= horizon; ++n) {
    const std::uint32_t code = window_word_of_point(p, idx);
    if (report.first_visit[code] < 0) {
      report.first_visit[code] = n;
      ++report.distinct;
      if (report.distinct == report.m) break;
    }
    if (n < horizon) p = successor(p, tm);
  }
  report.all_visited = report.distinct == report.m;
  return report;
}

RefinementCounterexample one_sided_refinement_counterexample(int base_j,
                                                             int i, int K) {
  if (i < 0 || K < 0)
    fail(errc::bad_argument, "need left depth i >= 0 and chain depth K >= 0");
  RawPoint a;
  a.left_tail = {ZSym::a};
  a.right_tail = {0};
  RawPoint b;
  b.left_tail = {ZSym::b};
  b.left_finite.assign(static_cast<size_t>(i), ZSym::a);
  b.right_tail = {0};
  RefinementCounterexample out{ZipPoint(base_j, std::move(a)),
                               ZipPoint(base_j, std::move(b)),
                               {}};
  for (int k = 0; k <= K; ++k)
    out.chain.emplace_back(base_j, std::vector<ZSym>(static_cast<size_t>(i), ZSym::a),
                           std::vector<int>(static_cast<size_t>(k) + 1, 0));
  for (const Cylinder& c : out.chain)
    if (!in_cylinder(out.with_a, c) || !in_cylinder(out.with_b, c))
      throw std::logic_error("refinement counterexample left its own chain");
  return out;
}

}  // namespace zipod
