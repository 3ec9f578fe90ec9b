#include "zipod/conjugacy.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace zipod {

namespace {

void check_system(const FiniteSystem& sys) {
  if (sys.size() == 0) fail(errc::bad_argument, "system has no states");
  for (int v : sys.map)
    if (v < 0 || v >= sys.size())
      fail(errc::bad_argument,
           "map value " + std::to_string(v) + " outside 0.." +
               std::to_string(sys.size() - 1));
}

// Sorted orbit of x under the n-th power of the map.
std::vector<int> power_orbit(const FiniteSystem& sys, int n, int x) {
  std::vector<int> orbit;
  int y = x;
  do {
    orbit.push_back(y);
    for (int t = 0; t < n; ++t) y = sys.map[static_cast<size_t>(y)];
  } while (y != x);
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

bool is_bijection(const FiniteSystem& sys) {
  check_system(sys);
  std::vector<bool> hit(static_cast<size_t>(sys.size()), false);
  for (int v : sys.map) {
    if (hit[static_cast<size_t>(v)]) return false;
    hit[static_cast<size_t>(v)] = true;
  }
  return true;
}

bool is_single_cycle(const FiniteSystem& sys) {
  if (!is_bijection(sys)) return false;
  int len = 0, x = 0;
  do {
    x = sys.map[static_cast<size_t>(x)];
    ++len;
  } while (x != 0);
  return len == sys.size();
}

Decomposition minimal_decomposition(const FiniteSystem& sys, int n) {
  check_system(sys);
  if (n < 1)
    fail(errc::bad_argument, "power n must be positive, got " + std::to_string(n));
  if (!is_bijection(sys)) fail(errc::not_bijective, "map is not a bijection");
  if (!is_single_cycle(sys))
    fail(errc::not_minimal, "map is not a single cycle");

  Decomposition dec;
  std::vector<int> block = power_orbit(sys, n, 0);
  const std::vector<int> first = block;
  do {
    dec.blocks.push_back(block);
    std::vector<int> next;
    next.reserve(block.size());
    for (int x : block) next.push_back(sys.map[static_cast<size_t>(x)]);
    std::sort(next.begin(), next.end());
    block = std::move(next);
  } while (block != first);
  dec.t = static_cast<int>(dec.blocks.size());

  // On a single cycle the translates of the f^n-orbit tile the state set.
  std::vector<bool> covered(static_cast<size_t>(sys.size()), false);
  for (const auto& b : dec.blocks)
    for (int x : b) {
      if (covered[static_cast<size_t>(x)])
        throw std::logic_error("decomposition blocks overlap");
      covered[static_cast<size_t>(x)] = true;
    }
  for (bool c : covered)
    if (!c) throw std::logic_error("decomposition misses a state");
  return dec;
}

std::vector<int> projection_to_Zn(const FiniteSystem& sys, int n) {
  const Decomposition dec = minimal_decomposition(sys, n);
  if (dec.t != n)
    fail(errc::period_mismatch,
         "decomposition period is " + std::to_string(dec.t) +
             ", projection needs exactly " + std::to_string(n));
  std::vector<int> pi(static_cast<size_t>(sys.size()), -1);
  for (int d = 0; d < dec.t; ++d)
    for (int x : dec.blocks[static_cast<size_t>(d)])
      pi[static_cast<size_t>(x)] = d;
  for (int x = 0; x < sys.size(); ++x)
    if (pi[static_cast<size_t>(sys.map[static_cast<size_t>(x)])] !=
        (pi[static_cast<size_t>(x)] + 1) % n)
      throw std::logic_error("projection does not semi-conjugate to +1");
  return pi;
}

std::vector<int> compute_S_of_f(const FiniteSystem& sys, int bound) {
  check_system(sys);
  if (bound < 1)
    fail(errc::bad_argument,
         "bound must be positive, got " + std::to_string(bound));
  if (!is_single_cycle(sys))
    fail(errc::not_minimal, "map is not a single cycle");
  // Orbits of the same point under different powers either coincide or
  // differ as sets; n belongs to S(f) when its orbit is new.
  std::vector<std::vector<int>> orbits;
  orbits.reserve(static_cast<size_t>(bound) + 1);
  orbits.push_back({});  // unused slot to index by n directly
  std::vector<int> out;
  for (int n = 1; n <= bound; ++n) {
    orbits.push_back(power_orbit(sys, n, 0));
    bool fresh = true;
    for (int m = 1; m < n && fresh; ++m)
      if (orbits[static_cast<size_t>(m)] == orbits[static_cast<size_t>(n)])
        fresh = false;
    if (fresh) out.push_back(n);
  }
  return out;
}

SetRelation disjoint_or_equal_check(const std::vector<int>& A,
                                    const std::vector<int>& B,
                                    const FiniteSystem& sys, int n) {
  check_system(sys);
  if (n < 1)
    fail(errc::bad_argument, "power n must be positive, got " + std::to_string(n));
  auto validate = [&](const std::vector<int>& set, const char* name) {
    if (set.empty())
      fail(errc::not_minimal_input, std::string(name) + " is empty");
    for (int x : set)
      if (x < 0 || x >= sys.size())
        fail(errc::bad_argument, std::string(name) + " contains state " +
                                     std::to_string(x) + " outside 0.." +
                                     std::to_string(sys.size() - 1));
    std::vector<int> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (power_orbit(sys, n, set.front()) != sorted)
      fail(errc::not_minimal_input,
           std::string(name) + " is not a minimal set of the " +
               std::to_string(n) + "-th power");
    return sorted;
  };
  const std::vector<int> a = validate(A, "first set");
  const std::vector<int> b = validate(B, "second set");
  if (a == b) return SetRelation::equal;
  std::vector<int> inter;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(inter));
  if (!inter.empty())
    throw std::logic_error("minimal sets overlap without being equal");
  return SetRelation::disjoint;
}

// --- te1 verification ---------------------------------------------------

namespace {

// state -> block index, validating that blocks partition the states.
std::vector<int> block_lookup(const DepthPartition& depth, int n_states,
                              size_t depth_no) {
  std::vector<int> lookup(static_cast<size_t>(n_states), -1);
  for (size_t b = 0; b < depth.blocks.size(); ++b) {
    if (depth.blocks[b].empty())
      fail(errc::malformed_family, "depth " + std::to_string(depth_no) +
                                       " block " + std::to_string(b) +
                                       " is empty");
    for (int x : depth.blocks[b]) {
      if (x < 0 || x >= n_states)
        fail(errc::malformed_family,
             "depth " + std::to_string(depth_no) + " names state " +
                 std::to_string(x) + " outside 0.." +
                 std::to_string(n_states - 1));
      if (lookup[static_cast<size_t>(x)] >= 0)
        fail(errc::malformed_family,
             "depth " + std::to_string(depth_no) + " lists state " +
                 std::to_string(x) + " twice");
      lookup[static_cast<size_t>(x)] = static_cast<int>(b);
    }
  }
  for (int x = 0; x < n_states; ++x)
    if (lookup[static_cast<size_t>(x)] < 0)
      fail(errc::malformed_family, "depth " + std::to_string(depth_no) +
                                       " misses state " + std::to_string(x));
  return lookup;
}

}  // namespace

Te1Report verify_te1(const PartitionFamily& family, const FiniteSystem& sys,
                     int base_j) {
  check_system(sys);
  if (base_j < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j));
  if (family.depths.empty())
    fail(errc::malformed_family, "family has no depths");

  std::vector<std::vector<int>> lookups;
  lookups.reserve(family.depths.size());
  for (size_t d = 0; d < family.depths.size(); ++d)
    lookups.push_back(block_lookup(family.depths[d], sys.size(), d));

  Te1Report report;

  // (1) block count matches the cover cardinality and f permutes the
  // blocks in one cycle.
  for (size_t d = 0; d < family.depths.size() && report.cardinality_cycle.pass;
       ++d) {
    const DepthPartition& depth = family.depths[d];
    const long long want = cover_cardinality(depth.idx, base_j);
    const long long have = static_cast<long long>(depth.blocks.size());
    if (have != want) {
      report.cardinality_cycle = {
          false, "depth " + std::to_string(d) + " has " +
                     std::to_string(have) + " blocks, the (" +
                     std::to_string(depth.idx.i) + "," +
                     std::to_string(depth.idx.k) + ") cover needs " +
                     std::to_string(want)};
      break;
    }
    std::vector<int> next(depth.blocks.size(), -1);
    for (size_t b = 0; b < depth.blocks.size() && report.cardinality_cycle.pass;
         ++b) {
      const int target =
          lookups[d][static_cast<size_t>(sys.map[static_cast<size_t>(
              depth.blocks[b].front())])];
      for (int x : depth.blocks[b]) {
        if (lookups[d][static_cast<size_t>(sys.map[static_cast<size_t>(x)])] !=
            target) {
          report.cardinality_cycle = {
              false, "depth " + std::to_string(d) + ": f splits block " +
                         std::to_string(b) + " across blocks"};
          break;
        }
      }
      next[b] = target;
    }
    if (!report.cardinality_cycle.pass) break;
    // single cycle over block indices
    std::vector<bool> seen(next.size(), false);
    size_t len = 0;
    int b = 0;
    while (!seen[static_cast<size_t>(b)]) {
      seen[static_cast<size_t>(b)] = true;
      b = next[static_cast<size_t>(b)];
      ++len;
    }
    if (len != next.size())
      report.cardinality_cycle = {
          false, "depth " + std::to_string(d) +
                     ": f does not permute the blocks in a single cycle (" +
                     std::to_string(len) + " of " +
                     std::to_string(next.size()) + " reached)"};
  }

  // (2) each depth refines the previous one.
  for (size_t d = 1; d < family.depths.size() && report.refinement.pass; ++d) {
    const DepthPartition& depth = family.depths[d];
    for (size_t b = 0; b < depth.blocks.size(); ++b) {
      const int parent = lookups[d - 1][static_cast<size_t>(
          depth.blocks[b].front())];
      bool inside = true;
      for (int x : depth.blocks[b])
        if (lookups[d - 1][static_cast<size_t>(x)] != parent) {
          inside = false;
          break;
        }
      if (!inside) {
        report.refinement = {false, "depth " + std::to_string(d) + " block " +
                                        std::to_string(b) +
                                        " straddles two blocks of depth " +
                                        std::to_string(d - 1)};
        break;
      }
    }
  }

  // (3) depth addresses separate states.
  {
    std::map<std::vector<int>, int> seen;
    for (int x = 0; x < sys.size(); ++x) {
      std::vector<int> address;
      address.reserve(lookups.size());
      for (const auto& lookup : lookups)
        address.push_back(lookup[static_cast<size_t>(x)]);
      auto [it, inserted] = seen.emplace(std::move(address), x);
      if (!inserted) {
        report.separation = {false, "states " + std::to_string(it->second) +
                                        " and " + std::to_string(x) +
                                        " share every block"};
        break;
      }
    }
  }

  return report;
}

CodingMap build_coding_map(const PartitionFamily& family,
                           const FiniteSystem& sys, const TransitionMap& tm) {
  const Te1Report report = verify_te1(family, sys, tm.base());
  if (!report.all_pass()) {
    std::string why;
    for (const auto* c :
         {&report.cardinality_cycle, &report.refinement, &report.separation})
      if (!c->pass) {
        why = c->witness;
        break;
      }
    fail(errc::verification_failed,
         "family fails the finite conjugacy conditions: " + why);
  }
  for (size_t d = 1; d < family.depths.size(); ++d) {
    const CoverIndex cur = family.depths[d].idx;
    const CoverIndex prev = family.depths[d - 1].idx;
    if (cur.i < prev.i || cur.k < prev.k)
      fail(errc::malformed_family,
           "depth windows must be nondecreasing on both sides");
  }

  CodingMap cm;
  std::vector<std::uint32_t> prev_anchor_word;  // one entry per earlier depth
  for (size_t d = 0; d < family.depths.size(); ++d) {
    const DepthPartition& depth = family.depths[d];
    const CoverIndex idx = depth.idx;
    cm.depths.push_back(idx);
    const WindowMap wm = induced_window_map(tm, idx);
    const long long m = wm.size();
    const std::vector<int> lookup = block_lookup(depth, sys.size(), d);

    // Blocks along the f-cycle, starting from the block holding state 0.
    std::vector<int> cycle;
    cycle.reserve(static_cast<size_t>(m));
    int b = lookup[0];
    for (long long t = 0; t < m; ++t) {
      cycle.push_back(b);
      b = lookup[static_cast<size_t>(
          sys.map[static_cast<size_t>(depth.blocks[static_cast<size_t>(b)]
                                          .front())])];
    }

    // The anchor block needs a word whose window orbit runs through all m
    // words and, past the first depth, restricts to the previous anchor's.
    std::uint32_t anchor = 0;
    bool found = false;
    for (long long c = 0; c < m && !found; ++c) {
      const auto code = static_cast<std::uint32_t>(c);
      if (d > 0 && restrict_window_word(idx, family.depths[d - 1].idx,
                                        tm.base(), code) !=
                       prev_anchor_word.back())
        continue;
      long long len = 1;
      for (std::uint32_t w = wm.apply(code); w != code; w = wm.apply(w)) ++len;
      if (len == m) {
        anchor = code;
        found = true;
      }
    }
    if (!found)
      fail(errc::verification_failed,
           "window dynamics at depth " + std::to_string(d) +
               " admit no full-cycle word compatible with the family");
    prev_anchor_word.push_back(anchor);

    std::vector<std::uint32_t> word_of_block(static_cast<size_t>(m), 0);
    std::uint32_t w = anchor;
    for (long long t = 0; t < m; ++t) {
      word_of_block[static_cast<size_t>(cycle[static_cast<size_t>(t)])] = w;
      w = wm.apply(w);
    }

    std::vector<std::uint32_t> address(static_cast<size_t>(sys.size()), 0);
    for (int x = 0; x < sys.size(); ++x)
      address[static_cast<size_t>(x)] =
          word_of_block[static_cast<size_t>(lookup[static_cast<size_t>(x)])];
    cm.address.push_back(std::move(address));

    // The assignment must carry f to the induced successor action.
    for (int x = 0; x < sys.size(); ++x)
      if (cm.address[d][static_cast<size_t>(sys.map[static_cast<size_t>(x)])] !=
          wm.apply(cm.address[d][static_cast<size_t>(x)]))
        fail(errc::verification_failed,
             "state " + std::to_string(x) + " breaks the conjugacy at depth " +
                 std::to_string(d));
    // ... and agree with the previous depth under window restriction.
    if (d > 0)
      for (int x = 0; x < sys.size(); ++x)
        if (restrict_window_word(idx, family.depths[d - 1].idx, tm.base(),
                                 cm.address[d][static_cast<size_t>(x)]) !=
            cm.address[d - 1][static_cast<size_t>(x)])
          fail(errc::verification_failed,
               "state " + std::to_string(x) +
                   " breaks window refinement at depth " + std::to_string(d));
  }
  return cm;
}

FiniteSystem truncation_system(const TransitionMap& tm, CoverIndex deepest,
                               long long cap) {
  const WindowMap wm = induced_window_map(tm, deepest, cap);
  FiniteSystem sys;
  sys.map.reserve(static_cast<size_t>(wm.size()));
  for (std::uint32_t v : wm.image()) sys.map.push_back(static_cast<int>(v));
  return sys;
}

PartitionFamily truncation_family(const TransitionMap& tm,
                                  const std::vector<CoverIndex>& depths,
                                  long long cap) {
  if (depths.empty()) fail(errc::bad_argument, "no depths given");
  return truncation_family(tm, depths.back(), depths, cap);
}

PartitionFamily truncation_family(const TransitionMap& tm,
                                  CoverIndex system_depth,
                                  const std::vector<CoverIndex>& depths,
                                  long long cap) {
  if (depths.empty()) fail(errc::bad_argument, "no depths given");
  for (size_t d = 1; d < depths.size(); ++d)
    if (depths[d].i < depths[d - 1].i || depths[d].k < depths[d - 1].k)
      fail(errc::bad_argument,
           "depth windows must be nondecreasing on both sides");
  for (const CoverIndex idx : depths)
    if (idx.i > system_depth.i || idx.k > system_depth.k)
      fail(errc::bad_argument, "depth window outside the system window");
  const long long n = cover_cardinality(system_depth, tm.base(), cap);
  PartitionFamily family;
  for (const CoverIndex idx : depths) {
    const long long m = cover_cardinality(idx, tm.base(), cap);
    DepthPartition depth;
    depth.idx = idx;
    depth.blocks.assign(static_cast<size_t>(m), {});
    for (long long s = 0; s < n; ++s)
      depth.blocks[restrict_window_word(system_depth, idx, tm.base(),
                                        static_cast<std::uint32_t>(s))]
          .push_back(static_cast<int>(s));
    family.depths.push_back(std::move(depth));
  }
  return family;
}

// --- system files --------------------------------------------------------

namespace {

std::string trimmed(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& w, int lineno, const char* what) {
  try {
    size_t used = 0;
    const int v = std::stoi(w, &used);
    if (used != w.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw parse_failure("line " + std::to_string(lineno) + ": expected " +
                        what + ", got '" + w + "'");
  }
}

}  // namespace

SystemFile parse_system_file(std::istream& in) {
  SystemFile sf;
  std::string line;
  int lineno = 0;
  int n_states = -1;
  bool have_map = false;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = trimmed(line);
    if (text.empty() || text[0] == '#') continue;
    if (text.rfind("states:", 0) == 0) {
      if (n_states >= 0)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": duplicate states line");
      n_states = parse_int(trimmed(text.substr(7)), lineno, "a state count");
      if (n_states < 1)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": state count must be positive");
    } else if (text.rfind("map:", 0) == 0) {
      if (n_states < 0)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": map before states");
      if (have_map)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": duplicate map line");
      std::istringstream is(text.substr(4));
      std::string w;
      while (is >> w) {
        const int v = parse_int(w, lineno, "a state");
        if (v < 0 || v >= n_states)
          throw parse_failure("line " + std::to_string(lineno) +
                              ": state " + w + " outside 0.." +
                              std::to_string(n_states - 1));
        sf.sys.map.push_back(v);
      }
      if (static_cast<int>(sf.sys.map.size()) != n_states)
        throw parse_failure("line " + std::to_string(lineno) + ": map lists " +
                            std::to_string(sf.sys.map.size()) +
                            " values for " + std::to_string(n_states) +
                            " states");
      have_map = true;
    } else if (text.rfind("cover", 0) == 0) {
      if (!have_map)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": cover before map");
      const size_t colon = text.find(':');
      if (colon == std::string::npos)
        throw parse_failure("line " + std::to_string(lineno) +
                            ": cover line is missing ':'");
      std::istringstream head(text.substr(5, colon - 5));
      std::string wi, wk, extra;
      if (!(head >> wi >> wk) || (head >> extra))
        throw parse_failure("line " + std::to_string(lineno) +
                            ": cover needs exactly two depth numbers");
      DepthPartition depth;
      depth.idx.i = parse_int(wi, lineno, "a left depth");
      depth.idx.k = parse_int(wk, lineno, "a right depth");
      const std::string body = text.substr(colon + 1);
      size_t pos = 0;
      while (pos < body.size()) {
        if (std::isspace(static_cast<unsigned char>(body[pos]))) {
          ++pos;
          continue;
        }
        if (body[pos] != '[')
          throw parse_failure("line " + std::to_string(lineno) +
                              ": expected '[' starting a block");
        const size_t close = body.find(']', pos);
        if (close == std::string::npos)
          throw parse_failure("line " + std::to_string(lineno) +
                              ": unclosed block");
        std::istringstream bs(body.substr(pos + 1, close - pos - 1));
        std::vector<int> block;
        std::string w;
        while (bs >> w) {
          const int v = parse_int(w, lineno, "a state");
          if (v < 0 || v >= n_states)
            throw parse_failure("line " + std::to_string(lineno) +
                                ": state " + w + " outside 0.." +
                                std::to_string(n_states - 1));
          block.push_back(v);
        }
        std::sort(block.begin(), block.end());
        depth.blocks.push_back(std::move(block));
        pos = close + 1;
      }
      if (depth.blocks.empty())
        throw parse_failure("line " + std::to_string(lineno) +
                            ": cover line has no blocks");
      sf.family.depths.push_back(std::move(depth));
    } else {
      throw parse_failure("line " + std::to_string(lineno) +
                          ": expected states:/map:/cover line");
    }
  }
  if (n_states < 0) throw parse_failure("system file has no states line");
  if (!have_map) throw parse_failure("system file has no map line");
  return sf;
}

SystemFile load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::bad_argument, "cannot open '" + path + "'");
  return parse_system_file(in);
}

std::string to_system_text(const SystemFile& sf) {
  std::ostringstream os;
  os << "states: " << sf.sys.size() << "\n";
  os << "map:";
  for (int v : sf.sys.map) os << ' ' << v;
  os << "\n";
  for (const DepthPartition& depth : sf.family.depths) {
    os << "cover " << depth.idx.i << ' ' << depth.idx.k << ":";
    for (const auto& block : depth.blocks) {
      os << " [";
      for (size_t t = 0; t < block.size(); ++t) {
        if (t) os << ' ';
        os << block[t];
      }
      os << ']';
    }
    os << "\n";
  }
  return os.str();
}

}  // namespace zipod
