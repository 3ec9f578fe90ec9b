#include "zipod/alphabet.hpp"

#include <algorithm>
#include <sstream>

namespace zipod {

const char* errc_name(errc code) {
  switch (code) {
    case errc::bad_base: return "bad_base";
    case errc::bad_table_length: return "bad_table_length";
    case errc::not_surjective: return "not_surjective";
    case errc::digit_out_of_range: return "digit_out_of_range";
    case errc::empty_tail: return "empty_tail";
    case errc::base_mismatch: return "base_mismatch";
    case errc::equal_points: return "equal_points";
    case errc::overflow: return "overflow";
    case errc::bad_window: return "bad_window";
    case errc::bad_argument: return "bad_argument";
    case errc::not_bijective: return "not_bijective";
    case errc::not_minimal: return "not_minimal";
    case errc::not_minimal_input: return "not_minimal_input";
    case errc::period_mismatch: return "period_mismatch";
    case errc::malformed_family: return "malformed_family";
    case errc::verification_failed: return "verification_failed";
    case errc::parse: return "parse";
  }
  return "unknown";
}

void fail(errc code, const std::string& what) { throw error(code, what); }

ZSym zsym_from_value(int v) {
  if (v != 0 && v != 1)
    fail(errc::digit_out_of_range,
         "letter value must be 0 (a) or 1 (b), got " + std::to_string(v));
  return v == 0 ? ZSym::a : ZSym::b;
}

char zsym_char(ZSym z) { return z == ZSym::a ? 'a' : 'b'; }

ZSym zsym_from_char(char c) {
  if (c == 'a') return ZSym::a;
  if (c == 'b') return ZSym::b;
  throw parse_failure(std::string("expected letter 'a' or 'b', got '") + c +
                      "'");
}

TransitionMap::TransitionMap(int base_j, std::vector<ZSym> table)
    : base_j_(base_j), table_(std::move(table)) {
  if (base_j_ < 2)
    fail(errc::bad_base, "base must be at least 2, got " +
                             std::to_string(base_j_));
  if (static_cast<int>(table_.size()) != base_j_)
    fail(errc::bad_table_length,
         "transition table has " + std::to_string(table_.size()) +
             " entries for base " + std::to_string(base_j_));
  const bool has_a = std::find(table_.begin(), table_.end(), ZSym::a) != table_.end();
  const bool has_b = std::find(table_.begin(), table_.end(), ZSym::b) != table_.end();
  if (!has_a || !has_b)
    fail(errc::not_surjective,
         std::string("transition map never outputs '") +
             (has_a ? 'b' : 'a') + "'");
}

ZSym TransitionMap::apply(int digit) const {
  if (digit < 0 || digit >= base_j_)
    fail(errc::digit_out_of_range,
         "digit " + std::to_string(digit) + " outside base " +
             std::to_string(base_j_));
  return table_[static_cast<size_t>(digit)];
}

std::vector<int> TransitionMap::preimage(ZSym z) const {
  std::vector<int> out;
  for (int s = 0; s < base_j_; ++s)
    if (table_[static_cast<size_t>(s)] == z) out.push_back(s);
  return out;
}

std::string TransitionMap::to_string() const {
  std::ostringstream os;
  for (int s = 0; s < base_j_; ++s) {
    if (s) os << ',';
    os << s << ':' << zsym_char(table_[static_cast<size_t>(s)]);
  }
  return os.str();
}

TransitionMap parse_tau(int base_j, const std::string& text) {
  if (base_j < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j));
  std::vector<ZSym> table(static_cast<size_t>(base_j), ZSym::a);
  std::vector<bool> seen(static_cast<size_t>(base_j), false);
  auto trim = [](std::string s) {
    const size_t lo = s.find_first_not_of(" \t");
    if (lo == std::string::npos) return std::string();
    return s.substr(lo, s.find_last_not_of(" \t") - lo + 1);
  };
  size_t pos = 0;
  int entries = 0;
  while (pos < text.size()) {
    size_t comma = text.find(',', pos);
    std::string item = trim(text.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos));
    pos = comma == std::string::npos ? text.size() : comma + 1;
    size_t colon = item.find(':');
    if (colon == std::string::npos)
      throw parse_failure("tau entry '" + item + "' is missing ':'");
    std::string digit_text = trim(item.substr(0, colon));
    std::string letter_text = trim(item.substr(colon + 1));
    int digit = 0;
    try {
      size_t used = 0;
      digit = std::stoi(digit_text, &used);
      if (used != digit_text.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw parse_failure("tau entry '" + item + "' has a malformed digit");
    }
    if (letter_text.size() != 1)
      throw parse_failure("tau entry '" + item + "' must map to one letter");
    if (digit < 0 || digit >= base_j)
      throw parse_failure("tau entry digit " + std::to_string(digit) +
                          " outside base " + std::to_string(base_j));
    if (seen[static_cast<size_t>(digit)])
      throw parse_failure("tau maps digit " + std::to_string(digit) +
                          " twice");
    seen[static_cast<size_t>(digit)] = true;
    table[static_cast<size_t>(digit)] = zsym_from_char(letter_text[0]);
    ++entries;
  }
  if (entries != base_j)
    throw parse_failure("tau text covers " + std::to_string(entries) +
                        " digits, base " + std::to_string(base_j) +
                        " needs all of 0.." + std::to_string(base_j - 1));
  return TransitionMap(base_j, std::move(table));
}

std::vector<TransitionMap> all_surjective_maps(int base_j) {
  if (base_j < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j));
  if (base_j > 20) fail(errc::overflow, "map enumeration capped at base 20");
  std::vector<TransitionMap> out;
  const unsigned long long total = 1ULL << base_j;
  for (unsigned long long bits = 0; bits < total; ++bits) {
    if (bits == 0 || bits == total - 1) continue;  // constant maps
    std::vector<ZSym> table;
    table.reserve(static_cast<size_t>(base_j));
    for (int s = 0; s < base_j; ++s)
      table.push_back((bits >> s) & 1 ? ZSym::b : ZSym::a);
    out.emplace_back(base_j, std::move(table));
  }
  return out;
}

GeneralTransitionMap::GeneralTransitionMap(int z_size, int s_size,
                                           std::vector<int> table)
    : z_size_(z_size), s_size_(s_size), table_(std::move(table)) {
  if (z_size_ < 1 || s_size_ < 1 || z_size_ > s_size_)
    fail(errc::bad_base, "need 1 <= |Z| <= |S|, got |Z|=" +
                             std::to_string(z_size_) + " |S|=" +
                             std::to_string(s_size_));
  if (static_cast<int>(table_.size()) != s_size_)
    fail(errc::bad_table_length,
         "transition table has " + std::to_string(table_.size()) +
             " entries for |S|=" + std::to_string(s_size_));
  std::vector<bool> hit(static_cast<size_t>(z_size_), false);
  for (int v : table_) {
    if (v < 0 || v >= z_size_)
      fail(errc::digit_out_of_range,
           "letter " + std::to_string(v) + " outside |Z|=" +
               std::to_string(z_size_));
    hit[static_cast<size_t>(v)] = true;
  }
  for (int z = 0; z < z_size_; ++z)
    if (!hit[static_cast<size_t>(z)])
      fail(errc::not_surjective,
           "letter " + std::to_string(z) + " has no preimage");
}

int GeneralTransitionMap::apply(int s) const {
  if (s < 0 || s >= s_size_)
    fail(errc::digit_out_of_range,
         "digit " + std::to_string(s) + " outside |S|=" +
             std::to_string(s_size_));
  return table_[static_cast<size_t>(s)];
}

std::vector<int> GeneralTransitionMap::preimage(int z) const {
  if (z < 0 || z >= z_size_)
    fail(errc::digit_out_of_range,
         "letter " + std::to_string(z) + " outside |Z|=" +
             std::to_string(z_size_));
  std::vector<int> out;
  for (int s = 0; s < s_size_; ++s)
    if (table_[static_cast<size_t>(s)] == z) out.push_back(s);
  return out;
}

}  // namespace zipod
