#include "zipod/point.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace zipod {

// --- Cylinder ---------------------------------------------------------

Cylinder::Cylinder(int base_j, std::vector<ZSym> neg, std::vector<int> nonneg)
    : base_j_(base_j), neg_(std::move(neg)), nonneg_(std::move(nonneg)) {
  if (base_j_ < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j_));
  for (int d : nonneg_)
    if (d < 0 || d >= base_j_)
      fail(errc::digit_out_of_range,
           "cylinder digit " + std::to_string(d) + " outside base " +
               std::to_string(base_j_));
}

ZSym Cylinder::z_constraint(long long i) const {
  if (i < lo() || i >= 0)
    fail(errc::bad_argument,
         "position " + std::to_string(i) + " not constrained");
  return neg_[static_cast<size_t>(i - lo())];
}

int Cylinder::s_constraint(long long i) const {
  if (i < 0 || i > hi())
    fail(errc::bad_argument,
         "position " + std::to_string(i) + " not constrained");
  return nonneg_[static_cast<size_t>(i)];
}

int Cylinder::value_constraint(long long i) const {
  return i < 0 ? zval(z_constraint(i)) : s_constraint(i);
}

std::string Cylinder::to_string() const {
  std::ostringstream os;
  if (whole_space()) return "[whole space]";
  os << '[' << lo() << ".." << hi() << "]";
  for (ZSym z : neg_) os << ' ' << zsym_char(z);
  if (!nonneg_.empty()) {
    os << " ;";
    for (int d : nonneg_) os << ' ' << d;
  }
  return os.str();
}

bool Cylinder::operator<(const Cylinder& o) const {
  if (base_j_ != o.base_j_) return base_j_ < o.base_j_;
  if (neg_.size() != o.neg_.size()) return neg_.size() < o.neg_.size();
  if (nonneg_.size() != o.nonneg_.size())
    return nonneg_.size() < o.nonneg_.size();
  if (neg_ != o.neg_) return neg_ < o.neg_;
  return nonneg_ < o.nonneg_;
}

// --- canonicalization helpers -----------------------------------------

namespace {

// Shrinks a repeating word to its least period.
template <class T>
void shrink_to_minimal_period(std::vector<T>& w) {
  const size_t n = w.size();
  for (size_t p = 1; p < n; ++p) {
    if (n % p != 0) continue;
    bool repeats = true;
    for (size_t t = p; t < n && repeats; ++t) repeats = (w[t] == w[t % p]);
    if (repeats) {
      w.resize(p);
      return;
    }
  }
}

}  // namespace

// --- ZipPoint ----------------------------------------------------------

ZipPoint::ZipPoint(int base_j, RawPoint raw)
    : base_j_(base_j),
      left_tail_(std::move(raw.left_tail)),
      left_finite_(std::move(raw.left_finite)),
      right_finite_(std::move(raw.right_finite)),
      right_tail_(std::move(raw.right_tail)) {
  if (base_j_ < 2)
    fail(errc::bad_base,
         "base must be at least 2, got " + std::to_string(base_j_));
  if (left_tail_.empty())
    fail(errc::empty_tail, "left tail must have at least one letter");
  if (right_tail_.empty())
    fail(errc::empty_tail, "right tail must have at least one digit");
  for (int d : right_finite_)
    if (d < 0 || d >= base_j_)
      fail(errc::digit_out_of_range,
           "digit " + std::to_string(d) + " outside base " +
               std::to_string(base_j_));
  for (int d : right_tail_)
    if (d < 0 || d >= base_j_)
      fail(errc::digit_out_of_range,
           "tail digit " + std::to_string(d) + " outside base " +
               std::to_string(base_j_));

  shrink_to_minimal_period(left_tail_);
  shrink_to_minimal_period(right_tail_);

  // Absorb finite symbols that duplicate the adjacent tail letter; each
  // absorption shifts the tail's phase by one, expressed as a rotation.
  while (!right_finite_.empty() && right_finite_.back() == right_tail_.back()) {
    right_finite_.pop_back();
    std::rotate(right_tail_.begin(), right_tail_.end() - 1, right_tail_.end());
  }
  while (!left_finite_.empty() && left_finite_.front() == left_tail_.front()) {
    left_finite_.erase(left_finite_.begin());
    std::rotate(left_tail_.begin(), left_tail_.begin() + 1, left_tail_.end());
  }
}

ZSym ZipPoint::z_at(long long i) const {
  if (i >= 0)
    fail(errc::bad_argument,
         "z_at takes a negative index, got " + std::to_string(i));
  const long long l = static_cast<long long>(left_finite_.size());
  if (-i <= l) return left_finite_[static_cast<size_t>(i + l)];
  // Offset into the tail, counted leftwards from the tail's last letter.
  const long long o = (-l - 1) - i;
  const long long p = static_cast<long long>(left_tail_.size());
  return left_tail_[static_cast<size_t>(p - 1 - (o % p))];
}

int ZipPoint::s_at(long long i) const {
  if (i < 0)
    fail(errc::bad_argument,
         "s_at takes a nonnegative index, got " + std::to_string(i));
  const long long r = static_cast<long long>(right_finite_.size());
  if (i < r) return right_finite_[static_cast<size_t>(i)];
  const long long p = static_cast<long long>(right_tail_.size());
  return right_tail_[static_cast<size_t>((i - r) % p)];
}

int ZipPoint::value_at(long long i) const {
  return i < 0 ? zval(z_at(i)) : s_at(i);
}

ZipPoint zero_point(int base_j) {
  return ZipPoint(base_j, RawPoint{{ZSym::a}, {}, {}, {0}});
}

// --- literals ----------------------------------------------------------

namespace {

struct Token {
  enum Kind { lparen, rparen, semi, word } kind;
  std::string text;
};

std::vector<Token> lex_literal(const std::string& s) {
  std::vector<Token> out;
  size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '\t') {
      ++i;
    } else if (c == '(') {
      out.push_back({Token::lparen, "("});
      ++i;
    } else if (c == ')') {
      out.push_back({Token::rparen, ")"});
      ++i;
    } else if (c == ';') {
      out.push_back({Token::semi, ";"});
      ++i;
    } else if (std::isalnum(static_cast<unsigned char>(c))) {
      size_t start = i;
      while (i < s.size() && std::isalnum(static_cast<unsigned char>(s[i])))
        ++i;
      out.push_back({Token::word, s.substr(start, i - start)});
    } else {
      throw parse_failure(std::string("unexpected character '") + c +
                          "' in point literal");
    }
  }
  return out;
}

int parse_digit_word(const std::string& w, int base_j) {
  for (char c : w)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw parse_failure("expected a digit, got '" + w + "'");
  int v = 0;
  try {
    v = std::stoi(w);
  } catch (const std::exception&) {
    throw parse_failure("digit '" + w + "' out of range");
  }
  if (v < 0 || v >= base_j)
    throw parse_failure("digit " + w + " outside base " +
                        std::to_string(base_j));
  return v;
}

ZSym parse_letter_word(const std::string& w) {
  if (w.size() != 1) throw parse_failure("expected letter a or b, got '" + w + "'");
  return zsym_from_char(w[0]);
}

}  // namespace

ZipPoint parse_point(int base_j, const std::string& literal) {
  // Grammar: '(' letters ')' letters ';' digits '(' digits ')'
  const std::vector<Token> toks = lex_literal(literal);
  size_t t = 0;
  auto expect = [&](Token::Kind k, const char* what) {
    if (t >= toks.size() || toks[t].kind != k)
      throw parse_failure(std::string("point literal: expected ") + what);
    ++t;
  };
  RawPoint raw;
  expect(Token::lparen, "'(' opening the left tail");
  while (t < toks.size() && toks[t].kind == Token::word)
    raw.left_tail.push_back(parse_letter_word(toks[t++].text));
  expect(Token::rparen, "')' closing the left tail");
  while (t < toks.size() && toks[t].kind == Token::word)
    raw.left_finite.push_back(parse_letter_word(toks[t++].text));
  expect(Token::semi, "';' at the origin");
  while (t < toks.size() && toks[t].kind == Token::word)
    raw.right_finite.push_back(parse_digit_word(toks[t++].text, base_j));
  expect(Token::lparen, "'(' opening the right tail");
  while (t < toks.size() && toks[t].kind == Token::word)
    raw.right_tail.push_back(parse_digit_word(toks[t++].text, base_j));
  expect(Token::rparen, "')' closing the right tail");
  if (t != toks.size())
    throw parse_failure("point literal has trailing tokens");
  if (raw.left_tail.empty())
    throw parse_failure("left tail must name at least one letter");
  if (raw.right_tail.empty())
    throw parse_failure("right tail must name at least one digit");
  return ZipPoint(base_j, std::move(raw));
}

std::string to_literal(const ZipPoint& p) {
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < p.left_tail().size(); ++i) {
    if (i) os << ' ';
    os << zsym_char(p.left_tail()[i]);
  }
  os << ')';
  for (ZSym z : p.left_finite()) os << ' ' << zsym_char(z);
  os << " ;";
  for (int d : p.right_finite()) os << ' ' << d;
  os << " (";
  for (size_t i = 0; i < p.right_tail().size(); ++i) {
    if (i) os << ' ';
    os << p.right_tail()[i];
  }
  os << ')';
  return os.str();
}

// --- metric ------------------------------------------------------------

std::optional<long long> first_difference(const ZipPoint& p,
                                          const ZipPoint& q) {
  if (p.base() != q.base())
    fail(errc::base_mismatch, "points over bases " + std::to_string(p.base()) +
                                  " and " + std::to_string(q.base()));
  // Beyond the finite parts both sequences are purely periodic, so
  // agreement through one full joint period implies agreement everywhere.
  const long long right_bound =
      static_cast<long long>(
          std::max(p.right_finite().size(), q.right_finite().size())) +
      std::lcm(static_cast<long long>(p.right_tail().size()),
               static_cast<long long>(q.right_tail().size()));
  const long long left_bound =
      static_cast<long long>(
          std::max(p.left_finite().size(), q.left_finite().size())) +
      std::lcm(static_cast<long long>(p.left_tail().size()),
               static_cast<long long>(q.left_tail().size()));
  const long long bound = std::max(right_bound, left_bound);
  for (long long m = 0; m <= bound; ++m) {
    if (m <= right_bound && p.s_at(m) != q.s_at(m)) return m;
    if (m >= 1 && m <= left_bound && p.z_at(-m) != q.z_at(-m)) return m;
  }
  return std::nullopt;
}

long long DyadicDistance::exponent() const {
  if (zero_) fail(errc::bad_argument, "zero distance has no exponent");
  return exp_;
}

std::string DyadicDistance::to_string() const {
  if (zero_) return "0";
  if (exp_ == 0) return "1";
  if (exp_ <= 62)
    return "1/" + std::to_string(1ULL << exp_);
  return "1/2^" + std::to_string(exp_);
}

bool DyadicDistance::operator<(const DyadicDistance& o) const {
  if (zero_) return !o.zero_;
  if (o.zero_) return false;
  return exp_ > o.exp_;
}

DyadicDistance distance(const ZipPoint& p, const ZipPoint& q) {
  const std::optional<long long> m = first_difference(p, q);
  if (!m) return DyadicDistance::zero();
  return DyadicDistance::pow2(*m);
}

bool in_cylinder(const ZipPoint& p, const Cylinder& c) {
  if (p.base() != c.base())
    fail(errc::base_mismatch, "point over base " + std::to_string(p.base()) +
                                  ", cylinder over base " +
                                  std::to_string(c.base()));
  for (long long i = c.lo(); i <= -1; ++i)
    if (p.z_at(i) != c.z_constraint(i)) return false;
  for (long long i = 0; i <= c.hi(); ++i)
    if (p.s_at(i) != c.s_constraint(i)) return false;
  return true;
}

}  // namespace zipod
