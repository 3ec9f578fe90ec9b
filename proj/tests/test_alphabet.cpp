#include <set>
#include <vector>

#include "doctest.h"
#include "zipod/alphabet.hpp"

using namespace zipod;

TEST_CASE("letters carry their arithmetic values") {
  CHECK(zval(ZSym::a) == 0);
  CHECK(zval(ZSym::b) == 1);
  CHECK(zsym_from_value(1) == ZSym::b);
  CHECK(zsym_char(ZSym::a) == 'a');
  CHECK(zsym_from_char('b') == ZSym::b);
  CHECK_THROWS_AS(zsym_from_value(2), error);
  CHECK_THROWS_AS(zsym_from_char('c'), parse_failure);
}

TEST_CASE("transition map over four digits") {
  TransitionMap tm(4, {ZSym::b, ZSym::a, ZSym::a, ZSym::b});
  CHECK(tm.base() == 4);
  CHECK(tm.apply(0) == ZSym::b);
  CHECK(tm.apply(1) == ZSym::a);
  CHECK(tm.apply(2) == ZSym::a);
  CHECK(tm.apply(3) == ZSym::b);
  CHECK(tm.carry_bit(0) == 1);
  CHECK(tm.carry_bit(1) == 0);
  CHECK(tm.preimage(ZSym::a) == std::vector<int>{1, 2});
  CHECK(tm.preimage(ZSym::b) == std::vector<int>{0, 3});
  CHECK(tm.to_string() == "0:b,1:a,2:a,3:b");
  CHECK_THROWS_AS(tm.apply(4), error);
  CHECK_THROWS_AS(tm.apply(-1), error);
}

TEST_CASE("construction rejects bad tables") {
  CHECK_THROWS_AS(TransitionMap(1, {ZSym::a}), error);
  CHECK_THROWS_AS(TransitionMap(3, {ZSym::a, ZSym::b}), error);
  // constant maps miss a letter
  CHECK_THROWS_AS(TransitionMap(3, {ZSym::a, ZSym::a, ZSym::a}), error);
  CHECK_THROWS_AS(TransitionMap(2, {ZSym::b, ZSym::b}), error);
  try {
    TransitionMap(3, {ZSym::b, ZSym::b, ZSym::b});
    FAIL("expected a throw");
  } catch (const error& e) {
    CHECK(e.code() == errc::not_surjective);
  }
}

TEST_CASE("tau text round trip") {
  const TransitionMap tm = parse_tau(3, "0:a,1:a,2:b");
  CHECK(tm.apply(2) == ZSym::b);
  CHECK(parse_tau(3, tm.to_string()) == tm);
  CHECK(parse_tau(2, " 0 : b , 1 : a ") == TransitionMap(2, {ZSym::b, ZSym::a}));

  CHECK_THROWS_AS(parse_tau(2, "0:b"), parse_failure);            // digit 1 missing
  CHECK_THROWS_AS(parse_tau(2, "0:a,0:b"), parse_failure);        // duplicate digit
  CHECK_THROWS_AS(parse_tau(2, "0:a,1:x"), parse_failure);        // bad letter
  CHECK_THROWS_AS(parse_tau(2, "0:a,2:b"), parse_failure);        // digit out of base
  CHECK_THROWS_AS(parse_tau(2, "0:a 1:b"), parse_failure);        // missing comma
  CHECK_THROWS_AS(parse_tau(2, ""), parse_failure);
}

TEST_CASE("surjective map sweep") {
  CHECK(all_surjective_maps(2).size() == 2);
  CHECK(all_surjective_maps(3).size() == 6);
  CHECK(all_surjective_maps(4).size() == 14);

  // deterministic order: the table read as a binary counter, constants skipped
  const auto maps2 = all_surjective_maps(2);
  CHECK(maps2[0].to_string() == "0:b,1:a");
  CHECK(maps2[1].to_string() == "0:a,1:b");

  for (int j = 2; j <= 5; ++j) {
    std::set<std::string> seen;
    for (const auto& tm : all_surjective_maps(j)) {
      CHECK(seen.insert(tm.to_string()).second);
      // the two preimage fibers partition the digit set
      const auto pa = tm.preimage(ZSym::a);
      const auto pb = tm.preimage(ZSym::b);
      CHECK(!pa.empty());
      CHECK(!pb.empty());
      std::set<int> all(pa.begin(), pa.end());
      all.insert(pb.begin(), pb.end());
      CHECK(static_cast<int>(all.size()) == j);
      CHECK(static_cast<int>(pa.size() + pb.size()) == j);
    }
  }
}

TEST_CASE("general transition maps") {
  GeneralTransitionMap g(2, 3, {0, 0, 1});
  CHECK(g.z_size() == 2);
  CHECK(g.s_size() == 3);
  CHECK(g.apply(1) == 0);
  CHECK(g.preimage(0) == std::vector<int>{0, 1});
  CHECK(g.preimage(1) == std::vector<int>{2});

  CHECK_THROWS_AS(GeneralTransitionMap(3, 2, {0, 1}), error);     // |Z| > |S|
  CHECK_THROWS_AS(GeneralTransitionMap(2, 3, {0, 0, 0}), error);  // misses letter 1
  CHECK_THROWS_AS(GeneralTransitionMap(2, 3, {0, 2, 1}), error);  // letter out of range
}
