#include <doctest.h>

#include "salemparry/expansion.hpp"

using namespace salem;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

PeriodicWord word(std::initializer_list<long> prefix, std::initializer_list<long> period) {
  return {ints(prefix), ints(period)};
}

}  // namespace

TEST_CASE("expansion of one for simple Parry numbers uses the left limit") {
  ExpansionRecord golden = expand_one(int_poly({-1, -1, 1}), 100);
  CHECK(golden.status == ExpansionStatus::periodic);
  CHECK(golden.m == 0);
  CHECK(golden.p == 2);
  CHECK(golden.word() == word({}, {1, 0}));

  ExpansionRecord silver = expand_one(int_poly({-1, -2, 1}), 100);
  CHECK(silver.word() == word({}, {2, 0}));

  ExpansionRecord three = expand_one(int_poly({-3, 1}), 100);
  CHECK(three.m == 0);
  CHECK(three.p == 1);
  CHECK(three.word() == word({}, {2}));
}

TEST_CASE("expansion of the (1,119) sextic") {
  ExpansionRecord r = expand_one(int_poly({1, -8, 10, -15, 10, -8, 1}), 1000000);
  REQUIRE(r.status == ExpansionStatus::periodic);
  CHECK(r.m == 1);
  CHECK(r.p == 119);
  CHECK(r.digits.front() == 6);
  CHECK(check_self_lex(r.word()));
  CHECK(r.word().canonical() == r.word());
}

TEST_CASE("cap and errors") {
  ExpansionRecord r = expand_one(int_poly({1, -8, 10, -15, 10, -8, 1}), 10);
  CHECK(r.status == ExpansionStatus::cap_exceeded);
  CHECK(r.p == 0);
  CHECK(r.digits.size() <= 10);
  CHECK_THROWS_AS(r.word(), DomainError);

  CHECK_THROWS_AS(expand_one(int_poly({-1, 2}), 10), DomainError);
  CHECK_THROWS_AS(expand_one(int_poly({1, 1}), 10), DomainError);
  CHECK_THROWS_AS(expand_one(int_poly({1, 0, 1}), 10), DomainError);
  CHECK_THROWS_AS(expand_one(int_poly({-1, 1}), 10), DomainError);
}

TEST_CASE("periodic word helpers") {
  PeriodicWord w = word({1, 0}, {1, 0, 1, 0});
  CHECK(w.canonical() == word({}, {1, 0}));
  CHECK(word({3, 2}, {1, 2}).canonical() == word({3}, {2, 1}));
  CHECK(w.at(0) == 1);
  CHECK(w.at(5) == 0);
  CHECK(compare_words(word({}, {1, 0}), 0, word({}, {1, 0}), 2) == 0);
  CHECK(compare_words(word({}, {1, 0}), 1, word({}, {1, 0}), 0) == -1);
  CHECK_THROWS_AS(word({1}, {}).canonical(), DomainError);
}

TEST_CASE("lexicographic conditions") {
  CHECK(check_self_lex(word({}, {1, 0})));
  CHECK_FALSE(check_self_lex(word({}, {1, 1})));
  CHECK(check_self_lex(word({2}, {1})));
  CHECK_FALSE(check_self_lex(word({1}, {2})));

  PeriodicWord one = word({}, {1, 0});
  CHECK(is_admissible(ints({1, 0}), one));
  CHECK_FALSE(is_admissible(ints({1, 1}), one));
  CHECK(is_admissible(ints({0, 0, 1}), one));
  CHECK(is_admissible({}, one));
}

TEST_CASE("expansion states satisfy the conservation identity") {
  IntPolynomial p = int_poly({1, -7, -3, -11, -3, -7, 1});
  ExpansionRecord r = expand_one(p, 1000);
  auto states = expansion_states(p, 40);
  REQUIRE(states.size() == 41);
  CHECK(states[0] == int_poly({1}));
  PeriodicWord w = r.word();
  std::vector<Integer> prefix;
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(conservation_holds(p, prefix, states[n]));
    prefix.push_back(w.at(n));
  }
  std::vector<Integer> wrong(r.digits.begin(), r.digits.begin() + 5);
  wrong[2] += 1;
  CHECK_FALSE(conservation_holds(p, wrong, states[5]));
}
