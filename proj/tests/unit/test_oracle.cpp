#include "doctest.h"
#include "hurwitz/cutjoin.hpp"
#include "hurwitz/errors.hpp"
#include "hurwitz/oracle.hpp"

using namespace hurwitz;

TEST_CASE("permutation oracle reference values") {
  CHECK(count_connected_covers(2, 0, {3, 1}) == 3);
  CHECK(count_connected_covers(2, 0, {2}) == make_rational(1, 2));
  CHECK(count_connected_covers(1, 0, {1, 1, 1}) == 4);
  CHECK(count_connected_covers(3, 0, {3}) == make_rational(1, 3));
  CHECK(count_connected_covers(1, 1, {2}) == hurwitz_raw(1, 1, {2}));
  CHECK_THROWS_AS(count_connected_covers(2, 0, {2, 1}), Error);
  CHECK_THROWS_AS(count_connected_covers(1, 0, {7}), Error);
  try {
    count_connected_covers(1, 2, {2});
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LimitExceeded);
  }
}

TEST_CASE("fatgraph oracle reference values") {
  CHECK(count_fatgraphs(2, 0, {3, 1}) == 3);
  CHECK(count_fatgraphs(2, 0, {2, 1}) == 0);
  CHECK(count_fatgraphs(2, 0, {2, 2}) == count_connected_covers(2, 0, {2, 2}) * 2);
  CHECK(count_fatgraphs(1, 0, {1, 1}) == count_connected_covers(1, 0, {1, 1}) * 2);
  CHECK_THROWS_AS(count_fatgraphs(2, 0, {2}), Error);
}

TEST_CASE("oracles agree with cut-and-join on small instances") {
  for (int a = 1; a <= 3; ++a) {
    for (const auto& mu : partitions_up_to(5)) {
      if (mu.sum() % a != 0) continue;
      for (int g = 0; g <= 1; ++g) {
        const long m = *branch_count(a, g, mu);
        if (m > 3) continue;
        CAPTURE(a);
        CAPTURE(g);
        CAPTURE(mu.to_string());
        const Rational covers = count_connected_covers(a, g, mu);
        CHECK(covers == hurwitz_raw(a, g, mu));
        if (m >= 1) CHECK(count_fatgraphs(a, g, mu) == covers * Rational(mu.aut_order()));
      }
    }
  }
}

TEST_CASE("cactus trees") {
  CHECK(count_cactus_trees_bruteforce({1, 1, 1, 1}) == 16);
  CHECK(count_cactus_trees_bruteforce({5}) == 24);
  CHECK(count_cactus_trees_bruteforce({1, 2}) == 6);
  CHECK(cactus_formula({1, 1, 1, 1}) == 16);
  CHECK(cactus_formula({2, 2}) == 12);
  CHECK(cactus_formula({5}) == 24);
  CHECK(count_cactus_trees_bruteforce({2, 2}) == 12);
  for (const auto& nu : partitions_up_to(6)) {
    CAPTURE(nu.to_string());
    const Integer brute = count_cactus_trees_bruteforce(nu);
    CHECK(Rational(brute) == cactus_formula(nu));
    CHECK(brute == count_cactus_trees_direct(nu));
  }
  CHECK_THROWS_AS(count_cactus_trees_bruteforce({4, 4}), Error);
}
