#include "doctest.h"
#include "qlab/progression.hpp"

#include <vector>

using namespace qlab;

namespace {

std::vector<Int> ints(std::initializer_list<long> xs) {
  return std::vector<Int>(xs.begin(), xs.end());
}

}  // namespace

TEST_CASE("find_progression returns the first progression in (first, difference) order") {
  SetSpec spec = make_interval_union(2, 10);
  auto p3 = find_progression(spec, 10000, 3);
  REQUIRE(p3.has_value());
  CHECK(*p3 == Progression{1, 9, 3});

  auto p50 = find_progression(spec, 10000, 50);
  REQUIRE(p50.has_value());
  CHECK(*p50 == Progression{100, 1, 50});

  auto pexp = find_progression(make_explicit(ints({4, 8, 12})), 12, 3);
  REQUIRE(pexp.has_value());
  CHECK(*pexp == Progression{4, 4, 3});
}

TEST_CASE("find_progression results are genuine progressions") {
  SetSpec spec = make_leading_digit(10, {3, 7});
  for (long len : {3L, 4L, 5L}) {
    auto p = find_progression(spec, 5000, len);
    REQUIRE(p.has_value());
    CHECK(p->length == len);
    CHECK(p->difference >= 1);
    for (Int i = 0; i < p->length; ++i) {
      CHECK(contains(spec, p->first + i * p->difference));
    }
  }
}

TEST_CASE("a length-L progression implies one of length L-1") {
  SetSpec spec = make_interval_union(2, 10);
  for (long len = 4; len <= 12; ++len) {
    if (find_progression(spec, 2000, len).has_value()) {
      CHECK(find_progression(spec, 2000, len - 1).has_value());
    }
  }
}

TEST_CASE("the 2-3 power union has no 3-term progression") {
  SetSpec pp = make_union(make_geometric_powers(2, 2),
                          make_geometric_powers(3, 2));
  CHECK(!find_progression(pp, 1000000, 3).has_value());
}

TEST_CASE("find_progression validation") {
  SetSpec spec = make_interval_union(2, 10);
  CHECK_THROWS_WITH_AS(find_progression(spec, 100, 2),
                       "find_progression: length must be >= 3", domain_error);
  CHECK_THROWS_WITH_AS(find_progression(spec, 2, 3),
                       "find_progression: upto must be >= length",
                       domain_error);
}

TEST_CASE("longest_consecutive_run") {
  auto [start, len] = longest_consecutive_run(make_interval_union(2, 10), 10000);
  CHECK(start == 1000);
  CHECK(len == 1000);

  // all runs are singletons; ties go to the smallest start
  auto [pstart, plen] = longest_consecutive_run(make_geometric_powers(2, 1), 100);
  CHECK(pstart == 2);
  CHECK(plen == 1);

  auto [estart, elen] = longest_consecutive_run(make_explicit(ints({5, 6, 7, 9})), 100);
  CHECK(estart == 5);
  CHECK(elen == 3);

  // the bound truncates the winning run
  auto [tstart, tlen] = longest_consecutive_run(make_interval_union(2, 10), 1499);
  CHECK(tstart == 1000);
  CHECK(tlen == 500);

  CHECK_THROWS_WITH_AS(longest_consecutive_run(make_interval_union(2, 10), 0),
                       "longest_consecutive_run: upto must be >= 1",
                       domain_error);
  CHECK_THROWS_WITH_AS(longest_consecutive_run(make_explicit(ints({5})), 4),
                       "longest_consecutive_run: no members up to bound",
                       domain_error);
}

TEST_CASE("the no-progression scan accounts for every pair") {
  ThreeApReport small = verify_no_3ap_proof_cases(81);
  CHECK(small.bound == 81);
  CHECK(small.member_count == 8);
  CHECK(small.pairs_checked == 28);
  CHECK(small.power2_led_eliminated == 20);
  CHECK(small.power3_led_eliminated == 8);
  CHECK(small.power2_led_eliminated + small.power3_led_eliminated ==
        small.pairs_checked);
  CHECK(small.aps_found == 0);

  ThreeApReport big = verify_no_3ap_proof_cases(1000000);
  CHECK(big.member_count == 29);
  CHECK(big.pairs_checked == 406);
  CHECK(big.power2_led_eliminated == 259);
  CHECK(big.power3_led_eliminated == 147);
  CHECK(big.aps_found == 0);

  CHECK_THROWS_AS(verify_no_3ap_proof_cases(15), domain_error);
}
