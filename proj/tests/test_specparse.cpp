#include "doctest.h"
#include "qlab/gems.hpp"
#include "qlab/specparse.hpp"

#include <random>
#include <string>

using namespace qlab;

TEST_CASE("parse and render agree on every built-in set") {
  for (const NamedSpec& ns : builtin_specs()) {
    std::string text = render_spec(ns.spec);
    SetSpec back = parse_spec(text);
    CHECK(back == ns.spec);
    CHECK(render_spec(back) == text);
  }
}

TEST_CASE("the grammar accepts each constructor") {
  CHECK(parse_spec("interval-union(a=2, b=5)") == make_interval_union(2, 5));
  CHECK(parse_spec("interval-union(a=3/2, b=2)") ==
        make_interval_union(Rat(3, 2), 2));
  CHECK(parse_spec("leading-digit(base=10, digits={3,7})") ==
        make_leading_digit(10, {3, 7}));
  CHECK(parse_spec("powers(base=2, min-exp=2)") == make_geometric_powers(2, 2));
  CHECK(parse_spec("factorial(A)") ==
        make_factorial_blocks(FactorialPart::A));
  CHECK(parse_spec("factorial(B)") ==
        make_factorial_blocks(FactorialPart::B));
  CHECK(parse_spec("union(powers(base=2, min-exp=2); powers(base=3, min-exp=2))") ==
        make_union(make_geometric_powers(2, 2), make_geometric_powers(3, 2)));
  CHECK(parse_spec("explicit(4,8,12)") ==
        make_explicit({Int(4), Int(8), Int(12)}));
}

TEST_CASE("whitespace never matters between tokens") {
  CHECK(parse_spec("  interval-union ( a = 2 , b = 5 )  ") ==
        make_interval_union(2, 5));
  CHECK(parse_spec("leading-digit(base=5,digits={3,4})") ==
        make_leading_digit(5, {3, 4}));
  CHECK(parse_spec("union( factorial(A) ;factorial( B ))") ==
        make_union(make_factorial_blocks(FactorialPart::A),
                   make_factorial_blocks(FactorialPart::B)));
}

TEST_CASE("numbers parse exactly, decimals included") {
  CHECK(parse_spec("interval-union(a=1.25, b=1.625)") ==
        make_interval_union(Rat(5, 4), Rat(13, 8)));
  CHECK(parse_spec("delta-family(0.4)") ==
        make_interval_union(Rat(5, 4), Rat(13, 8)));
  CHECK(parse_spec("delta-family(1/4)") == make_interval_union(2, 5));
  CHECK(parse_spec("delta-family(0)") == make_geometric_powers(2, 1));
}

TEST_CASE("syntax errors carry the offset of the offending byte") {
  auto position_of = [](const std::string& text) -> std::size_t {
    try {
      parse_spec(text);
    } catch (const parse_error& e) {
      return e.position();
    }
    FAIL("expected a parse_error");
    return 0;
  };
  CHECK(position_of("") == 0);
  CHECK(position_of("42") == 0);                             // not a name
  CHECK(position_of("frobnicate(1)") == 0);                  // unknown name
  CHECK(position_of("interval-union[a=2, b=5]") == 14);      // wrong bracket
  CHECK(position_of("interval-union(a=2 b=5)") == 19);       // missing comma
  CHECK(position_of("powers(base=2, min-exp=0) x") == 26);   // trailing junk
  CHECK(position_of("factorial(C)") == 10);
  CHECK(position_of("explicit()") == 9);

  CHECK_THROWS_WITH(parse_spec("interval-union(a=2 b=5)"),
                    "expected ',' (at position 19)");
  CHECK_THROWS_WITH(parse_spec("powers(base=2, min-exp=0) x"),
                    "unexpected trailing characters (at position 26)");
}

TEST_CASE("semantic errors point at the constructor") {
  auto check_semantic = [](const std::string& text, const char* msg,
                           std::size_t open) {
    try {
      parse_spec(text);
      FAIL("expected a parse_error");
    } catch (const parse_error& e) {
      CHECK(e.position() == open);
      CHECK(std::string(e.what()) ==
            std::string(msg) + " (at position " + std::to_string(open) + ")");
    }
  };
  check_semantic("interval-union(a=1, b=5)", "interval-union: need a > 1", 14);
  check_semantic("interval-union(a=3, b=2)", "interval-union: need b >= a", 14);
  check_semantic("leading-digit(base=10, digits={0})",
                 "leading-digit: digit out of range [1, base-1]", 13);
  check_semantic("powers(base=1, min-exp=0)", "powers: base must be >= 2", 6);
  check_semantic("explicit(3,2)", "explicit: elements must be strictly increasing", 8);
  check_semantic("delta-family(1/2)", "delta family: need 0 <= delta < 1/2", 12);
  check_semantic("interval-union(a=1/0, b=5)",
                 "rat_from_string: zero denominator", 17);
}

TEST_CASE("random garbage is rejected with a parse_error, never anything else") {
  const std::string pool =
      "abcdefghijklmnopqrstuvwxyz"
      "0123456789(){}=,;/.+-_ ABU";
  std::mt19937_64 rng(91);
  int parsed = 0;
  for (int trial = 0; trial < 2000; ++trial) {
    std::string text;
    std::size_t len = rng() % 40;
    for (std::size_t i = 0; i < len; ++i) text += pool[rng() % pool.size()];
    // splice in real fragments sometimes so deeper paths get exercised
    if (trial % 5 == 0) text = "interval-union(" + text;
    if (trial % 7 == 0) text = "union(factorial(A); " + text;
    try {
      parse_spec(text);
      ++parsed;
    } catch (const parse_error& e) {
      CHECK(e.position() <= text.size());
    }
  }
  // the pool makes accidental full parses possible but rare
  CHECK(parsed <= 5);
}
