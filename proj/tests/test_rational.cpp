#include <doctest.h>

#include "mlc/error.hpp"
#include "mlc/rational.hpp"
#include "mlc/subset.hpp"

using namespace mlc;

TEST_CASE("parse_rational accepts integers and fractions") {
  CHECK(parse_rational("7") == 7);
  CHECK(parse_rational("-3/6") == Rational(-1, 2));
  CHECK(parse_rational(" +4/2 ") == 2);
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-0")) == "0");
}

TEST_CASE("parse_rational rejects malformed text") {
  for (const char* bad : {"", "/", "1/", "a", "1/0", "1/-2", "1.5", "--1"}) {
    CAPTURE(bad);
    try {
      parse_rational(bad);
      FAIL("expected a parse error");
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::kParseError);
    }
  }
}

TEST_CASE("error messages carry the code name") {
  const Error e(ErrorCode::kNotPrime, "6");
  CHECK(std::string(e.what()) == "NotPrime: 6");
  CHECK(error_code_name(ErrorCode::kAxiomF3Violation) == "AxiomF3Violation");
}

TEST_CASE("binomial and dot") {
  CHECK(binomial(6, 3) == 20);
  CHECK(binomial(3, 5) == 0);
  CHECK(dot({1, 2, Rational(1, 2)}, {3, -1, 4}) == 3);
  CHECK(is_integer(parse_rational("4/2")));
  CHECK_FALSE(is_integer(Rational(1, 3)));
}

TEST_CASE("subset helpers") {
  CHECK(members(0b1011) == std::vector<int>{0, 1, 3});
  CHECK(subset_of({0, 2}) == 0b101);
  CHECK(full_set(3) == 0b111);
  CHECK(full_set(64) == ~Subset{0});
  // (cardinality, lex): {0,1} < {0,2} < {1,2}; singletons first.
  CHECK(canonical_less(0b100, 0b011));
  CHECK(canonical_less(0b011, 0b101));
  CHECK(canonical_less(0b101, 0b110));
  CHECK_FALSE(canonical_less(0b110, 0b110));
}
