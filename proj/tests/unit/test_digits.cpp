#include <optional>
#include <stdexcept>

#include "doctest.h"
#include "generators.hpp"
#include "qstar/digits.hpp"

using qstar::canonicalize;
using qstar::compare_lex;
using qstar::Digit;
using qstar::DigitSeq;
using qstar::DigitWord;
using qstar::dual_representation;

namespace {
DigitSeq seq(const char* prefix, const char* tail) {
  return DigitSeq(DigitWord::parse(prefix), DigitWord::parse(tail));
}
}  // namespace

TEST_CASE("digit words parse, print, and compare") {
  const DigitWord w = DigitWord::parse("021");
  CHECK(w.size() == 3);
  CHECK(w[0] == 0);
  CHECK(w[2] == 1);
  CHECK(w.str() == "021");
  CHECK(DigitWord::parse("").empty());
  CHECK(DigitWord::parse("0") < DigitWord::parse("1"));
  CHECK(DigitWord::parse("1") < DigitWord::parse("10"));
  CHECK((w + Digit{2}).str() == "0212");
  CHECK_THROWS_AS(DigitWord::parse("013"), std::invalid_argument);
  CHECK_THROWS_AS(DigitWord::parse("0 1"), std::invalid_argument);
  CHECK_THROWS_AS(DigitWord(std::vector<Digit>{0, 7}), std::invalid_argument);
}

TEST_CASE("sequences index 1-based across prefix and tail") {
  const DigitSeq s = seq("01", "20");
  CHECK(s.at(1) == 0);
  CHECK(s.at(2) == 1);
  CHECK(s.at(3) == 2);
  CHECK(s.at(4) == 0);
  CHECK(s.at(5) == 2);
  CHECK(s.at(100) == 0);  // even positions past the prefix
  CHECK_THROWS_AS(seq("", ""), std::invalid_argument);
}

TEST_CASE("normalization finds the shortest period and folds the prefix") {
  CHECK(seq("", "2222").normalized().tail().str() == "2");
  CHECK(seq("10", "0").normalized().str() == "1(0)");
  CHECK(seq("1", "01").normalized().str() == "(10)");
  CHECK(seq("", "0101").normalized().str() == "(01)");
  CHECK(seq("021", "21").normalized().str() == "0(21)");
}

TEST_CASE("sequences with the same digit stream compare equal") {
  CHECK(seq("1", "0") == seq("10", "0"));
  CHECK(seq("1", "0") == seq("100", "00"));
  CHECK(seq("", "12") == seq("12", "12"));
  CHECK(seq("", "12") != seq("12", "21"));
  CHECK(seq("", "0") != seq("", "1"));
}

TEST_CASE("canonicalize rewrites trailing 2s as a carry") {
  CHECK(canonicalize(seq("0", "2")).str() == "1(0)");
  CHECK(canonicalize(seq("12", "2")).str() == "2(0)");
  CHECK(canonicalize(seq("", "2")).str() == "(2)");       // the point 1 stays put
  CHECK(canonicalize(seq("1", "0")).str() == "1(0)");     // already canonical
  CHECK(canonicalize(seq("112", "22")).str() == "12(0)");
}

TEST_CASE("dual representations swap the trailing-0 and trailing-2 forms") {
  REQUIRE(dual_representation(seq("1", "0")).has_value());
  CHECK(dual_representation(seq("1", "0"))->str() == "0(2)");
  CHECK(dual_representation(seq("21", "0"))->str() == "20(2)");
  CHECK(dual_representation(seq("0", "2"))->str() == "1(0)");
  CHECK_FALSE(dual_representation(seq("", "0")).has_value());  // the point 0
  CHECK_FALSE(dual_representation(seq("", "2")).has_value());  // the point 1
  CHECK_FALSE(dual_representation(seq("", "1")).has_value());
  CHECK_FALSE(dual_representation(seq("0", "12")).has_value());
}

TEST_CASE("dual of the dual returns the original sequence") {
  gen::Gen g(11);
  int seen = 0;
  for (int i = 0; i < 400; ++i) {
    const DigitSeq s = g.seq(6, 4).normalized();
    const auto d = dual_representation(s);
    if (!d) continue;
    ++seen;
    const auto back = dual_representation(*d);
    REQUIRE(back.has_value());
    CHECK(*back == s);
    CHECK(compare_lex(s, *d) != 0);  // digit streams differ even though values agree
  }
  CHECK(seen > 20);
}

TEST_CASE("lexicographic comparison orders digit streams") {
  CHECK(compare_lex(seq("", "0"), seq("", "1")) < 0);
  CHECK(compare_lex(seq("", "2"), seq("", "1")) > 0);
  CHECK(compare_lex(seq("1", "0"), seq("10", "0")) == 0);
  CHECK(compare_lex(seq("0", "2"), seq("1", "0")) < 0);  // 0222... < 1000...
  CHECK(compare_lex(seq("", "01"), seq("", "0110")) < 0);
  gen::Gen g(13);
  for (int i = 0; i < 200; ++i) {
    const DigitSeq a = g.seq(5, 3), b = g.seq(5, 3);
    const int ab = compare_lex(a, b), ba = compare_lex(b, a);
    CHECK(ab == -ba);
    CHECK((ab == 0) == (a == b));
  }
}
