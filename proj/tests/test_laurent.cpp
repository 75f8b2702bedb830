#include "doctest.h"
#include "qca/laurent.hpp"
#include "test_support.hpp"

using qca::LaurentQ;
using qca::Rational;

TEST_CASE("rendering follows the canonical grammar") {
  CHECK(LaurentQ().to_string() == "0");
  CHECK(LaurentQ(1).to_string() == "1");
  CHECK(LaurentQ::q_power(1).to_string() == "q");
  CHECK(LaurentQ::q_power(-1).to_string() == "q^-1");
  CHECK((LaurentQ::q_power(2) + 1 + LaurentQ::q_power(-2)).to_string() == "q^2 + 1 + q^-2");
  CHECK(LaurentQ::half_power(3).to_string() == "q^(3/2)");
  CHECK(LaurentQ::half_power(-1).to_string() == "q^(-1/2)");
  CHECK((LaurentQ::half_power(3, -1) + LaurentQ::q_power(1, Rational(1, 2))).to_string() == "-q^(3/2) + 1/2*q");
  CHECK((LaurentQ::q_power(3, -2) - LaurentQ::q_power(1)).to_string() == "-2*q^3 - q");
}

TEST_CASE("parser inverts rendering") {
  for (const char* s : {"0", "1", "-1", "q", "q^-1", "q^2 + 1 + q^-2", "-q^(3/2) + 1/2*q", "-2*q^3 - q",
                        "3/7*q^(-5/2)", "q^10 - 4*q^-10"}) {
    CHECK(LaurentQ::parse(s).to_string() == s);
  }
  CHECK(LaurentQ::parse("q^2+q^2") == LaurentQ::q_power(2, 2));
  CHECK_THROWS_AS(LaurentQ::parse("q^"), qca::ParseError);
  CHECK_THROWS_AS(LaurentQ::parse("x"), qca::ParseError);
  CHECK_THROWS_AS(LaurentQ::parse(""), qca::ParseError);
}

TEST_CASE("randomized round trip through text") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    LaurentQ x = qca::testing::random_laurent(rng, 5, 7, i % 2 == 0);
    CHECK(LaurentQ::parse(x.to_string()) == x);
  }
}

TEST_CASE("ring axioms and bar on random elements") {
  std::mt19937_64 rng(12);
  for (int i = 0; i < 200; ++i) {
    LaurentQ a = qca::testing::random_laurent(rng, 4, 5, false);
    LaurentQ b = qca::testing::random_laurent(rng, 4, 5, false);
    LaurentQ c = qca::testing::random_laurent(rng, 4, 5, false);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a + b - b == a);
    CHECK(a.bar().bar() == a);
    CHECK((a * b).bar() == a.bar() * b.bar());
    CHECK((a + b).bar() == a.bar() + b.bar());
    LaurentQ acc = c;
    acc.add_product(a, b);
    CHECK(acc == c + a * b);
  }
}

TEST_CASE("exact division") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 100; ++i) {
    LaurentQ a = qca::testing::random_laurent(rng, 4, 5, false);
    LaurentQ d = qca::testing::random_laurent(rng, 3, 4, false);
    if (d.is_zero()) continue;
    auto quotient = (a * d).divide_exact(d);
    REQUIRE(quotient.has_value());
    CHECK(*quotient == a);
  }
  LaurentQ q_plus_one = LaurentQ::q_power(1) + 1;
  CHECK_FALSE(LaurentQ::q_power(1).divide_exact(q_plus_one).has_value());
}

TEST_CASE("evaluation and predicates") {
  LaurentQ x = LaurentQ::q_power(2) - LaurentQ::q_power(-1, 3);
  CHECK(x.eval_at_one() == -2);
  CHECK(x.evaluate(Rational(2)) == Rational(4) - Rational(3, 2));
  CHECK(x.is_integral());
  CHECK(x.has_integer_coefficients());
  CHECK_FALSE(LaurentQ::half_power(1).is_integral());
  CHECK(x.positive_part() == LaurentQ::q_power(2));
  CHECK(x.shifted(1) == LaurentQ::q_power(3) - 3);
  CHECK(x.bar() == LaurentQ::q_power(-2) - LaurentQ::q_power(1, 3));
}
