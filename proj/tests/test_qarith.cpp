#include <random>

#include "doctest.h"
#include "qca/qarith.hpp"

using qca::LaurentQ;
using qca::Rational;

namespace {

LaurentQ q(int k) { return LaurentQ::q_power(k); }

// Independent oracle: the defining quotient [n][n-1]...[n-k+1] / [k]! by long division.
LaurentQ binom_by_division(int n, int k) {
  if (k < 0) return LaurentQ();
  LaurentQ num = 1, den = 1;
  for (int i = 0; i < k; ++i) num *= qca::quantum_int(n - i);
  for (int i = 1; i <= k; ++i) den *= qca::quantum_int(i);
  return *num.divide_exact(den);
}

}  // namespace

TEST_CASE("quantum integers") {
  CHECK(qca::quantum_int(3) == q(2) + 1 + q(-2));
  CHECK(qca::quantum_int(3).to_string() == "q^2 + 1 + q^-2");
  CHECK(qca::quantum_int(0).is_zero());
  CHECK(qca::quantum_int(1) == 1);
  for (int k = -8; k <= 8; ++k) {
    CHECK(qca::quantum_int(-k) == -qca::quantum_int(k));
    CHECK(qca::bar(qca::quantum_int(k)) == qca::quantum_int(k));
    // (q - q^-1)[k] = q^k - q^-k
    CHECK((q(1) - q(-1)) * qca::quantum_int(k) == q(k) - q(-k));
  }
}

TEST_CASE("quantum binomials and factorials") {
  CHECK(qca::quantum_binom(-2, 1) == -q(1) - q(-1));
  CHECK(qca::quantum_binom(-2, 1).to_string() == "-q - q^-1");
  for (int n = -5; n <= 5; ++n) {
    CHECK(qca::quantum_binom(n, 0) == 1);
    CHECK(qca::quantum_binom(n, -1).is_zero());
  }
  CHECK(qca::quantum_binom(5, 2) == binom_by_division(5, 2));
  CHECK(qca::quantum_binom(5, 2) == q(6) + q(4) + 2 * q(2) + 2 + 2 * q(-2) + q(-4) + q(-6));
  CHECK(qca::quantum_factorial(0) == 1);
  CHECK(qca::quantum_factorial(2) == q(1) + q(-1));
  CHECK(qca::quantum_factorial(3) == (q(1) + q(-1)) * (q(2) + 1 + q(-2)));
  for (int n = -10; n <= 10; ++n)
    for (int k = 0; k <= 10; ++k) CHECK(qca::quantum_binom(n, k) == binom_by_division(n, k));
}

TEST_CASE("q-Pascal identities on random arguments") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> dn(-10, 10), dk(0, 10);
  for (int i = 0; i < 200; ++i) {
    int n = dn(rng), k = dk(rng);
    LaurentQ lhs = qca::quantum_binom(n, k);
    LaurentQ a = q(k) * qca::quantum_binom(n - 1, k) + q(k - n) * qca::quantum_binom(n - 1, k - 1);
    LaurentQ b = q(-k) * qca::quantum_binom(n - 1, k) + q(n - k) * qca::quantum_binom(n - 1, k - 1);
    CHECK(lhs == a);
    CHECK(lhs == b);
  }
}

TEST_CASE("specialization at q = 1 gives ordinary binomials") {
  for (int n = 0; n <= 12; ++n) {
    mpz_class ordinary = 1;
    for (int k = 0; k <= n; ++k) {
      CHECK(qca::quantum_binom(n, k).eval_at_one() == Rational(ordinary));
      ordinary = ordinary * (n - k) / (k + 1);
    }
  }
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(qca::chebyshev_T(4).to_string() == "X^4 - 4*X^2 + 2");
  CHECK(qca::chebyshev_S(3).to_string() == "X^3 - 2*X");
  CHECK(qca::chebyshev_T(0) == qca::IntPoly({2}));
  CHECK(qca::chebyshev_S(0) == qca::IntPoly({1}));
  const LaurentQ two = q(1) + q(-1);
  for (int k = 1; k <= 20; ++k) CHECK(qca::chebyshev_S(k - 1).evaluate(two) == qca::quantum_int(k));
  // T_k(q + q^-1) = q^k + q^-k
  for (int k = 1; k <= 12; ++k) CHECK(qca::chebyshev_T(k).evaluate(two) == q(k) + q(-k));
}

TEST_CASE("antisymmetric splitting") {
  CHECK(qca::split_antisymmetric(q(3) - q(-3)) == q(3));
  CHECK(qca::split_antisymmetric(LaurentQ()).is_zero());
  CHECK(qca::split_antisymmetric(2 * q(1) - 2 * q(-1) + q(4) - q(-4)) == 2 * q(1) + q(4));
  CHECK_THROWS_AS(qca::split_antisymmetric(q(1) + q(-1)), qca::AlgebraError);
  CHECK_THROWS_AS(qca::split_antisymmetric(q(1) - q(-1) + 1), qca::AlgebraError);
  CHECK_THROWS_AS(qca::split_antisymmetric(LaurentQ::half_power(1) - LaurentQ::half_power(-1)), qca::AlgebraError);
  CHECK_THROWS_AS(qca::split_antisymmetric(LaurentQ::q_power(1, Rational(1, 2)) - LaurentQ::q_power(-1, Rational(1, 2))),
                  qca::AlgebraError);
}

TEST_CASE("gcd of Laurent polynomials") {
  const LaurentQ two = q(1) + q(-1), three = qca::quantum_int(3);
  // [2] = q^-1 (q^2 + 1), normalized to q^2 + 1.
  CHECK(qca::laurent_gcd(two * three, two * q(5)) == q(2) + 1);
  CHECK(qca::laurent_gcd(two, three) == 1);
  CHECK(qca::laurent_gcd(LaurentQ(), LaurentQ()).is_zero());
  CHECK(qca::laurent_gcd(LaurentQ(), 6 * q(3)) == 1);
  std::mt19937_64 rng(5);
  for (int i = 0; i < 50; ++i) {
    LaurentQ g = qca::quantum_int(2 + i % 4), a = qca::quantum_int(3 + i % 3) * g, b = (q(1) - 2) * g;
    LaurentQ d = qca::laurent_gcd(a, b);
    CHECK(a.divide_exact(d).has_value());
    CHECK(b.divide_exact(d).has_value());
    CHECK(d.divide_exact(qca::laurent_gcd(g, g)).has_value());
  }
}
