#include <random>

#include "doctest.h"
#include "qca/dcb.hpp"
#include "qca/qseed.hpp"

using qca::LaurentQ;
using qca::TorusElement;
using qca::TorusExponent;

namespace {

LaurentQ q(int k) { return LaurentQ::q_power(k); }

void require_all_ok(const qca::Report& r) {
  CHECK_FALSE(r.empty());
  for (const auto& c : r) {
    INFO(c.identity << " at n = " << c.n << ": " << c.detail);
    CHECK(c.ok);
  }
}

}  // namespace

TEST_CASE("the quasi-commutation matrix") {
  const auto L3 = qca::L_matrix(3);
  CHECK(L3[0] == std::array<int, 4>{0, 2, 4, 2});
  for (int n = 3; n <= 8; ++n) {
    const auto L = qca::L_matrix(n);
    CHECK(L[2][3] == -4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) CHECK(L[i][j] == -L[j][i]);
  }
}

TEST_CASE("rescaled variables") {
  CHECK(qca::rescaled_X(3) == qca::generator(3) * LaurentQ::half_power(-1));
  CHECK(qca::rescaled_X(4) == qca::b_element({2, 0, 0, 1}) * LaurentQ::half_power(-9));
  CHECK(qca::rescaled_Y(0) == qca::p0() * q(-2));
  CHECK_THROWS_AS(qca::rescaled_Y(2), qca::AlgebraError);
}

TEST_CASE("torus monomials") {
  const int n = 4;
  CHECK(qca::torus_M({0, 0, 0, 0}, n) == TorusElement(n, 1));
  CHECK(qca::torus_M({1, 0, 0, 0}, n) == TorusElement::generator(n, 0));
  // M(-1,2,0,0) = q^2 X_n^-1 X_{n+1}^2, and X_{n+1}^2 X_n = q^-4 X_n X_{n+1}^2.
  CHECK(qca::torus_M({-1, 2, 0, 0}, n) * qca::torus_M({1, 0, 0, 0}, n) ==
        q(-2) * TorusElement::generator(n, 1, 2));
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const auto xi = TorusElement::generator(n, i), xj = TorusElement::generator(n, j);
      CHECK(xi * xj == q(qca::L_matrix(n)[i][j]) * (xj * xi));
    }
}

TEST_CASE("torus multiplication is associative and invertible") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> d(-3, 3);
  auto random_exponent = [&] { return TorusExponent{d(rng), d(rng), d(rng), d(rng)}; };
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 3 + trial % 4;
    const TorusElement a = TorusElement::monomial(n, random_exponent(), q(d(rng))) + TorusElement(n, 1);
    const TorusElement b = TorusElement::monomial(n, random_exponent());
    const TorusElement c = TorusElement::monomial(n, random_exponent(), LaurentQ::half_power(d(rng)));
    CHECK((a * b) * c == a * (b * c));
    const TorusExponent e = random_exponent();
    TorusExponent neg;
    for (int i = 0; i < 4; ++i) neg[i] = -e[i];
    CHECK(qca::torus_M(e, n) * qca::torus_M(neg, n) == TorusElement(n, 1));
  }
}

TEST_CASE("adjacent quantized cluster variables quasi-commute") {
  // n = 1: u3 B[2,0,0,1] = q^2 B[2,0,0,1] u3.
  const auto b = qca::b_element({2, 0, 0, 1});
  CHECK(qca::generator(3) * b == b * qca::generator(3) * q(2));
  require_all_ok(qca::verify_adjacent_commutation(6));
}

TEST_CASE("quasi-commutation of the rescaled cluster") { require_all_ok(qca::verify_quasi_commutation(6)); }

TEST_CASE("quantum exchange relation") { require_all_ok(qca::verify_quantum_exchange(6)); }

TEST_CASE("torus form of the exchange relation") { require_all_ok(qca::verify_bz_exchange(6)); }
